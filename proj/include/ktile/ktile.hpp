#pragma once

#include "ktile/coloring.hpp"
#include "ktile/constructions.hpp"
#include "ktile/gadgets.hpp"
#include "ktile/graph.hpp"
#include "ktile/harness.hpp"
#include "ktile/io.hpp"
#include "ktile/isomorphism.hpp"
#include "ktile/json_io.hpp"
#include "ktile/matching.hpp"
#include "ktile/random.hpp"
#include "ktile/rational.hpp"
#include "ktile/solver.hpp"
#include "ktile/thresholds.hpp"
#include "ktile/tiling.hpp"
#include "ktile/vertex_set.hpp"
