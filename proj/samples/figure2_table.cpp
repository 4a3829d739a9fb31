// Prints the threshold table: where each degree-sequence line starts, where
// it flattens out, and its slope.

#include "ktile/ktile.hpp"

#include <iomanip>
#include <iostream>

int main()
{
    using namespace ktile;
    for (auto & row : run_figure2()) {
        auto start = row.start.per_n > 0 ? to_string(row.start.per_n) + "n" : row.start.constant.str();
        std::cout << std::left << std::setw(12) << row.name << std::setw(10) << start << std::setw(10)
                  << to_string(row.end_per_n) + "n" << to_string(row.slope) << "\n";
    }
}
