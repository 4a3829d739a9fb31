// Command-line front end. Exit codes: 0 all pass, 1 any fail, 2 any inconclusive.

#include "ktile/ktile.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ktile;

namespace {

struct Globals
{
    bool json_out = false;
    std::uint64_t seed = 1;
    std::uint64_t budget = 10'000'000;
};

auto slurp(const std::string & path) -> std::string
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

auto ends_with(const std::string & s, const std::string & tail) -> bool
{
    return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

/// A pattern file is a graph (edge list or graph6) or a JSON pattern object.
auto load_pattern(const std::string & path) -> PartitionedGraph
{
    if (ends_with(path, ".json"))
        return pattern_from_json(json::parse(slurp(path)));
    return unpartitioned(read_graph_file(path));
}

/// Inline JSON, or @FILE to read it from a file.
auto parse_params(const std::string & text) -> json
{
    if (! text.empty() && text.front() == '@')
        return json::parse(slurp(text.substr(1)));
    return json::parse(text.empty() ? "{}" : text);
}

auto rat(const json & j, const char * key, const rational & fallback) -> rational
{
    return j.contains(key) ? rational_from_json(j.at(key)) : fallback;
}

auto emit(const json & j) -> void { std::cout << j.dump(2) << "\n"; }

auto pattern_graph(const json & j) -> Graph { return pattern_from_json(j).graph; }

// ---------------------------------------------------------------------------

auto cmd_thresholds(const Globals & g, const std::string & pattern_path, bool figure2, const std::string & x_text,
                    const std::string & sp_text, const std::string & eta_text) -> int
{
    if (figure2) {
        auto rows = run_figure2();
        if (g.json_out) {
            emit(figure2_json(rows));
            return 0;
        }
        std::cout << "pattern     d1 bound   end bound  slope\n";
        for (auto & r : rows) {
            auto start = r.start.per_n > 0 ? to_string(r.start.per_n) + "n" : r.start.constant.str();
            std::cout << std::left << std::setw(12) << r.name << std::setw(11) << start << std::setw(11)
                      << (to_string(r.end_per_n) + "n") << to_string(r.slope) << "\n";
        }
        return 0;
    }
    if (pattern_path.empty())
        throw std::invalid_argument("thresholds: give --pattern FILE or --figure2");
    auto pat = load_pattern(pattern_path);
    auto p = pat.has_classes() ? params_from_partition(pat) : chromatic_data(pat.graph);
    auto eta = eta_text.empty() ? rational(0) : parse_rational(eta_text);
    BoundLine line;
    if (! x_text.empty())
        line = x_line(p, parse_rational(x_text), eta);
    else if (! sp_text.empty())
        line = general_line(p, parse_rational(sp_text), eta);
    else
        line = komlos_line(p, eta);
    auto out = params_json(p);
    out["line"] = line_json(line);
    if (g.json_out)
        emit(out);
    else
        std::cout << "h=" << p.h << " r=" << p.r << " sigma=" << p.sigma << " omega=" << to_string(p.omega)
                  << " chi_cr=" << to_string(p.chi_cr) << "\nd_i >= " << to_string(line.intercept) << " n + "
                  << to_string(line.slope) << " i for i <= " << to_string(line.cutoff) << " n\n";
    return 0;
}

auto parse_target(const std::string & s) -> BlowUpTarget
{
    if (s == "bottle")
        return BlowUpTarget::bottle;
    if (s == "blown_bottle")
        return BlowUpTarget::blown_bottle;
    if (s == "narrow_bottle")
        return BlowUpTarget::narrow_bottle;
    if (s == "clique")
        return BlowUpTarget::clique;
    throw std::invalid_argument("unknown lemma62 target " + s);
}

auto cmd_construct(const Globals & g, const std::string & family, const json & params, const std::string & out_path) -> int
{
    PartitionedGraph host;
    json side = {{"family", family}, {"params", params}};
    if (family == "ex1") {
        ExtremalOneSpec s{params.value("r", std::size_t{2}), params.value("sigma", std::size_t{1}),
                          params.value("omega", std::size_t{2}), params.at("n").get<std::size_t>(),
                          rat(params, "eta", 0), params.value("k", std::size_t{1})};
        auto ex = extremal_one(s);
        host = ex.graph;
        side["A"] = ex.A;
        side["C"] = ex.C;
        side["degree_conditions"] = extremal_one_degree_conditions(s, ex);
    }
    else if (family == "ex2") {
        auto ex = extremal_two(pattern_graph(params.at("pattern")), params.at("n").get<std::size_t>(), rat(params, "eta", 0));
        host = ex.graph;
        side["v_prime"] = ex.v_prime;
        side["low_degree"] = ex.low_degree;
        side["high_degree"] = ex.high_degree;
    }
    else if (family == "ex3") {
        host = extremal_three(pattern_graph(params.at("pattern")), params.at("n").get<std::size_t>(),
                              rational_from_json(params.at("x")), rat(params, "eta", 0));
    }
    else if (family == "hstar") {
        auto hs = build_hstar({pattern_graph(params.at("pattern")), rational_from_json(params.at("sigma_prime"))});
        host = hs.host;
        side["t"] = hs.t;
        side["tiling"] = tiling_json(hs.tiling);
    }
    else if (family == "h1") {
        auto h1 = build_h1(pattern_graph(params.at("pattern")), rational_from_json(params.at("x")));
        host = h1.host;
        side["tiling"] = tiling_json(h1.tiling);
    }
    else if (family == "lemma62") {
        auto & b = params.at("bottle");
        BottleSpec spec{b.at(0).get<std::size_t>(), b.at(1).get<std::size_t>(), b.at(2).get<std::size_t>()};
        auto out = lemma62_perfect_tiling(parse_target(params.value("target", std::string("clique"))), spec,
                                          params.value("m", std::size_t{1}));
        host = out.host;
        side["t"] = out.t;
        side["tiling"] = tiling_json(out.tiling);
    }
    else
        throw std::invalid_argument("unknown family " + family);
    side["classes"] = host.classes;
    side["n"] = host.graph.size();

    if (out_path.empty()) {
        side["graph"] = graph_json(host.graph);
        emit(side);
        return 0;
    }
    std::ofstream(out_path) << emit_edge_list(host.graph);
    std::ofstream(out_path + ".json") << side.dump(2) << "\n";
    if (! g.json_out)
        std::cout << "wrote " << out_path << " (" << host.graph.size() << " vertices) and " << out_path << ".json\n";
    else
        emit({{"graph", out_path}, {"sidecar", out_path + ".json"}, {"n", host.graph.size()}});
    return 0;
}

auto cmd_solve(const Globals & g, const std::string & host_path, const std::vector<std::string> & pattern_paths) -> int
{
    auto host = read_graph_file(host_path);
    std::vector<PartitionedGraph> pats;
    for (auto & p : pattern_paths)
        pats.push_back(load_pattern(p));
    SolveOptions opt;
    opt.node_budget = g.budget;
    auto res = max_tiling(host, pats, opt);
    json emb = json::array();
    for (auto & e : res.tiling.copies)
        emb.push_back({{"pattern", e.pattern}, {"image", e.image}});
    json out = {{"n", host.size()},
                {"covered_count", res.covered_count},
                {"deficit", coverage_deficit(res, host.size())},
                {"optimality", to_string(res.optimality)},
                {"nodes", res.nodes},
                {"embeddings", emb}};
    if (g.json_out)
        emit(out);
    else
        std::cout << "covered " << res.covered_count << " of " << host.size() << " (" << to_string(res.optimality) << ", "
                  << res.nodes << " nodes)\n";
    return res.optimality == Optimality::proven_optimal ? 0 : 2;
}

auto cmd_gadgets(const std::string & kind, const std::string & host_path, const std::string & tiling_path,
                 const json & params) -> int
{
    auto host = read_graph_file(host_path);
    json out = {{"find", kind}};
    bool found = false;
    if (kind == "kr") {
        auto r = greedy_kr(host, params.at("r").get<std::size_t>(), params.at("b").get<std::size_t>(),
                           params.at("omega").get<std::size_t>(), rat(params, "eta", 0));
        found = r.success;
        out["clique"] = r.clique;
        out["failed_step"] = r.failed_step;
        out["neighbourhood_sizes"] = r.neighbourhood_sizes;
        out["degree_floor"] = rational_json(r.degree_floor);
    }
    else {
        if (tiling_path.empty())
            throw std::invalid_argument("gadgets: --tiling FILE is required for " + kind);
        auto t = tiling_from_json(json::parse(slurp(tiling_path)));
        auto ell = params.value("ell", std::size_t{1});
        if (kind == "expand") {
            auto best = max_expanding_set(host, t);
            out["max_size"] = best.vertices.size();
            if (auto e = find_expanding_set(host, t, ell)) {
                found = true;
                out["vertices"] = e->vertices;
                out["assignment"] = e->assignment;
            }
        }
        else if (kind == "swap") {
            auto ord = degree_ordering(host);
            auto k = params.value("k", std::size_t{1});
            auto m = params.value("m", std::size_t{1});
            out["max_size"] = max_swapping_set(host, t, ord, k, m).pairs.size();
            if (auto s = find_swapping_set(host, t, ord, k, ell, m)) {
                found = true;
                json pairs = json::array();
                for (auto & p : s->pairs)
                    pairs.push_back({{"z", p.z}, {"y", p.y}, {"copy", p.copy}});
                out["pairs"] = pairs;
            }
        }
        else
            throw std::invalid_argument("unknown gadget " + kind);
    }
    out["found"] = found;
    emit(out);
    return found ? 0 : 1;
}

auto cmd_verify(const Globals & g, const std::string & family, const json & grid) -> int
{
    if (! grid.is_array())
        throw std::invalid_argument("verify: --grid must be a JSON array of points");
    ExperimentReport rep;
    if (family == "ex1") {
        std::vector<ExtremalOnePoint> pts;
        for (auto & p : grid)
            pts.push_back({{p.value("r", std::size_t{2}), p.value("sigma", std::size_t{1}), p.value("omega", std::size_t{2}),
                            p.at("n").get<std::size_t>(), rat(p, "eta", 0), p.value("k", std::size_t{1})}});
        rep = verify_extremal_one(pts, g.budget);
    }
    else if (family == "ex2") {
        std::vector<ExtremalTwoPoint> pts;
        for (auto & p : grid)
            pts.push_back({pattern_graph(p.at("pattern")), p.at("pattern").dump(), p.at("n").get<std::size_t>(), rat(p, "eta", 0)});
        rep = verify_extremal_two(pts);
    }
    else if (family == "ex3") {
        std::vector<ExtremalThreePoint> pts;
        for (auto & p : grid)
            pts.push_back({pattern_graph(p.at("pattern")), p.at("pattern").dump(), p.at("n").get<std::size_t>(),
                           rational_from_json(p.at("x")), rat(p, "eta", 0)});
        rep = verify_extremal_three(pts, g.budget);
    }
    else
        throw std::invalid_argument("unknown family " + family);
    rep.inputs = {{"family", family}, {"grid", grid}};
    if (g.json_out)
        emit(rep.to_json());
    else
        for (auto & r : rep.records)
            std::cout << r["verdict"].get<std::string>() << " " << r.dump() << "\n";
    return exit_code(rep.verdict);
}

auto cmd_sweep(const Globals & g, std::size_t instances, std::size_t min_n, std::size_t max_n,
               const std::vector<std::string> & pattern_paths) -> int
{
    SweepConfig cfg;
    if (pattern_paths.empty())
        cfg.patterns = {{"K2", complete_graph(2)}, {"K3", complete_graph(3)}, {"K_{1,2}", path_graph(3)}, {"C5", cycle_graph(5)}};
    for (auto & p : pattern_paths)
        cfg.patterns.emplace_back(p, load_pattern(p).graph);
    cfg.probabilities = {make_rational(3, 10), make_rational(1, 2), make_rational(7, 10)};
    cfg.instances = instances;
    cfg.min_n = min_n;
    cfg.max_n = max_n;
    cfg.seed = g.seed;
    cfg.budget = g.budget;
    auto rep = run_solver_sweep(cfg);
    if (g.json_out)
        emit(rep.to_json());
    else {
        std::size_t pass = 0;
        for (auto & r : rep.records)
            pass += r["verdict"] == "pass";
        std::cout << pass << "/" << rep.records.size() << " instances pass; verdict " << to_string(rep.verdict) << "\n";
    }
    return exit_code(rep.verdict);
}

auto cmd_plotdata(const Globals & g, const std::string & pattern_path, std::size_t n, const std::vector<std::string> & xs,
                  const std::string & eta_text) -> int
{
    auto pat = load_pattern(pattern_path);
    auto p = pat.has_classes() ? params_from_partition(pat) : chromatic_data(pat.graph);
    auto eta = eta_text.empty() ? rational(0) : parse_rational(eta_text);
    std::vector<std::pair<std::string, BoundLine>> lines;
    if (xs.empty())
        lines.emplace_back("required_degree", komlos_line(p, eta));
    for (auto & x : xs) {
        auto xv = parse_rational(x);
        lines.emplace_back("x=" + to_string(xv), xv == 1 ? komlos_line(p, eta) : x_line(p, xv, eta));
    }
    if (g.json_out) {
        json out = json::array();
        for (auto & [name, l] : lines) {
            json col = json::array();
            for (auto & v : boundline_requirements(l, n))
                col.push_back(v.convert_to<long long>());
            out.push_back({{"name", name}, {"line", line_json(l)}, {"required_degree", col}});
        }
        emit(out);
    }
    else
        std::cout << emit_boundline_plot_data(lines, n);
    return 0;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Exact tools for degree-sequence tiling thresholds"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json_out, "Emit JSON");
    app.add_option("--seed", g.seed, "Seed for randomised commands");
    app.add_option("--budget", g.budget, "Search-node budget for the exact solver");

    std::string pattern, x, sigma_prime, eta;
    bool figure2 = false;
    auto * th = app.add_subcommand("thresholds", "Parameters and bound line of a pattern");
    th->add_option("--pattern", pattern, "Pattern file (edge list, graph6, or JSON pattern)");
    th->add_flag("--figure2", figure2, "Print the threshold table");
    th->add_option("--x", x, "Line for an x-proportional tiling");
    th->add_option("--sigma-prime", sigma_prime, "Line for a relaxed neck");
    th->add_option("--eta", eta, "Slack added to the intercept");

    std::string family, params_text, out_path;
    auto * co = app.add_subcommand("construct", "Build an extremal host or a constructive tiling");
    co->add_option("--family", family, "ex1|ex2|ex3|hstar|h1|lemma62")
        ->required()
        ->check(CLI::IsMember({"ex1", "ex2", "ex3", "hstar", "h1", "lemma62"}));
    co->add_option("--params", params_text, "JSON parameters or @FILE")->required();
    co->add_option("--out", out_path, "Edge-list output; a .json sidecar is written next to it");

    std::string host_path;
    std::vector<std::string> patterns;
    auto * so = app.add_subcommand("solve", "Maximum tiling of a host");
    so->add_option("--host", host_path, "Host graph file")->required();
    so->add_option("--pattern", patterns, "Pattern file (repeatable)")->required();
    so->add_option("--budget", g.budget, "Search-node budget");
    so->add_flag("--json", g.json_out, "Emit JSON");

    std::string kind, tiling_path, gparams;
    auto * ga = app.add_subcommand("gadgets", "Expanding sets, swapping sets, greedy cliques");
    ga->add_option("--find", kind, "expand|swap|kr")->required()->check(CLI::IsMember({"expand", "swap", "kr"}));
    ga->add_option("--host", host_path, "Host graph file")->required();
    ga->add_option("--tiling", tiling_path, "Tiling JSON");
    ga->add_option("--params", gparams, "JSON parameters or @FILE");

    std::string vfamily, grid_text;
    auto * ve = app.add_subcommand("verify", "Check the extremal hosts over a parameter grid");
    ve->add_option("--family", vfamily, "ex1|ex2|ex3")->required()->check(CLI::IsMember({"ex1", "ex2", "ex3"}));
    ve->add_option("--grid", grid_text, "JSON array of grid points or @FILE")->required();
    ve->add_flag("--json", g.json_out, "Emit JSON");

    std::size_t instances = 200, min_n = 5, max_n = 14;
    std::vector<std::string> sweep_patterns;
    auto * sw = app.add_subcommand("sweep", "Solver against the exhaustive oracle on seeded random hosts");
    sw->add_option("--instances", instances, "Number of hosts");
    sw->add_option("--min-n", min_n, "Smallest host order");
    sw->add_option("--max-n", max_n, "Largest host order");
    sw->add_option("--pattern", sweep_patterns, "Pattern file (repeatable); default K2, K3, K_{1,2}, C5");
    sw->add_option("--seed", g.seed, "First seed");
    sw->add_flag("--json", g.json_out, "Emit JSON");

    std::size_t plot_n = 100;
    std::vector<std::string> xs;
    auto * pl = app.add_subcommand("plotdata", "Required degree per index, as CSV");
    pl->add_option("--pattern", pattern, "Pattern file")->required();
    pl->add_option("--n", plot_n, "Host order");
    pl->add_option("--x", xs, "x-proportional lines to overlay (repeatable)");
    pl->add_option("--eta", eta, "Slack");

    for (auto * sub : {th, co, ga, pl})
        sub->add_flag("--json", g.json_out, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*th)
            return cmd_thresholds(g, pattern, figure2, x, sigma_prime, eta);
        if (*co)
            return cmd_construct(g, family, parse_params(params_text), out_path);
        if (*so)
            return cmd_solve(g, host_path, patterns);
        if (*ga)
            return cmd_gadgets(kind, host_path, tiling_path, parse_params(gparams));
        if (*ve)
            return cmd_verify(g, vfamily, parse_params(grid_text));
        if (*sw)
            return cmd_sweep(g, instances, min_n, max_n, sweep_patterns);
        if (*pl)
            return cmd_plotdata(g, pattern, plot_n, xs, eta);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
