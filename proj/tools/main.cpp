// Command-line front end: construct / arrows / ramsey / witness / verify /
// extract / pair / bounds / encode-sat. Every invocation appends a RunRecord
// line to the results log. Exit codes: 0 success, 1 negative mathematical
// verdict, 2 usage error, 3 budget or cap exhaustion.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ramsey/arrowing.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/dpll.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/expansion.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/hamiltonicity.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/version.hpp"
#include "ramsey/witnesses.hpp"

using namespace ramsey;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << bytes;
}

bool looks_like_edge_list(const std::string& path, const std::string& body) {
    if (path.ends_with(".el") || path.ends_with(".edges") || path.ends_with(".txt")) return true;
    if (path.ends_with(".g6")) return false;
    std::istringstream in(body);
    long long a, b;
    std::string rest;
    return bool(in >> a >> b);
}

// Collects parameters and file hashes for the run record.
struct RunContext {
    std::string command;
    Json params = Json::object();
    Json inputs = Json::object();
    Json outputs = Json::object();
    Json result = Json::object();
    uint64_t seed = 0;
    int threads = 1;
    std::string log_path;

    Graph load_graph(const std::string& path) {
        std::string body = read_file(path);
        inputs[path] = hex64(fnv1a64(body));
        return looks_like_edge_list(path, body) ? edge_list_decode(body) : graph6_decode(body);
    }
    Json load_json(const std::string& path) {
        std::string body = read_file(path);
        inputs[path] = hex64(fnv1a64(body));
        return Json::parse(body);
    }
    void save(const std::string& path, const std::string& bytes) {
        write_file(path, bytes);
        outputs[path] = hex64(fnv1a64(bytes));
    }
    void save_graph(const std::string& path, const Graph& g) {
        std::string body =
            looks_like_edge_list(path, "") ? edge_list_encode(g) : graph6_encode(g) + "\n";
        save(path, body);
    }
    void save_json(const std::string& path, const Json& j) { save(path, j.dump(2) + "\n"); }

    void append_record(long long wall_ms, int exit_code) {
        Json rec;
        rec["command"] = command;
        rec["params"] = params;
        rec["version"] = kVersion;
        rec["seed"] = seed;
        rec["threads"] = threads;
        rec["wall_ms"] = wall_ms;
        rec["exit_code"] = exit_code;
        rec["result"] = result;
        rec["inputs"] = inputs;
        rec["outputs"] = outputs;
        std::ofstream out(log_path, std::ios::app);
        if (out) out << rec.dump() << "\n";
    }
};

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(Rational::parse(item));
    return out;
}

// ---------------------------------------------------------------------------

struct Options {
    // shared
    std::string in_path, out_path, report_path, log_path = "results.jsonl";
    std::string system_path, coloring_path, witness_path, cnf_path;
    std::string red_str, blue_str;
    std::string pos_red, pos_blue;
    uint64_t seed = 0;
    int threads = 1;
    long long budget_nodes = 0;
    long long cap = 10'000'000;
    // construct
    std::string kind, paths_csv = "", sizes_csv = "", replacement = "clique";
    std::string gadget_path;
    int n = 0, d = 0, s = 0, t = 0, order = 0, clique_size = 0, r = 0;
    std::string eta_str = "0.5", p_str = "0.5", eps_str = "0.05", alpha_str = "2";
    // ramsey
    int max_m = 12;
    // witness
    std::string mode = "fact41";
    int b = 1;
    // pair
    std::string v1_csv, v2_csv, check = "regular", pair_mode = "exact";
    int trials = 200;
    // bounds
    std::string d_csv = "2", n_csv = "", eta_csv = "";
};

int cmd_construct(RunContext& ctx, Options& opt) {
    Json report;
    Json params = Json::object();
    params["kind"] = opt.kind;
    Graph out_graph;
    bool satisfied = true;
    if (opt.kind == "u_graph") {
        UGraphResult r = u_graph(opt.n, opt.d);
        out_graph = r.blowup.graph;
        report = report_to_json(r.report);
        params["n"] = opt.n;
        params["d"] = opt.d;
        satisfied = r.report.satisfied;
    } else if (opt.kind == "cycle_blowup") {
        CycleBlowupResult r = cycle_blowup(opt.n, opt.d, Rational::parse(opt.eta_str));
        out_graph = r.blowup.graph;
        report = report_to_json(r.report);
        report["s"] = r.s;
        params["n"] = opt.n;
        params["d"] = opt.d;
        params["eta"] = opt.eta_str;
        satisfied = r.report.satisfied;
    } else if (opt.kind == "tree_closure") {
        TreeClosure tc = tree_closure(opt.order);
        out_graph = tc.graph;
        report["construction"] = "tree_closure";
        report["vertices"] = tc.graph.order();
        report["edges"] = tc.graph.edge_count();
        report["leaves"] = tc.leaves;
    } else if (opt.kind == "nst") {
        NstSystem sys = nst_system(opt.n, opt.s, opt.t, parse_int_list(opt.paths_csv));
        out_graph = sys.graph;
        report = system_to_json(sys);
        if (!opt.system_path.empty()) ctx.save_json(opt.system_path, system_to_json(sys));
    } else if (opt.kind == "ring") {
        Graph gadget = ctx.load_graph(opt.gadget_path);
        RingGlue rg = ring_glue(gadget, opt.r);
        out_graph = rg.graph;
        report["construction"] = "ring_glue";
        report["vertices"] = rg.graph.order();
        report["edges"] = rg.graph.edge_count();
    } else if (opt.kind == "random_clique") {
        out_graph = random_plus_clique(opt.order, Rational::parse(opt.p_str), opt.clique_size,
                                       ctx.seed);
        report["construction"] = "random_plus_clique";
        report["vertices"] = out_graph.order();
        report["edges"] = out_graph.edge_count();
    } else if (opt.kind == "blowup") {
        Graph base = ctx.load_graph(opt.in_path);
        Replacement rep = opt.replacement == "independent" ? Replacement::IndependentSet
                                                           : Replacement::Clique;
        Blowup bl = blow_up({base, parse_int_list(opt.sizes_csv), rep});
        out_graph = bl.graph;
        report["construction"] = "blow_up";
        report["vertices"] = bl.graph.order();
        report["edges"] = bl.graph.edge_count();
    } else {
        throw std::invalid_argument("construct: unknown kind '" + opt.kind + "'");
    }
    if (opt.kind == "tree_closure" || opt.kind == "random_clique") params["N"] = opt.order;
    if (opt.kind == "nst") {
        params["n"] = opt.n;
        params["s"] = opt.s;
        params["t"] = opt.t;
        params["paths"] = opt.paths_csv;
    }
    if (opt.kind == "ring") params["r"] = opt.r;
    if (opt.kind == "random_clique") {
        params["p"] = opt.p_str;
        params["clique_size"] = opt.clique_size;
        params["seed"] = ctx.seed;
    }
    report["params"] = params;
    if (!opt.out_path.empty()) ctx.save_graph(opt.out_path, out_graph);
    if (!opt.report_path.empty()) ctx.save_json(opt.report_path, report);
    ctx.result = report;
    std::cout << report.dump(2) << "\n";
    return satisfied ? kExitOk : kExitNegative;
}

ArrowingInstance build_instance(RunContext& ctx, Options& opt) {
    if (!opt.system_path.empty()) {
        NstSystem sys = system_from_json(ctx.load_json(opt.system_path));
        return {sys.graph, TargetPattern::parse(opt.red_str), TargetPattern::parse(opt.blue_str),
                sys.frozen};
    }
    Graph g = ctx.load_graph(opt.in_path);
    return {std::move(g), TargetPattern::parse(opt.red_str), TargetPattern::parse(opt.blue_str)};
}

int cmd_arrows(RunContext& ctx, Options& opt) {
    ArrowingInstance inst = build_instance(ctx, opt);
    Budget budget;
    if (opt.budget_nodes > 0) budget.max_nodes = opt.budget_nodes;
    budget.copy_cap = opt.cap;
    if (!opt.cnf_path.empty()) {
        DimacsExport ex = export_dimacs(inst, opt.cap);
        ctx.save(opt.cnf_path, ex.text);
    }
    ArrowingResult res = arrows_check(inst, budget);
    Json j;
    j["instance_hash"] = hex64(fnv1a64(graph6_encode(inst.graph) + "|" +
                                       inst.red_target.to_string() + "|" +
                                       inst.blue_target.to_string()));
    j["stats"] = {{"nodes", res.stats.nodes},
                  {"propagations", res.stats.propagations},
                  {"copies", res.stats.copies},
                  {"lazy", res.stats.lazy}};
    j["method"] = res.method;
    if (res.status == ArrowingStatus::Arrows) {
        j["verdict"] = "arrows";
    } else if (res.status == ArrowingStatus::GoodColoring) {
        j["verdict"] = "good_coloring";
        j["witness"] = coloring_to_json(inst.graph, *res.good);
        if (!opt.out_path.empty()) {
            WitnessColoring w;
            w.coloring = *res.good;
            w.avoided_red = inst.red_target;
            w.avoided_blue = inst.blue_target;
            w.provenance = "arrows_check";
            ctx.save_json(opt.out_path, witness_to_json(inst.graph, w));
        }
    } else {
        j["verdict"] = "budget_exhausted";
    }
    ctx.result = j;
    std::cout << j.dump(2) << "\n";
    if (res.status == ArrowingStatus::BudgetExhausted) return kExitBudget;
    return res.status == ArrowingStatus::Arrows ? kExitOk : kExitNegative;
}

int cmd_ramsey(RunContext& ctx, Options& opt) {
    if (!opt.pos_red.empty()) opt.red_str = opt.pos_red;
    if (!opt.pos_blue.empty()) opt.blue_str = opt.pos_blue;
    TargetPattern red = TargetPattern::parse(opt.red_str);
    TargetPattern blue = TargetPattern::parse(opt.blue_str);
    Budget budget;
    if (opt.budget_nodes > 0) budget.max_nodes = opt.budget_nodes;
    budget.copy_cap = opt.cap;
    budget.max_uncolored = std::max(budget.max_uncolored, opt.max_m * (opt.max_m - 1) / 2);
    RamseyOutcome out = ramsey_number(red, blue, opt.max_m, budget);
    Json j;
    j["red"] = red.to_string();
    j["blue"] = blue.to_string();
    j["max"] = opt.max_m;
    j["stats"] = {{"nodes", out.stats.nodes}, {"propagations", out.stats.propagations}};
    if (!out.found) {
        j["found"] = false;
        ctx.result = j;
        std::cout << j.dump(2) << "\n";
        return kExitBudget;
    }
    j["found"] = true;
    j["value"] = out.value;
    if (out.good_below && !opt.out_path.empty()) {
        WitnessColoring w;
        w.coloring = *out.good_below;
        w.avoided_red = red;
        w.avoided_blue = blue;
        w.provenance = "ramsey_number(K_" + std::to_string(out.value - 1) + ")";
        ctx.save_json(opt.out_path, witness_to_json(out.host_below, w));
    }
    ctx.result = j;
    std::cout << out.value << "\n";
    return kExitOk;
}

int cmd_witness(RunContext& ctx, Options& opt) {
    Graph g = ctx.load_graph(opt.in_path);
    std::optional<WitnessColoring> w;
    Json j;
    if (opt.mode == "fact41") {
        w = low_degree_witness(g, opt.n, opt.d);
    } else if (opt.mode == "decomp") {
        DecompositionResult r = sparse_decomposition(g, opt.b, opt.n);
        j["s_param"] = r.trace.s_param.to_string();
        j["halting_reason"] = r.trace.halting_reason;
        j["steps"] = (long long)r.trace.steps.size();
        if (r.trace.witness_step >= 0) j["witness_step"] = r.trace.witness_step;
        if (r.witness) w = std::move(r.witness);
    } else {
        throw std::invalid_argument("witness: mode must be fact41 or decomp");
    }
    if (!w) {
        j["witness"] = false;
        ctx.result = j;
        std::cout << j.dump(2) << "\n";
        return kExitNegative;
    }
    WitnessVerdict verdict = verify_witness(g, *w);
    if (!verdict.pass) throw std::logic_error("generated witness failed verification");
    j["witness"] = true;
    j["provenance"] = w->provenance;
    j["avoided"] = {{"red", w->avoided_red.to_string()}, {"blue", w->avoided_blue.to_string()}};
    if (!opt.out_path.empty()) ctx.save_json(opt.out_path, witness_to_json(g, *w));
    ctx.result = j;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(RunContext& ctx, Options& opt) {
    Json j;
    bool pass = false;
    if (!opt.witness_path.empty()) {
        Json wj = ctx.load_json(opt.witness_path);
        Graph g = opt.in_path.empty() ? graph6_decode(wj.at("graph6").get<std::string>())
                                      : ctx.load_graph(opt.in_path);
        WitnessColoring w = witness_from_json(g, wj);
        WitnessVerdict v = verify_witness(g, w);
        pass = v.pass;
        j["kind"] = "witness";
        j["pass"] = v.pass;
        if (v.offending) {
            j["offending"] = {{"color", color_name(v.offending_color)},
                              {"pattern", v.offending->pattern.to_string()},
                              {"vertices", v.offending->vertices}};
        }
    } else if (!opt.coloring_path.empty()) {
        ArrowingInstance inst = build_instance(ctx, opt);
        Coloring total = coloring_from_json(inst.graph, ctx.load_json(opt.coloring_path));
        ColoringVerdict v = verify_coloring(inst, total);
        pass = v.good;
        j["kind"] = "coloring";
        j["pass"] = v.good;
        if (v.mono) {
            j["offending"] = {{"color", color_name(v.mono_color)},
                              {"pattern", v.mono->pattern.to_string()},
                              {"vertices", v.mono->vertices}};
        }
    } else {
        throw std::invalid_argument("verify: need --witness or --coloring");
    }
    ctx.result = j;
    std::cout << j.dump(2) << "\n";
    return pass ? kExitOk : kExitNegative;
}

int cmd_extract(RunContext& ctx, Options& opt) {
    NstSystem sys = system_from_json(ctx.load_json(opt.system_path));
    Coloring total = sys.frozen;
    Coloring overlay = coloring_from_json(sys.graph, ctx.load_json(opt.coloring_path));
    for (size_t e = 0; e < total.state.size(); ++e)
        if (overlay.at((int)e) != Color::Uncolored) total.set((int)e, overlay.at((int)e));
    ExtractOutcome out = extract_blue_cycle(sys, total, opt.d);
    Json j = extract_to_json(out);
    if (!opt.out_path.empty()) ctx.save_json(opt.out_path, j);
    ctx.result = j;
    std::cout << j.dump(2) << "\n";
    if (out.kind == ExtractOutcome::Kind::BlueCycle) return kExitOk;
    if (out.kind == ExtractOutcome::Kind::RedCycle) return kExitNegative;
    return kExitBudget;
}

int cmd_pair(RunContext& ctx, Options& opt) {
    Graph g = ctx.load_graph(opt.in_path);
    PairContext pc;
    pc.graph = &g;
    pc.v1 = VertexSet::of(g.order(), parse_int_list(opt.v1_csv));
    pc.v2 = VertexSet::of(g.order(), parse_int_list(opt.v2_csv));
    pc.p = Rational::parse(opt.p_str);
    Rational eps = Rational::parse(opt.eps_str);
    Json j;
    j["check"] = opt.check;
    j["density"] = scaled_density(pc).to_string();
    bool positive = false;
    if (opt.check == "regular") {
        std::optional<SampledMode> mode;
        if (opt.pair_mode == "sampled") mode = SampledMode{opt.trials, ctx.seed};
        RegularVerdict v = is_regular_pair(pc, eps, mode);
        j["mode"] = opt.pair_mode;
        if (v.one_sided) {
            j["verdict"] = v.violated ? "violated" : "no_violation_found";
            j["trials"] = v.trials_run;
            positive = !v.violated;
        } else {
            j["verdict"] = v.regular ? "regular" : "violated";
            positive = v.regular;
        }
        if (v.violation)
            j["violation"] = {{"u1", v.violation->first}, {"u2", v.violation->second}};
    } else if (opt.check == "good") {
        GoodVerdict v = is_good_pair(pc, eps);
        j["verdict"] = v.good ? "good" : "not_good";
        positive = v.good;
        if (v.violating_w)
            j["violation"] = {{"side", v.violating_side}, {"w", *v.violating_w}};
    } else {
        throw std::invalid_argument("pair: check must be regular or good");
    }
    if (!opt.out_path.empty()) ctx.save_json(opt.out_path, j);
    ctx.result = j;
    std::cout << j.dump(2) << "\n";
    return positive ? kExitOk : kExitNegative;
}

int cmd_bounds(RunContext& ctx, Options& opt) {
    BoundGrid grid;
    grid.d = parse_int_list(opt.d_csv);
    grid.n = parse_int_list(opt.n_csv);
    if (!opt.eta_csv.empty()) grid.eta = parse_rational_list(opt.eta_csv);
    auto table = bound_table(opt.kind, grid);
    Json out = Json::array();
    bool all_ok = true;
    for (const auto& e : table) {
        out.push_back(bound_entry_to_json(e));
        all_ok = all_ok && e.report.satisfied;
    }
    Json j;
    j["kind"] = opt.kind;
    j["entries"] = out;
    j["all_satisfied"] = all_ok;
    if (!opt.out_path.empty()) ctx.save_json(opt.out_path, j);
    ctx.result = j;
    std::cout << j.dump(2) << "\n";
    return all_ok ? kExitOk : kExitNegative;
}

int cmd_encode_sat(RunContext& ctx, Options& opt) {
    ArrowingInstance inst = build_instance(ctx, opt);
    DimacsExport ex = export_dimacs(inst, opt.cap);
    ctx.save(opt.cnf_path.empty() ? opt.out_path : opt.cnf_path, ex.text);
    Json j;
    j["vars"] = ex.num_vars;
    j["clauses"] = ex.num_clauses;
    ctx.result = j;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"size-Ramsey constructions and arrowing toolkit"};
    app.require_subcommand(1);

    Options opt;
    RunContext ctx;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "PRNG seed")->envname("RAMSEY_SEED");
        sub->add_option("--threads", opt.threads, "worker threads (reserved)")
            ->envname("RAMSEY_THREADS");
        sub->add_option("--budget", opt.budget_nodes, "search node budget");
        sub->add_option("--log", opt.log_path, "results log (JSON lines)")
            ->envname("RAMSEY_LOG");
        sub->add_option("--cap", opt.cap, "copy enumeration cap");
    };

    CLI::App* c_construct = app.add_subcommand("construct", "build a paper construction");
    c_construct->add_option("--kind", opt.kind)->required();
    c_construct->add_option("--n", opt.n);
    c_construct->add_option("--d", opt.d);
    c_construct->add_option("--s", opt.s);
    c_construct->add_option("--t", opt.t);
    c_construct->add_option("--N,--order", opt.order);
    c_construct->add_option("--r", opt.r);
    c_construct->add_option("--clique-size", opt.clique_size);
    c_construct->add_option("--eta", opt.eta_str);
    c_construct->add_option("--p", opt.p_str);
    c_construct->add_option("--paths", opt.paths_csv, "satellite path orders, comma separated");
    c_construct->add_option("--sizes", opt.sizes_csv, "blow-up part sizes, comma separated");
    c_construct->add_option("--replacement", opt.replacement, "clique|independent");
    c_construct->add_option("--gadget", opt.gadget_path, "gadget graph file (ring kind)");
    c_construct->add_option("--in", opt.in_path, "base graph file (blowup kind)");
    c_construct->add_option("--out", opt.out_path, "output graph file");
    c_construct->add_option("--report", opt.report_path, "construction report JSON");
    c_construct->add_option("--system", opt.system_path, "system JSON output (nst kind)");
    add_common(c_construct);

    CLI::App* c_arrows = app.add_subcommand("arrows", "decide G -> (H1,H2)");
    c_arrows->add_option("--in", opt.in_path);
    c_arrows->add_option("--system", opt.system_path);
    c_arrows->add_option("--red", opt.red_str)->required();
    c_arrows->add_option("--blue", opt.blue_str)->required();
    c_arrows->add_option("--emit-cnf", opt.cnf_path);
    c_arrows->add_option("--out", opt.out_path, "good-coloring witness JSON");
    add_common(c_arrows);

    CLI::App* c_ramsey = app.add_subcommand("ramsey", "least m with K_m -> (H1,H2)");
    c_ramsey->add_option("red-target", opt.pos_red, "red target (positional)");
    c_ramsey->add_option("blue-target", opt.pos_blue, "blue target (positional)");
    c_ramsey->add_option("--red", opt.red_str);
    c_ramsey->add_option("--blue", opt.blue_str);
    c_ramsey->add_option("--max", opt.max_m);
    c_ramsey->add_option("--out", opt.out_path, "good coloring of K_{m-1}");
    add_common(c_ramsey);

    CLI::App* c_witness = app.add_subcommand("witness", "generate adversarial colorings");
    c_witness->add_option("--mode", opt.mode, "fact41|decomp")->required();
    c_witness->add_option("--in", opt.in_path)->required();
    c_witness->add_option("--n", opt.n)->required();
    c_witness->add_option("--d", opt.d);
    c_witness->add_option("--b", opt.b);
    c_witness->add_option("--out", opt.out_path);
    add_common(c_witness);

    CLI::App* c_verify = app.add_subcommand("verify", "verify a witness or a coloring");
    c_verify->add_option("--witness", opt.witness_path);
    c_verify->add_option("--coloring", opt.coloring_path);
    c_verify->add_option("--in", opt.in_path);
    c_verify->add_option("--system", opt.system_path);
    c_verify->add_option("--red", opt.red_str);
    c_verify->add_option("--blue", opt.blue_str);
    add_common(c_verify);

    CLI::App* c_extract = app.add_subcommand("extract", "constructive blue cycle from a system");
    c_extract->add_option("--system", opt.system_path)->required();
    c_extract->add_option("--coloring", opt.coloring_path)->required();
    c_extract->add_option("--d", opt.d)->required();
    c_extract->add_option("--out", opt.out_path);
    add_common(c_extract);

    CLI::App* c_pair = app.add_subcommand("pair", "regular / good pair checks");
    c_pair->add_option("--in", opt.in_path)->required();
    c_pair->add_option("--v1", opt.v1_csv)->required();
    c_pair->add_option("--v2", opt.v2_csv)->required();
    c_pair->add_option("--p", opt.p_str);
    c_pair->add_option("--check", opt.check)->required();
    c_pair->add_option("--eps", opt.eps_str);
    c_pair->add_option("--mode", opt.pair_mode, "exact|sampled");
    c_pair->add_option("--trials", opt.trials);
    c_pair->add_option("--out", opt.out_path);
    add_common(c_pair);

    CLI::App* c_bounds = app.add_subcommand("bounds", "bound tables over parameter grids");
    c_bounds->add_option("--kind", opt.kind)->required();
    c_bounds->add_option("--d", opt.d_csv);
    c_bounds->add_option("--n", opt.n_csv)->required();
    c_bounds->add_option("--eta", opt.eta_csv);
    c_bounds->add_option("--out", opt.out_path);
    add_common(c_bounds);

    CLI::App* c_encode = app.add_subcommand("encode-sat", "export the arrowing CNF");
    c_encode->add_option("--in", opt.in_path);
    c_encode->add_option("--system", opt.system_path);
    c_encode->add_option("--red", opt.red_str)->required();
    c_encode->add_option("--blue", opt.blue_str)->required();
    c_encode->add_option("--out", opt.out_path)->required();
    add_common(c_encode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    ctx.command = sub->get_name();
    ctx.seed = opt.seed;
    ctx.threads = opt.threads;
    ctx.log_path = opt.log_path;
    for (const CLI::Option* o : sub->get_options()) {
        if (o->count() > 0 && !o->get_name().empty() && o->get_name() != "--log")
            ctx.params[o->get_name()] = o->results().size() == 1 ? Json(o->results()[0])
                                                                 : Json(o->results());
    }

    auto t0 = std::chrono::steady_clock::now();
    int code = kExitUsage;
    try {
        if (sub == c_construct) code = cmd_construct(ctx, opt);
        else if (sub == c_arrows) code = cmd_arrows(ctx, opt);
        else if (sub == c_ramsey) code = cmd_ramsey(ctx, opt);
        else if (sub == c_witness) code = cmd_witness(ctx, opt);
        else if (sub == c_verify) code = cmd_verify(ctx, opt);
        else if (sub == c_extract) code = cmd_extract(ctx, opt);
        else if (sub == c_pair) code = cmd_pair(ctx, opt);
        else if (sub == c_bounds) code = cmd_bounds(ctx, opt);
        else if (sub == c_encode) code = cmd_encode_sat(ctx, opt);
    } catch (const cap_exceeded& e) {
        std::cerr << Json{{"error", e.code}, {"message", e.what()}}.dump() << "\n";
        code = kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << Json{{"error", "E_USAGE"}, {"message", e.what()}}.dump() << "\n";
        code = kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << Json{{"error", "E_DOMAIN"}, {"message", e.what()}}.dump() << "\n";
        code = kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", "E_INTERNAL"}, {"message", e.what()}}.dump() << "\n";
        code = kExitUsage;
    }
    auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    ctx.append_record(wall_ms, code);
    return code;
}
