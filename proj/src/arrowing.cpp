#include "ramsey/arrowing.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// One requirement per enumerated copy: "at least one edge of this copy gets
// `needs`". Red-target copies need a blue edge, blue-target copies a red one.
struct Clause {
    Color needs;
    std::vector<int> edges;  // uncolored edge indices at build time
    int unassigned = 0;
    int sat = 0;
};

struct ClauseSet {
    bool lazy = false;            // copy cap hit, no clause lists available
    bool instant_arrows = false;  // some copy is fully frozen in its color
    std::vector<Clause> clauses;
    long long copies = 0;
};

ClauseSet build_clauses(const ArrowingInstance& inst, long long copy_cap) {
    ClauseSet out;
    struct Side {
        const TargetPattern* pat;
        Color needs;
    };
    Side sides[2] = {{&inst.red_target, Color::Blue}, {&inst.blue_target, Color::Red}};
    for (const Side& side : sides) {
        auto copies = enumerate_copies(inst.graph, *side.pat, copy_cap);
        if (!copies) {
            out.lazy = true;
            return out;
        }
        out.copies += (long long)copies->size();
        for (const auto& copy : *copies) {
            bool satisfied = false;
            std::vector<int> lits;
            for (int e : copy) {
                Color c = inst.frozen.at(e);
                if (c == side.needs) {
                    satisfied = true;
                    break;
                }
                if (c == Color::Uncolored) lits.push_back(e);
            }
            if (satisfied) continue;
            if (lits.empty()) {
                out.instant_arrows = true;  // monochromatic copy frozen in place
                return out;
            }
            Clause cl;
            cl.needs = side.needs;
            cl.edges = std::move(lits);
            cl.unassigned = (int)cl.edges.size();
            out.clauses.push_back(std::move(cl));
        }
    }
    return out;
}

// Propagation-driven DFS over the clause lists.
struct Engine {
    const ArrowingInstance& inst;
    const Budget& budget;
    std::vector<Clause> clauses;
    std::vector<std::vector<int>> occ;  // edge -> clause ids
    std::vector<Color> state;           // per edge, frozen edges pre-set
    std::vector<int> trail;
    std::vector<int> uncolored;
    SearchStats stats;

    Engine(const ArrowingInstance& i, const Budget& b, std::vector<Clause> cls)
        : inst(i), budget(b), clauses(std::move(cls)) {
        const auto& edges = inst.graph.edges();
        state.resize(edges.size());
        for (size_t e = 0; e < edges.size(); ++e) {
            state[e] = inst.frozen.at((int)e);
            if (state[e] == Color::Uncolored) uncolored.push_back((int)e);
        }
        occ.resize(edges.size());
        for (size_t c = 0; c < clauses.size(); ++c)
            for (int e : clauses[c].edges) occ[e].push_back((int)c);
    }

    std::vector<int> unit_queue;

    // Counter updates always run to completion so that backtrack's inverse
    // walk is exact even on the conflicting assignment.
    bool push_and_apply(int edge, Color c) {
        state[edge] = c;
        trail.push_back(edge);
        bool ok = true;
        for (int cid : occ[edge]) {
            Clause& cl = clauses[cid];
            if (cl.needs == c) {
                ++cl.sat;
                continue;
            }
            --cl.unassigned;
            if (cl.sat == 0) {
                if (cl.unassigned == 0) ok = false;  // copy went monochromatic
                else if (cl.unassigned == 1) unit_queue.push_back(cid);
            }
        }
        return ok;
    }

    bool assign(int edge, Color c) {
        if (state[edge] != Color::Uncolored) return state[edge] == c;
        unit_queue.clear();
        if (!push_and_apply(edge, c)) {
            unit_queue.clear();
            return false;
        }
        for (size_t qi = 0; qi < unit_queue.size(); ++qi) {
            const Clause& cl = clauses[unit_queue[qi]];
            if (cl.sat > 0 || cl.unassigned != 1) continue;  // changed since queued
            for (int e2 : cl.edges) {
                if (state[e2] != Color::Uncolored) continue;
                ++stats.propagations;
                if (!push_and_apply(e2, cl.needs)) {
                    unit_queue.clear();
                    return false;
                }
                break;
            }
        }
        unit_queue.clear();
        return true;
    }

    void backtrack(size_t to) {
        while (trail.size() > to) {
            int e = trail.back();
            trail.pop_back();
            Color c = state[e];
            for (int cid : occ[e]) {
                Clause& cl = clauses[cid];
                if (cl.needs == c) --cl.sat;
                else ++cl.unassigned;
            }
            state[e] = Color::Uncolored;
        }
    }

    // Most near-complete copies first: weight 256 for two open edges, 16 for
    // three, 1 for four. Pressure by needed color picks the first branch.
    bool pick(int& edge, Color& first) const {
        long long best = -1;
        long long best_blue = 0, best_red = 0;
        int pick_edge = -1;
        std::vector<long long> blue_w(state.size(), 0), red_w(state.size(), 0);
        for (const Clause& cl : clauses) {
            if (cl.sat > 0 || cl.unassigned > 4) continue;
            long long w = cl.unassigned == 2 ? 256 : cl.unassigned == 3 ? 16 : 1;
            for (int e : cl.edges) {
                if (state[e] != Color::Uncolored) continue;
                if (cl.needs == Color::Blue) blue_w[e] += w;
                else red_w[e] += w;
            }
        }
        for (int e : uncolored) {
            if (state[e] != Color::Uncolored) continue;
            long long score = blue_w[e] + red_w[e];
            if (score > best) {
                best = score;
                pick_edge = e;
                best_blue = blue_w[e];
                best_red = red_w[e];
            }
        }
        if (pick_edge < 0) return false;
        if (best == 0) {
            // quiet region: lowest-index open edge with most copies overall
            size_t most = 0;
            for (int e : uncolored)
                if (state[e] == Color::Uncolored && occ[e].size() > most) {
                    most = occ[e].size();
                    pick_edge = e;
                }
        }
        edge = pick_edge;
        first = best_blue >= best_red ? Color::Blue : Color::Red;
        return true;
    }

    bool all_assigned() const {
        for (int e : uncolored)
            if (state[e] == Color::Uncolored) return false;
        return true;
    }

    Coloring snapshot() const {
        Coloring c(inst.graph);
        c.state.assign(state.begin(), state.end());
        return c;
    }

    ArrowingResult run() {
        ArrowingResult res;
        res.method = "search";

        // frozen edges can leave copies one short already
        std::vector<int> initial_units;
        for (size_t c = 0; c < clauses.size(); ++c)
            if (clauses[c].sat == 0 && clauses[c].unassigned == 1)
                initial_units.push_back((int)c);
        for (int cid : initial_units) {
            const Clause& cl = clauses[cid];
            if (cl.sat > 0 || cl.unassigned != 1) continue;
            for (int e : cl.edges) {
                if (state[e] != Color::Uncolored) continue;
                if (!assign(e, cl.needs)) {
                    res.status = ArrowingStatus::Arrows;
                    res.stats = stats;
                    return res;
                }
                break;
            }
        }

        struct DecisionFrame {
            size_t trail_size;
            int edge;
            Color first;
            bool flipped;
        };
        std::vector<DecisionFrame> decisions;

        bool conflict = false;
        while (true) {
            if (budget.max_nodes > 0 && stats.nodes > budget.max_nodes) {
                res.status = ArrowingStatus::BudgetExhausted;
                res.stats = stats;
                return res;
            }
            if (conflict) {
                while (true) {
                    if (decisions.empty()) {
                        res.status = ArrowingStatus::Arrows;
                        res.stats = stats;
                        return res;
                    }
                    DecisionFrame& d = decisions.back();
                    backtrack(d.trail_size);
                    if (!d.flipped) {
                        d.flipped = true;
                        if (assign(d.edge, opposite(d.first))) {
                            conflict = false;
                            break;
                        }
                        // immediate conflict on the flip: unwind further
                    } else {
                        decisions.pop_back();
                    }
                }
                continue;
            }
            if (all_assigned()) {
                res.status = ArrowingStatus::GoodColoring;
                res.good = snapshot();
                res.stats = stats;
                return res;
            }
            int edge = -1;
            Color first = Color::Red;
            if (!pick(edge, first))
                throw std::logic_error("arrows_check: no branch edge despite open assignment");
            ++stats.nodes;
            decisions.push_back({trail.size(), edge, first, false});
            if (!assign(edge, first)) conflict = true;
        }
    }
};

// Fallback without clause lists: plain DFS; after each tentative assignment
// only copies through the new edge can have appeared.
struct LazyEngine {
    const ArrowingInstance& inst;
    const Budget& budget;
    Coloring working;
    std::vector<int> uncolored;
    SearchStats stats;
    bool exhausted = false;

    LazyEngine(const ArrowingInstance& i, const Budget& b) : inst(i), budget(b), working(i.frozen) {
        for (size_t e = 0; e < working.state.size(); ++e)
            if (working.at((int)e) == Color::Uncolored) uncolored.push_back((int)e);
        stats.lazy = true;
    }

    const TargetPattern& target_for(Color c) const {
        return c == Color::Red ? inst.red_target : inst.blue_target;
    }

    bool search(size_t pos, std::optional<Coloring>& good) {
        if (exhausted) return false;
        if (pos == uncolored.size()) {
            good = working;
            return true;
        }
        int e = uncolored[pos];
        auto [u, v] = inst.graph.edges()[e];
        for (Color c : {Color::Red, Color::Blue}) {
            ++stats.nodes;
            if (budget.max_nodes > 0 && stats.nodes > budget.max_nodes) {
                exhausted = true;
                return false;
            }
            working.set(e, c);
            if (!find_target_through_edge(inst.graph, target_for(c), working, c, u, v)) {
                if (search(pos + 1, good)) return true;
                if (exhausted) return false;
            }
            working.set(e, Color::Uncolored);
        }
        return false;
    }

    ArrowingResult run() {
        ArrowingResult res;
        res.method = "search:lazy";
        // frozen edges alone may already contain a target
        if (find_target(inst.graph, inst.red_target, &inst.frozen, Color::Red) ||
            find_target(inst.graph, inst.blue_target, &inst.frozen, Color::Blue)) {
            res.status = ArrowingStatus::Arrows;
            res.stats = stats;
            return res;
        }
        std::optional<Coloring> good;
        bool found = search(0, good);
        if (exhausted) {
            res.status = ArrowingStatus::BudgetExhausted;
        } else if (found) {
            res.status = ArrowingStatus::GoodColoring;
            res.good = std::move(good);
        } else {
            res.status = ArrowingStatus::Arrows;
        }
        res.stats = stats;
        return res;
    }
};

}  // namespace

ArrowingResult arrows_check(const ArrowingInstance& inst, const Budget& budget) {
    if (inst.frozen.state.size() != inst.graph.edges().size())
        throw std::invalid_argument("arrows_check: frozen coloring domain mismatch");

    long long open = 0;
    for (Color c : inst.frozen.state) open += (c == Color::Uncolored);
    if (open > budget.max_uncolored) {
        ArrowingResult res;
        res.status = ArrowingStatus::BudgetExhausted;
        res.method = "precheck";
        return res;
    }

    ClauseSet cs = build_clauses(inst, budget.copy_cap);
    ArrowingResult res;
    if (cs.lazy) {
        LazyEngine lazy(inst, budget);
        res = lazy.run();
    } else if (cs.instant_arrows) {
        res.status = ArrowingStatus::Arrows;
        res.method = "search";
        res.stats.copies = cs.copies;
        return res;
    } else {
        Engine engine(inst, budget, std::move(cs.clauses));
        engine.stats.copies = cs.copies;
        res = engine.run();
    }

    if (res.status == ArrowingStatus::GoodColoring) {
        ColoringVerdict v = verify_coloring(inst, *res.good);
        if (!v.good)
            throw std::logic_error("arrows_check: engine returned an invalid good coloring");
    }
    return res;
}

RamseyOutcome ramsey_number(const TargetPattern& red, const TargetPattern& blue, int m_max,
                            const Budget& budget) {
    RamseyOutcome out;
    std::optional<Coloring> prev_good;
    Graph prev_host;
    for (int m = 1; m <= m_max; ++m) {
        Graph host = Graph::complete(m);
        ArrowingInstance inst(host, red, blue);
        ArrowingResult res = arrows_check(inst, budget);
        out.stats.nodes += res.stats.nodes;
        out.stats.propagations += res.stats.propagations;
        out.stats.copies += res.stats.copies;
        if (res.status == ArrowingStatus::BudgetExhausted) return out;  // inconclusive
        if (res.status == ArrowingStatus::Arrows) {
            out.found = true;
            out.value = m;
            out.good_below = std::move(prev_good);
            out.host_below = std::move(prev_host);
            return out;
        }
        prev_good = std::move(res.good);
        prev_host = std::move(host);
    }
    return out;
}

DimacsExport export_dimacs(const ArrowingInstance& inst, long long cap) {
    if (inst.frozen.state.size() != inst.graph.edges().size())
        throw std::invalid_argument("export_dimacs: frozen coloring domain mismatch");

    DimacsExport out;
    std::vector<int> edge_to_var(inst.graph.edges().size(), 0);
    for (size_t e = 0; e < inst.graph.edges().size(); ++e) {
        if (inst.frozen.at((int)e) == Color::Uncolored) {
            out.var_to_edge.push_back((int)e);
            edge_to_var[e] = (int)out.var_to_edge.size();  // 1-based
        }
    }
    out.num_vars = (int)out.var_to_edge.size();

    ClauseSet cs = build_clauses(inst, cap);
    if (cs.lazy)
        throw cap_exceeded("E_ENUM_OVERFLOW", "export_dimacs: copy enumeration overflow");

    std::string body;
    int n_clauses = 0;
    auto emit = [&](const std::vector<int>& lits) {
        std::string line;
        for (size_t i = 0; i < lits.size(); ++i) {
            if (i) line += ' ';
            line += std::to_string(lits[i]);
        }
        line += lits.empty() ? "0" : " 0";
        body += line;
        body += '\n';
        ++n_clauses;
    };
    if (cs.instant_arrows) {
        emit({});
    } else {
        for (const Clause& cl : cs.clauses) {
            std::vector<int> lits;
            lits.reserve(cl.edges.size());
            for (int e : cl.edges) {
                int var = edge_to_var[e];
                lits.push_back(cl.needs == Color::Blue ? -var : var);
            }
            emit(lits);
        }
    }
    out.num_clauses = n_clauses;
    out.text = "p cnf " + std::to_string(out.num_vars) + " " + std::to_string(n_clauses) + "\n" +
               body;
    return out;
}

ColoringVerdict verify_coloring(const ArrowingInstance& inst, const Coloring& total) {
    if (total.state.size() != inst.graph.edges().size())
        throw std::invalid_argument("verify_coloring: coloring domain mismatch");
    if (!total.total())
        throw std::invalid_argument("verify_coloring: coloring must be total");
    if (!total.extends(inst.frozen))
        throw std::invalid_argument("verify_coloring: frozen contradiction");

    ColoringVerdict v;
    if (auto red = find_target(inst.graph, inst.red_target, &total, Color::Red)) {
        v.mono = std::move(*red);
        v.mono_color = Color::Red;
        return v;
    }
    if (auto blue = find_target(inst.graph, inst.blue_target, &total, Color::Blue)) {
        v.mono = std::move(*blue);
        v.mono_color = Color::Blue;
        return v;
    }
    v.good = true;
    return v;
}

}  // namespace ramsey
