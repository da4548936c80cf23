#include "ramsey/dpll.hpp"

#include <sstream>
#include <stdexcept>

namespace ramsey {

Cnf parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok;
    Cnf cnf;
    long long n_clauses = -1;
    while (in >> tok) {
        if (tok == "c") {
            std::string line;
            std::getline(in, line);
            continue;
        }
        if (tok == "p") {
            std::string fmt;
            in >> fmt >> cnf.num_vars >> n_clauses;
            if (fmt != "cnf") throw std::invalid_argument("dimacs: expected 'p cnf'");
            continue;
        }
        // literal stream
        int lit = std::stoi(tok);
        std::vector<int> clause;
        while (lit != 0) {
            clause.push_back(lit);
            if (!(in >> lit)) throw std::invalid_argument("dimacs: clause missing terminator");
        }
        cnf.clauses.push_back(std::move(clause));
    }
    if (n_clauses >= 0 && (long long)cnf.clauses.size() != n_clauses)
        throw std::invalid_argument("dimacs: clause count mismatch");
    return cnf;
}

namespace {

// 0 = unassigned, 1 = true, 2 = false
constexpr uint8_t kUnset = 0, kTrue = 1, kFalse = 2;

struct Solver {
    const Cnf& cnf;
    std::vector<uint8_t> value;            // by var, 1-based
    std::vector<int> trail;                // assigned literals
    std::vector<std::vector<int>> occ_pos, occ_neg;
    std::vector<int> unassigned;           // per clause
    std::vector<int> satisfied;            // per clause
    long long decisions = 0, propagations = 0;

    explicit Solver(const Cnf& c) : cnf(c) {
        value.assign(cnf.num_vars + 1, kUnset);
        occ_pos.resize(cnf.num_vars + 1);
        occ_neg.resize(cnf.num_vars + 1);
        unassigned.resize(cnf.clauses.size());
        satisfied.assign(cnf.clauses.size(), 0);
        for (size_t i = 0; i < cnf.clauses.size(); ++i) {
            unassigned[i] = (int)cnf.clauses[i].size();
            for (int lit : cnf.clauses[i])
                (lit > 0 ? occ_pos[lit] : occ_neg[-lit]).push_back((int)i);
        }
    }

    bool lit_true(int lit) const {
        uint8_t v = value[std::abs(lit)];
        return lit > 0 ? v == kTrue : v == kFalse;
    }

    std::vector<int> unit_queue;

    // Counter updates always run to completion so the undo walk inverts
    // them exactly, conflict or not.
    bool push_and_apply(int lit) {
        int var = std::abs(lit);
        value[var] = lit > 0 ? kTrue : kFalse;
        trail.push_back(lit);
        const auto& sat_side = lit > 0 ? occ_pos[var] : occ_neg[var];
        const auto& unsat_side = lit > 0 ? occ_neg[var] : occ_pos[var];
        for (int ci : sat_side) ++satisfied[ci];
        bool ok = true;
        for (int ci : unsat_side) {
            --unassigned[ci];
            if (satisfied[ci] > 0) continue;
            if (unassigned[ci] == 0) ok = false;
            else if (unassigned[ci] == 1) unit_queue.push_back(ci);
        }
        return ok;
    }

    bool enqueue(int lit) {
        int var = std::abs(lit);
        if (value[var] != kUnset) return lit_true(lit);
        return push_and_apply(lit);
    }

    bool propagate() {
        for (size_t qi = 0; qi < unit_queue.size(); ++qi) {
            int ci = unit_queue[qi];
            if (satisfied[ci] > 0 || unassigned[ci] != 1) continue;
            for (int l : cnf.clauses[ci]) {
                if (value[std::abs(l)] != kUnset) continue;
                ++propagations;
                if (!enqueue(l)) {
                    unit_queue.clear();
                    return false;
                }
                break;
            }
        }
        unit_queue.clear();
        return true;
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            int lit = trail.back();
            trail.pop_back();
            int var = std::abs(lit);
            const auto& sat_side = lit > 0 ? occ_pos[var] : occ_neg[var];
            const auto& unsat_side = lit > 0 ? occ_neg[var] : occ_pos[var];
            for (int ci : sat_side) --satisfied[ci];
            for (int ci : unsat_side) ++unassigned[ci];
            value[var] = kUnset;
        }
        unit_queue.clear();
    }

    // branch literal: most occurrences in short active clauses, by polarity
    int pick() const {
        std::vector<long long> pos(cnf.num_vars + 1, 0), neg(cnf.num_vars + 1, 0);
        for (size_t i = 0; i < cnf.clauses.size(); ++i) {
            if (satisfied[i] > 0 || unassigned[i] > 4) continue;
            long long w = unassigned[i] == 2 ? 64 : unassigned[i] == 3 ? 8 : 1;
            for (int lit : cnf.clauses[i]) {
                if (value[std::abs(lit)] != kUnset) continue;
                (lit > 0 ? pos[lit] : neg[-lit]) += w;
            }
        }
        int best_var = 0;
        long long best = -1;
        for (int v = 1; v <= cnf.num_vars; ++v) {
            if (value[v] != kUnset) continue;
            long long s = pos[v] + neg[v];
            if (s > best) {
                best = s;
                best_var = v;
            }
        }
        if (best_var == 0) return 0;
        return pos[best_var] >= neg[best_var] ? best_var : -best_var;
    }

    bool all_assigned() const {
        for (int v = 1; v <= cnf.num_vars; ++v)
            if (value[v] == kUnset) return false;
        return true;
    }

    bool solve() {
        for (size_t i = 0; i < cnf.clauses.size(); ++i) {
            if (cnf.clauses[i].empty()) return false;
            if (cnf.clauses[i].size() == 1) unit_queue.push_back((int)i);
        }
        if (!propagate()) return false;

        struct Frame {
            size_t mark;
            int lit;
            bool flipped;
        };
        std::vector<Frame> frames;
        while (true) {
            if (all_assigned()) return true;
            int lit = pick();
            if (lit == 0) return true;  // no open clause cares
            ++decisions;
            frames.push_back({trail.size(), lit, false});
            bool ok = enqueue(lit) && propagate();
            while (!ok) {
                while (!frames.empty() && frames.back().flipped) {
                    undo_to(frames.back().mark);
                    frames.pop_back();
                }
                if (frames.empty()) return false;
                Frame& f = frames.back();
                undo_to(f.mark);
                f.flipped = true;
                ok = enqueue(-f.lit) && propagate();
            }
        }
    }
};

}  // namespace

DpllResult dpll_solve(const Cnf& cnf) {
    Solver solver(cnf);
    DpllResult res;
    res.sat = solver.solve();
    res.decisions = solver.decisions;
    res.propagations = solver.propagations;
    if (res.sat) {
        res.model.assign(cnf.num_vars + 1, 0);
        for (int v = 1; v <= cnf.num_vars; ++v)
            res.model[v] = solver.value[v] == kTrue ? 1 : 0;  // unassigned defaults to false
    }
    return res;
}

}  // namespace ramsey
