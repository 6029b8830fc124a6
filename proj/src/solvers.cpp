#include "hyperreg/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hyperreg/errors.hpp"
#include "hyperreg/group.hpp"

namespace hyperreg {

namespace {

constexpr long long kNegInf = std::numeric_limits<long long>::min() / 4;

std::vector<std::vector<int>> all_supports(int n, int w) {
    std::vector<std::vector<int>> out;
    std::vector<int> comb(w);
    std::iota(comb.begin(), comb.end(), 0);
    if (w == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(comb);
        int pos = w - 1;
        while (pos >= 0 && comb[pos] == n - w + pos) --pos;
        if (pos < 0) break;
        ++comb[pos];
        for (int i = pos + 1; i < w; ++i) comb[i] = comb[i - 1] + 1;
    }
    return out;
}

// blocks ordered: every variable of a strictly below every variable of b
bool block_ordered(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() || b.empty()) return true;
    return a.back() < b.front();
}

// lexicographically smallest h-subset of [ell] containing `touched`
std::vector<int> lexmin_superset(const std::vector<int>& touched, int ell, int h) {
    std::vector<int> out = touched;
    for (int p = 0; p < ell && (int)out.size() < h; ++p)
        if (!std::binary_search(touched.begin(), touched.end(), p)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

WeightedCliqueInstance build_weighted_clique_instance(const CspInstance& phi, int k,
                                                      int ell,
                                                      const SolverBudget& budget) {
    const int h = phi.max_degree();
    if (ell <= h) throw PreconditionError("build_weighted_clique_instance: need ell > degree");
    if (ell > k) throw PreconditionError("build_weighted_clique_instance: need ell <= k");
    const int n = phi.n_vars();
    if (k > n) throw PreconditionError("build_weighted_clique_instance: k > n");

    WeightedCliqueInstance w;
    w.ell = ell;
    w.h = h;
    w.k = k;
    w.n_vars = n;
    w.part_weights.assign(ell, k / ell);
    for (int i = 0; i < k % ell; ++i) ++w.part_weights[i];

    long long total_vertices = 0;
    for (int i = 0; i < ell; ++i) total_vertices += binomial(n, w.part_weights[i]);
    if (total_vertices > budget.max_part_vertices)
        throw BudgetError("build_weighted_clique_instance: vertex budget exceeded");

    w.parts.resize(ell);
    for (int i = 0; i < ell; ++i) w.parts[i] = all_supports(n, w.part_weights[i]);

    const auto monomials = aggregate_polynomial(phi);
    const auto part_subsets = subsets_lex(ell, h);

    // enumerate weighted tuples per part subset: chains of pairwise disjoint,
    // block-ordered supports
    for (int rank = 0; rank < (int)part_subsets.size(); ++rank) {
        const auto& ps = part_subsets[rank];
        std::vector<int> vertex_idx(h);
        std::function<void(int)> rec = [&](int depth) {
            if (depth == h) {
                // joint assignment of this tuple
                std::vector<int> joint;
                std::vector<int> owner_part(n, -1);
                for (int d = 0; d < h; ++d)
                    for (int v : w.parts[ps[d]][vertex_idx[d]]) {
                        joint.push_back(v);
                        owner_part[v] = ps[d];
                    }
                std::sort(joint.begin(), joint.end());
                long long weight = 0;
                for (const auto& [vars, coeff] : monomials) {
                    if (!std::includes(joint.begin(), joint.end(), vars.begin(), vars.end()))
                        continue;
                    std::vector<int> touched;
                    for (int v : vars) touched.push_back(owner_part[v]);
                    std::sort(touched.begin(), touched.end());
                    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
                    if (lexmin_superset(touched, ell, h) == ps) weight += coeff;
                }
                std::vector<int> key;
                key.reserve(h + 1);
                key.push_back(rank);
                for (int d = 0; d < h; ++d) key.push_back(vertex_idx[d]);
                w.weights[key] = weight;
                return;
            }
            const auto& verts = w.parts[ps[depth]];
            for (int vi = 0; vi < (int)verts.size(); ++vi) {
                bool ok = true;
                for (int d = 0; d < depth && ok; ++d)
                    ok = block_ordered(w.parts[ps[d]][vertex_idx[d]], verts[vi]);
                if (!ok) continue;
                vertex_idx[depth] = vi;
                rec(depth + 1);
            }
        };
        rec(0);
    }
    return w;
}

std::optional<CliqueSolution> max_weight_triangle(const WeightedCliqueInstance& w) {
    if (w.ell != 3 || w.h != 2)
        throw PreconditionError("max_weight_triangle: expected ell=3, h=2");
    const int n0 = (int)w.parts[0].size();
    const int n1 = (int)w.parts[1].size();
    const int n2 = (int)w.parts[2].size();
    auto matrix = [&](int rank, int rows, int cols) {
        std::vector<long long> m((size_t)rows * cols, kNegInf);
        for (const auto& [key, weight] : w.weights)
            if (key[0] == rank) m[(size_t)key[1] * cols + key[2]] = weight;
        return m;
    };
    // part-pair ranks in subsets_lex(3,2): {0,1}=0, {0,2}=1, {1,2}=2
    std::vector<long long> w01 = matrix(0, n0, n1);
    std::vector<long long> w02 = matrix(1, n0, n2);
    std::vector<long long> w12 = matrix(2, n1, n2);

    // max-plus product of w01 and w12, with the middle witness kept
    std::vector<long long> prod((size_t)n0 * n2, kNegInf);
    std::vector<int> mid((size_t)n0 * n2, -1);
    for (int a = 0; a < n0; ++a)
        for (int b = 0; b < n1; ++b) {
            long long ab = w01[(size_t)a * n1 + b];
            if (ab == kNegInf) continue;
            const long long* row_bc = &w12[(size_t)b * n2];
            long long* row = &prod[(size_t)a * n2];
            int* row_mid = &mid[(size_t)a * n2];
            for (int c = 0; c < n2; ++c) {
                if (row_bc[c] == kNegInf) continue;
                long long v = ab + row_bc[c];
                if (v > row[c]) {
                    row[c] = v;
                    row_mid[c] = b;
                }
            }
        }
    std::optional<CliqueSolution> best;
    for (int a = 0; a < n0; ++a)
        for (int c = 0; c < n2; ++c) {
            long long ac = w02[(size_t)a * n2 + c];
            long long bc = prod[(size_t)a * n2 + c];
            if (ac == kNegInf || bc == kNegInf) continue;
            long long total = ac + bc;
            if (!best || total > best->weight)
                best = CliqueSolution{total, {a, mid[(size_t)a * n2 + c], c}};
        }
    return best;
}

std::optional<CliqueSolution> max_weight_hyperclique(const WeightedCliqueInstance& w) {
    if (w.h < 3)
        throw PreconditionError("max_weight_hyperclique: expected h >= 3");
    const auto part_subsets = subsets_lex(w.ell, w.h);
    std::vector<int> chosen(w.ell, -1);
    std::optional<CliqueSolution> best;
    // weight of every h-subset whose maximum part is `last`, all parts chosen
    auto accumulate_new = [&](int last, long long& sum) {
        for (int rank = 0; rank < (int)part_subsets.size(); ++rank) {
            const auto& ps = part_subsets[rank];
            if (ps.back() != last) continue;
            std::vector<int> key;
            key.push_back(rank);
            for (int p : ps) key.push_back(chosen[p]);
            auto it = w.weights.find(key);
            if (it == w.weights.end()) return false;
            sum += it->second;
        }
        return true;
    };
    std::function<void(int, long long)> rec = [&](int part, long long sum) {
        if (part == w.ell) {
            std::vector<int> verts(chosen.begin(), chosen.end());
            if (!best || sum > best->weight) best = CliqueSolution{sum, verts};
            return;
        }
        for (int vi = 0; vi < (int)w.parts[part].size(); ++vi) {
            bool ok = true;
            for (int d = 0; d < part && ok; ++d)
                ok = block_ordered(w.parts[d][chosen[d]], w.parts[part][vi]);
            if (!ok) continue;
            chosen[part] = vi;
            long long add = sum;
            if (part >= w.h - 1) {
                if (!accumulate_new(part, add)) continue;
            }
            rec(part + 1, add);
        }
        chosen[part] = -1;
    };
    rec(0, 0);
    return best;
}

namespace {

SolveResult solve_max(const CspInstance& phi, int k, SolveMethod method);

SolveResult greedy_linear(const CspInstance& phi, int k) {
    const int n = phi.n_vars();
    long long c0 = 0;
    std::vector<long long> c1(n, 0);
    for (const auto& [vars, coeff] : aggregate_polynomial(phi)) {
        if (vars.empty())
            c0 += coeff;
        else
            c1[vars[0]] += coeff;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return c1[a] > c1[b]; });
    SolveResult out;
    out.assignment.ones.assign(order.begin(), order.begin() + k);
    std::sort(out.assignment.ones.begin(), out.assignment.ones.end());
    out.value = c0;
    for (int v : out.assignment.ones) out.value += c1[v];
    return out;
}

SolveResult assemble(const CspInstance& phi, const WeightedCliqueInstance& w,
                     const CliqueSolution& sol) {
    SolveResult out;
    for (int p = 0; p < w.ell; ++p)
        for (int v : w.parts[p][sol.vertices[p]]) out.assignment.ones.push_back(v);
    std::sort(out.assignment.ones.begin(), out.assignment.ones.end());
    out.value = sol.weight;
    return out;
}

SolveResult solve_max(const CspInstance& phi, int k, SolveMethod method) {
    if (k < 0 || k > phi.n_vars())
        throw PreconditionError("solve_maxcsp: k out of range");
    if (method == SolveMethod::brute) {
        Optimum opt = brute_force_optimum(phi, k, Objective::max);
        return {opt.value, opt.assignment};
    }
    const int d = phi.max_degree();
    if (k == 0 || d <= 1) {
        if (k == 0) {
            Assignment empty;
            return {phi.evaluate(empty), empty};
        }
        return greedy_linear(phi, k);
    }
    if (d == 2) {
        if (k < 3) {
            Optimum opt = brute_force_optimum(phi, k, Objective::max);
            return {opt.value, opt.assignment};
        }
        WeightedCliqueInstance w = build_weighted_clique_instance(phi, k, 3);
        auto sol = max_weight_triangle(w);
        if (!sol) throw PreconditionError("solve_maxcsp: no valid triangle");
        return assemble(phi, w, *sol);
    }
    // d >= 3
    if (k <= d) {
        // no admissible part count (needs d < ell <= k); exhaustive search
        Optimum opt = brute_force_optimum(phi, k, Objective::max);
        return {opt.value, opt.assignment};
    }
    int ell = 0;
    for (int cand = d + 1; cand <= k; ++cand)
        if (k % cand == 0) {
            ell = cand;
            break;
        }
    if (ell == 0) ell = d + 1;
    WeightedCliqueInstance w = build_weighted_clique_instance(phi, k, ell);
    auto sol = max_weight_hyperclique(w);
    if (!sol) throw PreconditionError("solve_maxcsp: no valid hyperclique");
    return assemble(phi, w, *sol);
}

}  // namespace

SolveResult solve_maxcsp(const CspInstance& phi, int k, SolveMethod method,
                         Objective objective) {
    if (objective == Objective::min) {
        CspInstance neg = phi.negated();
        SolveResult r = solve_max(neg, k, method);
        return {(long long)phi.size() - r.value, r.assignment};
    }
    return solve_max(phi, k, method);
}

}  // namespace hyperreg
