#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hyperreg/csp.hpp"

namespace hyperreg {

// ell-partite h-uniform weighted instance built from a CSP: per-part vertices
// are the weight-w_i variable supports; an h-tuple across parts carries a
// weight iff its supports are pairwise disjoint and block-ordered (every
// variable of an earlier support below every variable of a later one).
// A transversal whose every h-subset is weighted corresponds to exactly one
// weight-k assignment, and its weights sum to the CSP value of that
// assignment.
struct WeightedCliqueInstance {
    int ell = 0;
    int h = 0;
    int k = 0;
    int n_vars = 0;
    std::vector<int> part_weights;                     // w_i per part, sums to k
    std::vector<std::vector<std::vector<int>>> parts;  // per part: sorted supports
    // key: [part-subset rank, vertex index per chosen part...]
    std::map<std::vector<int>, long long> weights;

    std::optional<long long> weight_of(const std::vector<int>& key) const {
        auto it = weights.find(key);
        if (it == weights.end()) return std::nullopt;
        return it->second;
    }
};

struct SolverBudget {
    long long max_part_vertices = 2'000'000;
};

WeightedCliqueInstance build_weighted_clique_instance(const CspInstance& phi, int k,
                                                      int ell,
                                                      const SolverBudget& budget = {});

struct CliqueSolution {
    long long weight = 0;
    std::vector<int> vertices;  // one per part
};

// Cubic max-plus product with witness recovery (ell = 3, h = 2).
std::optional<CliqueSolution> max_weight_triangle(const WeightedCliqueInstance& w);

// Exhaustive search over transversals whose h-subsets all carry weights.
std::optional<CliqueSolution> max_weight_hyperclique(const WeightedCliqueInstance& w);

enum class SolveMethod { brute, reduction };

struct SolveResult {
    long long value = 0;
    Assignment assignment;
};

// Exact optimizer. method = reduction dispatches on the instance degree d:
// d <= 1 greedy over the linear polynomial, d = 2 the triangle pipeline with
// ell = 3, d >= 3 the hyperclique pipeline with the smallest ell > d dividing
// k (falling back to d+1 with an unbalanced split, or to brute force when
// k <= d). Minimization runs maximization on the negated instance.
SolveResult solve_maxcsp(const CspInstance& phi, int k,
                         SolveMethod method = SolveMethod::reduction,
                         Objective objective = Objective::max);

}  // namespace hyperreg
