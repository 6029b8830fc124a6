#include "hyperreg/generators.hpp"

#include <random>

#include "hyperreg/errors.hpp"
#include "hyperreg/group.hpp"

namespace hyperreg {

KPartiteHypergraph generate_sum_regular(int k, int n, const ConstantSets& constant_sets) {
    if (k < 4) throw PreconditionError("generate_sum_regular: k must be >= 4");
    if (n < 2) throw PreconditionError("generate_sum_regular: n must be >= 2");
    auto triples = subsets_lex(k, 3);
    size_t t = 0;
    bool first = true;
    for (const auto& parts : triples) {
        auto it = constant_sets.find(parts);
        if (it == constant_sets.end())
            throw PreconditionError("generate_sum_regular: missing constant set for a part triple");
        if (first) {
            t = it->second.size();
            first = false;
        } else if (it->second.size() != t) {
            throw PreconditionError("generate_sum_regular: constant sets differ in size");
        }
        for (int r : it->second)
            if (r < 0 || r >= n)
                throw PreconditionError("generate_sum_regular: residue out of range");
    }
    if (t == 0 || (int)t == n)
        throw PreconditionError("generate_sum_regular: need 0 < t < n");

    std::vector<Edge> edges;
    for (const auto& parts : triples) {
        const auto& residues = constant_sets.at(parts);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (residues.count((x + y + z) % n))
                        edges.push_back({{parts[0], x}, {parts[1], y}, {parts[2], z}});
    }
    return KPartiteHypergraph(k, 3, std::vector<int>(k, n), std::move(edges));
}

ConstantSets random_constant_sets(int k, int n, int t, uint64_t seed, ZeroPolicy policy) {
    if (t <= 0 || t >= n)
        throw PreconditionError("random_constant_sets: need 0 < t < n");
    std::mt19937_64 rng(seed);
    ConstantSets out;
    for (const auto& parts : subsets_lex(k, 3)) {
        std::set<int> residues;
        int lo = policy == ZeroPolicy::free_draw ? 0 : 1;
        if (policy == ZeroPolicy::force_zero) residues.insert(0);
        std::uniform_int_distribution<int> dist(lo, n - 1);
        while ((int)residues.size() < t) residues.insert(dist(rng));
        out[parts] = std::move(residues);
    }
    return out;
}

KPartiteHypergraph random_hypergraph(int k, int h, int n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0)
        throw PreconditionError("random_hypergraph: p must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<int> sizes(k, n);
    for_each_cross_tuple(k, h, sizes, [&](const Edge& t) {
        double u = double(rng() >> 11) * 0x1.0p-53;
        if (u < p) edges.push_back(t);
    });
    return KPartiteHypergraph(k, h, std::move(sizes), std::move(edges));
}

}  // namespace hyperreg
