#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hyperreg/hypergraph.hpp"

namespace hyperreg {

// Keyed by sorted 3-subsets of parts; values are residue sets mod n.
using ConstantSets = std::map<std::vector<int>, std::set<int>>;

// 3-uniform k-partite hypergraph on k copies of Z/nZ: {x,y,z} across parts
// {i<j<l} is an edge iff x+y+z mod n lies in constant_sets[{i,j,l}]. With all
// sets of size t this is (2, (k-2)*t)-regular, and every cross-part pair has
// exactly t completions in each third part.
KPartiteHypergraph generate_sum_regular(int k, int n, const ConstantSets& constant_sets);

enum class ZeroPolicy { free_draw, force_zero, exclude_zero };

// Random constant sets, all of size t. Stream: mt19937_64(seed); for each
// 3-subset of parts in lexicographic order, draw candidates with
// uniform_int_distribution over the allowed residues until t are collected.
ConstantSets random_constant_sets(int k, int n, int t, uint64_t seed,
                                  ZeroPolicy policy = ZeroPolicy::free_draw);

// Each cross-part h-tuple is an edge independently with probability p.
// Stream: mt19937_64(seed); tuples visited in lexicographic order (part
// subsets, then indices); a tuple is an edge iff (rng() >> 11) * 2^-53 < p.
KPartiteHypergraph random_hypergraph(int k, int h, int n, double p, uint64_t seed);

}  // namespace hyperreg
