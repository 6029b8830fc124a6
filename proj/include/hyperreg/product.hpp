#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hyperreg/hypergraph.hpp"
#include "hyperreg/template_graph.hpp"

namespace hyperreg {

// Bijection between (left vertex, signed-graph vertex) pairs and product
// vertices. A product vertex sits in the part of its signed-graph component;
// within part p the index is t_index * |V(G)| + g.
struct ProductVertexMap {
    int g_count = 0;
    std::vector<int> t_part_sizes;

    VertexRef forward(int g, VertexRef t) const {
        return {t.part, t.index * g_count + g};
    }
    std::pair<int, VertexRef> backward(VertexRef product) const {
        return {product.index % g_count,
                VertexRef{product.part, product.index / g_count}};
    }
};

struct ProductBudget {
    long long max_edges = 100'000'000;
};

// Product edges: a positive edge of T paired with every ordered tuple of
// left vertices forming an edge of G, and a negative edge of T paired with
// every ordered tuple (repeats allowed) forming a non-edge.
std::pair<KPartiteHypergraph, ProductVertexMap> signed_product(
    const PlainHypergraph& g, const SignedHypergraph& t,
    const ProductBudget& budget = {});

std::pair<KPartiteHypergraph, ProductVertexMap> signed_product(
    const KPartiteHypergraph& g, const SignedHypergraph& t,
    const ProductBudget& budget = {});

// Builds the (h,k) group-sum template and multiplies: the result is
// (s, lambda_s)-uniform for every s < h and has a transversal k-clique iff
// g has a k-clique.
std::pair<KPartiteHypergraph, ProductVertexMap> regularize(
    const PlainHypergraph& g, int k, const TemplateBudget& tbudget = {},
    const ProductBudget& pbudget = {});

struct ProjectedClique {
    std::vector<int> g_vertices;        // per product part
    std::vector<VertexRef> t_vertices;  // per product part
};

// Splits a verified transversal clique of the product into its left and
// signed-graph components; checks the components are cliques on their side.
ProjectedClique project_clique(const PlainHypergraph& g, const SignedHypergraph& t,
                               const ProductVertexMap& map,
                               const KPartiteHypergraph& product,
                               const std::vector<VertexRef>& clique);

}  // namespace hyperreg
