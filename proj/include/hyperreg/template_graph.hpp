#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperreg/hypergraph.hpp"

namespace hyperreg {

// A k-partite h-uniform hypergraph with a +/- sign per edge. signs[i] labels
// edges()[i] of the base graph.
class SignedHypergraph {
public:
    SignedHypergraph() = default;
    SignedHypergraph(KPartiteHypergraph base, std::vector<int8_t> signs);

    const KPartiteHypergraph& base() const { return base_; }
    const std::vector<int8_t>& signs() const { return signs_; }
    int sign_of(const Edge& e) const;  // +1 / -1, throws if absent

    KPartiteHypergraph positive_subgraph() const;
    KPartiteHypergraph negative_subgraph() const;

    ValidationReport validate() const;

private:
    KPartiteHypergraph base_;
    std::vector<int8_t> signs_;
};

// Certificate (or refutation) of the three template properties: matching
// uniform incidence of both sign classes at tuple size h-1, an all-positive
// transversal clique, and no (h+1)-clique touching a negative edge.
struct TemplateReport {
    std::optional<long long> p1_lambda;
    std::optional<std::pair<std::vector<VertexRef>, long long>> p1_witness;
    std::optional<std::vector<VertexRef>> p2_clique;
    std::optional<std::vector<VertexRef>> p3_violation;
    bool p1_ok = false, p2_ok = false, p3_ok = false;
    bool ok() const { return p1_ok && p2_ok && p3_ok; }
};

struct TemplateBudget {
    long long max_vertices = 1'000'000;
    long long max_edges = 10'000'000;
};

// Group-sum template on k parts, each a copy of (Z/hZ)^C(k,h): positive edges
// are cross-part h-tuples whose elements sum to zero, negative edges those
// summing to the unit vector of the edge's part set.
SignedHypergraph build_template(int h, int k, const TemplateBudget& budget = {});

TemplateReport verify_template(const SignedHypergraph& t);

// Sign-blind transversal clique count; also checks every clique uses the same
// group element in each part (throws if not).
long long count_template_cliques(const SignedHypergraph& t);

}  // namespace hyperreg
