#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyperreg {

// A vertex of a k-partite hypergraph: (part, index within part), both 0-based.
struct VertexRef {
    int part = 0;
    int index = 0;
    auto operator<=>(const VertexRef&) const = default;
};

// An edge holds exactly h vertices from pairwise distinct parts.
// Canonical form: sorted by part, strictly increasing.
using Edge = std::vector<VertexRef>;

Edge make_edge(std::vector<VertexRef> vertices);  // sorts by (part, index)

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Result of a uniformity check at tuple size s: either the common incidence
// count lambda, or a witness tuple whose count deviates.
struct RegularityReport {
    int s = 0;
    std::optional<long long> lambda;
    std::optional<std::pair<std::vector<VertexRef>, long long>> witness;
    bool regular() const { return lambda.has_value(); }
};

// An h-uniform hypergraph on a flat vertex set {0,...,n-1}; edges are sorted
// h-subsets. This is the left operand of the signed product.
struct PlainHypergraph {
    int h = 2;
    int n_vertices = 0;
    std::vector<std::vector<int>> edges;  // each sorted ascending, list sorted

    void canonicalize();
    bool has_edge(const std::vector<int>& vs) const;  // vs sorted
    // Number of k-subsets of vertices whose every h-subset is an edge.
    long long count_cliques(int k) const;
};

class KPartiteHypergraph {
public:
    KPartiteHypergraph() = default;
    // Edges are canonicalized (part-sorted, deduplicated is NOT applied; use
    // validate() to detect duplicates). Indexes are built only when the data
    // is well formed.
    KPartiteHypergraph(int k, int h, std::vector<int> part_sizes,
                       std::vector<Edge> edges);

    int k() const { return k_; }
    int h() const { return h_; }
    const std::vector<int>& part_sizes() const { return part_sizes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool balanced() const;
    long long vertex_count() const;

    ValidationReport validate() const;
    bool well_formed() const { return validate().ok(); }

    bool has_edge(const Edge& e) const;  // e canonical

    // Uniform incidence of cross-part s-tuples (1 <= s < h). Tuples touching
    // no edge count as zero.
    RegularityReport regularity(int s) const;

    // Transversal cliques: one vertex per part, every cross-part h-subset an
    // edge. find returns the lexicographically first one in vertex order.
    std::optional<std::vector<VertexRef>> find_k_clique() const;
    long long count_k_cliques() const;
    void for_each_k_clique(const std::function<void(const std::vector<VertexRef>&)>& fn) const;

    // Edge set complemented within the cross-part h-tuples.
    KPartiteHypergraph complement_partite() const;

    // Partition dropped: vertices renumbered globally part by part.
    PlainHypergraph flatten() const;

    int global_id(VertexRef v) const { return part_offsets_[v.part] + v.index; }
    VertexRef from_global(int gid) const;

private:
    int k_ = 0;
    int h_ = 0;
    std::vector<int> part_sizes_;
    std::vector<Edge> edges_;
    std::vector<int> part_offsets_;
    bool indexed_ = false;
    // For h = 3: cross-part pair -> completing vertices, keyed by packed
    // global ids (lower part first).
    std::unordered_map<uint64_t, std::vector<VertexRef>> pair_index_;

    void build_indexes();
    friend class SignedHypergraph;
};

// All cross-part h-tuples of the given part sizes, in lexicographic order.
void for_each_cross_tuple(int k, int h, const std::vector<int>& part_sizes,
                          const std::function<void(const Edge&)>& fn);

long long binomial(int n, int r);

}  // namespace hyperreg
