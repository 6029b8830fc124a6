#include "hyperreg/template_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hyperreg/errors.hpp"
#include "hyperreg/group.hpp"

namespace hyperreg {

std::vector<std::vector<int>> subsets_lex(int k, int h) {
    std::vector<std::vector<int>> out;
    if (h > k || h < 0) return out;
    std::vector<int> cur(h);
    for (int i = 0; i < h; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int pos = h - 1;
        while (pos >= 0 && cur[pos] == k - h + pos) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int i = pos + 1; i < h; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

int subset_rank(const std::vector<int>& subset, int k) {
    // rank in lexicographic order of sorted subsets
    int h = (int)subset.size();
    long long rank = 0;
    int prev = -1;
    for (int i = 0; i < h; ++i) {
        for (int v = prev + 1; v < subset[i]; ++v)
            rank += binomial(k - v - 1, h - i - 1);
        prev = subset[i];
    }
    return (int)rank;
}

SignedHypergraph::SignedHypergraph(KPartiteHypergraph base, std::vector<int8_t> signs)
    : base_(std::move(base)), signs_(std::move(signs)) {}

int SignedHypergraph::sign_of(const Edge& e) const {
    auto it = std::lower_bound(base_.edges().begin(), base_.edges().end(), e);
    if (it == base_.edges().end() || *it != e)
        throw PreconditionError("sign_of: edge not present");
    return signs_[it - base_.edges().begin()];
}

ValidationReport SignedHypergraph::validate() const {
    ValidationReport rep = base_.validate();
    if (signs_.size() != base_.edges().size())
        rep.violations.push_back("sign map size differs from edge count");
    for (int8_t s : signs_)
        if (s != 1 && s != -1) {
            rep.violations.push_back("sign other than +1/-1");
            break;
        }
    return rep;
}

static KPartiteHypergraph signed_subgraph(const SignedHypergraph& t, int8_t want) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < t.base().edges().size(); ++i)
        if (t.signs()[i] == want) edges.push_back(t.base().edges()[i]);
    return KPartiteHypergraph(t.base().k(), t.base().h(), t.base().part_sizes(),
                              std::move(edges));
}

KPartiteHypergraph SignedHypergraph::positive_subgraph() const {
    return signed_subgraph(*this, 1);
}
KPartiteHypergraph SignedHypergraph::negative_subgraph() const {
    return signed_subgraph(*this, -1);
}

SignedHypergraph build_template(int h, int k, const TemplateBudget& budget) {
    if (h < 2 || h >= k)
        throw PreconditionError("build_template: need 2 <= h < k");
    const int dims = (int)binomial(k, h);
    // |group| = h^dims per part; refuse before materializing anything large
    long long group_size = 1;
    for (int i = 0; i < dims; ++i) {
        if (group_size * h > budget.max_vertices)
            throw BudgetError("build_template: " + std::to_string(k) + "*" +
                              std::to_string(h) + "^" + std::to_string(dims) +
                              " vertices exceeds budget");
        group_size *= h;
    }
    if (k * group_size > budget.max_vertices)
        throw BudgetError("build_template: vertex count " +
                          std::to_string(k * group_size) + " exceeds budget");
    __int128 edge_count = 2 * (__int128)binomial(k, h);
    for (int i = 0; i < h - 1; ++i) {
        edge_count *= group_size;
        if (edge_count > budget.max_edges)
            throw BudgetError("build_template: edge count 2*C(k,h)*" +
                              std::to_string(group_size) + "^" +
                              std::to_string(h - 1) + " exceeds budget");
    }

    std::vector<int> part_sizes(k, (int)group_size);
    std::vector<std::pair<Edge, int8_t>> signed_edges;
    auto parts_list = subsets_lex(k, h);
    for (int rank = 0; rank < (int)parts_list.size(); ++rank) {
        const auto& parts = parts_list[rank];
        // free choice of the first h-1 elements; the last is determined
        std::vector<long long> idx(h - 1, 0);
        while (true) {
            GroupElement sum = GroupElement::zero(dims);
            for (int i = 0; i < h - 1; ++i)
                sum = sum.add(GroupElement::decode(idx[i], h, dims), h);
            for (int8_t sign : {int8_t(1), int8_t(-1)}) {
                GroupElement target = sign == 1 ? GroupElement::zero(dims)
                                                : GroupElement::unit(dims, rank);
                GroupElement last = target.add(sum.negate(h), h);
                Edge e(h);
                for (int i = 0; i < h - 1; ++i) e[i] = {parts[i], (int)idx[i]};
                e[h - 1] = {parts[h - 1], (int)last.encode(h)};
                signed_edges.emplace_back(std::move(e), sign);
            }
            int pos = h - 2;
            while (pos >= 0 && idx[pos] + 1 == group_size) {
                idx[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[pos];
        }
    }
    std::sort(signed_edges.begin(), signed_edges.end());
    std::vector<Edge> edges;
    std::vector<int8_t> signs;
    edges.reserve(signed_edges.size());
    signs.reserve(signed_edges.size());
    for (auto& [e, s] : signed_edges) {
        edges.push_back(std::move(e));
        signs.push_back(s);
    }
    return SignedHypergraph(
        KPartiteHypergraph(k, h, std::move(part_sizes), std::move(edges)),
        std::move(signs));
}

TemplateReport verify_template(const SignedHypergraph& t) {
    TemplateReport rep;
    const auto& base = t.base();
    const int h = base.h();

    KPartiteHypergraph pos = t.positive_subgraph();
    KPartiteHypergraph neg = t.negative_subgraph();
    RegularityReport rp = pos.regularity(h - 1);
    RegularityReport rn = neg.regularity(h - 1);
    if (rp.regular() && rn.regular() && *rp.lambda == *rn.lambda && *rp.lambda > 0) {
        rep.p1_ok = true;
        rep.p1_lambda = rp.lambda;
    } else if (!rp.regular()) {
        rep.p1_witness = rp.witness;
    } else if (!rn.regular()) {
        rep.p1_witness = rn.witness;
    } else {
        rep.p1_lambda = rp.lambda;  // unequal or zero; report the positive value
    }

    auto clique = pos.find_k_clique();
    if (clique) {
        rep.p2_ok = true;
        rep.p2_clique = clique;
    }

    // (h+1)-cliques within every choice of h+1 parts must avoid negative edges
    rep.p3_ok = true;
    for (const auto& parts : subsets_lex(base.k(), h + 1)) {
        if (!rep.p3_ok) break;
        std::vector<int> sub_sizes;
        for (int p : parts) sub_sizes.push_back(base.part_sizes()[p]);
        std::vector<VertexRef> chosen;
        Edge probe(h);
        std::vector<int> sel(h - 1);
        std::function<bool(VertexRef)> extends = [&](VertexRef v) {
            if ((int)chosen.size() < h - 1) return true;
            std::function<bool(int, int)> subsets = [&](int start, int depth) {
                if (depth == h - 1) {
                    for (int i = 0; i < h - 1; ++i) probe[i] = chosen[sel[i]];
                    probe[h - 1] = v;
                    return base.has_edge(probe);
                }
                for (int i = start; i < (int)chosen.size(); ++i) {
                    sel[depth] = i;
                    if (!subsets(i + 1, depth + 1)) return false;
                }
                return true;
            };
            return subsets(0, 0);
        };
        std::function<void(int)> rec = [&](int pi) {
            if (!rep.p3_ok) return;
            if (pi == (int)parts.size()) {
                // a clique on h+1 parts: check all its edges are positive
                std::vector<int> s2(h);
                std::function<bool(int, int)> all_pos = [&](int start, int depth) {
                    if (depth == h) {
                        Edge e(h);
                        for (int i = 0; i < h; ++i) e[i] = chosen[s2[i]];
                        return t.sign_of(e) == 1;
                    }
                    for (int i = start; i < (int)chosen.size(); ++i) {
                        s2[depth] = i;
                        if (!all_pos(i + 1, depth + 1)) return false;
                    }
                    return true;
                };
                if (!all_pos(0, 0)) {
                    rep.p3_ok = false;
                    rep.p3_violation = chosen;
                }
                return;
            }
            for (int i = 0; i < sub_sizes[pi]; ++i) {
                VertexRef v{parts[pi], i};
                if (!extends(v)) continue;
                chosen.push_back(v);
                rec(pi + 1);
                chosen.pop_back();
                if (!rep.p3_ok) return;
            }
        };
        rec(0);
    }
    return rep;
}

long long count_template_cliques(const SignedHypergraph& t) {
    long long count = 0;
    t.base().for_each_k_clique([&](const std::vector<VertexRef>& clique) {
        ++count;
        for (size_t i = 1; i < clique.size(); ++i)
            if (clique[i].index != clique[0].index)
                throw PreconditionError(
                    "count_template_cliques: clique is not diagonal");
    });
    return count;
}

}  // namespace hyperreg
