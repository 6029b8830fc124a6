#include "hyperreg/product.hpp"

#include <algorithm>
#include <set>

#include "hyperreg/errors.hpp"

namespace hyperreg {

std::pair<KPartiteHypergraph, ProductVertexMap> signed_product(
    const PlainHypergraph& g, const SignedHypergraph& t, const ProductBudget& budget) {
    const auto& tb = t.base();
    const int h = tb.h();
    if (g.h != h)
        throw PreconditionError("signed_product: uniformity mismatch");
    const long long m = g.n_vertices;
    if (m <= 0)
        throw PreconditionError("signed_product: left hypergraph has no vertices");

    long long ordered_edges = 1;
    for (int i = 2; i <= h; ++i) ordered_edges *= i;
    ordered_edges *= (long long)g.edges.size();
    long long tuples = 1;
    for (int i = 0; i < h; ++i) tuples *= m;
    long long pos_t = 0, neg_t = 0;
    for (int8_t s : t.signs()) (s == 1 ? pos_t : neg_t)++;
    __int128 predicted = (__int128)pos_t * ordered_edges +
                         (__int128)neg_t * (tuples - ordered_edges);
    if (predicted > budget.max_edges)
        throw BudgetError("signed_product: predicted edge count exceeds budget");

    ProductVertexMap map;
    map.g_count = (int)m;
    map.t_part_sizes = tb.part_sizes();

    std::vector<int> part_sizes(tb.k());
    for (int p = 0; p < tb.k(); ++p) part_sizes[p] = tb.part_sizes()[p] * (int)m;

    // ordered tuples of left vertices, split into edge / non-edge
    std::vector<std::vector<int>> edge_tuples, nonedge_tuples;
    {
        std::vector<int> tup(h, 0);
        std::vector<int> sorted(h);
        while (true) {
            sorted = tup;
            std::sort(sorted.begin(), sorted.end());
            bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
            if (distinct && g.has_edge(sorted))
                edge_tuples.push_back(tup);
            else
                nonedge_tuples.push_back(tup);
            int pos = h - 1;
            while (pos >= 0 && tup[pos] + 1 == m) {
                tup[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++tup[pos];
        }
    }

    std::vector<Edge> edges;
    edges.reserve((size_t)(long long)predicted);
    Edge pe(h);
    for (size_t ei = 0; ei < tb.edges().size(); ++ei) {
        const Edge& te = tb.edges()[ei];
        const auto& tuples_for_sign = t.signs()[ei] == 1 ? edge_tuples : nonedge_tuples;
        for (const auto& tup : tuples_for_sign) {
            for (int i = 0; i < h; ++i) pe[i] = map.forward(tup[i], te[i]);
            edges.push_back(pe);
        }
    }
    return {KPartiteHypergraph(tb.k(), h, std::move(part_sizes), std::move(edges)),
            std::move(map)};
}

std::pair<KPartiteHypergraph, ProductVertexMap> signed_product(
    const KPartiteHypergraph& g, const SignedHypergraph& t, const ProductBudget& budget) {
    return signed_product(g.flatten(), t, budget);
}

std::pair<KPartiteHypergraph, ProductVertexMap> regularize(
    const PlainHypergraph& g, int k, const TemplateBudget& tbudget,
    const ProductBudget& pbudget) {
    SignedHypergraph t = build_template(g.h, k, tbudget);
    return signed_product(g, t, pbudget);
}

ProjectedClique project_clique(const PlainHypergraph& g, const SignedHypergraph& t,
                               const ProductVertexMap& map,
                               const KPartiteHypergraph& product,
                               const std::vector<VertexRef>& clique) {
    const int k = product.k();
    const int h = product.h();
    if ((int)clique.size() != k)
        throw PreconditionError("project_clique: expected one vertex per part");
    {
        std::vector<VertexRef> sorted = clique;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < k; ++i)
            if (sorted[i].part != i)
                throw PreconditionError("project_clique: not a transversal");
        std::vector<int> sel(h);
        std::function<bool(int, int)> all_edges = [&](int start, int depth) {
            if (depth == h) {
                Edge e(h);
                for (int i = 0; i < h; ++i) e[i] = sorted[sel[i]];
                return product.has_edge(e);
            }
            for (int i = start; i < k; ++i) {
                sel[depth] = i;
                if (!all_edges(i + 1, depth + 1)) return false;
            }
            return true;
        };
        if (!all_edges(0, 0))
            throw PreconditionError("project_clique: input is not a clique of the product");
    }

    ProjectedClique out;
    out.g_vertices.resize(k);
    out.t_vertices.resize(k);
    for (const VertexRef& pv : clique) {
        auto [gv, tv] = map.backward(pv);
        out.g_vertices[pv.part] = gv;
        out.t_vertices[pv.part] = tv;
    }

    // signed-graph side: every h-subset must be a positive edge
    std::vector<int> sel(h);
    std::function<bool(int, int)> t_ok = [&](int start, int depth) {
        if (depth == h) {
            Edge e(h);
            for (int i = 0; i < h; ++i) e[i] = out.t_vertices[sel[i]];
            return t.base().has_edge(e) && t.sign_of(e) == 1;
        }
        for (int i = start; i < k; ++i) {
            sel[depth] = i;
            if (!t_ok(i + 1, depth + 1)) return false;
        }
        return true;
    };
    if (!t_ok(0, 0))
        throw PreconditionError("project_clique: template components do not form a positive clique");

    // left side: components pairwise distinct, every h-subset an edge
    std::vector<int> gs = out.g_vertices;
    std::sort(gs.begin(), gs.end());
    if (std::adjacent_find(gs.begin(), gs.end()) != gs.end())
        throw PreconditionError("project_clique: left components are not distinct");
    std::function<bool(int, int)> g_ok = [&](int start, int depth) {
        if (depth == h) {
            std::vector<int> e(h);
            for (int i = 0; i < h; ++i) e[i] = gs[sel[i]];
            std::sort(e.begin(), e.end());
            return g.has_edge(e);
        }
        for (int i = start; i < k; ++i) {
            sel[depth] = i;
            if (!g_ok(i + 1, depth + 1)) return false;
        }
        return true;
    };
    if (!g_ok(0, 0))
        throw PreconditionError("project_clique: left components do not form a clique");
    return out;
}

}  // namespace hyperreg
