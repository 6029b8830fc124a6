#include "hyperreg/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hyperreg/errors.hpp"

namespace hyperreg {

long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

Edge make_edge(std::vector<VertexRef> vertices) {
    std::sort(vertices.begin(), vertices.end());
    return vertices;
}

static std::string vref_str(VertexRef v) {
    return std::to_string(v.part) + ":" + std::to_string(v.index);
}

static std::string edge_str(const Edge& e) {
    std::string s = "{";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ' ';
        s += vref_str(e[i]);
    }
    return s + "}";
}

void for_each_cross_tuple(int k, int h, const std::vector<int>& part_sizes,
                          const std::function<void(const Edge&)>& fn) {
    std::vector<int> parts(h);
    std::iota(parts.begin(), parts.end(), 0);
    Edge tuple(h);
    // odometer over part subsets, then over indices within the chosen parts
    auto run_indices = [&]() {
        std::vector<int> idx(h, 0);
        for (int i = 0; i < h; ++i)
            if (part_sizes[parts[i]] == 0) return;
        while (true) {
            for (int i = 0; i < h; ++i) tuple[i] = {parts[i], idx[i]};
            fn(tuple);
            int pos = h - 1;
            while (pos >= 0 && idx[pos] + 1 == part_sizes[parts[pos]]) {
                idx[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[pos];
        }
    };
    // lexicographic h-subsets of [k]
    while (true) {
        run_indices();
        int pos = h - 1;
        while (pos >= 0 && parts[pos] == k - h + pos) --pos;
        if (pos < 0) break;
        ++parts[pos];
        for (int i = pos + 1; i < h; ++i) parts[i] = parts[i - 1] + 1;
    }
}

void PlainHypergraph::canonicalize() {
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool PlainHypergraph::has_edge(const std::vector<int>& vs) const {
    return std::binary_search(edges.begin(), edges.end(), vs);
}

long long PlainHypergraph::count_cliques(int k) const {
    if (k > n_vertices) return 0;
    long long count = 0;
    std::vector<int> chosen;
    std::vector<int> probe(h);
    std::function<void(int)> rec = [&](int next) {
        if ((int)chosen.size() == k) {
            ++count;
            return;
        }
        for (int v = next; v < n_vertices; ++v) {
            bool ok = true;
            if ((int)chosen.size() >= h - 1) {
                // every h-subset using v and h-1 earlier picks must be an edge
                std::vector<int> sel(h - 1);
                std::function<bool(int, int)> subsets = [&](int start, int depth) {
                    if (depth == h - 1) {
                        for (int i = 0; i < h - 1; ++i) probe[i] = chosen[sel[i]];
                        probe[h - 1] = v;
                        return has_edge(probe);
                    }
                    for (int i = start; i < (int)chosen.size(); ++i) {
                        sel[depth] = i;
                        if (!subsets(i + 1, depth + 1)) return false;
                    }
                    return true;
                };
                ok = subsets(0, 0);
            }
            if (ok) {
                chosen.push_back(v);
                rec(v + 1);
                chosen.pop_back();
            }
        }
    };
    rec(0);
    return count;
}

KPartiteHypergraph::KPartiteHypergraph(int k, int h, std::vector<int> part_sizes,
                                       std::vector<Edge> edges)
    : k_(k), h_(h), part_sizes_(std::move(part_sizes)), edges_(std::move(edges)) {
    for (auto& e : edges_) std::sort(e.begin(), e.end());
    std::sort(edges_.begin(), edges_.end());
    part_offsets_.assign(k_ + 1, 0);
    for (int p = 0; p < k_ && p < (int)part_sizes_.size(); ++p)
        part_offsets_[p + 1] = part_offsets_[p] + part_sizes_[p];
    if (validate().ok()) build_indexes();
}

bool KPartiteHypergraph::balanced() const {
    for (int p = 1; p < k_; ++p)
        if (part_sizes_[p] != part_sizes_[0]) return false;
    return true;
}

long long KPartiteHypergraph::vertex_count() const {
    return std::accumulate(part_sizes_.begin(), part_sizes_.end(), 0LL);
}

VertexRef KPartiteHypergraph::from_global(int gid) const {
    int p = int(std::upper_bound(part_offsets_.begin(), part_offsets_.end(), gid) -
                part_offsets_.begin()) - 1;
    return {p, gid - part_offsets_[p]};
}

ValidationReport KPartiteHypergraph::validate() const {
    ValidationReport rep;
    if (k_ < 2) rep.violations.push_back("k must be at least 2");
    if (h_ < 2 || h_ >= std::max(k_, 2))
        rep.violations.push_back("h must satisfy 2 <= h < k");
    if ((int)part_sizes_.size() != k_)
        rep.violations.push_back("part_sizes length differs from k");
    for (size_t p = 0; p < part_sizes_.size(); ++p)
        if (part_sizes_[p] <= 0)
            rep.violations.push_back("part " + std::to_string(p) + " is empty");
    for (const auto& e : edges_) {
        if ((int)e.size() != h_) {
            rep.violations.push_back("edge " + edge_str(e) + ": expected " +
                                     std::to_string(h_) + " vertices");
            continue;
        }
        for (int i = 0; i < h_; ++i) {
            if (e[i].part < 0 || e[i].part >= k_) {
                rep.violations.push_back("edge " + edge_str(e) + ": part out of range");
                break;
            }
            if (e[i].index < 0 || e[i].index >= part_sizes_[e[i].part]) {
                rep.violations.push_back("edge " + edge_str(e) + ": index out of range");
                break;
            }
            if (i > 0 && e[i].part == e[i - 1].part) {
                rep.violations.push_back("edge " + edge_str(e) + ": repeated part");
                break;
            }
        }
    }
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            rep.violations.push_back("duplicate edge " + edge_str(edges_[i]));
    return rep;
}

bool KPartiteHypergraph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

void KPartiteHypergraph::build_indexes() {
    indexed_ = true;
    if (h_ != 3) return;
    pair_index_.clear();
    pair_index_.reserve(edges_.size() * 3);
    for (const auto& e : edges_) {
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                uint64_t key = (uint64_t(global_id(e[a])) << 32) | uint64_t(global_id(e[b]));
                int c = 3 - a - b;
                pair_index_[key].push_back(e[c]);
            }
    }
}

RegularityReport KPartiteHypergraph::regularity(int s) const {
    if (s < 1 || s >= h_)
        throw PreconditionError("regularity: s must satisfy 1 <= s < h");
    RegularityReport rep;
    rep.s = s;
    // incidence counts of all cross-part s-subtuples of edges
    std::map<std::vector<VertexRef>, long long> counts;
    std::vector<int> sel(s);
    for (const auto& e : edges_) {
        std::function<void(int, int)> subsets = [&](int start, int depth) {
            if (depth == s) {
                std::vector<VertexRef> t(s);
                for (int i = 0; i < s; ++i) t[i] = e[sel[i]];
                ++counts[t];
                return;
            }
            for (int i = start; i < h_; ++i) {
                sel[depth] = i;
                subsets(i + 1, depth + 1);
            }
        };
        subsets(0, 0);
    }
    long long lambda = -1;
    std::optional<std::pair<std::vector<VertexRef>, long long>> bad;
    for_each_cross_tuple(k_, s, part_sizes_, [&](const Edge& t) {
        if (bad) return;
        auto it = counts.find(t);
        long long c = it == counts.end() ? 0 : it->second;
        if (lambda < 0)
            lambda = c;
        else if (c != lambda)
            bad = {t, c};
    });
    if (bad) {
        rep.witness = bad;
    } else {
        rep.lambda = std::max(lambda, 0LL);
    }
    return rep;
}

// Backtracking over parts in order; uses the pair index for h = 3.
namespace {
struct CliqueSearch {
    const KPartiteHypergraph& g;
    std::vector<VertexRef> chosen;
    const std::function<void(const std::vector<VertexRef>&)>& emit;
    bool stop_at_first;
    bool done = false;

    CliqueSearch(const KPartiteHypergraph& g_,
                 const std::function<void(const std::vector<VertexRef>&)>& emit_,
                 bool first)
        : g(g_), emit(emit_), stop_at_first(first) {}

    bool edges_ok(VertexRef v) const {
        int have = (int)chosen.size();
        if (have < g.h() - 1) return true;
        std::vector<int> sel(g.h() - 1);
        Edge probe(g.h());
        std::function<bool(int, int)> subsets = [&](int start, int depth) {
            if (depth == g.h() - 1) {
                for (int i = 0; i < g.h() - 1; ++i) probe[i] = chosen[sel[i]];
                probe[g.h() - 1] = v;
                return g.has_edge(probe);
            }
            for (int i = start; i < have; ++i) {
                sel[depth] = i;
                if (!subsets(i + 1, depth + 1)) return false;
            }
            return true;
        };
        return subsets(0, 0);
    }

    void run(int part) {
        if (done) return;
        if (part == g.k()) {
            emit(chosen);
            if (stop_at_first) done = true;
            return;
        }
        for (int i = 0; i < g.part_sizes()[part]; ++i) {
            VertexRef v{part, i};
            if (!edges_ok(v)) continue;
            chosen.push_back(v);
            run(part + 1);
            chosen.pop_back();
            if (done) return;
        }
    }
};
}  // namespace

void KPartiteHypergraph::for_each_k_clique(
    const std::function<void(const std::vector<VertexRef>&)>& fn) const {
    if (h_ == 3 && k_ >= 3 && indexed_) {
        // enumerate (v0, v1) adjacent pairs, then extend by index lookups
        std::vector<VertexRef> clique(k_);
        Edge probe(3);
        std::function<void(int)> extend = [&](int part) {
            if (part == k_) {
                fn(clique);
                return;
            }
            uint64_t key = (uint64_t(global_id(clique[0])) << 32) |
                           uint64_t(global_id(clique[1]));
            auto it = pair_index_.find(key);
            if (it == pair_index_.end()) return;
            for (VertexRef v : it->second) {
                if (v.part != part) continue;
                bool ok = true;
                for (int a = 0; a < part && ok; ++a)
                    for (int b = a + 1; b < part && ok; ++b) {
                        if (a == 0 && b == 1) continue;
                        probe[0] = clique[a];
                        probe[1] = clique[b];
                        probe[2] = v;
                        ok = has_edge(probe);
                    }
                if (!ok) continue;
                clique[part] = v;
                extend(part + 1);
            }
        };
        for (int i0 = 0; i0 < part_sizes_[0]; ++i0)
            for (int i1 = 0; i1 < part_sizes_[1]; ++i1) {
                clique[0] = {0, i0};
                clique[1] = {1, i1};
                extend(2);
            }
        return;
    }
    CliqueSearch search(*this, fn, false);
    search.run(0);
}

std::optional<std::vector<VertexRef>> KPartiteHypergraph::find_k_clique() const {
    std::optional<std::vector<VertexRef>> out;
    // the indexed enumeration is not lexicographic across parts >= 2, so use
    // plain backtracking (it visits transversals in lexicographic order)
    std::function<void(const std::vector<VertexRef>&)> emit =
        [&](const std::vector<VertexRef>& c) { out = c; };
    CliqueSearch search(*this, emit, true);
    search.run(0);
    return out;
}

long long KPartiteHypergraph::count_k_cliques() const {
    long long n = 0;
    for_each_k_clique([&](const std::vector<VertexRef>&) { ++n; });
    return n;
}

KPartiteHypergraph KPartiteHypergraph::complement_partite() const {
    std::vector<Edge> comp;
    for_each_cross_tuple(k_, h_, part_sizes_, [&](const Edge& t) {
        if (!has_edge(t)) comp.push_back(t);
    });
    return KPartiteHypergraph(k_, h_, part_sizes_, std::move(comp));
}

PlainHypergraph KPartiteHypergraph::flatten() const {
    PlainHypergraph out;
    out.h = h_;
    out.n_vertices = (int)vertex_count();
    out.edges.reserve(edges_.size());
    for (const auto& e : edges_) {
        std::vector<int> f(h_);
        for (int i = 0; i < h_; ++i) f[i] = global_id(e[i]);
        out.edges.push_back(std::move(f));
    }
    out.canonicalize();
    return out;
}

}  // namespace hyperreg
