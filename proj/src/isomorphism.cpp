#include "drgforge/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace drgforge {
namespace {

/// Seed invariant. Degree always; for small graphs also the triangle count
/// and the multisets of common-neighbor profiles over neighbors and
/// distance-2 vertices (the latter separates graphs that plain refinement
/// cannot, e.g. a grid from the Shrikhande graph).
std::vector<std::vector<long long>> seed_invariants(const Graph& g) {
    const int n = g.vertex_count();
    const bool rich = n <= 600;
    std::vector<std::vector<long long>> inv(n);
    for (int v = 0; v < n; ++v) {
        inv[v].push_back(g.degree(v));
        if (!rich) continue;
        std::vector<long long> lambda_profile;
        long long triangles = 0;
        for (int u : g.neighbors(v)) {
            const auto common = common_neighbors(g, v, u);
            lambda_profile.push_back(static_cast<long long>(common.size()));
            triangles += static_cast<long long>(common.size());
        }
        std::sort(lambda_profile.begin(), lambda_profile.end());
        inv[v].push_back(triangles / 2);
        inv[v].insert(inv[v].end(), lambda_profile.begin(), lambda_profile.end());

        std::vector<long long> mu_profile;
        for (int w = 0; w < n; ++w) {
            if (w == v || g.adjacent(v, w)) continue;
            const auto common = common_neighbors(g, v, w);
            if (common.empty()) continue;
            long long inner_edges = 0;
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    inner_edges += g.adjacent(common[i], common[j]);
            mu_profile.push_back(static_cast<long long>(common.size()) * 10000 + inner_edges);
        }
        std::sort(mu_profile.begin(), mu_profile.end());
        inv[v].push_back(-1);  // separator
        inv[v].insert(inv[v].end(), mu_profile.begin(), mu_profile.end());
    }
    return inv;
}

/// One refinement round over both graphs with a shared signature dictionary.
/// Returns false when the color histograms diverge.
bool refine(const Graph& g, const Graph& h, std::vector<int>& col_g, std::vector<int>& col_h) {
    for (;;) {
        using Sig = std::pair<int, std::vector<int>>;
        auto signature = [](const Graph& gr, const std::vector<int>& col, int v) {
            std::vector<int> nb;
            nb.reserve(gr.degree(v));
            for (int u : gr.neighbors(v)) nb.push_back(col[u]);
            std::sort(nb.begin(), nb.end());
            return Sig{col[v], std::move(nb)};
        };
        std::map<Sig, int> dict;
        std::vector<Sig> sig_g(g.vertex_count()), sig_h(h.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            sig_g[v] = signature(g, col_g, v);
            dict.emplace(sig_g[v], 0);
        }
        for (int v = 0; v < h.vertex_count(); ++v) {
            sig_h[v] = signature(h, col_h, v);
            dict.emplace(sig_h[v], 0);
        }
        int next = 0;
        for (auto& [sig, id] : dict) id = next++;

        bool changed = false;
        std::vector<long long> hist_g(next, 0), hist_h(next, 0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            const int c = dict[sig_g[v]];
            changed |= (c != col_g[v]);
            col_g[v] = c;
            ++hist_g[c];
        }
        for (int v = 0; v < h.vertex_count(); ++v) {
            const int c = dict[sig_h[v]];
            changed |= (c != col_h[v]);
            col_h[v] = c;
            ++hist_h[c];
        }
        if (hist_g != hist_h) return false;
        if (!changed) return true;
    }
}

bool search(const Graph& g, const Graph& h, std::vector<int> col_g, std::vector<int> col_h,
            int next_color, std::vector<int>& out) {
    if (!refine(g, h, col_g, col_h)) return false;

    // Smallest non-singleton color class.
    std::map<int, std::vector<int>> classes_g;
    for (int v = 0; v < g.vertex_count(); ++v) classes_g[col_g[v]].push_back(v);
    int split_color = -1;
    std::size_t best_size = 0;
    for (const auto& [c, verts] : classes_g) {
        if (verts.size() > 1 && (split_color < 0 || verts.size() < best_size)) {
            split_color = c;
            best_size = verts.size();
        }
    }

    if (split_color < 0) {
        // Discrete coloring: match singletons by color and verify.
        std::map<int, int> by_color;
        for (int v = 0; v < h.vertex_count(); ++v) by_color[col_h[v]] = v;
        out.assign(g.vertex_count(), -1);
        for (int v = 0; v < g.vertex_count(); ++v) out[v] = by_color[col_g[v]];
        return verify_isomorphism(g, h, out);
    }

    const int u = classes_g[split_color].front();
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (col_h[v] != split_color) continue;
        auto trial_g = col_g;
        auto trial_h = col_h;
        trial_g[u] = next_color;
        trial_h[v] = next_color;
        if (search(g, h, std::move(trial_g), std::move(trial_h), next_color + 1, out))
            return true;
    }
    return false;
}

}  // namespace

bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (static_cast<int>(map.size()) != g.vertex_count()) return false;
    std::vector<char> used(h.vertex_count(), 0);
    for (int v : map) {
        if (v < 0 || v >= h.vertex_count() || used[v]) return false;
        used[v] = 1;
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (!h.adjacent(map[u], map[v])) return false;
    return true;  // equal edge counts make the edge map surjective
}

std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() > (1 << 16) || h.vertex_count() > (1 << 16))
        throw SizeCapExceeded("isomorphism search capped at 2^16 vertices");
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;

    const auto inv_g = seed_invariants(g);
    const auto inv_h = seed_invariants(h);
    std::map<std::vector<long long>, int> dict;
    for (const auto& s : inv_g) dict.emplace(s, 0);
    for (const auto& s : inv_h) dict.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : dict) id = next++;
    std::vector<int> col_g(g.vertex_count()), col_h(h.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) col_g[v] = dict[inv_g[v]];
    for (int v = 0; v < h.vertex_count(); ++v) col_h[v] = dict[inv_h[v]];

    std::vector<int> out;
    if (search(g, h, std::move(col_g), std::move(col_h), next, out)) return out;
    return std::nullopt;
}

}  // namespace drgforge
