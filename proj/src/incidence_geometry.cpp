#include "drgforge/incidence_geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "drgforge/parallel.hpp"

namespace drgforge {

GridFrame grid_frame(const Graph& g, int x) {
    g.check_vertex(x);
    const auto local = local_graph(g, x);
    const auto structure = detect_grid_structure(local.graph);
    if (!structure)
        throw NotLocallyGrid("local graph of vertex " + std::to_string(x) +
                             " is not an (n x m)-grid");

    GridFrame frame;
    frame.base = x;
    frame.n = structure->n;
    frame.m = structure->m;
    auto to_parent = [&](const std::vector<std::int32_t>& clique) {
        std::vector<std::int32_t> out;
        out.reserve(clique.size());
        for (int v : clique) out.push_back(local.vertices[v]);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (const auto& c : structure->row_cliques) frame.row_cliques.push_back(to_parent(c));
    for (const auto& c : structure->col_cliques) frame.col_cliques.push_back(to_parent(c));
    std::sort(frame.row_cliques.begin(), frame.row_cliques.end());
    std::sort(frame.col_cliques.begin(), frame.col_cliques.end());

    frame.coord.assign(frame.n, std::vector<std::int32_t>(frame.m, -1));
    for (int i = 0; i < frame.n; ++i)
        for (int j = 0; j < frame.m; ++j) {
            std::vector<std::int32_t> inter;
            std::set_intersection(frame.row_cliques[i].begin(), frame.row_cliques[i].end(),
                                  frame.col_cliques[j].begin(), frame.col_cliques[j].end(),
                                  std::back_inserter(inter));
            if (inter.size() != 1)
                throw NotLocallyGrid("row/column cliques do not meet in single vertices");
            frame.coord[i][j] = inter[0];
            frame.position[inter[0]] = {i, j};
        }
    return frame;
}

SigmaSubgraph sigma_subgraph(const Graph& g, int x, std::array<int, 3> triple, bool top) {
    return sigma_subgraph(g, grid_frame(g, x), triple, top);
}

SigmaSubgraph sigma_subgraph(const Graph& g, const GridFrame& frame, std::array<int, 3> triple,
                             bool top) {
    const auto& family = top ? frame.col_cliques : frame.row_cliques;
    const int count = static_cast<int>(family.size());
    std::sort(triple.begin(), triple.end());
    if (triple[0] < 0 || triple[2] >= count || triple[0] == triple[1] || triple[1] == triple[2])
        throw BadParameters("clique triple must be three distinct family indices");

    std::set<std::int32_t> clique_union;
    for (int idx : triple)
        clique_union.insert(family[idx].begin(), family[idx].end());

    SigmaSubgraph out;
    out.triple = triple;
    out.top = top;

    std::vector<std::int32_t> verts{static_cast<std::int32_t>(frame.base)};
    verts.insert(verts.end(), clique_union.begin(), clique_union.end());

    const auto part = distance_partition(g, frame.base);
    std::size_t sigma2 = 0;
    if (part.eccentricity() >= 2) {
        for (int y : part.levels[2]) {
            const auto mu = common_neighbors(g, frame.base, y);
            bool inside = true;
            for (int w : mu) inside &= clique_union.count(w) > 0;
            if (inside && !mu.empty()) {
                verts.push_back(y);
                ++sigma2;
            }
        }
    }
    out.sigma2_empty = sigma2 == 0;
    out.sub = induced_subgraph(g, verts);
    return out;
}

namespace {

/// The six hexagons of a 3x3 grid are the complements of the six permutation
/// matrices.
bool is_grid_hexagon(const std::vector<std::pair<int, int>>& mu, std::array<int, 3>& rows,
                     std::array<int, 3>& cols) {
    if (mu.size() != 6) return false;
    std::set<int> row_set, col_set;
    for (const auto& [i, j] : mu) {
        row_set.insert(i);
        col_set.insert(j);
    }
    if (row_set.size() != 3 || col_set.size() != 3) return false;
    std::copy(row_set.begin(), row_set.end(), rows.begin());
    std::copy(col_set.begin(), col_set.end(), cols.begin());
    // Complement within the 3x3 subgrid must be a permutation matrix.
    std::set<std::pair<int, int>> present(mu.begin(), mu.end());
    std::set<int> comp_rows, comp_cols;
    int comp = 0;
    for (int i : rows)
        for (int j : cols)
            if (!present.count({i, j})) {
                ++comp;
                comp_rows.insert(i);
                comp_cols.insert(j);
            }
    return comp == 3 && comp_rows.size() == 3 && comp_cols.size() == 3;
}

std::vector<std::vector<std::pair<int, int>>> hexagons_of_subgrid(const std::array<int, 3>& rows,
                                                                  const std::array<int, 3>& cols) {
    std::array<int, 3> perm{0, 1, 2};
    std::vector<std::vector<std::pair<int, int>>> out;
    do {
        std::vector<std::pair<int, int>> hex;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (perm[a] != b) hex.emplace_back(rows[a], cols[b]);
        std::sort(hex.begin(), hex.end());
        out.push_back(std::move(hex));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

BlockSystem block_system(const Graph& g, int x) {
    BlockSystem bs;
    bs.frame = grid_frame(g, x);

    const auto part = distance_partition(g, x);
    if (part.eccentricity() >= 2) bs.gamma2 = part.levels[2];

    std::set<std::array<int, 3>> blocks, top_blocks;
    std::map<std::pair<std::array<int, 3>, std::array<int, 3>>, std::set<std::vector<std::pair<int, int>>>>
        hset_images;

    for (int y : bs.gamma2) {
        const auto mu_verts = common_neighbors(g, x, y);
        std::vector<std::pair<int, int>> image;
        for (int w : mu_verts) {
            const auto it = bs.frame.position.find(w);
            if (it == bs.frame.position.end())
                throw MuGraphNotHexagon("common neighbor of (" + std::to_string(x) + "," +
                                        std::to_string(y) + ") is outside the local frame");
            image.push_back(it->second);
        }
        std::sort(image.begin(), image.end());
        std::array<int, 3> rows{}, cols{};
        if (!is_grid_hexagon(image, rows, cols))
            throw MuGraphNotHexagon("mu-graph of (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") is not a hexagon");
        blocks.insert(rows);
        top_blocks.insert(cols);
        hset_images[{rows, cols}].insert(image);
        if (!bs.mu_lookup.emplace(image, y).second) bs.distinct_mu = false;
        bs.mu_images.push_back(std::move(image));
    }

    bs.blocks.assign(blocks.begin(), blocks.end());
    bs.top_blocks.assign(top_blocks.begin(), top_blocks.end());

    // Every realized (block, T-block) pair must realize all six hexagons of
    // its 3x3 subgrid, and every block x T-block combination must occur.
    std::ostringstream details;
    for (const auto& block : bs.blocks)
        for (const auto& top : bs.top_blocks) {
            const auto it = hset_images.find({block, top});
            if (it == hset_images.end()) {
                bs.hsets_complete = false;
                details << "pair of block/T-block carries no vertex; ";
                continue;
            }
            const auto expected = hexagons_of_subgrid(block, top);
            if (std::vector<std::vector<std::pair<int, int>>>(it->second.begin(),
                                                              it->second.end()) != expected) {
                bs.hsets_complete = false;
                details << "pair does not realize exactly the six hexagons; ";
            }
        }
    if (!bs.distinct_mu) details << "two distance-2 vertices share a mu-image; ";
    bs.details = details.str();
    return bs;
}

bool verify_mu_adjacency_criterion(const Graph& g, const BlockSystem& bs, std::string* details) {
    const auto& frame = bs.frame;
    for (std::size_t a = 0; a < bs.gamma2.size(); ++a) {
        for (std::size_t b = a + 1; b < bs.gamma2.size(); ++b) {
            std::vector<std::pair<int, int>> common;
            std::set_intersection(bs.mu_images[a].begin(), bs.mu_images[a].end(),
                                  bs.mu_images[b].begin(), bs.mu_images[b].end(),
                                  std::back_inserter(common));
            // Shape of the induced subgraph on the common coordinates.
            int edges = 0;
            std::vector<int> deg(common.size(), 0);
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    const bool adj = (common[i].first == common[j].first) ^
                                     (common[i].second == common[j].second);
                    if (adj) {
                        ++edges;
                        ++deg[i];
                        ++deg[j];
                    }
                }
            const bool one_edge = common.size() == 2 && edges == 1;
            const bool two_disjoint =
                common.size() == 4 && edges == 2 &&
                std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
            const bool predicted = one_edge || two_disjoint;
            const bool actual = g.adjacent(bs.gamma2[a], bs.gamma2[b]);
            if (predicted != actual) {
                if (details) {
                    std::ostringstream os;
                    os << "pair (" << bs.gamma2[a] << "," << bs.gamma2[b] << ") adjacency "
                       << actual << " but mu-intersection predicts " << predicted;
                    *details = os.str();
                }
                return false;
            }
        }
    }
    return true;
}

bool verify_block_partition(const Graph& g, const BlockSystem& bs, int samples,
                            std::string* details) {
    const auto& frame = bs.frame;
    std::set<std::int32_t> local_all;
    for (const auto& c : frame.row_cliques) local_all.insert(c.begin(), c.end());

    const int limit = std::min<int>(samples, static_cast<int>(bs.gamma2.size()));
    for (int idx = 0; idx < limit; ++idx) {
        const int z = bs.gamma2[idx];
        std::array<int, 3> rows{}, cols{};
        is_grid_hexagon(bs.mu_images[idx], rows, cols);

        std::set<std::int32_t> union_rc;
        for (int i : rows)
            union_rc.insert(frame.row_cliques[i].begin(), frame.row_cliques[i].end());
        for (int j : cols)
            union_rc.insert(frame.col_cliques[j].begin(), frame.col_cliques[j].end());
        std::set<std::int32_t> mu_verts;
        for (const auto& [i, j] : bs.mu_images[idx]) mu_verts.insert(frame.coord[i][j]);

        const auto from_z = distance_partition(g, z);
        std::set<std::int32_t> got2, got3;
        for (int w : local_all) {
            if (from_z.dist[w] == 2) got2.insert(w);
            if (from_z.dist[w] == 3) got3.insert(w);
        }
        std::set<std::int32_t> want2;
        for (int w : union_rc)
            if (!mu_verts.count(w)) want2.insert(w);
        std::set<std::int32_t> want3;
        for (int w : local_all)
            if (!union_rc.count(w)) want3.insert(w);
        if (got2 != want2 || got3 != want3) {
            if (details)
                *details = "distance partition of the local graph seen from vertex " +
                           std::to_string(z) + " does not match the block formula";
            return false;
        }
    }
    return true;
}

namespace {

/// Backtracking alignment of two 3-uniform hypergraphs given as sorted
/// triple sets; calls sink for every bijection mapping triples onto triples.
class TripleAligner {
public:
    TripleAligner(int n, const std::vector<std::array<int, 3>>& from,
                  const std::vector<std::array<int, 3>>& to)
        : n_(n), from_set_(from.begin(), from.end()), to_set_(to.begin(), to.end()) {
        degree_from_.assign(n, 0);
        degree_to_.assign(n, 0);
        for (const auto& t : from)
            for (int v : t) ++degree_from_[v];
        for (const auto& t : to)
            for (int v : t) ++degree_to_[v];
    }

    bool viable() const { return from_set_.size() == to_set_.size(); }

    /// sink returns true to stop the search.
    bool search(const std::function<bool(const std::vector<int>&)>& sink) {
        perm_.assign(n_, -1);
        used_.assign(n_, false);
        return extend(0, sink);
    }

private:
    bool extend(int pos, const std::function<bool(const std::vector<int>&)>& sink) {
        if (pos == n_) return sink(perm_);
        for (int target = 0; target < n_; ++target) {
            if (used_[target] || degree_from_[pos] != degree_to_[target]) continue;
            perm_[pos] = target;
            used_[target] = true;
            if (consistent(pos) && extend(pos + 1, sink)) return true;
            used_[target] = false;
            perm_[pos] = -1;
        }
        return false;
    }

    /// Every triple fully inside the assigned prefix must map onto a triple.
    bool consistent(int pos) const {
        for (const auto& t : from_set_) {
            if (std::max({t[0], t[1], t[2]}) != pos) continue;
            std::array<int, 3> image{perm_[t[0]], perm_[t[1]], perm_[t[2]]};
            if (image[0] < 0 || image[1] < 0 || image[2] < 0) continue;
            std::sort(image.begin(), image.end());
            if (!to_set_.count(image)) return false;
        }
        // Non-triples must not map onto triples: count triples inside the
        // image of the prefix.
        long long from_count = 0, to_count = 0;
        for (const auto& t : from_set_)
            if (std::max({t[0], t[1], t[2]}) <= pos) ++from_count;
        for (const auto& t : to_set_) {
            bool inside = true;
            for (int v : t) {
                bool hit = false;
                for (int p = 0; p <= pos; ++p) hit |= (perm_[p] == v);
                inside &= hit;
            }
            if (inside) ++to_count;
        }
        return from_count == to_count;
    }

    int n_;
    std::set<std::array<int, 3>> from_set_, to_set_;
    std::vector<int> degree_from_, degree_to_;
    std::vector<int> perm_;
    std::vector<bool> used_;
};

std::vector<std::pair<std::int32_t, std::int32_t>> build_ball_mapping(
    const BlockSystem& bs_h, const BlockSystem& bs_g, const std::vector<int>& pi,
    const std::vector<int>& pi_top, bool transpose, bool* ok) {
    std::vector<std::pair<std::int32_t, std::int32_t>> mapping;
    *ok = false;
    mapping.emplace_back(bs_h.frame.base, bs_g.frame.base);
    for (int i = 0; i < bs_h.frame.n; ++i)
        for (int j = 0; j < bs_h.frame.m; ++j) {
            const int gi = transpose ? pi_top[j] : pi[i];
            const int gj = transpose ? pi[i] : pi_top[j];
            mapping.emplace_back(bs_h.frame.coord[i][j], bs_g.frame.coord[gi][gj]);
        }
    for (std::size_t idx = 0; idx < bs_h.gamma2.size(); ++idx) {
        std::vector<std::pair<int, int>> image;
        image.reserve(6);
        for (const auto& [i, j] : bs_h.mu_images[idx]) {
            if (transpose)
                image.emplace_back(pi_top[j], pi[i]);
            else
                image.emplace_back(pi[i], pi_top[j]);
        }
        std::sort(image.begin(), image.end());
        const auto it = bs_g.mu_lookup.find(image);
        if (it == bs_g.mu_lookup.end()) return {};
        mapping.emplace_back(bs_h.gamma2[idx], it->second);
    }
    *ok = true;
    return mapping;
}

bool verify_ball_mapping(const Graph& h, const Graph& g,
                         const std::vector<std::pair<std::int32_t, std::int32_t>>& mapping) {
    std::map<std::int32_t, std::int32_t> forward;
    std::set<std::int32_t> image;
    for (const auto& [hv, gv] : mapping) {
        if (!forward.emplace(hv, gv).second) return false;
        if (!image.insert(gv).second) return false;
    }
    // Edge preservation forward over the induced ball.
    long long edges_h = 0, edges_g = 0;
    for (const auto& [hu, gu] : mapping)
        for (int hv : h.neighbors(hu)) {
            const auto it = forward.find(hv);
            if (it == forward.end()) continue;
            ++edges_h;
            if (!g.adjacent(gu, it->second)) return false;
        }
    // Backward: count edges inside the image and check the inverse map.
    std::map<std::int32_t, std::int32_t> backward;
    for (const auto& [hv, gv] : mapping) backward[gv] = hv;
    for (const auto& [gu, hu] : backward)
        for (int gv : g.neighbors(gu)) {
            const auto it = backward.find(gv);
            if (it == backward.end()) continue;
            ++edges_g;
            if (!h.adjacent(hu, it->second)) return false;
        }
    return edges_h == edges_g;
}

}  // namespace

Ball2Result ball2_isomorphism(const Graph& g, int x, const Graph& h, int xt) {
    Ball2Result result;
    const BlockSystem bs_g = block_system(g, x);
    const BlockSystem bs_h = block_system(h, xt);
    if (!bs_g.distinct_mu || !bs_h.distinct_mu)
        throw DistinctMuGraphsViolated("two distance-2 vertices share a mu-graph");

    const bool same = bs_g.frame.n == bs_h.frame.n && bs_g.frame.m == bs_h.frame.m;
    const bool transposed = bs_h.frame.n == bs_h.frame.m && same;  // extra orientation when square
    if (!same) {
        result.certificate = "frame dimensions (" + std::to_string(bs_g.frame.n) + "," +
                             std::to_string(bs_g.frame.m) + ") vs (" +
                             std::to_string(bs_h.frame.n) + "," + std::to_string(bs_h.frame.m) +
                             ") differ";
        return result;
    }
    if (bs_h.gamma2.size() != bs_g.gamma2.size()) {
        result.certificate = "distance-2 sphere sizes differ";
        return result;
    }

    for (const bool transpose : {false, true}) {
        if (transpose && !transposed) break;
        const auto& h_blocks = transpose ? bs_h.top_blocks : bs_h.blocks;
        const auto& h_tops = transpose ? bs_h.blocks : bs_h.top_blocks;
        TripleAligner rows(bs_g.frame.n, h_blocks, bs_g.blocks);
        TripleAligner cols(bs_g.frame.m, h_tops, bs_g.top_blocks);
        if (!rows.viable() || !cols.viable()) continue;

        const bool done = rows.search([&](const std::vector<int>& pi) {
            return cols.search([&](const std::vector<int>& pi_top) {
                bool built = false;
                auto mapping = build_ball_mapping(bs_h, bs_g, pi, pi_top, transpose, &built);
                if (!built) return false;
                if (!verify_ball_mapping(h, g, mapping)) return false;
                result.mapping = std::move(mapping);
                result.found = true;
                return true;
            });
        });
        if (done) return result;
    }
    result.certificate = "no block-aligning permutation pair extends to an edge-preserving "
                         "bijection of the balls";
    return result;
}

std::vector<std::vector<std::int32_t>> maximal_cliques(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 4096) throw SizeCapExceeded("maximal clique enumeration capped at 4096 vertices");
    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> adj(n, std::vector<std::uint64_t>(words, 0));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u][v / 64] |= 1ull << (v % 64);

    std::vector<std::vector<std::int32_t>> out;
    std::vector<std::int32_t> current;

    using Bits = std::vector<std::uint64_t>;
    std::function<void(Bits, Bits)> bron = [&](Bits p, Bits x) {
        bool p_empty = true, x_empty = true;
        for (auto w : p) p_empty &= (w == 0);
        for (auto w : x) x_empty &= (w == 0);
        if (p_empty && x_empty) {
            out.push_back(current);
            return;
        }
        // Pivot maximizing |P ∩ N(u)|.
        int pivot = -1;
        long long best = -1;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = p[w] | x[w];
            while (bits) {
                const int u = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                long long cnt = 0;
                for (int ww = 0; ww < words; ++ww)
                    cnt += __builtin_popcountll(p[ww] & adj[u][ww]);
                if (cnt > best) {
                    best = cnt;
                    pivot = u;
                }
            }
        }
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = p[w] & ~adj[pivot][w];
            while (bits) {
                const int v = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                Bits p2(words), x2(words);
                for (int ww = 0; ww < words; ++ww) {
                    p2[ww] = p[ww] & adj[v][ww];
                    x2[ww] = x[ww] & adj[v][ww];
                }
                current.push_back(v);
                bron(std::move(p2), std::move(x2));
                current.pop_back();
                p[w] &= ~(1ull << (v % 64));
                x[w] |= 1ull << (v % 64);
            }
        }
    };

    Bits p(words, ~0ull), x(words, 0);
    if (n % 64) p[words - 1] = (1ull << (n % 64)) - 1;
    bron(std::move(p), std::move(x));
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

SemiPartialGeometry extract_spg(const Graph& sigma, int line_size) {
    if (line_size < 2) throw BadParameters("line size must be at least 2");
    const int n = sigma.vertex_count();

    SemiPartialGeometry spg;
    spg.point_count = static_cast<std::size_t>(n);
    for (auto& clique : maximal_cliques(sigma))
        if (static_cast<int>(clique.size()) == line_size) spg.lines.push_back(std::move(clique));
    if (spg.lines.empty())
        throw AxiomViolation("SPG2: no maximal clique has the requested line size");
    spg.s = line_size - 1;

    // SPG1 and the collinearity relation.
    std::map<std::pair<int, int>, int> pair_lines;
    std::vector<std::vector<int>> lines_through(n);
    for (std::size_t li = 0; li < spg.lines.size(); ++li) {
        const auto& line = spg.lines[li];
        for (int v : line) lines_through[v].push_back(static_cast<int>(li));
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                const auto key = std::minmax(line[i], line[j]);
                if (++pair_lines[{key.first, key.second}] > 1)
                    throw AxiomViolation("SPG1: points " + std::to_string(line[i]) + "," +
                                         std::to_string(line[j]) + " lie on two lines");
            }
    }
    auto collinear = [&](int u, int v) {
        const auto key = std::minmax(u, v);
        return pair_lines.count({key.first, key.second}) > 0;
    };

    // SPG3.
    spg.t = static_cast<long long>(lines_through[0].size()) - 1;
    for (int v = 0; v < n; ++v)
        if (static_cast<long long>(lines_through[v].size()) != spg.t + 1)
            throw AxiomViolation("SPG3: point " + std::to_string(v) + " lies on " +
                                 std::to_string(lines_through[v].size()) + " lines, point 0 on " +
                                 std::to_string(spg.t + 1));

    // SPG4: both counts (points of L collinear with x, lines through x
    // meeting L) must agree and be 0 or alpha.
    long long alpha = 0;
    for (int v = 0; v < n; ++v) {
        std::set<int> own(lines_through[v].begin(), lines_through[v].end());
        for (std::size_t li = 0; li < spg.lines.size(); ++li) {
            if (own.count(static_cast<int>(li))) continue;
            const auto& line = spg.lines[li];
            long long pts = 0;
            for (int u : line) pts += collinear(v, u);
            long long lns = 0;
            for (int my_line : lines_through[v]) {
                bool meets = false;
                for (int u : spg.lines[my_line]) {
                    if (u == v) continue;
                    meets |= std::binary_search(line.begin(), line.end(), u);
                }
                lns += meets;
            }
            if (pts != lns)
                throw AxiomViolation("SPG4: point " + std::to_string(v) + " and a line see " +
                                     std::to_string(pts) + " points but " + std::to_string(lns) +
                                     " lines");
            if (pts == 0) continue;
            if (alpha == 0)
                alpha = pts;
            else if (pts != alpha)
                throw AxiomViolation("SPG4: incidence count " + std::to_string(pts) +
                                     " conflicts with alpha = " + std::to_string(alpha));
        }
    }
    if (alpha == 0) throw AxiomViolation("SPG4: alpha would be 0");
    spg.alpha = alpha;

    // SPG5 over non-collinear pairs.
    long long mu = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (collinear(u, v)) continue;
            long long common = 0;
            for (int w = 0; w < n; ++w)
                if (w != u && w != v && collinear(u, w) && collinear(v, w)) ++common;
            if (common == 0)
                throw AxiomViolation("SPG5: non-collinear points " + std::to_string(u) + "," +
                                     std::to_string(v) + " have no common collinear point");
            if (mu < 0)
                mu = common;
            else if (common != mu)
                throw AxiomViolation("SPG5: mu is not constant (" + std::to_string(common) +
                                     " vs " + std::to_string(mu) + ")");
        }
    spg.mu = mu < 0 ? 0 : mu;
    spg.is_partial = (spg.mu == (spg.t + 1) * spg.alpha);

    // Diagonal axiom: z, u off the line of a collinear pair, both collinear
    // with both ends, must themselves be collinear.
    spg.diagonal_axiom = true;
    for (const auto& [pair, cnt] : pair_lines) {
        const auto [px, py] = pair;
        // The unique line through the pair.
        const std::vector<std::int32_t>* line = nullptr;
        for (int li : lines_through[px]) {
            const auto& cand = spg.lines[li];
            if (std::binary_search(cand.begin(), cand.end(), py)) {
                line = &cand;
                break;
            }
        }
        std::vector<int> candidates;
        for (int z = 0; z < n; ++z) {
            if (std::binary_search(line->begin(), line->end(), z)) continue;
            if (collinear(z, px) && collinear(z, py)) candidates.push_back(z);
        }
        for (std::size_t i = 0; i < candidates.size() && spg.diagonal_axiom; ++i)
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (!collinear(candidates[i], candidates[j])) {
                    spg.diagonal_axiom = false;
                    break;
                }
        if (!spg.diagonal_axiom) break;
    }

    // Whether collinearity coincides with adjacency in sigma.
    spg.collinearity_matches_graph = true;
    for (int u = 0; u < n && spg.collinearity_matches_graph; ++u)
        for (int v : sigma.neighbors(u)) {
            if (u < v && !collinear(u, v)) {
                spg.collinearity_matches_graph = false;
                break;
            }
        }
    return spg;
}

TriangulabilityReport triangulability_conditions(const Graph& g) {
    const int n = g.vertex_count();
    if (n > (1 << 13))
        throw SizeCapExceeded("triangulability scan capped at 2^13 vertices");

    // Full distance matrix.
    std::vector<std::uint16_t> dist(static_cast<std::size_t>(n) * n, 0xFFFF);
    parallel_for(n, [&](std::int64_t x) {
        const auto part = distance_partition(g, static_cast<int>(x));
        for (int v = 0; v < n; ++v)
            if (part.dist[v] >= 0)
                dist[static_cast<std::size_t>(x) * n + v] =
                    static_cast<std::uint16_t>(part.dist[v]);
    });
    auto d = [&](int u, int v) { return dist[static_cast<std::size_t>(u) * n + v]; };

    TriangulabilityReport report;
    std::map<int, std::set<long long>> sizes;

    for (int x = 0; x < n; ++x) {
        const auto nx = g.neighbors(x);
        for (int y1 = 0; y1 < n; ++y1) {
            const int j = d(x, y1);
            if (j < 2 || j == 0xFFFF) continue;

            // Condition (i): S = Gamma_{j-1}(y1) ∩ Gamma(x) induces a
            // connected graph.
            std::vector<std::int32_t> s;
            for (int w : nx)
                if (d(y1, w) == j - 1) s.push_back(w);
            sizes[j].insert(static_cast<long long>(s.size()));
            bool connected = !s.empty();
            if (!s.empty()) {
                std::vector<char> seen(s.size(), 0);
                std::vector<std::size_t> stack{0};
                seen[0] = 1;
                std::size_t reached = 1;
                while (!stack.empty()) {
                    const std::size_t cur = stack.back();
                    stack.pop_back();
                    for (std::size_t other = 0; other < s.size(); ++other)
                        if (!seen[other] && d(s[cur], s[other]) == 1) {
                            seen[other] = 1;
                            ++reached;
                            stack.push_back(other);
                        }
                }
                connected = reached == s.size();
            }
            if (!connected) {
                report.condition_i = false;
                if (report.violations.size() < 16)
                    report.violations.push_back({1, x, y1, -1, j});
            }

            // Condition (ii) for adjacent pairs in the same sphere.
            for (int y2 : g.neighbors(y1)) {
                if (y2 <= y1 || d(x, y2) != j) continue;
                bool found = false;
                for (int w : nx)
                    if (d(y1, w) == j - 1 && d(y2, w) == j - 1) {
                        found = true;
                        break;
                    }
                if (!found) {
                    report.condition_ii = false;
                    if (report.violations.size() < 16)
                        report.violations.push_back({2, x, y1, y2, j});
                }
            }
        }
    }
    for (auto& [j, set_] : sizes)
        report.lambda_sizes_by_j[j].assign(set_.begin(), set_.end());
    return report;
}

}  // namespace drgforge
