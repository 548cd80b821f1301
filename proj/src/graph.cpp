#include "drgforge/graph.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>

#if defined(__SSE2__)
#include <emmintrin.h>
#endif

#include "drgforge/parallel.hpp"

namespace drgforge {

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw BadParameters("negative vertex count");
    std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRange("edge endpoint out of range");
        if (u == v) throw BadParameters("loop at vertex " + std::to_string(u));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& row = adj[v];
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw BadParameters("duplicate edge at vertex " + std::to_string(v));
    }
    return from_adjacency_unchecked(std::move(adj));
}

Graph Graph::from_adjacency_unchecked(std::vector<std::vector<std::int32_t>> adj) {
    Graph g;
    g.n_ = static_cast<int>(adj.size());
    g.off_.assign(g.n_ + 1, 0);
    std::size_t total = 0;
    for (int v = 0; v < g.n_; ++v) {
        total += adj[v].size();
        g.off_[v + 1] = static_cast<std::uint32_t>(total);
    }
    g.adj_.resize(total);
    for (int v = 0; v < g.n_; ++v) {
        auto& row = adj[v];
        if (!std::is_sorted(row.begin(), row.end())) std::sort(row.begin(), row.end());
        std::copy(row.begin(), row.end(), g.adj_.begin() + g.off_[v]);
    }
    return g;
}

Graph Graph::from_csr_unchecked(int n, std::vector<std::uint32_t> off,
                                std::vector<std::int32_t> adj) {
    Graph g;
    g.n_ = n;
    g.off_ = std::move(off);
    g.adj_ = std::move(adj);
    return g;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (degree(u) > degree(v)) std::swap(u, v);
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

DistancePartition distance_partition(const Graph& g, int x) {
    g.check_vertex(x);
    DistancePartition part;
    part.base = x;
    part.dist.assign(g.vertex_count(), -1);
    std::vector<std::int32_t> queue;
    queue.reserve(g.vertex_count());
    queue.push_back(x);
    part.dist[x] = 0;
    std::size_t head = 0;
    while (head < queue.size()) {
        const int y = queue[head++];
        for (int z : g.neighbors(y)) {
            if (part.dist[z] < 0) {
                part.dist[z] = part.dist[y] + 1;
                queue.push_back(z);
            }
        }
    }
    const int ecc = part.dist[queue.back()];
    part.levels.assign(ecc + 1, {});
    for (int v : queue) part.levels[part.dist[v]].push_back(v);
    return part;
}

int graph_distance(const Graph& g, int x, int y) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) return 0;
    std::vector<std::int32_t> dist(g.vertex_count(), -1);
    std::vector<std::int32_t> queue{static_cast<std::int32_t>(x)};
    dist[x] = 0;
    std::size_t head = 0;
    while (head < queue.size()) {
        const int u = queue[head++];
        for (int z : g.neighbors(u)) {
            if (dist[z] < 0) {
                dist[z] = dist[u] + 1;
                if (z == y) return dist[z];
                queue.push_back(z);
            }
        }
    }
    return -1;
}

LocalIntersectionNumbers local_intersection_numbers(const Graph& g, int x, int y) {
    const auto part = distance_partition(g, x);
    if (part.dist[y] < 0) throw Disconnected("vertices in different components");
    LocalIntersectionNumbers out;
    out.i = part.dist[y];
    for (int z : g.neighbors(y)) {
        const int dz = part.dist[z];
        if (dz == out.i - 1)
            ++out.c;
        else if (dz == out.i)
            ++out.a;
        else if (dz == out.i + 1)
            ++out.b;
    }
    return out;
}

std::string DrgWitness::to_string() const {
    std::ostringstream os;
    os << parameter << " not well-defined: pair (" << x1 << "," << y1 << ") gives " << count1
       << ", pair (" << x2 << "," << y2 << ") gives " << count2;
    return os.str();
}

namespace {

struct ScanMismatch {
    int base = -1;
    int y = -1;
    int level = 0;
    char parameter = 0;  // 'c', 'a', 'b', 'e' (eccentricity / reachability)
    long long got = 0;
};

/// Fused BFS + intersection-number tally from one base vertex. Distances fit
/// in uint8 (caller guarantees eccentricity <= 250). Returns false on the
/// first mismatch against the expected counts.
bool scan_base(const Graph& g, int x, const long long* exp_c, const long long* exp_a,
               const long long* exp_b, int expected_ecc, std::uint8_t* dist,
               std::int32_t* queue, ScanMismatch* out) {
    const int n = g.vertex_count();
    std::fill(dist, dist + n, std::uint8_t(0xFF));
    dist[x] = 0;
    queue[0] = static_cast<std::int32_t>(x);
    int head = 0, tail = 1;
    int max_level = 0;
    while (head < tail) {
        const int y = queue[head++];
        const int dy = dist[y];
        if (dy > expected_ecc) {
            out->base = x;
            out->y = y;
            out->level = dy;
            out->parameter = 'e';
            out->got = dy;
            return false;
        }
        max_level = dy;
        const auto nb = g.neighbors(y);
        const std::int32_t* z = nb.data();
        const std::size_t deg = nb.size();
        const std::uint8_t prev = static_cast<std::uint8_t>(dy - 1);
        const std::uint8_t cur = static_cast<std::uint8_t>(dy);
        const std::uint8_t next = static_cast<std::uint8_t>(dy + 1);
        int c0 = 0, c1 = 0, a0 = 0, a1 = 0, b0 = 0, b1 = 0;
        std::size_t t = 0;
        for (; t + 2 <= deg; t += 2) {
            if (t + 24 < deg) __builtin_prefetch(&dist[z[t + 24]], 0, 3);
            std::uint8_t d0 = dist[z[t]];
            std::uint8_t d1 = dist[z[t + 1]];
            if (d0 == 0xFF) {
                dist[z[t]] = next;
                queue[tail++] = z[t];
                d0 = next;
            }
            if (d1 == 0xFF) {
                dist[z[t + 1]] = next;
                queue[tail++] = z[t + 1];
                d1 = next;
            }
            c0 += (d0 == prev);
            a0 += (d0 == cur);
            b0 += (d0 == next);
            c1 += (d1 == prev);
            a1 += (d1 == cur);
            b1 += (d1 == next);
        }
        for (; t < deg; ++t) {
            std::uint8_t d0 = dist[z[t]];
            if (d0 == 0xFF) {
                dist[z[t]] = next;
                queue[tail++] = z[t];
                d0 = next;
            }
            c0 += (d0 == prev);
            a0 += (d0 == cur);
            b0 += (d0 == next);
        }
        const long long c = c0 + c1, a = a0 + a1, b = b0 + b1;
        if (c != exp_c[dy] || b != exp_b[dy] || a != exp_a[dy]) {
            out->base = x;
            out->y = y;
            out->level = dy;
            if (c != exp_c[dy]) {
                out->parameter = 'c';
                out->got = c;
            } else if (b != exp_b[dy]) {
                out->parameter = 'b';
                out->got = b;
            } else {
                out->parameter = 'a';
                out->got = a;
            }
            return false;
        }
    }
    if (tail != n || max_level != expected_ecc) {
        out->base = x;
        out->y = x;
        out->level = max_level;
        out->parameter = 'e';
        out->got = (tail != n) ? tail : max_level;
        return false;
    }
    return true;
}

/// Large-graph path. Scanning one base at a time re-streams the whole
/// adjacency per base, which is DRAM-bound; instead a 64-lane
/// level-synchronous BFS shares each adjacency sweep across 64 bases, and
/// the tally phase verifies, per vertex and lane, the first and second
/// moments of the neighbor levels (equivalent to matching (c, a, b): the
/// neighbor levels lie in {d-1, d, d+1}, so the 3x3 Vandermonde system is
/// invertible). Eight lanes are tallied per adjacency sweep with 16-bit
/// lane accumulators. Reported mismatches are re-derived with the scalar
/// scanner so witnesses are identical across paths.
class BatchedScan {
public:
    BatchedScan(const Graph& g, const std::vector<long long>& exp_c,
                const std::vector<long long>& exp_a, const std::vector<long long>& exp_b,
                int ecc)
        : g_(g), n_(g.vertex_count()), ecc_(ecc) {
        adj16_.reserve(g_.edge_count() * 2);
        for (int v = 0; v < n_; ++v)
            for (int z : g_.neighbors(v)) adj16_.push_back(static_cast<std::uint16_t>(z));
        off_.assign(n_ + 1, 0);
        for (int v = 0; v < n_; ++v)
            off_[v + 1] = off_[v] + static_cast<std::uint32_t>(g_.degree(v));
        exp_s1_.assign(ecc + 1, 0);
        exp_s2_.assign(ecc + 1, 0);
        for (int i = 0; i <= ecc; ++i) {
            const long long s1 = exp_c[i] * (i - 1) + exp_a[i] * i + exp_b[i] * (i + 1);
            const long long s2 =
                exp_c[i] * (i - 1) * (i - 1) + exp_a[i] * i * i + exp_b[i] * (i + 1) * (i + 1);
            exp_s1_[i] = static_cast<std::uint16_t>(s1);
            exp_s2_[i] = static_cast<std::uint16_t>(s2);
        }
    }

    /// Usable when lane accumulators cannot overflow and distances fit a
    /// byte with headroom.
    static bool applicable(const Graph& g, int ecc) {
        if (g.vertex_count() > 65536 || g.vertex_count() < 512) return false;
        if (ecc > 32) return false;
        long long max_deg = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            max_deg = std::max<long long>(max_deg, g.degree(v));
        const long long lim1 = max_deg * (ecc + 1);
        const long long lim2 = max_deg * (ecc + 1) * (ecc + 1);
        return lim1 < 65536 && lim2 < 65536;
    }

    /// Returns mismatching base vertices (deterministic set).
    std::vector<int> run() {
        std::vector<int> bad;
        std::mutex bad_mutex;
        const int batches = (n_ + 63) / 64;
        parallel_for_ranges(batches, 1, [&](std::int64_t lo, std::int64_t hi) {
            std::vector<std::vector<std::uint64_t>> rounds(
                ecc_ + 2, std::vector<std::uint64_t>(n_, 0));
            std::vector<std::uint64_t> seen(n_);
            std::vector<std::uint8_t> dist8(static_cast<std::size_t>(n_) * 8);
            for (std::int64_t batch = lo; batch < hi; ++batch) {
                const int base0 = static_cast<int>(batch) * 64;
                const int lanes = std::min(64, n_ - base0);
                auto local_bad = scan_batch(base0, lanes, rounds, seen, dist8);
                if (!local_bad.empty()) {
                    std::lock_guard<std::mutex> lock(bad_mutex);
                    bad.insert(bad.end(), local_bad.begin(), local_bad.end());
                }
            }
        });
        std::sort(bad.begin(), bad.end());
        bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
        return bad;
    }

private:
    std::vector<int> scan_batch(int base0, int lanes,
                                std::vector<std::vector<std::uint64_t>>& rounds,
                                std::vector<std::uint64_t>& seen,
                                std::vector<std::uint8_t>& dist8) {
        std::vector<int> bad;
        for (auto& round : rounds) std::fill(round.begin(), round.end(), 0);
        std::fill(seen.begin(), seen.end(), 0);
        const std::uint64_t lane_mask =
            lanes == 64 ? ~0ull : ((1ull << lanes) - 1);
        for (int l = 0; l < lanes; ++l) {
            rounds[0][base0 + l] |= 1ull << l;
            seen[base0 + l] |= 1ull << l;
        }

        // Level-synchronous 64-lane BFS.
        for (int r = 0; r < ecc_ + 1; ++r) {
            const std::uint64_t* cur = rounds[r].data();
            std::uint64_t* next = rounds[r + 1].data();
            bool any = false;
            for (int y = 0; y < n_; ++y) {
                const std::uint64_t m = cur[y];
                if (!m) continue;
                const std::uint16_t* z = adj16_.data() + off_[y];
                const std::uint16_t* end = adj16_.data() + off_[y + 1];
                for (; z != end; ++z) {
                    const std::uint64_t add = m & ~seen[*z];
                    if (add) {
                        seen[*z] |= add;
                        next[*z] |= add;
                        any = true;
                    }
                }
            }
            if (!any && r >= ecc_) break;
        }

        // Structural lane checks: full coverage and exact eccentricity.
        {
            std::array<std::int64_t, 64> discovered{};
            std::uint64_t last_round_nonempty = 0;
            std::uint64_t beyond = 0;
            for (int y = 0; y < n_; ++y) {
                std::uint64_t m = seen[y];
                while (m) {
                    const int l = __builtin_ctzll(m);
                    m &= m - 1;
                    ++discovered[l];
                }
                last_round_nonempty |= rounds[ecc_][y];
                beyond |= rounds[ecc_ + 1][y];
            }
            for (int l = 0; l < lanes; ++l) {
                const bool full = discovered[l] == n_;
                const bool ecc_ok = (rounds_nonempty_bit(last_round_nonempty, l)) &&
                                    !rounds_nonempty_bit(beyond, l);
                if (!full || !ecc_ok) bad.push_back(base0 + l);
            }
        }

        // Tally in groups of 8 lanes.
        for (int group = 0; group * 8 < lanes; ++group) {
            const int group_lanes = std::min(8, lanes - group * 8);
            for (int y = 0; y < n_; ++y) {
                std::uint8_t* slot = &dist8[static_cast<std::size_t>(y) * 8];
                for (int l = 0; l < 8; ++l) slot[l] = 0;
                for (int r = 0; r <= ecc_; ++r) {
                    const std::uint64_t m = rounds[r][y] >> (group * 8);
                    for (int l = 0; l < group_lanes; ++l)
                        if ((m >> l) & 1) slot[l] = static_cast<std::uint8_t>(r);
                }
            }
            tally_group(base0 + group * 8, group_lanes, dist8, bad);
        }
        return bad;
    }

    static bool rounds_nonempty_bit(std::uint64_t mask, int lane) {
        return (mask >> lane) & 1;
    }

    void tally_group(int lane_base, int group_lanes, const std::vector<std::uint8_t>& dist8,
                     std::vector<int>& bad) {
#if defined(__SSE2__)
        const __m128i zero = _mm_setzero_si128();
        for (int y = 0; y < n_; ++y) {
            __m128i s1 = zero, s2 = zero;
            const std::uint16_t* z = adj16_.data() + off_[y];
            const std::uint16_t* end = adj16_.data() + off_[y + 1];
            for (; z != end; ++z) {
                const __m128i v8 = _mm_loadl_epi64(
                    reinterpret_cast<const __m128i*>(&dist8[static_cast<std::size_t>(*z) * 8]));
                const __m128i v16 = _mm_unpacklo_epi8(v8, zero);
                s1 = _mm_add_epi16(s1, v16);
                s2 = _mm_add_epi16(s2, _mm_mullo_epi16(v16, v16));
            }
            alignas(16) std::uint16_t s1a[8], s2a[8];
            _mm_store_si128(reinterpret_cast<__m128i*>(s1a), s1);
            _mm_store_si128(reinterpret_cast<__m128i*>(s2a), s2);
            const std::uint8_t* dy = &dist8[static_cast<std::size_t>(y) * 8];
            for (int l = 0; l < group_lanes; ++l) {
                if (s1a[l] != exp_s1_[dy[l]] || s2a[l] != exp_s2_[dy[l]])
                    bad.push_back(lane_base + l);
            }
        }
#else
        for (int y = 0; y < n_; ++y) {
            std::uint32_t s1a[8] = {0}, s2a[8] = {0};
            const std::uint16_t* z = adj16_.data() + off_[y];
            const std::uint16_t* end = adj16_.data() + off_[y + 1];
            for (; z != end; ++z) {
                const std::uint8_t* dz = &dist8[static_cast<std::size_t>(*z) * 8];
                for (int l = 0; l < 8; ++l) {
                    s1a[l] += dz[l];
                    s2a[l] += static_cast<std::uint32_t>(dz[l]) * dz[l];
                }
            }
            const std::uint8_t* dy = &dist8[static_cast<std::size_t>(y) * 8];
            for (int l = 0; l < group_lanes; ++l) {
                if ((s1a[l] & 0xFFFF) != exp_s1_[dy[l]] || (s2a[l] & 0xFFFF) != exp_s2_[dy[l]])
                    bad.push_back(lane_base + l);
            }
        }
#endif
    }

    const Graph& g_;
    int n_;
    int ecc_;
    std::vector<std::uint16_t> adj16_;
    std::vector<std::uint32_t> off_;
    std::vector<std::uint16_t> exp_s1_, exp_s2_;
};

/// Depth-limited well-definedness check of b_0..b_r and c_1..c_r over all
/// pairs; references are discovered on the fly (eccentricities may differ).
DrgCheck check_partial(const Graph& g, int r) {
    const int n = g.vertex_count();
    struct Ref {
        bool seen = false;
        int x = 0, y = 0;
        long long c = 0, b = 0;
    };
    std::vector<Ref> refs(r + 1);
    std::vector<std::int32_t> dist(n), queue(n);
    for (int x = 0; x < n; ++x) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[x] = 0;
        queue[0] = x;
        int head = 0, tail = 1;
        while (head < tail) {
            const int y = queue[head++];
            const int dy = dist[y];
            if (dy > r) continue;  // level r+1 vertices are discovered, not expanded
            long long c = 0, b = 0;
            for (int z : g.neighbors(y)) {
                if (dist[z] < 0) {
                    dist[z] = dy + 1;
                    queue[tail++] = z;
                }
                c += (dist[z] == dy - 1);
                b += (dist[z] == dy + 1);
            }
            Ref& ref = refs[dy];
            if (!ref.seen) {
                ref = {true, x, y, c, b};
            } else if (ref.c != c || ref.b != b) {
                DrgWitness w;
                const bool c_bad = ref.c != c;
                w.parameter = (c_bad ? "c_" : "b_") + std::to_string(dy);
                w.x1 = ref.x;
                w.y1 = ref.y;
                w.count1 = c_bad ? ref.c : ref.b;
                w.x2 = x;
                w.y2 = y;
                w.count2 = c_bad ? c : b;
                DrgCheck result;
                result.ok = false;
                result.witness = w;
                return result;
            }
        }
    }
    DrgCheck result;
    result.ok = true;
    for (int i = 0; i <= r && refs[i].seen; ++i) result.partial_b.push_back(refs[i].b);
    for (int i = 1; i <= r && refs[i].seen; ++i) result.partial_c.push_back(refs[i].c);
    return result;
}

}  // namespace

DrgCheck check_distance_regular(const Graph& g, std::optional<int> depth) {
    const int n = g.vertex_count();
    if (n == 0) throw BadParameters("empty graph");

    // Connectivity is a precondition for both modes.
    const auto seed = distance_partition(g, 0);
    for (int v = 0; v < n; ++v)
        if (seed.dist[v] < 0) throw Disconnected("graph is not connected");

    if (depth.has_value()) {
        if (*depth < 0) throw BadParameters("negative depth");
        return check_partial(g, *depth);
    }

    const int ecc0 = seed.eccentricity();
    if (ecc0 > 250) throw SizeCapExceeded("eccentricity too large for the scan kernel");

    std::vector<long long> exp_c(ecc0 + 1, 0), exp_a(ecc0 + 1, 0), exp_b(ecc0 + 1, 0);
    std::vector<int> ref_y(ecc0 + 1, 0);
    for (int i = 0; i <= ecc0; ++i) {
        const int y = seed.levels[i].front();
        ref_y[i] = y;
        for (int z : g.neighbors(y)) {
            const int dz = seed.dist[z];
            exp_c[i] += (dz == i - 1);
            exp_a[i] += (dz == i);
            exp_b[i] += (dz == i + 1);
        }
    }

    std::atomic<int> best_base{n};
    std::mutex mm_mutex;
    std::vector<ScanMismatch> mismatches;

    if (BatchedScan::applicable(g, ecc0)) {
        BatchedScan scan(g, exp_c, exp_a, exp_b, ecc0);
        const auto bad = scan.run();
        if (!bad.empty()) {
            // Re-derive the canonical witness with the scalar scanner.
            std::vector<std::uint8_t> dist(n);
            std::vector<std::int32_t> queue(n);
            ScanMismatch mm;
            if (scan_base(g, bad.front(), exp_c.data(), exp_a.data(), exp_b.data(), ecc0,
                          dist.data(), queue.data(), &mm))
                mm = {bad.front(), bad.front(), ecc0, 'e', 0};
            mismatches.push_back(mm);
        }
    } else {
        parallel_for_ranges(n, 64, [&](std::int64_t lo, std::int64_t hi) {
            std::vector<std::uint8_t> dist(n);
            std::vector<std::int32_t> queue(n);
            ScanMismatch mm;
            for (std::int64_t x = lo; x < hi; ++x) {
                // Bases above a known mismatch can't improve the witness.
                if (x > best_base.load(std::memory_order_relaxed)) continue;
                if (!scan_base(g, static_cast<int>(x), exp_c.data(), exp_a.data(), exp_b.data(),
                               ecc0, dist.data(), queue.data(), &mm)) {
                    int prev = best_base.load();
                    while (mm.base < prev && !best_base.compare_exchange_weak(prev, mm.base)) {
                    }
                    std::lock_guard<std::mutex> lock(mm_mutex);
                    mismatches.push_back(mm);
                }
            }
        });
    }

    DrgCheck result;
    if (!mismatches.empty()) {
        const auto best = *std::min_element(
            mismatches.begin(), mismatches.end(),
            [](const ScanMismatch& a, const ScanMismatch& b) { return a.base < b.base; });
        DrgWitness w;
        const int i = std::min(best.level, ecc0);
        if (best.parameter == 'e') {
            w.parameter = "level structure";
            w.x1 = 0;
            w.y1 = ref_y[ecc0];
            w.count1 = ecc0;
        } else {
            w.parameter = std::string(1, best.parameter) + "_" + std::to_string(i);
            w.x1 = 0;
            w.y1 = ref_y[i];
            w.count1 = best.parameter == 'c' ? exp_c[i]
                       : best.parameter == 'a' ? exp_a[i]
                                               : exp_b[i];
        }
        w.x2 = best.base;
        w.y2 = best.y;
        w.count2 = best.got;
        result.ok = false;
        result.witness = w;
        return result;
    }

    result.ok = true;
    IntersectionArray arr;
    for (int i = 0; i < ecc0; ++i) arr.b.push_back(exp_b[i]);
    for (int i = 1; i <= ecc0; ++i) arr.c.push_back(exp_c[i]);
    result.array = std::move(arr);
    return result;
}

long long triple_intersection(const Graph& g, int x, int y, int z, int l, int m, int n) {
    const auto dx = distance_partition(g, x);
    const auto dy = distance_partition(g, y);
    const auto dz = distance_partition(g, z);
    long long count = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (dx.dist[u] == l && dy.dist[u] == m && dz.dist[u] == n) ++count;
    return count;
}

InducedGraph induced_subgraph(const Graph& g, std::span<const std::int32_t> verts) {
    InducedGraph out;
    out.vertices.assign(verts.begin(), verts.end());
    std::vector<std::int32_t> sorted(out.vertices);
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<std::int32_t>> adj(out.vertices.size());
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
        // Map parent neighbors back to local indices.
        for (std::size_t j = i + 1; j < out.vertices.size(); ++j) {
            if (g.adjacent(out.vertices[i], out.vertices[j])) {
                adj[i].push_back(static_cast<std::int32_t>(j));
                adj[j].push_back(static_cast<std::int32_t>(i));
            }
        }
    }
    out.graph = Graph::from_adjacency_unchecked(std::move(adj));
    return out;
}

std::vector<std::int32_t> common_neighbors(const Graph& g, int u, int v) {
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    std::vector<std::int32_t> out;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
    return out;
}

InducedGraph mu_graph(const Graph& g, int y, int z) {
    if (graph_distance(g, y, z) != 2)
        throw NotAtDistanceTwo("mu-graph requires a pair at distance exactly 2");
    const auto common = common_neighbors(g, y, z);
    return induced_subgraph(g, common);
}

InducedGraph local_graph(const Graph& g, int x) {
    g.check_vertex(x);
    return induced_subgraph(g, g.neighbors(x));
}

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list must start with 'n m'");
    if (n < 0 || m < 0 || n > (1ll << 20))
        throw ParseError("vertex count out of supported range");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError("truncated edge list");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << u << " " << v << "\n";
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    write_edge_list(g, out);
}

Graph make_grid_graph(int n, int m) {
    if (n < 1 || m < 1) throw BadParameters("grid dimensions must be positive");
    std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(n) * m);
    auto id = [m](int i, int j) { return i * m + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            for (int j2 = j + 1; j2 < m; ++j2) {
                adj[id(i, j)].push_back(id(i, j2));
                adj[id(i, j2)].push_back(id(i, j));
            }
            for (int i2 = i + 1; i2 < n; ++i2) {
                adj[id(i, j)].push_back(id(i2, j));
                adj[id(i2, j)].push_back(id(i, j));
            }
        }
    return Graph::from_adjacency_unchecked(std::move(adj));
}

Graph make_shrikhande_graph() {
    std::vector<std::pair<int, int>> edges;
    auto id = [](int a, int b) { return ((a % 4 + 4) % 4) * 4 + ((b % 4 + 4) % 4); };
    const int diffs[3][2] = {{1, 0}, {0, 1}, {1, 1}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (const auto& d : diffs) {
                const int u = id(a, b), v = id(a + d[0], b + d[1]);
                if (u < v)
                    edges.emplace_back(u, v);
                else
                    edges.emplace_back(v, u);
            }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edge_list(16, edges);
}

Graph make_cycle_graph(int n) {
    if (n < 3) throw BadParameters("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph make_complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph make_path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph complement_graph(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

}  // namespace drgforge
