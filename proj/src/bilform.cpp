#include "drgforge/bilform.hpp"

#include <algorithm>
#include <set>

#include "drgforge/drg_params.hpp"
#include "drgforge/parallel.hpp"

namespace drgforge {
namespace {

/// Encoded rank-1 matrices x*y^T, x in F_q^e normalized (first nonzero
/// coordinate 1), y in F_q^d nonzero. These are exactly the rank-1 matrices,
/// each once.
std::vector<std::uint64_t> rank_one_deltas(const FieldContext& field, int e, int d) {
    const int q = field.q();
    std::vector<std::uint64_t> deltas;
    std::vector<int> x(e), y(d);
    auto next_vector = [q](std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (++v[i] < q) return true;
            v[i] = 0;
        }
        return false;
    };
    std::fill(x.begin(), x.end(), 0);
    while (next_vector(x)) {
        int lead = 0;
        while (x[lead] == 0) ++lead;
        if (x[lead] != 1) continue;  // normalized representative per line
        std::fill(y.begin(), y.end(), 0);
        while (next_vector(y)) {
            FqMatrix r(e, d);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < d; ++j)
                    r.at(i, j) = static_cast<std::uint8_t>(field.mul(x[i], y[j]));
            deltas.push_back(matrix_to_index(field, r));
        }
    }
    return deltas;
}

}  // namespace

IntersectionArray expected_intersection_array(long long q, int e, int d) {
    if (d < 2 || e < d) throw BadParameters("need e >= d >= 2");
    if (q < 2) throw BadParameters("need q >= 2");
    IntersectionArray arr;
    const Int Q(q);
    for (int j = 1; j <= d; ++j) {
        const Int bj = int_pow(Q, static_cast<unsigned>(2 * j - 2)) * (Q - 1) *
                       gaussian_binomial(d - j + 1, 1, Q) * gaussian_binomial(e - j + 1, 1, Q);
        const Int cj = int_pow(Q, static_cast<unsigned>(j - 1)) * gaussian_binomial(j, 1, Q);
        arr.b.push_back(bj.convert_to<long long>());
        arr.c.push_back(cj.convert_to<long long>());
    }
    return arr;
}

SrgParameters pseudo_latin_square_parameters(long long q, int e) {
    const Int m = int_pow(Int(q), static_cast<unsigned>(e));
    const Int t = q + 1;
    SrgParameters p;
    p.v = (m * m).convert_to<long long>();
    p.k = ((m - 1) * t).convert_to<long long>();
    p.lambda = (m - 2 + (t - 1) * (t - 2)).convert_to<long long>();
    p.mu = (t * (t - 1)).convert_to<long long>();
    return p;
}

BilinearFormsGraph construct_bilinear_forms_graph(long long q, int e, int d,
                                                  std::uint64_t vertex_cap) {
    if (d < 2 || e < d) throw BadParameters("need e >= d >= 2");
    BilinearFormsGraph b;
    b.field = make_field(q);
    b.q = b.field.q();
    b.e = e;
    b.d = d;
    b.expected_array = expected_intersection_array(q, e, d);

    const std::uint64_t n = matrix_space_size(b.field, e, d, vertex_cap);
    const auto deltas = rank_one_deltas(b.field, e, d);
    const std::size_t k = deltas.size();

    std::vector<std::uint32_t> off(n + 1);
    for (std::uint64_t v = 0; v <= n; ++v) off[v] = static_cast<std::uint32_t>(v * k);
    std::vector<std::int32_t> adj(n * k);

    const bool char2 = b.field.characteristic() == 2;
    const int digits = e * d;
    const int qq = b.q;

    parallel_for_ranges(static_cast<std::int64_t>(n), 1024, [&](std::int64_t lo, std::int64_t hi) {
        std::vector<int> vdig(digits);
        for (std::int64_t v = lo; v < hi; ++v) {
            std::int32_t* row = adj.data() + static_cast<std::size_t>(v) * k;
            if (char2) {
                // Base-q digits with q = 2^f pack into disjoint bit fields, so
                // field addition on encoded matrices is plain XOR.
                const auto uv = static_cast<std::uint64_t>(v);
                for (std::size_t t = 0; t < k; ++t)
                    row[t] = static_cast<std::int32_t>(uv ^ deltas[t]);
            } else {
                std::uint64_t rest = static_cast<std::uint64_t>(v);
                for (int i = 0; i < digits; ++i) {
                    vdig[i] = static_cast<int>(rest % qq);
                    rest /= qq;
                }
                for (std::size_t t = 0; t < k; ++t) {
                    std::uint64_t delta = deltas[t];
                    std::uint64_t sum = 0;
                    std::uint64_t scale = 1;
                    for (int i = 0; i < digits; ++i) {
                        const int dd = static_cast<int>(delta % qq);
                        delta /= qq;
                        sum += static_cast<std::uint64_t>(b.field.add(vdig[i], dd)) * scale;
                        scale *= qq;
                    }
                    row[t] = static_cast<std::int32_t>(sum);
                }
            }
            std::sort(row, row + k);
        }
    });

    b.graph = Graph::from_csr_unchecked(static_cast<int>(n), std::move(off), std::move(adj));
    return b;
}

Graph construct_by_pairwise_rank(const FieldContext& field, int e, int d,
                                 std::uint64_t vertex_cap) {
    const std::uint64_t n = matrix_space_size(field, e, d, vertex_cap);
    const auto mats = enumerate_matrices(field, e, d, vertex_cap);
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t u = 0; u < n; ++u)
        for (std::uint64_t v = u + 1; v < n; ++v)
            if (rank(field, subtract(field, mats[u], mats[v])) == 1)
                edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

namespace {

/// Partitions the vertex set into cosets of {x * pattern : x} for every
/// normalized pattern vector; `row_space` selects x r^T (size q^e classes)
/// vs s y^T (size q^d classes).
std::vector<std::vector<std::int32_t>> coset_cliques(const BilinearFormsGraph& b,
                                                     bool row_space) {
    const FieldContext& field = b.field;
    const int q = field.q();
    const int e = b.e, d = b.d;
    const std::uint64_t n = static_cast<std::uint64_t>(b.graph.vertex_count());
    const int pat_len = row_space ? d : e;
    const int free_len = row_space ? e : d;

    std::vector<std::vector<std::int32_t>> cliques;
    std::vector<int> pattern(pat_len), free_vec(free_len);
    auto next_vector = [q](std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (++v[i] < q) return true;
            v[i] = 0;
        }
        return false;
    };

    std::vector<char> seen;
    std::fill(pattern.begin(), pattern.end(), 0);
    while (next_vector(pattern)) {
        int lead = 0;
        while (pattern[lead] == 0) ++lead;
        if (pattern[lead] != 1) continue;

        // Encoded generators of the subgroup {free_i * pattern}.
        std::vector<std::uint64_t> members;
        std::fill(free_vec.begin(), free_vec.end(), 0);
        do {
            FqMatrix r(e, d);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < d; ++j) {
                    const int xi = row_space ? (i < free_len ? free_vec[i] : 0) : pattern[i];
                    const int yj = row_space ? pattern[j] : (j < free_len ? free_vec[j] : 0);
                    r.at(i, j) = static_cast<std::uint8_t>(field.mul(xi, yj));
                }
            members.push_back(matrix_to_index(field, r));
        } while (next_vector(free_vec));

        seen.assign(n, 0);
        for (std::uint64_t v = 0; v < n; ++v) {
            if (seen[v]) continue;
            std::vector<std::int32_t> clique;
            clique.reserve(members.size());
            for (std::uint64_t mem : members) {
                const auto mat_v = matrix_from_index(field, e, d, v);
                const auto mat_m = matrix_from_index(field, e, d, mem);
                const std::uint64_t w = matrix_to_index(field, add(field, mat_v, mat_m));
                clique.push_back(static_cast<std::int32_t>(w));
                seen[w] = 1;
            }
            std::sort(clique.begin(), clique.end());
            cliques.push_back(std::move(clique));
        }
    }
    return cliques;
}

bool clique_is_maximal(const Graph& g, const std::vector<std::int32_t>& clique) {
    // Any extension vertex must be a common neighbor of all members.
    std::vector<std::int32_t> cand(g.neighbors(clique[0]).begin(),
                                   g.neighbors(clique[0]).end());
    for (std::size_t i = 1; i < clique.size() && !cand.empty(); ++i) {
        std::vector<std::int32_t> next;
        const auto nb = g.neighbors(clique[i]);
        std::set_intersection(cand.begin(), cand.end(), nb.begin(), nb.end(),
                              std::back_inserter(next));
        cand = std::move(next);
    }
    return cand.empty();
}

}  // namespace

GrandCliqueFamilies grand_cliques(const BilinearFormsGraph& b) {
    GrandCliqueFamilies fam;
    fam.family_r = coset_cliques(b, true);
    fam.family_c = coset_cliques(b, false);

    const std::size_t check_all_below = 4096;
    const std::size_t n = static_cast<std::size_t>(b.graph.vertex_count());
    for (const auto* family : {&fam.family_r, &fam.family_c}) {
        const std::size_t limit =
            n <= check_all_below ? family->size() : std::min<std::size_t>(family->size(), 64);
        for (std::size_t i = 0; i < limit; ++i) {
            for (std::size_t a = 0; a < (*family)[i].size(); ++a)
                for (std::size_t bb = a + 1; bb < (*family)[i].size(); ++bb)
                    if (!b.graph.adjacent((*family)[i][a], (*family)[i][bb]))
                        throw Error("grand clique is not a clique");
            if (!clique_is_maximal(b.graph, (*family)[i]))
                throw Error("grand clique is not maximal");
        }
    }
    return fam;
}

bool covers_every_edge_once(const Graph& g, const std::vector<std::vector<std::int32_t>>& family) {
    std::set<std::pair<int, int>> covered;
    for (const auto& clique : family)
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) {
                const auto edge = std::minmax(clique[i], clique[j]);
                if (!covered.insert({edge.first, edge.second}).second) return false;
            }
    return covered.size() == g.edge_count();
}

CheckReport verify_construction(const BilinearFormsGraph& b) {
    CheckReport report;
    const Int expected_n = int_pow(Int(b.q), static_cast<unsigned>(b.d * b.e));
    report.add("construction.vertex-count", Int(b.graph.vertex_count()) == expected_n,
               "v = " + std::to_string(b.graph.vertex_count()) + ", expected q^(de) = " +
                   expected_n.str());

    const auto check = check_distance_regular(b.graph);
    report.add("construction.distance-regular", check.ok,
               check.ok ? "array " + check.array->to_string() : check.witness->to_string());

    const bool array_match = check.ok && *check.array == b.expected_array;
    report.add("construction.intersection-array", array_match,
               "expected " + b.expected_array.to_string());

    const bool diam_ok = check.ok && check.array->diameter() == b.d;
    report.add("construction.diameter", diam_ok, "expected diameter " + std::to_string(b.d));

    const auto classical = detect_classical_parameters(b.expected_array);
    const ClassicalParameters want{b.d, b.q, Rat(b.q - 1),
                                   Rat(int_pow(Int(b.q), static_cast<unsigned>(b.e)) - 1)};
    const bool classical_ok = classical.has_value() && *classical == want;
    report.add("construction.classical-parameters", classical_ok,
               "expected (D,b,alpha,beta) = (" + std::to_string(b.d) + "," + std::to_string(b.q) +
                   "," + rat_to_string(want.alpha) + "," + rat_to_string(want.beta) + ")");
    return report;
}

}  // namespace drgforge
