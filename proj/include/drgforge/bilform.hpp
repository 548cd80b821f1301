#pragma once

#include <cstdint>
#include <vector>

#include "drgforge/finite_field.hpp"
#include "drgforge/graph.hpp"
#include "drgforge/intersection_array.hpp"
#include "drgforge/report.hpp"

namespace drgforge {

/// Bilinear forms graph on all e x d matrices over F_q (e >= d >= 2), two
/// matrices adjacent iff their difference has rank 1. Vertex i is the i-th
/// matrix in the base-q enumeration order of finite_field.hpp.
struct BilinearFormsGraph {
    int q = 0, e = 0, d = 0;
    FieldContext field;
    Graph graph;
    IntersectionArray expected_array;
};

/// Closed-form intersection array: b_{j-1} = q^{2j-2}(q-1) [d-j+1 1]_q [e-j+1 1]_q
/// and c_j = q^{j-1} [j 1]_q, diameter d.
IntersectionArray expected_intersection_array(long long q, int e, int d);

/// Strongly regular parameters (v, k, lambda, mu) of the diameter-2 case,
/// i.e. (m^2, (m-1)t, m-2+(t-1)(t-2), t(t-1)) with m = q^e, t = q+1.
struct SrgParameters {
    long long v = 0, k = 0, lambda = 0, mu = 0;
};
SrgParameters pseudo_latin_square_parameters(long long q, int e);

/// Builds the graph. Adjacency is generated from the rank-1 difference orbit
/// (neighbors of v are v + x*y^T over normalized x and nonzero y), which is
/// linear in the edge count.
BilinearFormsGraph construct_bilinear_forms_graph(long long q, int e, int d,
                                                  std::uint64_t vertex_cap = kDefaultEnumerationCap);

/// O(v^2) pairwise rank test; cross-check oracle for v <= 2^12.
Graph construct_by_pairwise_rank(const FieldContext& field, int e, int d,
                                 std::uint64_t vertex_cap = 1ull << 12);

/// Maximal cliques of the two types: row-space type of size q^e
/// ({M + x r^T : x}) and column-space type of size q^d ({M + s y^T : y}).
struct GrandCliqueFamilies {
    std::vector<std::vector<std::int32_t>> family_r;  // sizes q^e
    std::vector<std::vector<std::int32_t>> family_c;  // sizes q^d
};

GrandCliqueFamilies grand_cliques(const BilinearFormsGraph& b);

/// True when every edge lies in exactly one clique of the family.
bool covers_every_edge_once(const Graph& g, const std::vector<std::vector<std::int32_t>>& family);

/// Vertex count, distance-regularity, array equality, diameter and classical
/// parameters (d, q, q-1, q^e-1), one report entry per check.
CheckReport verify_construction(const BilinearFormsGraph& b);

}  // namespace drgforge
