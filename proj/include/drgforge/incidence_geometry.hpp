#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drgforge/graph.hpp"
#include "drgforge/local_spectra.hpp"

namespace drgforge {

/// Coordinate frame on a locally-grid vertex: row cliques L_1..L_n (size m),
/// column cliques L^T_1..L^T_m (size n), and the coordinates
/// w_ij = L_i intersect L^T_j, all in parent-graph vertex ids. Families and
/// their order are canonical (rows are the larger family, cliques ordered by
/// least vertex).
struct GridFrame {
    int base = 0;
    int n = 0, m = 0;
    std::vector<std::vector<std::int32_t>> row_cliques;
    std::vector<std::vector<std::int32_t>> col_cliques;
    std::vector<std::vector<std::int32_t>> coord;   // coord[i][j]
    std::map<std::int32_t, std::pair<int, int>> position;
};

/// Throws NotLocallyGrid when the local graph of x is not an (n x m)-grid.
GridFrame grid_frame(const Graph& g, int x);

/// Induced subgraph {x} ∪ L_a ∪ L_b ∪ L_c ∪ {y in G_2(x) : G(x,y) inside the
/// three cliques}; `top` selects column cliques instead. A triple supporting
/// no distance-2 vertex is a benign empty-sigma2 result, not an error.
struct SigmaSubgraph {
    InducedGraph sub;
    std::array<int, 3> triple{};
    bool top = false;
    bool sigma2_empty = false;
};

SigmaSubgraph sigma_subgraph(const Graph& g, int x, std::array<int, 3> triple, bool top = false);
SigmaSubgraph sigma_subgraph(const Graph& g, const GridFrame& frame, std::array<int, 3> triple,
                             bool top = false);

/// Blocks (row triples) and T-blocks (column triples) supporting the
/// mu-hexagons of distance-2 vertices, with the mu-image of every vertex of
/// G_2(x) in frame coordinates.
struct BlockSystem {
    GridFrame frame;
    std::vector<std::array<int, 3>> blocks;      // sorted triples, ascending
    std::vector<std::array<int, 3>> top_blocks;
    std::vector<std::int32_t> gamma2;
    std::vector<std::vector<std::pair<int, int>>> mu_images;  // parallel to gamma2
    std::map<std::vector<std::pair<int, int>>, std::int32_t> mu_lookup;
    bool distinct_mu = true;
    /// Every (block, T-block) pair carries exactly six distance-2 vertices
    /// whose mu-images are the six hexagons of the 3x3 subgrid.
    bool hsets_complete = true;
    std::string details;
};

/// Throws MuGraphNotHexagon naming the offending pair.
BlockSystem block_system(const Graph& g, int x);

/// Checks, over all pairs y,z in G_2(x), that y ~ z exactly when the common
/// part of their mu-images induces an edge or two disjoint edges in the grid.
bool verify_mu_adjacency_criterion(const Graph& g, const BlockSystem& bs, std::string* details);

/// Checks the distance partition of G(x) seen from sampled z in G_2(x):
/// G_2(z) ∩ G(x) is the three rows and three columns of the mu-image minus
/// the hexagon, G_3(z) ∩ G(x) the complement.
bool verify_block_partition(const Graph& g, const BlockSystem& bs, int samples,
                            std::string* details);

struct Ball2Result {
    /// Pairs (vertex of H-ball, vertex of G-ball); empty when no isomorphism
    /// was found.
    std::vector<std::pair<std::int32_t, std::int32_t>> mapping;
    bool found = false;
    std::string certificate;  // failure explanation when !found
};

/// Isomorphism between the balls of radius 2 at x in g and xt in h,
/// constructed by aligning block systems and matching mu-images, then
/// verified edge-exactly in both directions. Throws DistinctMuGraphsViolated
/// when two distance-2 vertices share a mu-graph.
Ball2Result ball2_isomorphism(const Graph& g, int x, const Graph& h, int xt);

struct SemiPartialGeometry {
    long long s = 0, t = 0, alpha = 0, mu = 0;
    std::size_t point_count = 0;
    std::vector<std::vector<std::int32_t>> lines;
    bool is_partial = false;        // mu == (t+1) * alpha
    bool diagonal_axiom = false;
    bool collinearity_matches_graph = false;
};

/// Points are the vertices, lines the maximal cliques of the given size.
/// The five axioms are verified exhaustively (AxiomViolation names the axiom
/// and a witness); the diagonal axiom and the partial-geometry identity are
/// reported as flags.
SemiPartialGeometry extract_spg(const Graph& sigma, int line_size);

/// All maximal cliques (Bron-Kerbosch with pivoting), |G| <= 4096.
std::vector<std::vector<std::int32_t>> maximal_cliques(const Graph& g);

struct TriangulabilityViolation {
    int condition = 0;  // 1 or 2
    int x = 0, y1 = 0, y2 = 0, j = 0;
};

struct TriangulabilityReport {
    bool condition_i = true;   // G_{j-1}(y1) ∩ G(x) induces a connected graph
    bool condition_ii = true;  // adjacent y1 ~ y2 share a vertex of G(x) one step closer
    std::vector<TriangulabilityViolation> violations;           // capped
    std::map<int, std::vector<long long>> lambda_sizes_by_j;    // observed |G_{j-1}(y1) ∩ G(x)|

    bool both_hold() const { return condition_i && condition_ii; }
};

/// Exhaustive scan over all x and all y1, y2 in G_j(x), j >= 2; |G| <= 2^13.
TriangulabilityReport triangulability_conditions(const Graph& g);

}  // namespace drgforge
