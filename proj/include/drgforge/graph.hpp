#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drgforge/errors.hpp"
#include "drgforge/intersection_array.hpp"

namespace drgforge {

/// Immutable finite simple graph. Neighbor lists are sorted, so adjacency
/// queries are binary searches and set intersections are linear merges.
class Graph {
public:
    Graph() = default;

    /// Validates range, rejects loops and duplicate edges (either orientation).
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);

    /// Trusts `adj` to be a symmetric loop-free adjacency structure.
    static Graph from_adjacency_unchecked(std::vector<std::vector<std::int32_t>> adj);

    /// Trusts a prebuilt CSR structure (rows sorted, symmetric, loop-free).
    static Graph from_csr_unchecked(int n, std::vector<std::uint32_t> off,
                                    std::vector<std::int32_t> adj);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return adj_.size() / 2; }

    int degree(int v) const { return static_cast<int>(off_[v + 1] - off_[v]); }

    std::span<const std::int32_t> neighbors(int v) const {
        return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
    }

    bool adjacent(int u, int v) const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw VertexOutOfRange("vertex index out of range");
    }

    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    std::vector<std::uint32_t> off_;  // n+1 prefix offsets
    std::vector<std::int32_t> adj_;
};

/// BFS levels around a base vertex. Levels partition the component of the
/// base; dist[v] = -1 for unreachable vertices.
struct DistancePartition {
    int base = 0;
    std::vector<std::vector<std::int32_t>> levels;
    std::vector<std::int32_t> dist;

    int eccentricity() const { return static_cast<int>(levels.size()) - 1; }
};

DistancePartition distance_partition(const Graph& g, int x);

/// Shortest-path distance, or -1 if disconnected.
int graph_distance(const Graph& g, int x, int y);

struct LocalIntersectionNumbers {
    int i = 0;  // d(x, y)
    long long c = 0, a = 0, b = 0;
};

/// (c_i, a_i, b_i) at i = d(x,y); throws Disconnected when y is unreachable.
LocalIntersectionNumbers local_intersection_numbers(const Graph& g, int x, int y);

/// Evidence that two ordered pairs at the same distance disagree on an
/// intersection number.
struct DrgWitness {
    std::string parameter;  // e.g. "b_1"
    int x1 = 0, y1 = 0;
    long long count1 = 0;
    int x2 = 0, y2 = 0;
    long long count2 = 0;

    std::string to_string() const;
};

struct DrgCheck {
    bool ok = false;
    std::optional<IntersectionArray> array;  // full check success
    std::vector<long long> partial_b;        // depth-limited success: b_0..b_r
    std::vector<long long> partial_c;        // and c_1..c_r
    std::optional<DrgWitness> witness;
};

/// Verifies distance-regularity over all ordered vertex pairs and returns the
/// intersection array, or a witness naming two conflicting pairs. With
/// `depth = r`, only well-definedness of b_0..b_r and c_1..c_r is checked
/// (eccentricities may differ). Throws Disconnected for disconnected input.
DrgCheck check_distance_regular(const Graph& g, std::optional<int> depth = std::nullopt);

/// |{u : d(x,u)=l, d(y,u)=m, d(z,u)=n}| by exhaustive scan.
long long triple_intersection(const Graph& g, int x, int y, int z, int l, int m, int n);

/// Induced subgraph with back-references into the parent graph.
struct InducedGraph {
    Graph graph;
    std::vector<std::int32_t> vertices;  // local index -> parent vertex
};

InducedGraph induced_subgraph(const Graph& g, std::span<const std::int32_t> verts);

/// Subgraph induced on the common neighborhood of y and z; requires
/// d(y,z) = 2 (NotAtDistanceTwo otherwise).
InducedGraph mu_graph(const Graph& g, int y, int z);

/// Local graph: subgraph induced on the neighbors of x.
InducedGraph local_graph(const Graph& g, int x);

/// Sorted intersection of two neighbor lists.
std::vector<std::int32_t> common_neighbors(const Graph& g, int u, int v);

// --- plain-text edge list format: "n m" header then m lines "u v" ---

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

// --- standard constructions used as fixtures and by the grid recognizer ---

/// Cartesian product of complete graphs K_n and K_m on n*m vertices;
/// vertex (i, j) has index i*m + j.
Graph make_grid_graph(int n, int m);

/// The strongly regular (16, 6, 2, 2) graph that is not the (4x4)-grid:
/// Z_4 x Z_4 with difference set {(1,0),(3,0),(0,1),(0,3),(1,1),(3,3)}.
Graph make_shrikhande_graph();

Graph make_cycle_graph(int n);
Graph make_complete_graph(int n);
Graph make_path_graph(int n);
Graph complement_graph(const Graph& g);

}  // namespace drgforge
