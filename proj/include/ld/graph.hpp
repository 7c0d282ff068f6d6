#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ld {

// Thrown when graph/CNF text input is malformed.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite simple undirected graph with 1-based vertex labels, order >= 1.
// Code-valued operations and the exact solver additionally need n <= 64
// (see code.hpp / solver.hpp).
class graph {
  public:
    graph() = default;

    // Validates labels, rejects self-loops and duplicate edges.
    static graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Sorted (u, v) pairs with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

    // Bitmask views, bit v-1 stands for vertex v; only available for n <= 64.
    bool has_masks() const { return n_ <= 64; }
    std::uint64_t closed_mask(int v) const;
    std::uint64_t open_mask(int v) const;
    std::uint64_t full_mask() const;

    void check_vertex(int v) const;

  private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;        // index 0 unused
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> closed_;        // empty when n_ > 64
};

// N[v] as a sorted list (v included).
std::vector<int> closed_neighbourhood(const graph& g, int v);

enum class twin_kind { none, open_twins, closed_twins };

// open: N(u) = N(v); closed: N[u] = N[v]. u == v is an error.
twin_kind twins(const graph& g, int u, int v);

// Vertex sets of the connected components, each sorted, ordered by minimum label.
std::vector<std::vector<int>> connected_components(const graph& g);
bool is_connected(const graph& g);

bool is_bipartite(const graph& g);

// True iff every edge lies on at most one cycle (every block is an edge or a cycle).
bool is_cactus(const graph& g);

struct induced_subgraph_result {
    graph g;
    std::vector<int> new_to_old;  // [1..m], compact labels back to originals
    std::vector<int> old_to_new;  // [1..n], 0 for vertices that were dropped
};

induced_subgraph_result induced_subgraph(const graph& g, const std::vector<int>& kept);
induced_subgraph_result delete_vertices(const graph& g, const std::vector<int>& removed);

// Text format: first line "n m", then m lines "u v" with 1 <= u < v <= n.
// Lines whose first non-blank character is '#' are comments. n = 0 is rejected.
graph read_graph(std::istream& in);
graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const graph& g);

}  // namespace ld
