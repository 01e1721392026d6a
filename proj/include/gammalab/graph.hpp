#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammalab/common.hpp"
#include "json.hpp"

namespace gammalab {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..d-1 with bitset adjacency.
///
/// Every constructed value is loop-free and symmetric. At most 64 vertices.
class Graph {
public:
    Graph() = default;
    explicit Graph(int d);
    Graph(int d, const std::vector<Edge>& edges);

    int size() const { return static_cast<int>(adj_.size()); }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    Mask neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }
    Mask all_vertices() const { return low_bits(size()); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    int edge_count() const;
    bool is_complete() const;
    bool is_connected() const;

    /// Adds an edge; callers that need validation go through the constructor.
    void add_edge(int u, int v);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<Mask> adj_;
};

/// Disjoint vertex blocks covering 0..d-1, ordered by least vertex.
struct VertexPartition {
    std::vector<Mask> blocks;

    int count() const { return static_cast<int>(blocks.size()); }
    /// Index of the block holding v, or -1.
    int block_of(int v) const;

    friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

enum class Family {
    path,
    cycle,
    complete,
    star,
    empty,
    complete_multipartite,
    petersen,
    hamming,
};

Graph path_graph(int d);
Graph cycle_graph(int d);
Graph complete_graph(int d);
/// K_{1,d-1}; the center is the last vertex.
Graph star_graph(int d);
Graph empty_graph(int d);
Graph complete_multipartite_graph(const std::vector<int>& parts);
/// Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram on 5..9.
Graph petersen_graph();
/// Vertices are tuples (j_1..j_m), 0 <= j_k < parts[k], in lexicographic
/// order (last coordinate fastest); adjacent iff they differ in one slot.
Graph hamming_graph(const std::vector<int>& parts);

Graph family(Family kind, const std::vector<int>& params);

/// Parses "name[,p1,p2,...]", e.g. "cycle,5", "hamming,2,3", "petersen".
Graph family_from_spec(std::string_view spec);

VertexPartition connected_components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    /// original[i] is the vertex of the parent graph renumbered to i.
    std::vector<int> original;
};

InducedSubgraph induced_subgraph(const Graph& g, Mask vertices);

/// Largest vertex count accepted by the brute-force isomorphism routines.
inline constexpr int kIsoGuard = 10;

/// A bijection f with g.adjacent(u, v) == h.adjacent(f[u], f[v]), if any.
std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h);

/// All automorphisms of g as vertex maps (includes the identity).
std::vector<std::vector<int>> automorphisms(const Graph& g);

/// Relabeling of g whose upper-triangle adjacency string (graph6 order) is
/// lexicographically minimal over all vertex permutations.
std::vector<int> canonical_permutation(const Graph& g);

/// graph6 text of the canonically relabeled graph; equal iff isomorphic.
std::string canonical_form(const Graph& g);

/// Applies perm so that vertex perm[i] of g becomes vertex i.
Graph relabel(const Graph& g, const std::vector<int>& perm);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Accepts a graph6 string or the JSON object form.
Graph parse_graph(std::string_view text);

}  // namespace gammalab
