#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gcx {

// Connected multigraph with positional edge labels (vector index = label-1)
// and an optional global direction flag. Vertices are 0-based internally;
// the text format uses 1-based vertices. When directed, an edge (u,v) is
// ordered tail->head; loops (v,v) carry no direction.
struct LabelledGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    bool directed = false;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int valence(int v) const;  // loops count twice
    bool is_connected() const;
    // Throws std::invalid_argument on: out-of-range endpoints, disconnected
    // graph, or a vertex of valence < 3.
    void validate() const;

    // Undirected edges as (min,max); directed edges as stored, loops (v,v).
    std::pair<int, int> normalized_edge(std::size_t i) const;

    int degree_n() const { return edge_count() - vertex_count; }
    int excess_m() const { return 2 * edge_count() - 3 * vertex_count; }

    LabelledGraph underlying() const;  // forget directions, keep labels

    bool operator==(const LabelledGraph&) const = default;
    bool operator<(const LabelledGraph& o) const;
};

// Canonical representative plus the sign relating the input labelling to the
// canonical one. sign = 0 iff the class vanishes (an automorphism induces an
// odd edge permutation; in particular any repeated edge).
struct OrientedClass {
    LabelledGraph canonical;
    int sign = 0;
};

struct GradedDegrees {
    int n = 0;  // |E| - |V|
    int m = 0;  // 2|E| - 3|V|
    bool operator==(const GradedDegrees&) const = default;
};

struct DirectionOrbit {
    LabelledGraph representative;  // directed
    std::uint64_t size = 0;
};

int permutation_parity(const std::vector<int>& p);  // +1 / -1

// Deterministic canonical form: the vertex relabelling minimising the sorted
// edge list (lexicographic on normalized pairs), searched with partial-prefix
// pruning. Isomorphic inputs yield identical canonical graphs.
OrientedClass canonicalize(const LabelledGraph& g);

// Vertex permutations preserving the (directed) edge multiset.
std::vector<std::vector<int>> automorphisms(const LabelledGraph& g);
long automorphism_order(const LabelledGraph& g);

// Orbits of Aut(g) on the 2^|E| direction assignments of an undirected g.
// Sizes sum to 2^|E|.
std::vector<DirectionOrbit> direction_orbits(const LabelledGraph& g);

GradedDegrees grading_of(const LabelledGraph& g);

// Compact order-preserving serialization of a canonical graph, used as the
// sparse-chain key.
std::string graph_key(const LabelledGraph& g);

}  // namespace gcx
