#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcx/chain.hpp"
#include "gcx/graph.hpp"
#include "gcx/rational.hpp"

namespace gcx {

// A tree with leaves 1..l and anonymous internal vertices of valence >= 3 is
// determined by its internal-edge splits: each internal edge bipartitions the
// leaf set. A split is stored as the bitmask over leaves 2..l (bit i-2) of
// the side not containing leaf 1; both sides have >= 2 leaves. A set of
// splits is a tree iff pairwise compatible (nested or disjoint). Contraction
// removes a split, so the poset order is split-set containment.
struct Tree {
    int leaves = 0;
    std::vector<std::uint32_t> splits;  // sorted
    bool has_directions = false;
    std::uint32_t dir_mask = 0;  // bit per split: 1 = arrow points away from the leaf-1 side
    int incoming = 0;            // directed trees: leaves 1..incoming point in

    int excess() const { return leaves - 3 - static_cast<int>(splits.size()); }
    bool operator==(const Tree&) const = default;
    bool operator<(const Tree& o) const;
};

bool valid_split(int leaves, std::uint32_t s);
bool compatible_splits(std::uint32_t a, std::uint32_t b);
std::vector<std::uint32_t> all_splits(int leaves);  // 2^(l-1) - l - 1 of them

// All trees with l labelled leaves of the given excess.
std::vector<Tree> enumerate_trees(int leaves, int excess);

// Single-edge contractions (split removed), generating the poset order.
std::vector<std::pair<std::uint32_t, Tree>> contractions(const Tree& t);

// Direction assignments on internal edges with leaf directions fixed by
// (p,q); there are 2^(l-3-excess) of them.
std::vector<Tree> direction_extensions(const Tree& t, int p, int q);

struct SimplicialComplex {
    int vertices = 0;
    std::vector<std::vector<int>> maximal;  // maximal simplices, sorted vertex lists
    int dimension = 0;
};

// The (l-4)-dimensional complex of trees with l leaves, excluding the fully
// contracted one: a tree with k internal edges spans a (k-1)-simplex on its
// single-split contractions, glued along common faces.
SimplicialComplex lie_hedron(int leaves);

std::vector<long> f_vector(const SimplicialComplex& K);
std::vector<long> complex_homology(const SimplicialComplex& K);  // Betti numbers over Q

// Poset of directed graphs reachable from an integral directed cycle by
// repeated vertex expansion, with copy counts at the top excess.
struct DecompositionPoset {
    struct Node {
        LabelledGraph graph;  // canonical directed
        int excess = 0;
        Int copies = 1;           // |coefficient| at top excess, else 1
        Int n_gamma = 1;          // 2^excess
        Int m_gamma = 1;          // product of vertex multiplicities (unit parameters)
        std::string m_symbolic;   // same, as a formula in m_3, m_4, ...
    };
    std::vector<Node> nodes;                       // grouped by excess, descending
    std::vector<std::pair<int, int>> covers;       // (child index, parent index): child expands parent
    Int mu_lcm = 1;                                // lcm of m_gamma over nodes
};

DecompositionPoset decomposition_poset(const ChainVector& cycle);

}  // namespace gcx
