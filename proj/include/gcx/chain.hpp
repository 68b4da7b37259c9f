#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/rational.hpp"

namespace gcx {

// Sparse rational combination of canonical nonvanishing classes. Keys carry
// sign +1; a term with canonical sign -1 is absorbed into the coefficient.
// All stored terms share the same bigrading and directedness.
struct ChainVector {
    struct Term {
        LabelledGraph graph;  // canonical
        Rat coeff;
    };
    std::map<std::string, Term> terms;
    GradedDegrees grading{};
    bool directed = false;

    bool is_zero() const { return terms.empty(); }
    void add(const OrientedClass& cls, const Rat& coeff);
    void add_chain(const ChainVector& other, const Rat& scale = 1);
};

ChainVector make_chain(const LabelledGraph& g, const Rat& coeff = 1);

// Eq-(1.1) vertex splitting: partitions of the half-edges at v into two
// blocks of size >= 2; the new edge gets label 1 and old labels shift by one.
// Valence-3 vertices give the zero chain. In the directed case each partition
// contributes both directions of the new edge (no 1/2 here).
ChainVector split_vertex(const LabelledGraph& g, int v);

// The distinct canonical graphs among the splittings at v, vanishing classes
// included.
std::vector<LabelledGraph> split_terms(const LabelledGraph& g, int v);

// Undirected: sum of split_vertex over vertices. Directed: half that sum.
// Bigrading (n,m) -> (n,m-1).
ChainVector differential(const ChainVector& c);

// Averages each edge over its two directions: Gamma -> 2^-|E| sum_alpha
// (Gamma,alpha). A chain map splitting the forgetful map.
ChainVector eta(const ChainVector& c);

// Forget directions term by term (left inverse of eta).
ChainVector forget_directions(const ChainVector& c);

// All nonvanishing canonical classes with |V| = 2n-m, |E| = 3n-m, connected,
// all valences >= 3, in deterministic (key) order.
std::vector<OrientedClass> basis(int n, int m, bool directed);

// Kernel of the differential on GC^(n,m) presented relative to the seed: the
// first chain is the reduced kernel element containing the seed (coefficient
// 1), the rest span the seed-free part of the kernel. Empty when no cycle
// involves the seed.
std::vector<ChainVector> cycle_search(int n, int m, const OrientedClass& seed);

// The wheel with five spokes, hub last, spokes then rim in label order.
LabelledGraph wheel_graph(int spokes);

struct GammaCycle {
    LabelledGraph x;       // canonical wheel X
    LabelledGraph y;       // derived partner graph
    ChainVector gamma;     // X/5 - Y/2 (up to overall scale fixed by X/5)
};
// Derives the partner graph by solving d(X/5 + sum c_i G_i) = 0 at (4,2).
GammaCycle derive_gamma();

}  // namespace gcx
