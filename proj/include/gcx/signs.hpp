#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

struct GradedGen {
    std::string name;
    int degree = 0;
    bool operator==(const GradedGen&) const = default;
};
using GradedWord = std::vector<GradedGen>;

// Sign of rewriting w as w[perm[0]], w[perm[1]], ...: product of
// (-1)^(d_i d_j) over inverted pairs.
int koszul_sign(const GradedWord& w, const std::vector<int>& perm);

// Sign relating two orderings of the same letters (by name).
int koszul_reorder_sign(const GradedWord& source, const GradedWord& target);

// Half-edge orientation of a directed graph: deg e+ = k-1, deg e- = k.
// Each vertex word lists incoming (+) factors before outgoing (-) factors,
// both by ascending edge label; signs are accumulated while extracting the
// words left to right from the edge-ordered product e1+ e1- e2+ e2- ...
// The signed product of the words equals the edge-ordered product exactly.
struct HalfEdgeOrientation {
    struct VertexWord {
        int vertex = 0;
        int sign = +1;
        std::vector<std::string> factors;  // "e4-", "e7+", 1-based labels
    };
    std::vector<VertexWord> words;
    int global_sign = +1;  // product of the vertex signs
};
HalfEdgeOrientation half_edge_orientation(const LabelledGraph& g, int k_parity);

// Sign sigma with o(v1) ^ o(v2) = sigma (e+ ^ e-) ^ o(v) for the splitting of
// v along the given half-edge block (bit set = stays with the new edge's
// tail vertex). Half-edges at v are indexed by (edge, endpoint slot) in edge
// order, as in split_vertex.
int split_sign(const LabelledGraph& g, int v, std::uint32_t block_tail, int k_parity);

// The three Jacobi coefficients derived by inducing boundary orientations on
// the faces of D^p x D^q x D^r (coordinate-frame wedge words); the closed
// form (1, (-1)^(pq+pr), (-1)^(pr+qr)) is only used as a test oracle.
std::array<int, 3> jacobi_signs(int p, int q, int r);

struct BracketExpr {
    std::string name;  // leaf
    int leaf_degree = 0;
    std::vector<BracketExpr> args;  // nonempty = bracket

    bool is_leaf() const { return args.empty(); }
    int degree() const;  // bracket of degree-d_i args has degree sum d_i - (arity-1)
    std::string to_string() const;
    bool operator==(const BracketExpr&) const = default;
};

BracketExpr make_gen(std::string name, int degree);
BracketExpr make_bracket(std::vector<BracketExpr> args);
// "[a,b,[c,d]]" with degrees looked up per leaf name.
BracketExpr parse_bracket(const std::string& s, const std::map<std::string, int>& degrees);

// Permute top-level arguments; returns the Koszul sign and the new expression.
std::pair<int, BracketExpr> graded_symmetry(const BracketExpr& e, const std::vector<int>& perm);

// Canonical form under graded symmetry: arguments sorted recursively, sign
// accumulated. Two terms are equal up to symmetry iff normal forms match.
std::pair<int, BracketExpr> normalize_bracket(const BracketExpr& e);

// d[x_1..x_m] as the signed sum over one-internal-edge trees, inner bracket
// first: sum over subsets S (2 <= |S| <= m-1) of
// (-1)^(|S|(m-|S|)) * koszul(unshuffle S) * [[x_S], x_rest...].
// All generators have degree n of the given parity; 2^m - m - 2 terms
// (= 2^(l-1) - l - 1 for the l = m+1 valent vertex).
struct LinfTerm {
    int sign = +1;
    BracketExpr expr;
};
std::vector<LinfTerm> linf_relation(int ell, int n_parity);

}  // namespace gcx
