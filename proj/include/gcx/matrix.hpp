#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gcx/chain.hpp"
#include "gcx/graph.hpp"
#include "gcx/rational.hpp"

namespace gcx {

struct SparseRationalMatrix {
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, Rat> entries;  // no zeros stored

    void set(int r, int c, const Rat& q);
    Rat get(int r, int c) const;
};

// Matrix of the differential GC^(n,m) -> GC^(n,m-1) in the deterministic
// bases from basis().
SparseRationalMatrix boundary_matrix(int n, int m, bool directed);

// Exact rank over Q: denominators cleared per row, then fraction-free
// (Bareiss) elimination; pivot = smallest magnitude, ties by (row, col).
int rank(const SparseRationalMatrix& M);

// Basis of the right kernel (column vectors with M v = 0), reduced.
std::vector<std::vector<Rat>> kernel_basis(const SparseRationalMatrix& M);

// dim ker d_(n,m) - rank d_(n,m+1); the incoming rank is dropped at the
// truncation cutoff m == mu.
long homology_dim(int n, int m, int mu_truncation, bool directed);

// <Gamma, c> = sum over directed terms isomorphic (after forgetting
// directions) to Gamma of +-|Aut Gamma| times the coefficient; the sign is
// the orientation comparison through canonical form.
Rat pairing(const OrientedClass& cochain, const ChainVector& c);

}  // namespace gcx
