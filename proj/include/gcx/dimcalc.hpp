#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcx/rational.hpp"

namespace gcx {

// Symbolic string-link type (a_1,...,a_r; N) with the outer loop exponents
// accumulated by deloopings.
struct LinkType {
    std::vector<int> loop_prefix;  // sphere dimensions of the loop factors
    std::vector<int> components;   // a_1..a_r
    int ambient = 0;               // N

    void validate() const;  // 1 <= a_i <= N-2
    bool operator==(const LinkType&) const = default;
};

std::string link_type_to_string(const LinkType& t);

// +1 on each chosen component and on the ambient dimension.
LinkType presuspend(const LinkType& t, const std::vector<int>& subset_0based);

// Subtract p_i per component and append the nonzero vector to the prefix;
// order-independent.
LinkType deloop(const LinkType& t, const std::vector<int>& p);

// Inverse bookkeeping: consume one unit of the last loop factor and add one
// to every component and the ambient dimension.
LinkType graph_of_loop(const LinkType& t);

// The general vertex-family recipe for an l-valent vertex with j outgoing
// edges in ambient dimension 2k: delta = 2k - l n + l - 3,
// a = (l-1)n - k - (l-2), final type (k^(l-j), (k-1)^j; 2k).
struct VertexFamily {
    int ell = 0, j = 0, k = 0;
    int n = 0, delta = 0, a = 0;
    std::vector<int> loop_vec;  // the delooping vector
    LinkType final_type;
    int total_dim = 0;          // (l-2)k - 2l + 3 + j, plus l-4 when l >= 4
    bool strict_dim_bound = false;  // strict inequality in the dimension bound
};
VertexFamily vertex_family(int ell, int j, int k);

struct FeasibleRange {
    bool nonempty = false;
    int lo = 0, hi = 0;                 // integer n-range when nonempty
    Rat width_threshold_2k;             // (2l^2+2l-6)/(l-2), guarantees an integer n
    long strong_threshold_2k = 0;       // 2l^2-4l+3, from the extra n >= 2l-3 constraint
};
// Integer n with (k+l-2)/(l-1) <= n <= (2k+l-3)/l.
FeasibleRange feasible_n_range(int ell, int k);

// Smallest even bound: 2 mu^2 + 8 mu + 10 (the odd form 2 mu^2 + 8 mu + 9
// rounded up to parity of 2k).
long excess_dimension_bound(long mu);

struct BandReport {
    long degree = 0;        // (2k-3)n + m
    long band_lo = 0, band_hi = 0;
    bool in_band = false;
    bool in_d_set = false;  // m <= min(sqrt(k-1)-3, 2n-1), requires 2k >= 20
    long d_cap = 0;
};
BandReport band_check(int n, int m, int k);

// Conditions (a) and (c) for pi_0 Emb of spherical links; (b) is reported
// UNDECIDED (its parameter set is external).
struct CfsReport {
    struct A {
        long p = 0;
        bool divisible = false;   // 4 | p+1
        bool range = false;       // m < 3p/2 + 2
        bool holds = false;
    };
    std::vector<A> a;
    bool a_any = false;
    bool c_solvable = false;
    std::vector<int> c_subsequence;   // witness indices (0-based)
    std::vector<long> c_solution;     // positive x_i
    std::string b = "UNDECIDED";
};
CfsReport cfs_check(const std::vector<long>& p, long m);

// m_3 = 1, m_4 = 4, m_l = l q_l r_l mu_l for l >= 5 with
// mu_l = lcm{ m_(p+1) m_(q+1) : p+q = l, p,q >= 2 }; q_l, r_l default to 1.
struct MultiplicityLedger {
    std::map<int, long> q, r;
    long q_of(int ell) const;
    long r_of(int ell) const;
};

struct Multiplicity {
    Int value;
    std::string symbolic;
};
Multiplicity multiplicity(int ell, const MultiplicityLedger& ledger);
Int mu_partial(int ell, const MultiplicityLedger& ledger);  // mu_l

// Checks mu_l / (m_(l_1) ... m_(l_i)) is an integer for every valence
// decomposition of an l-leaf tree with i internal vertices.
bool boundary_coefficients_integral(int ell, const MultiplicityLedger& ledger);

}  // namespace gcx
