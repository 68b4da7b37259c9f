#include "gcx/dimcalc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace gcx {

void LinkType::validate() const {
    if (components.empty()) throw std::invalid_argument("link type has no components");
    for (int a : components)
        if (a < 1 || a > ambient - 2)
            throw std::invalid_argument("component dimension outside [1, N-2]");
    for (int p : loop_prefix)
        if (p < 0) throw std::invalid_argument("negative loop exponent");
}

std::string link_type_to_string(const LinkType& t) {
    std::string s;
    for (int p : t.loop_prefix) s += "O^" + std::to_string(p);
    s += "(";
    for (std::size_t i = 0; i < t.components.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t.components[i]);
    }
    s += ";" + std::to_string(t.ambient) + ")";
    return s;
}

LinkType presuspend(const LinkType& t, const std::vector<int>& subset) {
    t.validate();
    if (subset.empty()) throw std::invalid_argument("presuspension needs a nonempty subset");
    LinkType out = t;
    out.ambient += 1;
    for (int i : subset) {
        if (i < 0 || i >= static_cast<int>(out.components.size()))
            throw std::invalid_argument("component index out of range");
        out.components[i] += 1;
    }
    out.validate();
    return out;
}

LinkType deloop(const LinkType& t, const std::vector<int>& p) {
    t.validate();
    if (p.size() != t.components.size())
        throw std::invalid_argument("delooping vector length mismatch");
    bool all_zero = true;
    for (int x : p) {
        if (x < 0) throw std::invalid_argument("negative delooping exponent");
        if (x > 0) all_zero = false;
    }
    if (all_zero) return t;
    LinkType out = t;
    for (std::size_t i = 0; i < p.size(); ++i) {
        out.components[i] -= p[i];
        if (out.components[i] < 1)
            throw std::invalid_argument("component dimension underflow in delooping");
    }
    for (int x : p) out.loop_prefix.push_back(x);
    return out;
}

LinkType graph_of_loop(const LinkType& t) {
    t.validate();
    if (t.loop_prefix.empty() || t.loop_prefix.back() < 1)
        throw std::invalid_argument("no loop factor to take the graph of");
    LinkType out = t;
    if (--out.loop_prefix.back() == 0) out.loop_prefix.pop_back();
    for (int& a : out.components) a += 1;
    out.ambient += 1;
    return out;
}

FeasibleRange feasible_n_range(int ell, int k) {
    if (ell < 3) throw std::invalid_argument("need ell >= 3");
    FeasibleRange out;
    // ceil((k + l - 2)/(l - 1)), floor((2k + l - 3)/l)
    out.lo = (k + ell - 2 + ell - 2) / (ell - 1);
    out.hi = (2 * k + ell - 3) / ell;
    out.nonempty = out.lo <= out.hi;
    out.width_threshold_2k = Rat(2 * ell * ell + 2 * ell - 6, ell - 2);
    out.strong_threshold_2k = 2L * ell * ell - 4 * ell + 3;
    return out;
}

VertexFamily vertex_family(int ell, int j, int k) {
    if (ell < 3) throw std::invalid_argument("need ell >= 3");
    if (j < 0 || j > ell) throw std::invalid_argument("need 0 <= j <= ell");
    FeasibleRange range = feasible_n_range(ell, k);
    if (!range.nonempty) throw std::invalid_argument("no feasible n for these (ell, k)");
    VertexFamily out;
    out.ell = ell;
    out.j = j;
    out.k = k;
    out.n = range.lo;
    int n = out.n;
    out.delta = 2 * k - ell * n + ell - 3;
    out.a = (ell - 1) * n - k - (ell - 2);
    int a = out.a, delta = out.delta;
    if (j >= 1) {
        for (int i = 0; i < ell - j; ++i) out.loop_vec.push_back(a + delta);
        for (int i = 0; i < j - 1; ++i) out.loop_vec.push_back(a + delta + 1);
        out.loop_vec.push_back(a + 1);
    } else {
        for (int i = 0; i < ell - 1; ++i) out.loop_vec.push_back(a + delta);
        out.loop_vec.push_back(a);
    }

    // reproduce the final type through the operations themselves
    LinkType t;
    int base = (ell - 1) * n - (ell - 2);
    t.components.assign(ell, base);
    t.ambient = ell * n - ell + 3;
    std::vector<int> first(ell - 1);
    for (int i = 0; i < ell - 1; ++i) first[i] = i;
    for (int s = 0; s < delta; ++s) t = presuspend(t, first);
    t = deloop(t, out.loop_vec);
    if (ell >= 4) t.loop_prefix.insert(t.loop_prefix.begin(), ell - 4);
    out.final_type = t;

    LinkType expect;
    expect.loop_prefix = t.loop_prefix;
    expect.components.assign(ell - j, k);
    for (int i = 0; i < j; ++i) expect.components.push_back(k - 1);
    expect.ambient = 2 * k;
    if (!(t == expect)) throw std::logic_error("vertex family recipe mismatch");

    out.total_dim = 0;
    for (int p : t.loop_prefix) out.total_dim += p;
    out.strict_dim_bound = (ell - 2) * k - 2 * ell + j + 3 > 0;
    // the dimension bound itself: a_1 + ... + a_l <= (N-2)l - N + 3
    long lhs = 0;
    for (int x : t.components) lhs += x;
    long rhs = static_cast<long>(t.ambient - 2) * ell - t.ambient + 3;
    if (lhs > rhs) throw std::logic_error("dimension bound violated");
    if (out.strict_dim_bound != (lhs < rhs)) throw std::logic_error("strictness mismatch");
    return out;
}

long excess_dimension_bound(long mu) {
    if (mu < 0) throw std::invalid_argument("negative excess");
    return 2 * mu * mu + 8 * mu + 10;
}

BandReport band_check(int n, int m, int k) {
    if (m < 0 || m > 2 * n - 1) throw std::invalid_argument("excess out of range");
    BandReport out;
    out.degree = static_cast<long>(2 * k - 3) * n + m;
    out.band_lo = 2L * k * n - 4L * n - 1;
    out.band_hi = 2L * k * n - 1;
    out.in_band = out.band_lo <= out.degree && out.degree <= out.band_hi;
    // m <= sqrt(k-1) - 3  <=>  (m+3)^2 <= k-1
    long root_cap = static_cast<long>(std::sqrt(static_cast<double>(k - 1)));
    while (root_cap * root_cap > k - 1) --root_cap;
    while ((root_cap + 1) * (root_cap + 1) <= k - 1) ++root_cap;
    out.d_cap = std::min(root_cap - 3, static_cast<long>(2 * n - 1));
    out.in_d_set = 2 * k >= 20 && m <= out.d_cap;
    return out;
}

CfsReport cfs_check(const std::vector<long>& p, long m) {
    for (long x : p)
        if (x >= m - 2) throw std::invalid_argument("requires p_i < m - 2");
    CfsReport out;
    for (long x : p) {
        CfsReport::A a;
        a.p = x;
        a.divisible = ((x + 1) % 4) == 0;
        a.range = 2 * m < 3 * x + 4;
        a.holds = a.divisible && a.range;
        out.a.push_back(a);
        out.a_any = out.a_any || a.holds;
    }
    // condition (c): positive integers x_i with sum c_i x_i = m - 3 over a
    // subsequence of size >= 3; coefficients c_i = m - p_i - 2 >= 1, so the
    // search is bounded by x_i <= (m-3)/c_i
    int r = static_cast<int>(p.size());
    std::vector<int> subseq;
    std::vector<long> xs;
    std::function<bool(int, long)> solve = [&](std::size_t idx, long target) {
        if (idx == subseq.size()) return target == 0;
        long c = m - p[subseq[idx]] - 2;
        for (long x = 1; c * x <= target; ++x) {
            xs.push_back(x);
            if (solve(idx + 1, target - c * x)) return true;
            xs.pop_back();
        }
        return false;
    };
    std::function<bool(int)> pick = [&](int from) {
        if (subseq.size() >= 3) {
            xs.clear();
            if (solve(0, m - 3)) return true;
        }
        for (int i = from; i < r; ++i) {
            subseq.push_back(i);
            if (pick(i + 1)) return true;
            subseq.pop_back();
        }
        return false;
    };
    if (pick(0)) {
        out.c_solvable = true;
        out.c_subsequence = subseq;
        out.c_solution = xs;
    }
    return out;
}

long MultiplicityLedger::q_of(int ell) const {
    auto it = q.find(ell);
    long v = it == q.end() ? 1 : it->second;
    if (v <= 0) throw std::invalid_argument("q parameters must be positive");
    return v;
}

long MultiplicityLedger::r_of(int ell) const {
    auto it = r.find(ell);
    long v = it == r.end() ? 1 : it->second;
    if (v <= 0) throw std::invalid_argument("r parameters must be positive");
    return v;
}

Int mu_partial(int ell, const MultiplicityLedger& ledger) {
    if (ell < 4) throw std::invalid_argument("mu needs ell >= 4");
    Int l = 1;
    for (int p = 2; p + 2 <= ell; ++p) {
        int q = ell - p;
        l = int_lcm(l, multiplicity(p + 1, ledger).value * multiplicity(q + 1, ledger).value);
    }
    return l;
}

Multiplicity multiplicity(int ell, const MultiplicityLedger& ledger) {
    if (ell < 3) throw std::invalid_argument("multiplicity needs ell >= 3");
    if (ell == 3) return {Int(1), "1"};
    if (ell == 4) return {Int(4), "4"};
    Int mu = mu_partial(ell, ledger);
    Int value = Int(ell) * ledger.q_of(ell) * ledger.r_of(ell) * mu;
    std::string sym = std::to_string(ell) + "*q_" + std::to_string(ell) + "*r_" +
                      std::to_string(ell) + "*mu_" + std::to_string(ell);
    return {value, sym};
}

bool boundary_coefficients_integral(int ell, const MultiplicityLedger& ledger) {
    Int mu = mu_partial(ell, ledger);
    // valence multisets (l_1 >= l_2 >= ... >= l_i >= 3) of trees with ell
    // leaves and i internal vertices: sum l_v = ell + 2(i - 1)
    int max_internal = ell - 2;
    bool ok = true;
    std::function<void(int, int, int, Int)> gen = [&](int remaining, int slots, int cap, Int prod) {
        if (!ok) return;
        if (slots == 0) {
            if (remaining == 0 && mu % prod != 0) ok = false;
            return;
        }
        for (int v = std::min(cap, remaining - 3 * (slots - 1)); v >= 3; --v)
            gen(remaining - v, slots - 1, v, prod * multiplicity(v, ledger).value);
    };
    for (int i = 2; i <= max_internal; ++i)
        gen(ell + 2 * (i - 1), i, ell + 2 * (i - 1), Int(1));
    return ok;
}

}  // namespace gcx
