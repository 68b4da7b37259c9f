#include "gcx/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcx {

void SparseRationalMatrix::set(int r, int c, const Rat& q) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::out_of_range("matrix index");
    if (q == 0) entries.erase({r, c});
    else entries[{r, c}] = q;
}

Rat SparseRationalMatrix::get(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Rat(0) : it->second;
}

SparseRationalMatrix boundary_matrix(int n, int m, bool directed) {
    std::vector<OrientedClass> domain = basis(n, m, directed);
    std::vector<OrientedClass> codomain = basis(n, m - 1, directed);
    std::map<std::string, int> row_of;
    for (std::size_t i = 0; i < codomain.size(); ++i)
        row_of[graph_key(codomain[i].canonical)] = static_cast<int>(i);
    SparseRationalMatrix M;
    M.rows = static_cast<int>(codomain.size());
    M.cols = static_cast<int>(domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) {
        ChainVector img = differential(make_chain(domain[j].canonical));
        for (const auto& [key, term] : img.terms) {
            auto it = row_of.find(key);
            if (it == row_of.end())
                throw std::logic_error("differential left the enumerated basis");
            M.set(it->second, static_cast<int>(j), term.coeff);
        }
    }
    return M;
}

namespace {

// Dense integer rows after clearing denominators rowwise.
std::vector<std::vector<Int>> integer_rows(const SparseRationalMatrix& M) {
    std::vector<std::vector<Int>> A(M.rows, std::vector<Int>(M.cols, 0));
    std::vector<Int> den(M.rows, 1);
    for (const auto& [rc, q] : M.entries)
        den[rc.first] = int_lcm(den[rc.first], Int(denominator(q)));
    for (const auto& [rc, q] : M.entries)
        A[rc.first][rc.second] = Int(numerator(q)) * (den[rc.first] / Int(denominator(q)));
    return A;
}

}  // namespace

int rank(const SparseRationalMatrix& M) {
    auto A = integer_rows(M);
    int R = M.rows, C = M.cols;
    int rk = 0;
    Int prev = 1;
    std::vector<int> rowperm(R);
    for (int i = 0; i < R; ++i) rowperm[i] = i;
    for (int step = 0; rk < R && step < C; ++step) {
        // smallest-magnitude nonzero pivot in the remaining block
        int pr = -1, pc = -1;
        Int best = 0;
        for (int i = rk; i < R; ++i) {
            for (int j = step; j < C; ++j) {
                const Int& x = A[rowperm[i]][j];
                if (x == 0) continue;
                Int ax = abs(x);
                if (pr < 0 || ax < best) {
                    best = ax;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr < 0) break;
        std::swap(rowperm[rk], rowperm[pr]);
        if (pc != step)
            for (int i = 0; i < R; ++i) std::swap(A[rowperm[i]][pc], A[rowperm[i]][step]);
        const Int piv = A[rowperm[rk]][step];
        for (int i = rk + 1; i < R; ++i) {
            Int& lead = A[rowperm[i]][step];
            for (int j = step + 1; j < C; ++j) {
                Int t = A[rowperm[i]][j] * piv - lead * A[rowperm[rk]][j];
                A[rowperm[i]][j] = t / prev;  // exact division (Bareiss)
            }
            lead = 0;
        }
        prev = piv;
        ++rk;
    }
    return rk;
}

std::vector<std::vector<Rat>> kernel_basis(const SparseRationalMatrix& M) {
    int R = M.rows, C = M.cols;
    std::vector<std::vector<Rat>> A(R, std::vector<Rat>(C, 0));
    for (const auto& [rc, q] : M.entries) A[rc.first][rc.second] = q;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int pr = -1;
        for (int i = r; i < R; ++i)
            if (A[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(A[r], A[pr]);
        Rat inv = A[r][c];
        for (int j = 0; j < C; ++j) A[r][j] /= inv;
        for (int i = 0; i < R; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rat f = A[i][c];
            for (int j = 0; j < C; ++j) A[i][j] -= f * A[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(C, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<Rat>> K;
    for (int c = 0; c < C; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(C, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -A[i][c];
        K.push_back(std::move(v));
    }
    return K;
}

long homology_dim(int n, int m, int mu_truncation, bool directed) {
    if (m > mu_truncation) throw std::invalid_argument("grading above the truncation");
    SparseRationalMatrix out = boundary_matrix(n, m, directed);
    long kernel = out.cols - rank(out);
    long image_in = 0;
    if (m < mu_truncation) {
        SparseRationalMatrix in = boundary_matrix(n, m + 1, directed);
        image_in = rank(in);
    }
    return kernel - image_in;
}

Rat pairing(const OrientedClass& cochain, const ChainVector& c) {
    if (!c.directed) throw std::invalid_argument("pairing takes a directed chain");
    if (cochain.sign == 0) return 0;
    if (!c.is_zero() && !(grading_of(cochain.canonical) == c.grading))
        throw std::invalid_argument("pairing gradings are incompatible");
    Rat total = 0;
    long aut = 0;
    std::string want = graph_key(cochain.canonical);
    for (const auto& [key, term] : c.terms) {
        OrientedClass u = canonicalize(term.graph.underlying());
        if (u.sign == 0 || graph_key(u.canonical) != want) continue;
        if (aut == 0) aut = automorphism_order(cochain.canonical);
        total += term.coeff * u.sign * cochain.sign * aut;
    }
    return total;
}

}  // namespace gcx
