#include "gcx/signs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gcx {

namespace {

inline int par(int d) { return ((d % 2) + 2) % 2; }

}  // namespace

int koszul_sign(const GradedWord& w, const std::vector<int>& perm) {
    if (perm.size() != w.size()) throw std::invalid_argument("permutation length mismatch");
    int sign = +1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j] && par(w[perm[i]].degree) && par(w[perm[j]].degree))
                sign = -sign;
    return sign;
}

int koszul_reorder_sign(const GradedWord& source, const GradedWord& target) {
    if (source.size() != target.size()) throw std::invalid_argument("word length mismatch");
    std::vector<int> perm;
    std::vector<char> used(source.size(), 0);
    for (const auto& t : target) {
        bool found = false;
        for (std::size_t i = 0; i < source.size(); ++i) {
            if (!used[i] && source[i] == t) {
                used[i] = 1;
                perm.push_back(static_cast<int>(i));
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("words are not rearrangements");
    }
    return koszul_sign(source, perm);
}

namespace {

struct HalfEdgeLetter {
    int edge = 0;   // 0-based label
    bool head = 0;  // true = e+ (head end), false = e- (tail end)
    int degree = 0;
    bool operator==(const HalfEdgeLetter&) const = default;
};

std::string letter_name(const HalfEdgeLetter& l) {
    return "e" + std::to_string(l.edge + 1) + (l.head ? "+" : "-");
}

// vertex word in normal form: incoming (+) ascending, then outgoing (-)
// ascending; loops contribute one of each
std::vector<HalfEdgeLetter> vertex_word(const LabelledGraph& g, int v, int k_parity) {
    int deg_plus = par(k_parity + 1), deg_minus = par(k_parity);
    std::vector<HalfEdgeLetter> w;
    for (int i = 0; i < g.edge_count(); ++i)
        if (g.edges[i].second == v) w.push_back({i, true, deg_plus});
    for (int i = 0; i < g.edge_count(); ++i)
        if (g.edges[i].first == v) w.push_back({i, false, deg_minus});
    return w;
}

}  // namespace

HalfEdgeOrientation half_edge_orientation(const LabelledGraph& g, int k_parity) {
    g.validate();
    if (!g.directed) throw std::invalid_argument("half-edge orientation needs a directed graph");
    int deg_plus = par(k_parity + 1), deg_minus = par(k_parity);
    // edge-ordered product e1+ e1- e2+ e2- ...
    std::vector<HalfEdgeLetter> pool;
    for (int i = 0; i < g.edge_count(); ++i) {
        pool.push_back({i, true, deg_plus});
        pool.push_back({i, false, deg_minus});
    }
    HalfEdgeOrientation out;
    for (int v = 0; v < g.vertex_count; ++v) {
        HalfEdgeOrientation::VertexWord vw;
        vw.vertex = v;
        for (const HalfEdgeLetter& want : vertex_word(g, v, k_parity)) {
            std::size_t pos = 0;
            while (pos < pool.size() && !(pool[pos] == want)) ++pos;
            if (pos == pool.size()) throw std::logic_error("half-edge missing from pool");
            if (par(want.degree)) {
                int jumps = 0;
                for (std::size_t i = 0; i < pos; ++i)
                    if (par(pool[i].degree)) ++jumps;
                if (jumps & 1) vw.sign = -vw.sign;
            }
            pool.erase(pool.begin() + pos);
            vw.factors.push_back(letter_name(want));
        }
        out.global_sign *= vw.sign;
        out.words.push_back(std::move(vw));
    }
    return out;
}

int split_sign(const LabelledGraph& g, int v, std::uint32_t block_tail, int k_parity) {
    g.validate();
    if (!g.directed) throw std::invalid_argument("split_sign needs a directed graph");
    int deg_plus = par(k_parity + 1), deg_minus = par(k_parity);
    // half-edges at v in edge order, as in split_vertex
    std::vector<HalfEdgeLetter> half;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (g.edges[i].first == v) half.push_back({i, false, deg_minus});
        if (g.edges[i].second == v) half.push_back({i, true, deg_plus});
    }
    std::size_t d = half.size();
    if (d < 4) throw std::invalid_argument("vertex valence below 4");
    unsigned a = static_cast<unsigned>(__builtin_popcount(block_tail));
    if (a < 2 || d - a < 2) throw std::invalid_argument("inadmissible partition");

    const HalfEdgeLetter f_plus{-1, true, deg_plus};   // new edge, label below all others
    const HalfEdgeLetter f_minus{-1, false, deg_minus};

    auto normal_form = [&](const std::vector<HalfEdgeLetter>& letters) {
        std::vector<HalfEdgeLetter> w = letters;
        std::stable_sort(w.begin(), w.end(), [](const HalfEdgeLetter& x, const HalfEdgeLetter& y) {
            if (x.head != y.head) return x.head > y.head;  // incoming first
            return x.edge < y.edge;
        });
        return w;
    };

    std::vector<HalfEdgeLetter> at_v1{f_minus}, at_v2{f_plus};
    for (std::size_t k = 0; k < d; ++k)
        ((block_tail >> k) & 1u ? at_v1 : at_v2).push_back(half[k]);

    GradedWord lhs, rhs;
    auto push = [](GradedWord& w, const std::vector<HalfEdgeLetter>& ls) {
        for (const auto& l : ls) w.push_back({letter_name(l), l.degree});
    };
    push(lhs, normal_form(at_v1));
    push(lhs, normal_form(at_v2));
    push(rhs, {f_plus, f_minus});
    push(rhs, normal_form(half));
    return koszul_reorder_sign(rhs, lhs);
}

namespace {

// plain antisymmetric wedge words over coordinate atoms
using Frame = std::vector<int>;

int delete_front(Frame& w, int atom) {
    auto it = std::find(w.begin(), w.end(), atom);
    if (it == w.end()) throw std::logic_error("atom not in frame");
    int sign = ((it - w.begin()) % 2 == 0) ? +1 : -1;
    w.erase(it);
    return sign;
}

int frame_reorder_sign(const Frame& source, const Frame& target) {
    std::vector<int> perm;
    for (int a : target) {
        auto it = std::find(source.begin(), source.end(), a);
        perm.push_back(static_cast<int>(it - source.begin()));
    }
    int sign = +1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

Frame cat(const Frame& a, const Frame& b) {
    Frame r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace

std::array<int, 3> jacobi_signs(int p, int q, int r) {
    if (p < 2 || q < 2 || r < 2) throw std::invalid_argument("need p, q, r >= 2");
    Frame X(p), Y(q), Z(r);
    std::iota(X.begin(), X.end(), 0);
    std::iota(Y.begin(), Y.end(), p);
    std::iota(Z.begin(), Z.end(), p + q);
    const int x0 = X[0], y0 = Y[0], z0 = Z[0];
    const Frame o = cat(cat(X, Y), Z);

    auto term = [&](int outer_atom, int inner_atom, const Frame& inner_frame,
                    const Frame& appended_block, int append_atom) {
        // boundary of the full cell at the outer face, then at the inner one;
        // the null-isotopy disk is the complement, hence one extra reversal
        Frame disk = o;
        int s = delete_front(disk, outer_atom);
        s *= delete_front(disk, inner_atom);
        int disk_sign = -s;
        // the bracket cycle: boundary of (inner bracket cell) x (last disk)
        Frame inner = inner_frame;
        int cs = delete_front(inner, inner_atom);
        Frame cycle = cat(inner, appended_block);
        cs *= delete_front(cycle, append_atom);
        cs *= frame_reorder_sign(cycle, disk);
        return cs * disk_sign;
    };

    // [[a,b],c]: outer face in z, inner in x; bracket cell (X^Y) x Z
    int c1 = term(z0, x0, cat(X, Y), Z, z0);
    // [[b,c],a]: outer face in x, inner in y; bracket cell (Y^Z) x X
    int c2 = term(x0, y0, cat(Y, Z), X, x0);
    // [[c,a],b]: outer face in y, inner in x; bracket cell (Z^X) x Y
    int c3 = term(y0, x0, cat(Z, X), Y, y0);
    return {c1, c2, c3};
}

int BracketExpr::degree() const {
    if (is_leaf()) return leaf_degree;
    int d = 0;
    for (const auto& a : args) d += a.degree();
    return d - (static_cast<int>(args.size()) - 1);
}

std::string BracketExpr::to_string() const {
    if (is_leaf()) return name;
    std::string s = "[";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += ",";
        s += args[i].to_string();
    }
    return s + "]";
}

BracketExpr make_gen(std::string name, int degree) {
    BracketExpr e;
    e.name = std::move(name);
    e.leaf_degree = degree;
    return e;
}

BracketExpr make_bracket(std::vector<BracketExpr> args) {
    if (args.size() < 2) throw std::invalid_argument("bracket arity must be >= 2");
    BracketExpr e;
    e.args = std::move(args);
    return e;
}

namespace {

BracketExpr parse_expr(const std::string& s, std::size_t& pos,
                       const std::map<std::string, int>& degrees) {
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of bracket expression");
    if (s[pos] == '[') {
        ++pos;
        std::vector<BracketExpr> args;
        while (true) {
            args.push_back(parse_expr(s, pos, degrees));
            if (pos >= s.size()) throw std::invalid_argument("unterminated bracket");
            if (s[pos] == ',') {
                ++pos;
                continue;
            }
            if (s[pos] == ']') {
                ++pos;
                break;
            }
            throw std::invalid_argument("bad character in bracket expression");
        }
        return make_bracket(std::move(args));
    }
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != ']' && s[pos] != '[') ++pos;
    std::string name = s.substr(start, pos - start);
    if (name.empty()) throw std::invalid_argument("empty generator name");
    auto it = degrees.find(name);
    if (it == degrees.end()) throw std::invalid_argument("unknown generator: " + name);
    return make_gen(name, it->second);
}

}  // namespace

BracketExpr parse_bracket(const std::string& s, const std::map<std::string, int>& degrees) {
    std::size_t pos = 0;
    BracketExpr e = parse_expr(s, pos, degrees);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in bracket expression");
    return e;
}

std::pair<int, BracketExpr> graded_symmetry(const BracketExpr& e, const std::vector<int>& perm) {
    if (e.is_leaf()) throw std::invalid_argument("cannot permute a generator");
    if (perm.size() != e.args.size()) throw std::invalid_argument("permutation arity mismatch");
    GradedWord w;
    for (const auto& a : e.args) w.push_back({a.to_string(), a.degree()});
    int sign = koszul_sign(w, perm);
    BracketExpr out;
    for (int i : perm) out.args.push_back(e.args[i]);
    return {sign, out};
}

std::pair<int, BracketExpr> normalize_bracket(const BracketExpr& e) {
    if (e.is_leaf()) return {+1, e};
    int sign = +1;
    std::vector<BracketExpr> args;
    for (const auto& a : e.args) {
        auto [s, na] = normalize_bracket(a);
        sign *= s;
        args.push_back(std::move(na));
    }
    // insertion sort by printed form, Koszul sign per adjacent swap
    for (std::size_t i = 1; i < args.size(); ++i) {
        for (std::size_t j = i; j > 0 && args[j].to_string() < args[j - 1].to_string(); --j) {
            if (par(args[j].degree()) && par(args[j - 1].degree())) sign = -sign;
            std::swap(args[j], args[j - 1]);
        }
    }
    return {sign, make_bracket(std::move(args))};
}

std::vector<LinfTerm> linf_relation(int ell, int n_parity) {
    if (ell < 4) throw std::invalid_argument("need ell >= 4");
    int m = ell - 1;  // bracket arity
    if (m > 20) throw std::invalid_argument("arity too large");
    std::vector<BracketExpr> vars;
    for (int i = 0; i < m; ++i)
        vars.push_back(make_gen(std::string(1, static_cast<char>('a' + i)), par(n_parity)));
    std::vector<LinfTerm> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 2 || size > m - 1) continue;
        // Koszul sign of the unshuffle moving the S block to the front:
        // crossings = pairs (s in S, t not in S, t before s)
        int crossings = 0;
        int outside_before = 0;
        for (int i = 0; i < m; ++i) {
            if ((mask >> i) & 1u) crossings += outside_before;
            else ++outside_before;
        }
        int sign = (par(n_parity) && (crossings & 1)) ? -1 : +1;
        if ((size * (m - size)) & 1) sign = -sign;
        std::vector<BracketExpr> inner, outer_args;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1u) inner.push_back(vars[i]);
        outer_args.push_back(make_bracket(std::move(inner)));
        for (int i = 0; i < m; ++i)
            if (!((mask >> i) & 1u)) outer_args.push_back(vars[i]);
        out.push_back({sign, make_bracket(std::move(outer_args))});
    }
    std::sort(out.begin(), out.end(), [](const LinfTerm& x, const LinfTerm& y) {
        if (x.expr.args[0].args.size() != y.expr.args[0].args.size())
            return x.expr.args[0].args.size() < y.expr.args[0].args.size();
        return x.expr.to_string() < y.expr.to_string();
    });
    return out;
}

}  // namespace gcx
