#include "gcx/trees.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "gcx/dimcalc.hpp"
#include "gcx/matrix.hpp"

namespace gcx {

bool Tree::operator<(const Tree& o) const {
    if (leaves != o.leaves) return leaves < o.leaves;
    if (splits != o.splits) return splits < o.splits;
    if (has_directions != o.has_directions) return has_directions < o.has_directions;
    if (dir_mask != o.dir_mask) return dir_mask < o.dir_mask;
    return incoming < o.incoming;
}

bool valid_split(int leaves, std::uint32_t s) {
    int side = std::popcount(s);
    return side >= 2 && (leaves - 1 - side) >= 1;  // leaf-1 side keeps leaf 1 plus >= 1 more
}

bool compatible_splits(std::uint32_t a, std::uint32_t b) {
    // both exclude leaf 1, so nesting or disjointness is enough
    std::uint32_t i = a & b;
    return i == 0 || i == a || i == b;
}

std::vector<std::uint32_t> all_splits(int leaves) {
    if (leaves < 4) return {};
    std::vector<std::uint32_t> out;
    std::uint32_t total = 1u << (leaves - 1);
    for (std::uint32_t s = 0; s < total; ++s)
        if (valid_split(leaves, s)) out.push_back(s);
    return out;
}

namespace {

void tree_dfs(int leaves, int want, const std::vector<std::uint32_t>& splits,
              std::size_t from, std::vector<std::uint32_t>& cur,
              std::vector<Tree>& out) {
    if (static_cast<int>(cur.size()) == want) {
        Tree t;
        t.leaves = leaves;
        t.splits = cur;
        out.push_back(std::move(t));
        return;
    }
    for (std::size_t i = from; i < splits.size(); ++i) {
        bool ok = true;
        for (std::uint32_t s : cur)
            if (!compatible_splits(s, splits[i])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.push_back(splits[i]);
        tree_dfs(leaves, want, splits, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Tree> enumerate_trees(int leaves, int excess) {
    if (leaves < 3) throw std::invalid_argument("need at least 3 leaves");
    if (excess < 0 || excess > leaves - 3) return {};
    int want = leaves - 3 - excess;
    auto splits = all_splits(leaves);
    std::vector<Tree> out;
    std::vector<std::uint32_t> cur;
    tree_dfs(leaves, want, splits, 0, cur, out);
    return out;
}

std::vector<std::pair<std::uint32_t, Tree>> contractions(const Tree& t) {
    std::vector<std::pair<std::uint32_t, Tree>> out;
    for (std::size_t i = 0; i < t.splits.size(); ++i) {
        Tree c = t;
        c.splits.erase(c.splits.begin() + i);
        if (c.has_directions) {
            std::uint32_t lo = c.dir_mask & ((1u << i) - 1);
            std::uint32_t hi = (c.dir_mask >> (i + 1)) << i;
            c.dir_mask = lo | hi;
        }
        out.emplace_back(t.splits[i], std::move(c));
    }
    return out;
}

std::vector<Tree> direction_extensions(const Tree& t, int p, int q) {
    if (p + q != t.leaves) throw std::invalid_argument("p + q must equal the leaf count");
    std::uint32_t total = 1u << t.splits.size();
    std::vector<Tree> out;
    out.reserve(total);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        Tree d = t;
        d.has_directions = true;
        d.dir_mask = mask;
        d.incoming = p;
        out.push_back(std::move(d));
    }
    return out;
}

SimplicialComplex lie_hedron(int leaves) {
    if (leaves < 4) throw std::invalid_argument("need at least 4 leaves");
    auto splits = all_splits(leaves);
    std::map<std::uint32_t, int> vertex_of;
    for (std::size_t i = 0; i < splits.size(); ++i)
        vertex_of[splits[i]] = static_cast<int>(i);
    SimplicialComplex K;
    K.vertices = static_cast<int>(splits.size());
    K.dimension = leaves - 4;
    // maximal cells come from 3-valent trees (maximal compatible split sets)
    for (const Tree& t : enumerate_trees(leaves, 0)) {
        std::vector<int> cell;
        for (std::uint32_t s : t.splits) cell.push_back(vertex_of.at(s));
        std::sort(cell.begin(), cell.end());
        K.maximal.push_back(std::move(cell));
    }
    std::sort(K.maximal.begin(), K.maximal.end());
    return K;
}

namespace {

// downward closure, faces grouped by dimension
std::vector<std::vector<std::vector<int>>> all_faces(const SimplicialComplex& K) {
    std::set<std::vector<int>> faces;
    std::function<void(const std::vector<int>&)> close = [&](const std::vector<int>& f) {
        if (f.empty() || faces.count(f)) return;
        faces.insert(f);
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::vector<int> sub = f;
            sub.erase(sub.begin() + i);
            close(sub);
        }
    };
    for (const auto& s : K.maximal) close(s);
    std::vector<std::vector<std::vector<int>>> by_dim(K.dimension + 1);
    for (const auto& f : faces) by_dim[f.size() - 1].push_back(f);
    return by_dim;
}

}  // namespace

std::vector<long> f_vector(const SimplicialComplex& K) {
    auto faces = all_faces(K);
    std::vector<long> f;
    for (const auto& level : faces) f.push_back(static_cast<long>(level.size()));
    return f;
}

std::vector<long> complex_homology(const SimplicialComplex& K) {
    auto faces = all_faces(K);
    int top = static_cast<int>(faces.size()) - 1;
    std::vector<std::map<std::vector<int>, int>> index(top + 1);
    for (int d = 0; d <= top; ++d)
        for (std::size_t i = 0; i < faces[d].size(); ++i)
            index[d][faces[d][i]] = static_cast<int>(i);
    // boundary_d : C_d -> C_{d-1}
    std::vector<int> ranks(top + 2, 0);
    for (int d = 1; d <= top; ++d) {
        SparseRationalMatrix B;
        B.rows = static_cast<int>(faces[d - 1].size());
        B.cols = static_cast<int>(faces[d].size());
        for (std::size_t j = 0; j < faces[d].size(); ++j) {
            const auto& f = faces[d][j];
            int sign = 1;
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::vector<int> sub = f;
                sub.erase(sub.begin() + i);
                B.set(index[d - 1].at(sub), static_cast<int>(j), sign);
                sign = -sign;
            }
        }
        ranks[d] = rank(B);
    }
    std::vector<long> betti(top + 1);
    for (int d = 0; d <= top; ++d)
        betti[d] = static_cast<long>(faces[d].size()) - ranks[d] - ranks[d + 1];
    return betti;
}

DecompositionPoset decomposition_poset(const ChainVector& cycle) {
    if (!cycle.directed) throw std::invalid_argument("decomposition needs a directed cycle");
    if (cycle.is_zero()) throw std::invalid_argument("decomposition of the zero chain");
    for (const auto& [k, t] : cycle.terms)
        if (denominator(t.coeff) != 1)
            throw std::invalid_argument("cycle coefficients must be integers");
    if (!differential(cycle).is_zero())
        throw std::invalid_argument("chain is not a cycle");

    MultiplicityLedger unit;
    auto vertex_multiplicities = [&](const LabelledGraph& g, Int& value, std::string& formula) {
        value = 1;
        std::map<int, int> count;
        for (int v = 0; v < g.vertex_count; ++v) ++count[g.valence(v)];
        formula.clear();
        for (const auto& [val, c] : count) {
            Int m = multiplicity(val, unit).value;
            for (int i = 0; i < c; ++i) value *= m;
            if (val == 3) continue;  // m_3 = 1
            if (!formula.empty()) formula += "*";
            formula += "m_" + std::to_string(val);
            if (c > 1) formula += "^" + std::to_string(c);
        }
        if (formula.empty()) formula = "1";
    };

    DecompositionPoset P;
    std::map<std::string, int> node_of;
    auto add_node = [&](const LabelledGraph& g, Int copies) {
        std::string key = graph_key(g);
        auto it = node_of.find(key);
        if (it != node_of.end()) return it->second;
        DecompositionPoset::Node n;
        n.graph = g;
        n.excess = g.excess_m();
        n.copies = copies;
        n.n_gamma = Int(1) << n.excess;
        vertex_multiplicities(g, n.m_gamma, n.m_symbolic);
        P.nodes.push_back(std::move(n));
        int idx = static_cast<int>(P.nodes.size()) - 1;
        node_of.emplace(key, idx);
        return idx;
    };

    std::vector<int> frontier;
    for (const auto& [k, t] : cycle.terms)
        frontier.push_back(add_node(t.graph, abs(numerator(t.coeff))));
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int parent : frontier) {
            LabelledGraph g = P.nodes[parent].graph;
            if (g.excess_m() == 0) continue;
            for (int v = 0; v < g.vertex_count; ++v) {
                if (g.valence(v) < 4) continue;
                for (const LabelledGraph& child_graph : split_terms(g, v)) {
                    bool fresh = !node_of.count(graph_key(child_graph));
                    int child = add_node(child_graph, 1);
                    P.covers.emplace_back(child, parent);
                    if (fresh) next.push_back(child);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(P.covers.begin(), P.covers.end());
    P.covers.erase(std::unique(P.covers.begin(), P.covers.end()), P.covers.end());
    P.mu_lcm = 1;
    for (const auto& n : P.nodes) P.mu_lcm = int_lcm(P.mu_lcm, n.m_gamma);
    return P;
}

}  // namespace gcx
