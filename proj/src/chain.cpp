#include "gcx/chain.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gcx/matrix.hpp"

namespace gcx {

void ChainVector::add(const OrientedClass& cls, const Rat& coeff) {
    if (cls.sign == 0 || coeff == 0) return;
    GradedDegrees gd = grading_of(cls.canonical);
    if (terms.empty()) {
        grading = gd;
        directed = cls.canonical.directed;
    } else if (!(gd == grading) || cls.canonical.directed != directed) {
        throw std::invalid_argument("mixed grading or directedness in chain");
    }
    std::string key = graph_key(cls.canonical);
    auto it = terms.find(key);
    Rat add = coeff * cls.sign;
    if (it == terms.end()) {
        terms.emplace(std::move(key), Term{cls.canonical, add});
    } else {
        it->second.coeff += add;
        if (it->second.coeff == 0) terms.erase(it);
    }
}

void ChainVector::add_chain(const ChainVector& other, const Rat& scale) {
    for (const auto& [k, t] : other.terms) add({t.graph, +1}, t.coeff * scale);
}

ChainVector make_chain(const LabelledGraph& g, const Rat& coeff) {
    ChainVector c;
    c.add(canonicalize(g), coeff);
    return c;
}

namespace {

// Half-edges at v as (edge index, endpoint slot); loops contribute two.
std::vector<std::pair<int, int>> half_edges_at(const LabelledGraph& g, int v) {
    std::vector<std::pair<int, int>> h;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (g.edges[i].first == v) h.emplace_back(i, 0);
        if (g.edges[i].second == v) h.emplace_back(i, 1);
    }
    return h;
}

// Replace v by two vertices joined by a fresh edge labelled 1; half-edges in
// block A stay on v, the rest move to a new last vertex.
LabelledGraph split_graph(const LabelledGraph& g, int v,
                          const std::vector<std::pair<int, int>>& half,
                          std::uint32_t mask_a, bool new_edge_from_a) {
    LabelledGraph h;
    h.vertex_count = g.vertex_count + 1;
    h.directed = g.directed;
    int va = v, vb = g.vertex_count;
    h.edges.reserve(g.edge_count() + 1);
    h.edges.emplace_back(new_edge_from_a ? va : vb, new_edge_from_a ? vb : va);
    std::vector<std::pair<int, int>> moved = g.edges;
    for (std::size_t k = 0; k < half.size(); ++k) {
        if ((mask_a >> k) & 1u) continue;  // stays on va == v
        auto [ei, slot] = half[k];
        if (slot == 0) moved[ei].first = vb;
        else moved[ei].second = vb;
    }
    for (const auto& e : moved) h.edges.push_back(e);
    return h;
}

}  // namespace

ChainVector split_vertex(const LabelledGraph& g, int v) {
    g.validate();
    if (v < 0 || v >= g.vertex_count) throw std::invalid_argument("bad vertex index");
    ChainVector out;
    auto half = half_edges_at(g, v);
    std::size_t d = half.size();
    if (d < 4) return out;  // no admissible partition
    std::uint32_t total = 1u << d;
    // subsets containing half-edge 0 enumerate unordered partitions once
    for (std::uint32_t mask = 1; mask < total; mask += 2) {
        unsigned a = static_cast<unsigned>(__builtin_popcount(mask));
        if (a < 2 || d - a < 2) continue;
        if (g.directed) {
            out.add(canonicalize(split_graph(g, v, half, mask, true)), 1);
            out.add(canonicalize(split_graph(g, v, half, mask, false)), 1);
        } else {
            out.add(canonicalize(split_graph(g, v, half, mask, true)), 1);
        }
    }
    return out;
}

std::vector<LabelledGraph> split_terms(const LabelledGraph& g, int v) {
    g.validate();
    std::map<std::string, LabelledGraph> found;
    auto half = half_edges_at(g, v);
    std::size_t d = half.size();
    if (d < 4) return {};
    std::uint32_t total = 1u << d;
    for (std::uint32_t mask = 1; mask < total; mask += 2) {
        unsigned a = static_cast<unsigned>(__builtin_popcount(mask));
        if (a < 2 || d - a < 2) continue;
        for (bool from_a : {true, false}) {
            if (!from_a && !g.directed) continue;
            LabelledGraph h = canonicalize(split_graph(g, v, half, mask, from_a)).canonical;
            found.emplace(graph_key(h), std::move(h));
        }
    }
    std::vector<LabelledGraph> out;
    out.reserve(found.size());
    for (auto& [k, h] : found) out.push_back(std::move(h));
    return out;
}

ChainVector differential(const ChainVector& c) {
    ChainVector out;
    for (const auto& [key, term] : c.terms) {
        for (int v = 0; v < term.graph.vertex_count; ++v) {
            ChainVector piece = split_vertex(term.graph, v);
            out.add_chain(piece, c.directed ? term.coeff / 2 : term.coeff);
        }
    }
    return out;
}

ChainVector eta(const ChainVector& c) {
    if (c.directed) throw std::invalid_argument("eta takes an undirected chain");
    ChainVector out;
    for (const auto& [key, term] : c.terms) {
        const LabelledGraph& g = term.graph;
        int E = g.edge_count();
        Rat w = term.coeff / Rat(Int(1) << E);
        std::uint32_t total = 1u << E;
        for (std::uint32_t mask = 0; mask < total; ++mask) {
            LabelledGraph d;
            d.vertex_count = g.vertex_count;
            d.directed = true;
            d.edges.reserve(E);
            for (int i = 0; i < E; ++i) {
                auto [u, v] = g.normalized_edge(i);
                if ((mask >> i) & 1u) std::swap(u, v);
                d.edges.emplace_back(u, v);
            }
            out.add(canonicalize(d), w);
        }
    }
    return out;
}

ChainVector forget_directions(const ChainVector& c) {
    if (!c.directed) throw std::invalid_argument("chain is already undirected");
    ChainVector out;
    for (const auto& [key, term] : c.terms)
        out.add(canonicalize(term.graph.underlying()), term.coeff);
    return out;
}

namespace {

// Multigraph enumeration by non-increasing degree sequence: one loop at most
// per vertex and, between distinct vertices, multiplicity <= 1 (undirected)
// or <= 2 with opposite directions (directed) - anything more has a repeated
// edge and vanishes.
struct BasisEnum {
    int V, E;
    bool directed;
    std::vector<int> deg;               // target valences
    std::vector<int> rem;
    std::vector<char> loop;             // loop at v?
    std::vector<std::tuple<int, int, int>> mult;  // (u,v,count) for u<v
    std::map<std::string, OrientedClass> found;

    void emit() {
        LabelledGraph g;
        g.vertex_count = V;
        g.directed = false;
        for (int v = 0; v < V; ++v)
            if (loop[v]) g.edges.emplace_back(v, v);
        for (const auto& [u, v, m] : mult)
            for (int k = 0; k < m; ++k) g.edges.emplace_back(u, v);
        if (static_cast<int>(g.edges.size()) != E) return;
        if (!g.is_connected()) return;
        if (!directed) {
            OrientedClass cls = canonicalize(g);
            if (cls.sign != 0) found.emplace(graph_key(cls.canonical), OrientedClass{cls.canonical, +1});
            return;
        }
        // assign directions: multiplicity-2 pairs are forced antiparallel
        std::vector<int> free_edges;  // indices into g.edges of direction-free simple edges
        LabelledGraph base;
        base.vertex_count = V;
        base.directed = true;
        for (int v = 0; v < V; ++v)
            if (loop[v]) base.edges.emplace_back(v, v);
        for (const auto& [u, v, m] : mult) {
            if (m == 2) {
                base.edges.emplace_back(u, v);
                base.edges.emplace_back(v, u);
            } else {
                free_edges.push_back(static_cast<int>(base.edges.size()));
                base.edges.emplace_back(u, v);
            }
        }
        if (static_cast<int>(base.edges.size()) != E) return;
        std::uint32_t total = 1u << free_edges.size();
        for (std::uint32_t mask = 0; mask < total; ++mask) {
            LabelledGraph d = base;
            for (std::size_t k = 0; k < free_edges.size(); ++k)
                if ((mask >> k) & 1u) std::swap(d.edges[free_edges[k]].first, d.edges[free_edges[k]].second);
            OrientedClass cls = canonicalize(d);
            if (cls.sign != 0) found.emplace(graph_key(cls.canonical), OrientedClass{cls.canonical, +1});
        }
    }

    void place_pairs(std::size_t pair_idx, const std::vector<std::pair<int, int>>& pairs) {
        if (pair_idx == pairs.size()) {
            for (int v = 0; v < V; ++v)
                if (rem[v] != 0) return;
            emit();
            return;
        }
        auto [u, v] = pairs[pair_idx];
        // all pairs involving u come before moving past u
        int cap = std::min({rem[u], rem[v], directed ? 2 : 1});
        for (int m = 0; m <= cap; ++m) {
            rem[u] -= m;
            rem[v] -= m;
            bool feasible = true;
            if (v == V - 1 && rem[u] != 0) feasible = false;  // u finished
            if (feasible) {
                if (m > 0) mult.emplace_back(u, v, m);
                place_pairs(pair_idx + 1, pairs);
                if (m > 0) mult.pop_back();
            }
            rem[u] += m;
            rem[v] += m;
        }
    }

    void run_degree_sequence() {
        // loops: 0/1 per vertex, each consuming 2 of the vertex degree
        std::function<void(int, int)> loops_dfs = [&](int v, int nloops) {
            if (v == V) {
                int sum = 0;
                for (int x : rem) sum += x;
                if (sum != 2 * (E - nloops)) return;
                std::vector<std::pair<int, int>> pairs;
                for (int a = 0; a < V; ++a)
                    for (int b = a + 1; b < V; ++b) pairs.emplace_back(a, b);
                place_pairs(0, pairs);
                return;
            }
            loop[v] = 0;
            loops_dfs(v + 1, nloops);
            if (rem[v] >= 2) {
                loop[v] = 1;
                rem[v] -= 2;
                loops_dfs(v + 1, nloops + 1);
                rem[v] += 2;
                loop[v] = 0;
            }
        };
        loops_dfs(0, 0);
    }
};

void degree_sequences(int V, int total, int min_deg, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == V) {
        if (total == 0) out.push_back(cur);
        return;
    }
    int hi = cur.empty() ? total : cur.back();
    int slots = V - static_cast<int>(cur.size());
    for (int d = std::min(hi, total - min_deg * (slots - 1)); d >= min_deg; --d) {
        cur.push_back(d);
        degree_sequences(V, total - d, min_deg, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<OrientedClass> basis(int n, int m, bool directed) {
    std::vector<OrientedClass> out;
    if (n < 1 || m < 0 || m > 2 * n - 1) return out;
    int V = 2 * n - m, E = 3 * n - m;
    if (V <= 0 || E < 0) return out;
    if (E > 20) throw std::invalid_argument("grading too large to enumerate");
    std::vector<std::vector<int>> seqs;
    std::vector<int> cur;
    degree_sequences(V, 2 * E, 3, cur, seqs);
    std::map<std::string, OrientedClass> found;
    for (const auto& seq : seqs) {
        BasisEnum be;
        be.V = V;
        be.E = E;
        be.directed = directed;
        be.deg = seq;
        be.rem = seq;
        be.loop.assign(V, 0);
        be.run_degree_sequence();
        for (auto& [k, v] : be.found) found.emplace(k, std::move(v));
    }
    out.reserve(found.size());
    for (auto& [k, v] : found) out.push_back(std::move(v));
    return out;
}

std::vector<ChainVector> cycle_search(int n, int m, const OrientedClass& seed) {
    std::vector<OrientedClass> B = basis(n, m, seed.canonical.directed);
    std::string seed_key = graph_key(seed.canonical);
    int seed_idx = -1;
    for (std::size_t i = 0; i < B.size(); ++i)
        if (graph_key(B[i].canonical) == seed_key) seed_idx = static_cast<int>(i);
    if (seed_idx < 0) throw std::invalid_argument("seed is not a basis class");

    SparseRationalMatrix M = boundary_matrix(n, m, seed.canonical.directed);
    std::vector<std::vector<Rat>> K = kernel_basis(M);

    // reduce so that exactly one kernel vector meets the seed coordinate
    std::vector<std::vector<Rat>> with, without;
    for (auto& vec : K) {
        if (vec[seed_idx] != 0) with.push_back(std::move(vec));
        else without.push_back(std::move(vec));
    }
    if (with.empty()) return {};
    std::vector<Rat> lead = with[0];
    Rat pivot = lead[seed_idx];
    for (auto& x : lead) x /= pivot;
    for (std::size_t i = 1; i < with.size(); ++i) {
        Rat f = with[i][seed_idx];
        for (std::size_t j = 0; j < with[i].size(); ++j) with[i][j] -= f * lead[j];
        without.push_back(std::move(with[i]));
    }

    auto to_chain = [&](const std::vector<Rat>& vec) {
        ChainVector c;
        for (std::size_t j = 0; j < B.size(); ++j)
            if (vec[j] != 0) c.add(B[j], vec[j]);
        return c;
    };
    std::vector<ChainVector> out;
    out.push_back(to_chain(lead));
    for (const auto& vec : without)
        if (std::any_of(vec.begin(), vec.end(), [](const Rat& q) { return q != 0; }))
            out.push_back(to_chain(vec));
    return out;
}

LabelledGraph wheel_graph(int spokes) {
    LabelledGraph g;
    g.vertex_count = spokes + 1;
    int hub = spokes;
    for (int i = 0; i < spokes; ++i) g.edges.emplace_back(i, hub);
    for (int i = 0; i < spokes; ++i) g.edges.emplace_back(i, (i + 1) % spokes);
    return g;
}

GammaCycle derive_gamma() {
    OrientedClass x = canonicalize(wheel_graph(5));
    std::vector<ChainVector> cycles = cycle_search(4, 2, x);
    if (cycles.empty()) throw std::runtime_error("no cycle through the wheel class");
    // the reduced seed cycle is X + sum of partners; the construction expects
    // exactly one partner at coefficient ratio (-5/2 relative to X)
    ChainVector lead = cycles.front();
    std::string xkey = graph_key(x.canonical);
    if (lead.terms.size() != 2)
        throw std::runtime_error("seed cycle at (4,2) is not two-termed");
    GammaCycle out;
    out.x = x.canonical;
    for (const auto& [k, t] : lead.terms)
        if (k != xkey) out.y = t.graph;
    // scale so the X coefficient is 1/5
    ChainVector gamma;
    for (const auto& [k, t] : lead.terms) gamma.add({t.graph, +1}, t.coeff / 5);
    out.gamma = std::move(gamma);
    return out;
}

}  // namespace gcx
