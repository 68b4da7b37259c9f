#include "gcx/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gcx {

namespace {

using Edge = std::pair<int, int>;

Edge normalize_pair(int u, int v, bool directed) {
    if (directed) return {u, v};
    return {std::min(u, v), std::max(u, v)};
}

}  // namespace

int LabelledGraph::valence(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

bool LabelledGraph::is_connected() const {
    if (vertex_count <= 0) return false;
    std::vector<char> seen(vertex_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : edges) {
            int w = -1;
            if (a == v) w = b;
            else if (b == v) w = a;
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (char c : seen)
        if (!c) return false;
    return true;
}

void LabelledGraph::validate() const {
    if (vertex_count <= 0) throw std::invalid_argument("graph has no vertices");
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
    }
    if (!is_connected()) throw std::invalid_argument("graph is not connected");
    for (int v = 0; v < vertex_count; ++v) {
        if (valence(v) < 3)
            throw std::invalid_argument("vertex of valence < 3");
    }
}

std::pair<int, int> LabelledGraph::normalized_edge(std::size_t i) const {
    const auto& [u, v] = edges[i];
    return normalize_pair(u, v, directed);
}

LabelledGraph LabelledGraph::underlying() const {
    LabelledGraph g = *this;
    g.directed = false;
    for (auto& [u, v] : g.edges)
        if (u > v) std::swap(u, v);
    return g;
}

bool LabelledGraph::operator<(const LabelledGraph& o) const {
    if (directed != o.directed) return directed < o.directed;
    if (vertex_count != o.vertex_count) return vertex_count < o.vertex_count;
    return edges < o.edges;
}

int permutation_parity(const std::vector<int>& p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

GradedDegrees grading_of(const LabelledGraph& g) {
    return {g.degree_n(), g.excess_m()};
}

namespace {

// Lex-min search over vertex relabellings. pi[old] = new label. At depth d
// labels 0..d-1 are placed; edges with both endpoints placed are kept sorted
// and compared against the best list, padding each unplaced edge with the
// smallest pair it could still take: (placed endpoint, d) when one endpoint
// is placed, (d, d) otherwise.
struct CanonSearch {
    const LabelledGraph& g;
    int V, E;
    bool directed;
    std::vector<int> pi, inv;          // old->new, new->old (-1 = unset)
    std::vector<Edge> known;           // sorted image edges, both ends placed
    std::vector<Edge> best;
    bool have_best = false;
    bool dup = false;                  // repeated edge in the canonical list
    bool seen_even = false, seen_odd = false;
    std::vector<Edge> pads;            // scratch

    explicit CanonSearch(const LabelledGraph& graph)
        : g(graph),
          V(graph.vertex_count),
          E(graph.edge_count()),
          directed(graph.directed),
          pi(V, -1),
          inv(V, -1) {}

    // -1: candidate prefix is strictly better somewhere before any worse
    //     position (branch must be explored, may still win or lose later)
    //  0: identical so far
    // +1: strictly worse, prune
    int compare_prefix(int depth) {
        if (!have_best) return -1;
        pads.clear();
        for (int i = 0; i < E; ++i) {
            const auto& [u, v] = g.edges[i];
            bool pu = pi[u] >= 0, pv = pi[v] >= 0;
            if (pu && pv) continue;
            if (pu || pv) {
                int a = pu ? pi[u] : pi[v];
                if (directed && !pu) pads.emplace_back(depth, a);  // head placed
                else pads.emplace_back(std::min(a, depth), std::max(a, depth));
            } else {
                pads.emplace_back(depth, depth);
            }
        }
        std::sort(pads.begin(), pads.end());
        std::size_t ka = 0, kp = 0;
        for (std::size_t pos = 0; pos < best.size(); ++pos) {
            Edge cand;
            bool take_known = ka < known.size() &&
                              (kp >= pads.size() || known[ka] <= pads[kp]);
            cand = take_known ? known[ka++] : pads[kp++];
            if (cand < best[pos]) return -1;
            if (best[pos] < cand) return +1;
        }
        return 0;
    }

    void record_completion() {
        // known is the full sorted image edge list here
        if (!have_best || known < best) {
            best = known;
            have_best = true;
            dup = false;
            seen_even = seen_odd = false;
        } else if (best < known) {
            return;
        }
        // parity of the label permutation induced by pi
        for (std::size_t i = 0; i + 1 < best.size(); ++i)
            if (best[i] == best[i + 1]) {
                dup = true;
                return;
            }
        std::map<Edge, int> pos;
        for (std::size_t i = 0; i < best.size(); ++i) pos[best[i]] = static_cast<int>(i);
        std::vector<int> perm(E);
        for (int i = 0; i < E; ++i) {
            const auto& [u, v] = g.edges[i];
            perm[i] = pos.at(normalize_pair(pi[u], pi[v], directed));
        }
        if (permutation_parity(perm) > 0) seen_even = true;
        else seen_odd = true;
    }

    // Edges gained by giving label `depth` to `old`, sorted.
    std::vector<Edge> gained(int old, int depth) {
        std::vector<Edge> add;
        pi[old] = depth;
        for (int i = 0; i < E; ++i) {
            const auto& [u, v] = g.edges[i];
            if ((u == old || v == old) && pi[u] >= 0 && pi[v] >= 0)
                add.push_back(normalize_pair(pi[u], pi[v], directed));
        }
        pi[old] = -1;
        std::sort(add.begin(), add.end());
        return add;
    }

    void dfs(int depth) {
        if (depth == V) {
            record_completion();
            return;
        }
        // explore all candidates, but greedily ordered so a near-optimal
        // completion is found early and the prefix bound prunes hard
        std::vector<std::pair<std::vector<Edge>, int>> cands;
        for (int old = 0; old < V; ++old)
            if (pi[old] < 0) cands.emplace_back(gained(old, depth), old);
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            const auto& x = a.first;
            const auto& y = b.first;
            for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
                if (x[i] != y[i]) return x[i] < y[i];
            }
            if (x.size() != y.size()) return x.size() > y.size();
            return a.second < b.second;
        });
        for (const auto& [added, old] : cands) {
            pi[old] = depth;
            inv[depth] = old;
            std::vector<Edge> saved = known;
            for (const Edge& e : added)
                known.insert(std::lower_bound(known.begin(), known.end(), e), e);
            if (compare_prefix(depth + 1) <= 0) dfs(depth + 1);
            known = std::move(saved);
            pi[old] = -1;
            inv[depth] = -1;
        }
    }
};

}  // namespace

OrientedClass canonicalize(const LabelledGraph& g) {
    g.validate();
    CanonSearch s(g);
    s.dfs(0);
    LabelledGraph canon;
    canon.vertex_count = g.vertex_count;
    canon.directed = g.directed;
    canon.edges = s.best;
    int sign = 0;
    if (!s.dup && !(s.seen_even && s.seen_odd)) sign = s.seen_even ? +1 : -1;
    return {std::move(canon), sign};
}

namespace {

// multiplicity map keyed on normalized pairs
std::map<Edge, int> edge_multiset(const LabelledGraph& g) {
    std::map<Edge, int> m;
    for (std::size_t i = 0; i < g.edges.size(); ++i) ++m[g.normalized_edge(i)];
    return m;
}

void aut_dfs(const LabelledGraph& g, const std::map<Edge, int>& mult,
             std::vector<int>& pi, int depth,
             std::vector<std::vector<int>>& out) {
    int V = g.vertex_count;
    if (depth == V) {
        out.push_back(pi);
        return;
    }
    for (int w = 0; w < V; ++w) {
        if (std::find(pi.begin(), pi.begin() + depth, w) != pi.begin() + depth)
            continue;
        pi[depth] = w;
        bool ok = true;
        for (int u = 0; u <= depth && ok; ++u) {
            Edge a = normalize_pair(u, depth, g.directed);
            Edge b = normalize_pair(pi[u], w, g.directed);
            auto ia = mult.find(a), ib = mult.find(b);
            int ma = ia == mult.end() ? 0 : ia->second;
            int mb = ib == mult.end() ? 0 : ib->second;
            if (ma != mb) ok = false;
            if (g.directed && ok && u < depth) {
                Edge a2{depth, u}, b2{w, pi[u]};
                ia = mult.find(a2);
                ib = mult.find(b2);
                ma = ia == mult.end() ? 0 : ia->second;
                mb = ib == mult.end() ? 0 : ib->second;
                if (ma != mb) ok = false;
            }
        }
        if (ok) aut_dfs(g, mult, pi, depth + 1, out);
    }
    pi[depth] = -1;
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const LabelledGraph& g) {
    auto mult = edge_multiset(g);
    std::vector<int> pi(g.vertex_count, -1);
    std::vector<std::vector<int>> out;
    aut_dfs(g, mult, pi, 0, out);
    return out;
}

long automorphism_order(const LabelledGraph& g) {
    g.validate();
    return static_cast<long>(automorphisms(g).size());
}

std::vector<DirectionOrbit> direction_orbits(const LabelledGraph& g) {
    g.validate();
    if (g.directed) throw std::invalid_argument("direction_orbits needs an undirected graph");
    int E = g.edge_count();
    if (E > 20) throw std::invalid_argument("too many edges for direction-orbit enumeration");
    auto auts = automorphisms(g);

    // For each automorphism, the induced edge bijection (stable matching of
    // equal pairs) and whether it reverses each edge's normalized orientation.
    struct EdgeAction {
        std::vector<int> to;
        std::vector<char> flip;
    };
    std::vector<EdgeAction> actions;
    for (const auto& pi : auts) {
        std::map<Edge, std::vector<int>> slots;
        for (int i = 0; i < E; ++i) slots[g.normalized_edge(i)].push_back(i);
        EdgeAction act;
        act.to.resize(E);
        act.flip.resize(E);
        for (int i = 0; i < E; ++i) {
            const auto& [u, v] = g.edges[i];
            int a = pi[std::min(u, v)], b = pi[std::max(u, v)];
            Edge img{std::min(a, b), std::max(a, b)};
            auto& s = slots[img];
            act.to[i] = s.front();
            s.erase(s.begin());
            act.flip[i] = (a > b) ? 1 : 0;
            if (u == v) act.flip[i] = 0;
        }
        actions.push_back(std::move(act));
    }

    std::uint32_t total = 1u << E;
    std::vector<char> visited(total, 0);
    std::vector<DirectionOrbit> orbits;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (visited[mask]) continue;
        // closure under the automorphism actions
        std::vector<std::uint32_t> stack{mask};
        std::set<std::uint32_t> orbit;
        orbit.insert(mask);
        visited[mask] = 1;
        while (!stack.empty()) {
            std::uint32_t m = stack.back();
            stack.pop_back();
            for (const auto& act : actions) {
                std::uint32_t img = 0;
                for (int i = 0; i < E; ++i) {
                    std::uint32_t bit = (m >> i) & 1u;
                    if (act.flip[i]) bit ^= 1u;
                    img |= bit << act.to[i];
                }
                if (!orbit.count(img)) {
                    orbit.insert(img);
                    visited[img] = 1;
                    stack.push_back(img);
                }
            }
        }
        std::uint32_t rep = *orbit.begin();
        LabelledGraph d;
        d.vertex_count = g.vertex_count;
        d.directed = true;
        for (int i = 0; i < E; ++i) {
            auto [u, v] = g.normalized_edge(i);
            if ((rep >> i) & 1u) std::swap(u, v);
            d.edges.emplace_back(u, v);
        }
        orbits.push_back({std::move(d), orbit.size()});
    }
    return orbits;
}

std::string graph_key(const LabelledGraph& g) {
    std::string k = g.directed ? "D" : "U";
    k += std::to_string(g.vertex_count);
    for (const auto& [u, v] : g.edges) {
        k += ':';
        k += std::to_string(u);
        k += ',';
        k += std::to_string(v);
    }
    return k;
}

}  // namespace gcx
