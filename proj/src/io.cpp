#include "gcx/io.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gcx {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Document parse_document(const std::string& text) {
    Document doc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    enum { kNone, kGraph, kChain } mode = kNone;
    std::string cur_name;
    LabelledGraph cur_graph;
    std::vector<std::pair<Rat, std::string>> cur_terms;

    auto flush = [&]() {
        if (mode == kGraph) {
            cur_graph.validate();
            if (!doc.graphs.emplace(cur_name, cur_graph).second)
                throw std::invalid_argument("duplicate graph name: " + cur_name);
            doc.graph_order.push_back(cur_name);
        } else if (mode == kChain) {
            ChainVector c;
            for (const auto& [coeff, gname] : cur_terms) {
                auto it = doc.graphs.find(gname);
                if (it == doc.graphs.end())
                    throw std::invalid_argument("chain references unknown graph: " + gname);
                c.add(canonicalize(it->second), coeff);
            }
            if (!doc.chains.emplace(cur_name, std::move(c)).second)
                throw std::invalid_argument("duplicate chain name: " + cur_name);
            doc.chain_order.push_back(cur_name);
        }
        mode = kNone;
        cur_graph = {};
        cur_terms.clear();
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty()) {
            flush();
            continue;
        }
        if (toks[0] == "graph") {
            flush();
            if (toks.size() < 3 || toks[2].rfind("vertices=", 0) != 0)
                fail(lineno, "expected: graph <name> vertices=<k> [directed]");
            mode = kGraph;
            cur_name = toks[1];
            cur_graph = {};
            try {
                cur_graph.vertex_count = std::stoi(toks[2].substr(9));
            } catch (...) {
                fail(lineno, "bad vertex count");
            }
            cur_graph.directed = toks.size() > 3 && toks[3] == "directed";
        } else if (toks[0] == "chain") {
            flush();
            if (toks.size() != 2) fail(lineno, "expected: chain <name>");
            mode = kChain;
            cur_name = toks[1];
        } else if (toks[0] == "e") {
            if (mode != kGraph) fail(lineno, "edge line outside a graph block");
            if (toks.size() != 3) fail(lineno, "expected: e <u> <v>");
            int u = 0, v = 0;
            try {
                u = std::stoi(toks[1]);
                v = std::stoi(toks[2]);
            } catch (...) {
                fail(lineno, "bad edge endpoints");
            }
            if (u < 1 || v < 1 || u > cur_graph.vertex_count || v > cur_graph.vertex_count)
                fail(lineno, "edge endpoint out of range");
            cur_graph.edges.emplace_back(u - 1, v - 1);
        } else if (mode == kChain) {
            if (toks.size() != 2) fail(lineno, "expected: <num>/<den> <graph-name>");
            try {
                cur_terms.emplace_back(rat_from_string(toks[0]), toks[1]);
            } catch (...) {
                fail(lineno, "bad coefficient");
            }
        } else {
            fail(lineno, "unrecognized line: " + line);
        }
    }
    flush();
    return doc;
}

std::string write_graph(const LabelledGraph& g, const std::string& name) {
    std::string s = "graph " + name + " vertices=" + std::to_string(g.vertex_count);
    if (g.directed) s += " directed";
    s += "\n";
    for (const auto& [u, v] : g.edges)
        s += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return s;
}

std::string write_chain_block(const ChainVector& c, const std::string& name,
                              const std::map<std::string, std::pair<std::string, int>>& name_of_key) {
    std::string s = "chain " + name + "\n";
    for (const auto& [key, term] : c.terms) {
        const auto& [gname, sign] = name_of_key.at(key);
        s += rat_to_string(term.coeff * sign) + " " + gname + "\n";
    }
    return s;
}

std::string write_document(const Document& doc) {
    std::string out;
    std::map<std::string, std::pair<std::string, int>> name_of_key;
    for (const auto& name : doc.graph_order) {
        const LabelledGraph& g = doc.graphs.at(name);
        if (!out.empty()) out += "\n";
        out += write_graph(g, name);
        OrientedClass cls = canonicalize(g);
        if (cls.sign != 0) name_of_key.emplace(graph_key(cls.canonical), std::make_pair(name, cls.sign));
    }
    int fresh = 0;
    for (const auto& cname : doc.chain_order) {
        const ChainVector& c = doc.chains.at(cname);
        for (const auto& [key, term] : c.terms) {
            if (name_of_key.count(key)) continue;
            std::string gname = cname + "_g" + std::to_string(fresh++);
            if (!out.empty()) out += "\n";
            out += write_graph(term.graph, gname);
            name_of_key.emplace(key, std::make_pair(gname, +1));
        }
        if (!out.empty()) out += "\n";
        out += write_chain_block(c, cname, name_of_key);
    }
    return out;
}

namespace {

struct SplitNode {
    std::uint32_t mask = 0;  // 0 = root
    int split_index = -1;    // index into tree.splits
    std::vector<int> children;
};

// Nesting forest of the splits: parent = smallest strict superset.
std::vector<SplitNode> split_forest(const Tree& t) {
    std::vector<SplitNode> nodes(t.splits.size() + 1);
    std::uint32_t full = ((1u << (t.leaves - 1)) - 1);
    nodes[0].mask = full;  // root stands for the leaf-1 side
    std::vector<int> order(t.splits.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return __builtin_popcount(t.splits[a]) > __builtin_popcount(t.splits[b]);
    });
    for (std::size_t k = 0; k < order.size(); ++k) {
        int i = order[k];
        nodes[i + 1].mask = t.splits[i];
        nodes[i + 1].split_index = i;
        // smallest enclosing node among those already placed
        int parent = 0;
        std::uint32_t best = full;
        for (std::size_t j = 0; j < k; ++j) {
            int cand = order[j] + 1;
            std::uint32_t cm = nodes[cand].mask;
            if ((t.splits[i] & cm) == t.splits[i] && cm != t.splits[i] &&
                __builtin_popcount(cm) <= __builtin_popcount(best)) {
                best = cm;
                parent = cand;
            }
        }
        nodes[parent].children.push_back(i + 1);
    }
    return nodes;
}

}  // namespace

std::string write_tree(const Tree& t) {
    if (t.leaves < 3) throw std::invalid_argument("tree needs >= 3 leaves");
    auto nodes = split_forest(t);
    std::function<std::string(int)> render = [&](int idx) -> std::string {
        const SplitNode& node = nodes[idx];
        std::uint32_t own = node.mask;
        std::vector<std::pair<int, std::string>> items;  // (min leaf, text)
        for (int c : node.children) {
            own &= ~nodes[c].mask;
            std::string text = render(c);
            if (t.has_directions) {
                bool away = (t.dir_mask >> nodes[c].split_index) & 1u;
                text = (away ? ">" : "<") + text;
            }
            int min_leaf = std::countr_zero(nodes[c].mask) + 2;
            items.emplace_back(min_leaf, std::move(text));
        }
        for (int b = 0; b < t.leaves - 1; ++b)
            if ((own >> b) & 1u) items.emplace_back(b + 2, std::to_string(b + 2));
        std::sort(items.begin(), items.end());
        std::string s = idx == 0 ? "(1" : "(";
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (idx == 0 || i) s += ",";
            s += items[i].second;
        }
        return s + ")";
    };
    return render(0);
}

Tree parse_tree(const std::string& s) {
    Tree t;
    t.has_directions = s.find('>') != std::string::npos || s.find('<') != std::string::npos;
    std::vector<std::pair<std::uint32_t, bool>> found;  // (mask, away)
    std::size_t pos = 0;
    int max_leaf = 0;
    std::function<std::uint32_t(bool, bool)> parse_node = [&](bool root, bool away) -> std::uint32_t {
        if (pos >= s.size() || s[pos] != '(') throw std::invalid_argument("expected (");
        ++pos;
        std::uint32_t mask = 0;
        bool first = true;
        while (pos < s.size() && s[pos] != ')') {
            if (!first) {
                if (s[pos] != ',') throw std::invalid_argument("expected ,");
                ++pos;
            }
            first = false;
            bool child_away = true;
            if (s[pos] == '>' || s[pos] == '<') {
                child_away = s[pos] == '>';
                ++pos;
            }
            if (s[pos] == '(') {
                mask |= parse_node(false, child_away);
            } else {
                std::size_t start = pos;
                while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                int leaf = std::stoi(s.substr(start, pos - start));
                max_leaf = std::max(max_leaf, leaf);
                if (leaf >= 2) mask |= 1u << (leaf - 2);
            }
        }
        if (pos >= s.size()) throw std::invalid_argument("unterminated tree");
        ++pos;  // ')'
        if (!root) found.emplace_back(mask, away);
        return mask;
    };
    parse_node(true, true);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in tree");
    t.leaves = max_leaf;
    std::sort(found.begin(), found.end());
    for (const auto& [mask, away] : found) {
        if (!valid_split(t.leaves, mask)) throw std::invalid_argument("bad split in tree");
        if (away) t.dir_mask |= 1u << t.splits.size();
        t.splits.push_back(mask);
    }
    if (!t.has_directions) t.dir_mask = 0;
    return t;
}

std::string write_matrix(const SparseRationalMatrix& M) {
    std::string s = std::to_string(M.rows) + " " + std::to_string(M.cols) + "\n";
    for (const auto& [rc, q] : M.entries)
        s += std::to_string(rc.first) + " " + std::to_string(rc.second) + " " +
             rat_to_string(q) + "\n";
    return s;
}

SparseRationalMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    SparseRationalMatrix M;
    if (!(in >> M.rows >> M.cols)) throw std::invalid_argument("bad matrix header");
    int r = 0, c = 0;
    std::string q;
    while (in >> r >> c >> q) M.set(r, c, rat_from_string(q));
    return M;
}

}  // namespace gcx
