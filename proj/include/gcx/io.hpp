#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcx/chain.hpp"
#include "gcx/graph.hpp"
#include "gcx/matrix.hpp"
#include "gcx/trees.hpp"

namespace gcx {

// Graph block:
//   graph <name> vertices=<k> [directed]
//   e <u> <v>                (one line per edge, label order, 1-based)
// Chain block:
//   chain <name>
//   <num>/<den> <graph-name>
// Blocks are separated by blank lines. Round-trips are byte-exact.
struct Document {
    std::vector<std::string> graph_order, chain_order;
    std::map<std::string, LabelledGraph> graphs;
    std::map<std::string, ChainVector> chains;
};

Document parse_document(const std::string& text);
std::string write_graph(const LabelledGraph& g, const std::string& name);
// Coefficients are emitted relative to the named graph's own labelling, so a
// reference graph carrying the opposite orientation flips the printed sign.
std::string write_chain_block(const ChainVector& c, const std::string& name,
                              const std::map<std::string, std::pair<std::string, int>>& name_of_key);
// Graphs referenced by the chain are emitted first, named <name>_g<i> unless
// already present under a known name.
std::string write_document(const Document& doc);

// Newick-style tree text: leaf 1 is printed first inside the root vertex,
// children ordered by smallest leaf; in directed trees each internal-edge
// subtree is prefixed by '>' (away from leaf 1) or '<'.
std::string write_tree(const Tree& t);
Tree parse_tree(const std::string& s);

// coordinate text: "rows cols" then "r c num/den" per entry
std::string write_matrix(const SparseRationalMatrix& M);
SparseRationalMatrix parse_matrix(const std::string& text);

}  // namespace gcx
