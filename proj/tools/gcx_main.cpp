#include <fstream>
#include <iostream>
#include <map>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcx/chain.hpp"
#include "gcx/dimcalc.hpp"
#include "gcx/io.hpp"
#include "gcx/matrix.hpp"
#include "gcx/signs.hpp"
#include "gcx/trees.hpp"

namespace {

constexpr const char* kSchema = "schema=1";

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

gcx::LabelledGraph named_graph(const gcx::Document& doc, const std::string& name) {
    auto it = doc.graphs.find(name);
    if (it == doc.graphs.end()) throw std::runtime_error("no graph named " + name);
    return it->second;
}

gcx::ChainVector named_chain(const gcx::Document& doc, const std::string& name) {
    auto it = doc.chains.find(name);
    if (it == doc.chains.end()) throw std::runtime_error("no chain named " + name);
    return it->second;
}

void print_chain(const gcx::ChainVector& c, const std::string& name, bool records) {
    if (records) {
        for (const auto& [key, term] : c.terms)
            std::cout << kSchema << " kind=chain-term chain=" << name
                      << " coeff=" << gcx::rat_to_string(term.coeff) << " graph=" << key << "\n";
        if (c.terms.empty()) std::cout << kSchema << " kind=chain-zero chain=" << name << "\n";
        return;
    }
    gcx::Document doc;
    doc.chains.emplace(name, c);
    doc.chain_order.push_back(name);
    std::cout << gcx::write_document(doc);
}

struct PendingOutput {
    bool records = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for graph complexes, tree posets and graded signs"};
    app.require_subcommand(1);
    bool records = false;
    app.add_flag("--records", records, "emit line-delimited structured records");

    // ---- gc ----------------------------------------------------------
    auto* gc = app.add_subcommand("gc", "graph complex operations");
    gc->require_subcommand(1);

    int n = 0, m = 0, mu = -1;
    bool directed = false;
    std::string input, chain_name = "gamma", graph_name, cochain_name;
    std::string scale = "1";

    auto* gc_basis = gc->add_subcommand("basis", "enumerate the (n,m) basis classes");
    gc_basis->add_option("--n", n)->required();
    gc_basis->add_option("--m", m)->required();
    gc_basis->add_flag("--directed", directed);
    gc_basis->callback([&] {
        auto B = gcx::basis(n, m, directed);
        if (records) {
            for (std::size_t i = 0; i < B.size(); ++i)
                std::cout << kSchema << " kind=basis-class n=" << n << " m=" << m
                          << " index=" << i << " graph=" << gcx::graph_key(B[i].canonical) << "\n";
        } else {
            std::cout << "basis n=" << n << " m=" << m << (directed ? " directed" : "")
                      << " count=" << B.size() << "\n";
            for (std::size_t i = 0; i < B.size(); ++i) {
                std::cout << "\n" << gcx::write_graph(B[i].canonical, "b" + std::to_string(i));
            }
        }
    });

    auto* gc_diff = gc->add_subcommand("diff", "differential of a chain");
    gc_diff->add_option("--input", input)->required();
    gc_diff->add_option("--chain", chain_name);
    gc_diff->callback([&] {
        auto doc = gcx::parse_document(slurp(input));
        gcx::ChainVector d = gcx::differential(named_chain(doc, chain_name));
        print_chain(d, "d_" + chain_name, records);
    });

    auto* gc_hom = gc->add_subcommand("homology", "homology dimension at (n,m)");
    gc_hom->add_option("--n", n)->required();
    gc_hom->add_option("--m", m)->required();
    gc_hom->add_option("--mu", mu, "excess truncation (default 2n-1)");
    gc_hom->add_flag("--directed", directed);
    gc_hom->callback([&] {
        int cutoff = mu < 0 ? 2 * n - 1 : mu;
        long h = gcx::homology_dim(n, m, cutoff, directed);
        if (records)
            std::cout << kSchema << " kind=homology n=" << n << " m=" << m << " mu=" << cutoff
                      << " directed=" << directed << " dim=" << h << "\n";
        else
            std::cout << "H_(" << n << "," << m << ") truncated at " << cutoff << ": " << h << "\n";
    });

    auto* gc_verify = gc->add_subcommand("verify-cycle", "check d(chain)=0 and pair against a cochain");
    gc_verify->add_option("--input", input)->required();
    gc_verify->add_option("--chain", chain_name);
    gc_verify->add_option("--pair-with", cochain_name, "graph name to pair against (via eta of 2^|E| times the chain)");
    gc_verify->callback([&] {
        auto doc = gcx::parse_document(slurp(input));
        gcx::ChainVector c = named_chain(doc, chain_name);
        bool cycle = gcx::differential(c).is_zero();
        std::string pair_str;
        if (!cochain_name.empty()) {
            gcx::OrientedClass x = gcx::canonicalize(named_graph(doc, cochain_name));
            int E = x.canonical.edge_count();
            gcx::ChainVector scaled = c;
            gcx::Rat f = gcx::Rat(gcx::Int(1) << E);
            for (auto& [k, t] : scaled.terms) t.coeff *= f;
            gcx::Rat val = gcx::pairing(x, gcx::eta(scaled));
            pair_str = gcx::rat_display(val);
            if (records)
                std::cout << kSchema << " kind=verify-cycle chain=" << chain_name
                          << " cycle=" << (cycle ? "yes" : "no") << " pair_with=" << cochain_name
                          << " pairing=" << pair_str << "\n";
            else
                std::cout << "cycle: " << (cycle ? "yes" : "no") << "; pairing with " << cochain_name
                          << ": " << pair_str << " (after eta*2^" << E << ")\n";
        } else if (records) {
            std::cout << kSchema << " kind=verify-cycle chain=" << chain_name
                      << " cycle=" << (cycle ? "yes" : "no") << "\n";
        } else {
            std::cout << "cycle: " << (cycle ? "yes" : "no") << "\n";
        }
        if (!cycle) throw std::runtime_error("chain is not a cycle");
    });

    auto* gc_eta = gc->add_subcommand("eta", "direction-averaging map on an undirected chain");
    gc_eta->add_option("--input", input)->required();
    gc_eta->add_option("--chain", chain_name);
    gc_eta->add_option("--scale", scale, "rational prefactor, e.g. 1024");
    gc_eta->callback([&] {
        auto doc = gcx::parse_document(slurp(input));
        gcx::ChainVector c = named_chain(doc, chain_name);
        gcx::Rat f = gcx::rat_from_string(scale);
        for (auto& [k, t] : c.terms) t.coeff *= f;
        print_chain(gcx::eta(c), "eta_" + chain_name, records);
    });

    auto* gc_pair = gc->add_subcommand("pair", "pairing of a cochain graph with a directed chain");
    gc_pair->add_option("--input", input)->required();
    gc_pair->add_option("--cochain", cochain_name)->required();
    gc_pair->add_option("--chain", chain_name)->required();
    gc_pair->callback([&] {
        auto doc = gcx::parse_document(slurp(input));
        gcx::Rat v = gcx::pairing(gcx::canonicalize(named_graph(doc, cochain_name)),
                                  named_chain(doc, chain_name));
        if (records)
            std::cout << kSchema << " kind=pairing cochain=" << cochain_name
                      << " chain=" << chain_name << " value=" << gcx::rat_to_string(v) << "\n";
        else
            std::cout << gcx::rat_display(v) << "\n";
    });

    auto* gc_aut = gc->add_subcommand("aut", "automorphism group order");
    gc_aut->add_option("--input", input)->required();
    gc_aut->add_option("--graph", graph_name)->required();
    gc_aut->callback([&] {
        auto doc = gcx::parse_document(slurp(input));
        long a = gcx::automorphism_order(named_graph(doc, graph_name));
        if (records)
            std::cout << kSchema << " kind=aut graph=" << graph_name << " order=" << a << "\n";
        else
            std::cout << a << "\n";
    });

    auto* gc_orbits = gc->add_subcommand("orbits", "direction-assignment orbits of an undirected graph");
    gc_orbits->add_option("--input", input)->required();
    gc_orbits->add_option("--graph", graph_name)->required();
    gc_orbits->callback([&] {
        auto doc = gcx::parse_document(slurp(input));
        auto orbits = gcx::direction_orbits(named_graph(doc, graph_name));
        unsigned long long total = 0;
        for (const auto& o : orbits) total += o.size;
        if (records) {
            for (std::size_t i = 0; i < orbits.size(); ++i)
                std::cout << kSchema << " kind=direction-orbit graph=" << graph_name
                          << " index=" << i << " size=" << orbits[i].size
                          << " representative=" << gcx::graph_key(orbits[i].representative) << "\n";
        } else {
            std::cout << "orbits=" << orbits.size() << " total=" << total << "\n";
            for (std::size_t i = 0; i < orbits.size(); ++i)
                std::cout << "orbit " << i << " size " << orbits[i].size << ": "
                          << gcx::graph_key(orbits[i].representative) << "\n";
        }
    });

    // ---- trees -------------------------------------------------------
    auto* trees = app.add_subcommand("trees", "leaf-labelled tree posets");
    trees->require_subcommand(1);
    int leaves = 0, excess = 0;
    std::string eta_scale = "1";

    auto* tr_enum = trees->add_subcommand("enum", "trees with l labelled leaves of a given excess");
    tr_enum->add_option("--l", leaves)->required();
    tr_enum->add_option("--excess", excess)->required();
    tr_enum->callback([&] {
        auto ts = gcx::enumerate_trees(leaves, excess);
        if (records) {
            for (std::size_t i = 0; i < ts.size(); ++i)
                std::cout << kSchema << " kind=tree l=" << leaves << " excess=" << excess
                          << " index=" << i << " newick=" << gcx::write_tree(ts[i]) << "\n";
        } else {
            std::cout << "trees l=" << leaves << " excess=" << excess << " count=" << ts.size() << "\n";
            for (const auto& t : ts) std::cout << gcx::write_tree(t) << "\n";
        }
    });

    auto* tr_lie = trees->add_subcommand("liehedron", "f-vector of the tree complex");
    tr_lie->add_option("--l", leaves)->required();
    tr_lie->callback([&] {
        auto f = gcx::f_vector(gcx::lie_hedron(leaves));
        if (records) {
            std::cout << kSchema << " kind=liehedron l=" << leaves << " f=";
            for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? "," : "") << f[i];
            std::cout << "\n";
        } else {
            std::cout << "f-vector";
            for (long x : f) std::cout << " " << x;
            std::cout << "\n";
        }
    });

    auto* tr_betti = trees->add_subcommand("betti", "Betti numbers of the tree complex");
    tr_betti->add_option("--l", leaves)->required();
    tr_betti->callback([&] {
        auto b = gcx::complex_homology(gcx::lie_hedron(leaves));
        if (records) {
            std::cout << kSchema << " kind=betti l=" << leaves << " b=";
            for (std::size_t i = 0; i < b.size(); ++i) std::cout << (i ? "," : "") << b[i];
            std::cout << "\n";
        } else {
            std::cout << "betti";
            for (long x : b) std::cout << " " << x;
            std::cout << "\n";
        }
    });

    auto* tr_dec = trees->add_subcommand("decompose", "expansion poset of an integral directed cycle");
    tr_dec->add_option("--input", input)->required();
    tr_dec->add_option("--chain", chain_name);
    tr_dec->add_option("--eta-scale", eta_scale,
                       "lift an undirected chain through eta scaled by this rational");
    tr_dec->callback([&] {
        auto doc = gcx::parse_document(slurp(input));
        gcx::ChainVector c = named_chain(doc, chain_name);
        if (!c.directed) {
            gcx::Rat f = gcx::rat_from_string(eta_scale);
            for (auto& [k, t] : c.terms) t.coeff *= f;
            c = gcx::eta(c);
        }
        gcx::DecompositionPoset P = gcx::decomposition_poset(c);
        std::map<int, long> count;
        for (const auto& node : P.nodes) ++count[node.excess];
        if (records) {
            for (std::size_t i = 0; i < P.nodes.size(); ++i) {
                const auto& node = P.nodes[i];
                std::cout << kSchema << " kind=poset-node index=" << i << " excess=" << node.excess
                          << " copies=" << node.copies << " n_gamma=" << node.n_gamma
                          << " m_gamma=" << node.m_gamma << " m_formula=" << node.m_symbolic
                          << " graph=" << gcx::graph_key(node.graph) << "\n";
            }
            std::cout << kSchema << " kind=poset-summary nodes=" << P.nodes.size()
                      << " covers=" << P.covers.size() << " mu_lcm=" << P.mu_lcm << "\n";
        } else {
            std::cout << "nodes by excess:";
            for (const auto& [e, c2] : count) std::cout << " " << e << ":" << c2;
            std::cout << "\ncover relations: " << P.covers.size() << "\nmu = lcm(m_Gamma) = "
                      << P.mu_lcm << "\n";
        }
    });

    // ---- signs -------------------------------------------------------
    auto* signs = app.add_subcommand("signs", "graded sign computations");
    signs->require_subcommand(1);
    int p = 0, q = 0, r = 0;
    std::string k_parity = "odd", n_parity = "even";

    auto* sg_jacobi = signs->add_subcommand("jacobi", "boundary-orientation Jacobi coefficients");
    sg_jacobi->add_option("--p", p)->required();
    sg_jacobi->add_option("--q", q)->required();
    sg_jacobi->add_option("--r", r)->required();
    sg_jacobi->callback([&] {
        auto c = gcx::jacobi_signs(p, q, r);
        if (records)
            std::cout << kSchema << " kind=jacobi p=" << p << " q=" << q << " r=" << r
                      << " c1=" << c[0] << " c2=" << c[1] << " c3=" << c[2] << "\n";
        else
            std::cout << "[[a,b],c]: " << c[0] << "  [[b,c],a]: " << c[1] << "  [[c,a],b]: " << c[2]
                      << "\n";
    });

    auto* sg_half = signs->add_subcommand("halfedge", "half-edge orientation of a directed graph");
    sg_half->add_option("--input", input)->required();
    sg_half->add_option("--graph", graph_name)->required();
    sg_half->add_option("--k-parity", k_parity, "odd or even");
    sg_half->callback([&] {
        auto doc = gcx::parse_document(slurp(input));
        int kp = k_parity == "odd" ? 1 : 0;
        auto h = gcx::half_edge_orientation(named_graph(doc, graph_name), kp);
        for (const auto& w : h.words) {
            if (records) {
                std::cout << kSchema << " kind=vertex-word graph=" << graph_name
                          << " vertex=" << w.vertex + 1 << " sign=" << w.sign << " word=";
                for (std::size_t i = 0; i < w.factors.size(); ++i)
                    std::cout << (i ? "," : "") << w.factors[i];
                std::cout << "\n";
            } else {
                std::cout << (w.sign < 0 ? "-(" : "+(");
                for (std::size_t i = 0; i < w.factors.size(); ++i)
                    std::cout << (i ? " " : "") << w.factors[i];
                std::cout << ")\n";
            }
        }
        if (records)
            std::cout << kSchema << " kind=vertex-word-total graph=" << graph_name
                      << " global=" << h.global_sign << "\n";
        else
            std::cout << "global sign: " << h.global_sign << "\n";
    });

    auto* sg_linf = signs->add_subcommand("linf", "bracket relation for an l-valent vertex");
    sg_linf->add_option("--l", leaves)->required();
    sg_linf->add_option("--n-parity", n_parity, "even or odd");
    sg_linf->callback([&] {
        int par = n_parity == "odd" ? 1 : 0;
        auto terms = gcx::linf_relation(leaves, par);
        if (records) {
            for (std::size_t i = 0; i < terms.size(); ++i)
                std::cout << kSchema << " kind=linf-term l=" << leaves << " n_parity=" << par
                          << " index=" << i << " sign=" << terms[i].sign
                          << " term=" << terms[i].expr.to_string() << "\n";
        } else {
            std::string top = "[";
            for (int i = 0; i + 1 < leaves; ++i) top += std::string(i ? "," : "") + char('a' + i);
            top += "]";
            std::cout << "d" << top << " =";
            for (const auto& t : terms)
                std::cout << (t.sign < 0 ? " - " : " + ") << t.expr.to_string();
            std::cout << "\n";
        }
    });

    // ---- dim ---------------------------------------------------------
    auto* dim = app.add_subcommand("dim", "dimension and feasibility calculus");
    dim->require_subcommand(1);
    int ell = 0, j = 0, kk = 0;
    std::string p_list;
    long m_cfs = 0;
    std::vector<long> q_over, r_over;

    auto* dm_vf = dim->add_subcommand("vertex-family", "suspension/delooping recipe for a vertex");
    dm_vf->add_option("--l", ell)->required();
    dm_vf->add_option("--j", j)->required();
    dm_vf->add_option("--k", kk)->required();
    dm_vf->callback([&] {
        auto vf = gcx::vertex_family(ell, j, kk);
        if (records) {
            std::cout << kSchema << " kind=vertex-family l=" << ell << " j=" << j << " k=" << kk
                      << " n=" << vf.n << " delta=" << vf.delta << " a=" << vf.a
                      << " final=" << gcx::link_type_to_string(vf.final_type)
                      << " dim=" << vf.total_dim << " strict=" << vf.strict_dim_bound << "\n";
        } else {
            std::cout << "n=" << vf.n << " delta=" << vf.delta << " a=" << vf.a << "\nfinal type: "
                      << gcx::link_type_to_string(vf.final_type) << "\nfamily dimension: "
                      << vf.total_dim << (vf.strict_dim_bound ? " (strict bound)" : "") << "\n";
        }
    });

    auto* dm_feasible = dim->add_subcommand("feasible", "integer n-range for (l,k)");
    dm_feasible->add_option("--l", ell)->required();
    dm_feasible->add_option("--k", kk)->required();
    dm_feasible->callback([&] {
        auto fr = gcx::feasible_n_range(ell, kk);
        if (records) {
            std::cout << kSchema << " kind=feasible l=" << ell << " k=" << kk
                      << " nonempty=" << fr.nonempty;
            if (fr.nonempty) std::cout << " lo=" << fr.lo << " hi=" << fr.hi;
            std::cout << " width_threshold_2k=" << gcx::rat_to_string(fr.width_threshold_2k)
                      << " strong_threshold_2k=" << fr.strong_threshold_2k << "\n";
        } else if (fr.nonempty) {
            std::cout << "n in [" << fr.lo << ", " << fr.hi << "]\n";
        } else {
            std::cout << "empty\n";
        }
    });

    auto* dm_cfs = dim->add_subcommand("cfs", "spherical-link pi_0 conditions");
    dm_cfs->add_option("--p", p_list, "comma-separated component dimensions")->required();
    dm_cfs->add_option("--m", m_cfs)->required();
    dm_cfs->callback([&] {
        std::vector<long> ps;
        std::stringstream ss(p_list);
        std::string tok;
        while (std::getline(ss, tok, ',')) ps.push_back(std::stol(tok));
        auto rep = gcx::cfs_check(ps, m_cfs);
        if (records) {
            for (std::size_t i = 0; i < rep.a.size(); ++i)
                std::cout << kSchema << " kind=cfs-a index=" << i << " p=" << rep.a[i].p
                          << " holds=" << rep.a[i].holds << "\n";
            std::cout << kSchema << " kind=cfs-b verdict=" << rep.b << "\n";
            std::cout << kSchema << " kind=cfs-c solvable=" << rep.c_solvable;
            if (rep.c_solvable) {
                std::cout << " witness=";
                for (std::size_t i = 0; i < rep.c_solution.size(); ++i)
                    std::cout << (i ? "," : "") << "x" << rep.c_subsequence[i] + 1 << "="
                              << rep.c_solution[i];
            }
            std::cout << "\n";
        } else {
            for (const auto& a : rep.a)
                std::cout << "(a) p=" << a.p << ": " << (a.holds ? "holds" : "fails") << "\n";
            std::cout << "(b) " << rep.b << "\n(c) " << (rep.c_solvable ? "solvable" : "unsolvable");
            if (rep.c_solvable) {
                std::cout << " with";
                for (std::size_t i = 0; i < rep.c_solution.size(); ++i)
                    std::cout << " x" << rep.c_subsequence[i] + 1 << "=" << rep.c_solution[i];
            }
            std::cout << "\n";
        }
    });

    auto* dm_bands = dim->add_subcommand("bands", "degree-band membership for (n,m,k)");
    dm_bands->add_option("--n", n)->required();
    dm_bands->add_option("--m", m)->required();
    dm_bands->add_option("--k", kk)->required();
    dm_bands->callback([&] {
        auto br = gcx::band_check(n, m, kk);
        if (records)
            std::cout << kSchema << " kind=band n=" << n << " m=" << m << " k=" << kk
                      << " degree=" << br.degree << " lo=" << br.band_lo << " hi=" << br.band_hi
                      << " in_band=" << br.in_band << " in_d_set=" << br.in_d_set
                      << " d_cap=" << br.d_cap << "\n";
        else
            std::cout << "degree " << br.degree << " in [" << br.band_lo << ", " << br.band_hi
                      << "]: " << (br.in_band ? "yes" : "no") << "; capped-set member: "
                      << (br.in_d_set ? "yes" : "no") << "\n";
    });

    auto* dm_mult = dim->add_subcommand("multiplicity", "bracket multiplicity ledger");
    dm_mult->add_option("--l", ell)->required();
    dm_mult->add_option("--q", q_over, "q_5 q_6 ... overrides");
    dm_mult->add_option("--r", r_over, "r_5 r_6 ... overrides");
    dm_mult->callback([&] {
        gcx::MultiplicityLedger ledger;
        for (std::size_t i = 0; i < q_over.size(); ++i) ledger.q[5 + static_cast<int>(i)] = q_over[i];
        for (std::size_t i = 0; i < r_over.size(); ++i) ledger.r[5 + static_cast<int>(i)] = r_over[i];
        auto mul = gcx::multiplicity(ell, ledger);
        bool integral = ell >= 4 && gcx::boundary_coefficients_integral(ell, ledger);
        if (records) {
            std::cout << kSchema << " kind=multiplicity l=" << ell << " value=" << mul.value
                      << " formula=" << mul.symbolic;
            if (ell >= 4)
                std::cout << " mu=" << gcx::mu_partial(ell, ledger) << " faces_integral=" << integral;
            std::cout << "\n";
        } else {
            std::cout << "m_" << ell << " = " << mul.value << "  (" << mul.symbolic << ")\n";
            if (ell >= 4)
                std::cout << "mu_" << ell << " = " << gcx::mu_partial(ell, ledger)
                          << "; face coefficients integral: " << (integral ? "yes" : "no") << "\n";
        }
    });

    std::function<void(CLI::App*)> allow_parent_flags = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands({})) {
            sub->fallthrough();
            allow_parent_flags(sub);
        }
    };
    allow_parent_flags(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
