// Command-line surface over the nestgen library.
//
// Exit codes: 0 success (including a verified negative audit result),
// 1 rejected input or precondition, 2 internal invariant violation,
// 64 usage errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "nestgen/decomposition.hpp"
#include "nestgen/duality.hpp"
#include "nestgen/embedding.hpp"
#include "nestgen/generator.hpp"
#include "nestgen/graph.hpp"
#include "nestgen/io.hpp"
#include "nestgen/nestedness.hpp"
#include "nestgen/oracle.hpp"

namespace {

using namespace nestgen;
using nlohmann::json;

struct CommonOpts {
    std::string input;
    bool json_out = false;
    std::uint64_t seed = 1;
    long long budget = 0;  // 0 = library defaults
    int trials = 5;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GraphDocument load_document(const std::string& path) {
    std::string text = slurp(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
    return parse_graph_text(text);
}

OracleBudget budget_of(const CommonOpts& o) {
    OracleBudget b;
    if (o.budget > 0) {
        b.max_nodes = o.budget;
        b.max_group_order = o.budget;
        b.max_rotation_systems = o.budget;
    }
    return b;
}

json edgeset_json(const EdgeSet& f) {
    json a = json::array();
    for (EdgeId e : f.ids) a.push_back(e);
    return a;
}

json result_json(const std::string& name, const FullResult& fr, int rank, int dim, bool nested,
                 bool aut_invariant) {
    json j;
    j["host"] = json::parse(serialize_graph_json(to_document(name, fr.g_prime)));
    j["extension_edges"] = json::array();
    for (const EdgeRec& e : fr.added_edges)
        j["extension_edges"].push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
    j["generators"] = json::array();
    for (size_t i = 0; i < fr.gens.cycles.size(); ++i) {
        const Cycle& c = fr.gens.cycles[i];
        const Provenance& p = fr.gens.provenance[i];
        j["generators"].push_back({{"edges", edgeset_json(c.edges)},
                                   {"vertices", c.vertex_order},
                                   {"length", c.length()},
                                   {"block", p.block},
                                   {"part", p.part},
                                   {"kind", to_string(p.kind)}});
    }
    j["rank"] = rank;
    j["dimension"] = dim;
    j["nested"] = nested;
    j["aut_invariant"] = aut_invariant;
    return j;
}

void write_dot(std::ostream& out, const std::string& name, const FullResult& fr) {
    static const char* palette[] = {"red",    "blue",   "green3", "orange", "purple",
                                    "brown",  "cyan4",  "magenta", "gold3", "gray40"};
    out << "graph \"" << name << "\" {\n";
    // edge -> generator indices containing it
    std::map<EdgeId, std::vector<int>> owners;
    for (size_t i = 0; i < fr.gens.cycles.size(); ++i)
        for (EdgeId e : fr.gens.cycles[i].edges.ids) owners[e].push_back(static_cast<int>(i));
    std::set<EdgeId> added;
    for (const EdgeRec& e : fr.added_edges) added.insert(e.id);
    for (const EdgeRec& e : fr.g_prime.edges()) {
        out << "  " << e.u << " -- " << e.v << " [label=\"" << e.id << "\"";
        auto it = owners.find(e.id);
        if (it != owners.end() && !it->second.empty())
            out << ", color=\"" << palette[it->second.front() % 10] << "\"";
        if (added.count(e.id)) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
}

void print_full_report(const std::string& name, const Multigraph& g, const FullResult& fr,
                       const CommonOpts& opts, bool as_json, const std::string& dot_path) {
    int rank = gf2_rank(fr.g_prime, [&] {
        std::vector<EdgeSet> v;
        for (const Cycle& c : fr.gens.cycles) v.push_back(c.edges);
        return v;
    }());
    int dim = cycle_space_dimension(fr.g_prime);
    NestReport nr = family_nested(fr.g_prime, fr.gens.rotation, fr.gens.cycles);
    CanonicityResult cr =
        canonicity_probe(g, [](const Multigraph& h) { return full_pipeline_signature(h); },
                         opts.trials, opts.seed);

    if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw input_error("cannot open dot output file: " + dot_path);
        write_dot(dot, name, fr);
    }
    if (as_json) {
        std::cout << result_json(name, fr, rank, dim, nr.ok(), cr.ok).dump(2) << "\n";
        return;
    }
    std::cout << "graph " << name << ": n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    std::cout << "extension edges: " << fr.added_edges.size();
    for (const EdgeRec& e : fr.added_edges)
        std::cout << "  [" << e.id << ": " << e.u << "-" << e.v << "]";
    std::cout << "\n";
    std::cout << "generators: " << fr.gens.cycles.size() << "\n";
    for (size_t i = 0; i < fr.gens.cycles.size(); ++i) {
        const Cycle& c = fr.gens.cycles[i];
        const Provenance& p = fr.gens.provenance[i];
        std::cout << "  #" << i << " " << to_string(p.kind) << " block=" << p.block
                  << " part=" << p.part << " len=" << c.length() << " edges={";
        bool first = true;
        for (EdgeId e : c.edges.ids) {
            if (!first) std::cout << ",";
            std::cout << e;
            first = false;
        }
        std::cout << "}\n";
    }
    std::cout << "rank=" << rank << " dimension=" << dim << " nested=" << (nr.ok() ? "yes" : "no")
              << " aut_invariant=" << (cr.ok ? "yes" : "no") << "\n";
}

int cmd_embed(const CommonOpts& opts) {
    GraphDocument doc = load_document(opts.input);
    Multigraph g = to_multigraph(doc);
    RotationSystem rot = planar_embed(g);
    if (opts.json_out) {
        json j;
        j["graph"] = doc.name;
        j["genus0"] = genus0_certificate(g, rot);
        j["rotation"] = json::object();
        for (VertexId v : g.vertices()) {
            json darts = json::array();
            for (Dart d : rot.order()[g.vertex_index(v)]) {
                const EdgeRec& e = g.edges()[d / 2];
                darts.push_back({{"edge", e.id}, {"end", d % 2}});
            }
            j["rotation"][std::to_string(v)] = darts;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "graph " << doc.name << ": planar, genus-0 certificate "
                  << (genus0_certificate(g, rot) ? "ok" : "FAILED") << "\n";
        for (VertexId v : g.vertices()) {
            std::cout << "  " << v << ":";
            for (Dart d : rot.order()[g.vertex_index(v)])
                std::cout << " " << g.edges()[d / 2].id << (d % 2 ? "'" : "");
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_faces(const CommonOpts& opts) {
    GraphDocument doc = load_document(opts.input);
    Multigraph g = to_multigraph(doc);
    RotationSystem rot = planar_embed(g);
    auto faces = trace_faces(g, rot);
    if (opts.json_out) {
        json j;
        j["graph"] = doc.name;
        j["faces"] = json::array();
        for (const Face& f : faces) j["faces"].push_back(edgeset_json(f.boundary));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "graph " << doc.name << ": " << faces.size() << " faces\n";
        for (size_t i = 0; i < faces.size(); ++i) {
            std::cout << "  face " << i << ": {";
            bool first = true;
            for (EdgeId e : faces[i].boundary.ids) {
                if (!first) std::cout << ",";
                std::cout << e;
                first = false;
            }
            std::cout << "}\n";
        }
    }
    return 0;
}

int cmd_dual(const CommonOpts& opts) {
    GraphDocument doc = load_document(opts.input);
    Multigraph g = to_multigraph(doc);
    RotationSystem rot = planar_embed(g);
    DualPair dp = build_dual(g, rot);
    GraphDocument out = to_document(doc.name + "_dual", dp.dual);
    // dual vertex ids are face indices starting at 0; shift to 1-based for
    // the text format's 'v <count>' shorthand
    std::cout << (opts.json_out ? serialize_graph_json(out) : serialize_graph_text(out));
    return 0;
}

int cmd_decompose(const CommonOpts& opts) {
    GraphDocument doc = load_document(opts.input);
    Multigraph g = to_multigraph(doc);
    BlockDecomposition bd = block_decomposition(g);
    json j;
    j["graph"] = doc.name;
    j["blocks"] = json::array();
    if (!opts.json_out)
        std::cout << "graph " << doc.name << ": " << bd.blocks.size() << " blocks, "
                  << bd.cut_vertices.size() << " cut vertices\n";
    for (size_t i = 0; i < bd.blocks.size(); ++i) {
        const auto& blk = bd.blocks[i];
        const char* kind = blk.kind == BlockDecomposition::BlockKind::Loop      ? "loop"
                           : blk.kind == BlockDecomposition::BlockKind::Bridge ? "bridge"
                                                                               : "2-connected";
        json jb;
        jb["kind"] = kind;
        jb["edges"] = json::array();
        for (const EdgeRec& e : blk.graph.edges()) jb["edges"].push_back(e.id);
        if (!opts.json_out)
            std::cout << "  block " << i << " (" << kind << "): " << blk.graph.edge_count()
                      << " edges\n";
        if (blk.kind == BlockDecomposition::BlockKind::TwoConnected) {
            TreeDecomposition td = tutte_decomposition(blk.graph);
            jb["parts"] = json::array();
            for (size_t t = 0; t < td.nodes.size(); ++t) {
                const auto& node = td.nodes[t];
                jb["parts"].push_back({{"kind", to_string(node.kind)},
                                       {"bag", node.bag},
                                       {"edges", node.real_edges}});
                if (!opts.json_out) {
                    std::cout << "    part " << t << " " << to_string(node.kind) << " bag={";
                    for (size_t k = 0; k < node.bag.size(); ++k)
                        std::cout << (k ? "," : "") << node.bag[k];
                    std::cout << "}\n";
                }
            }
        }
        j["blocks"].push_back(jb);
    }
    if (opts.json_out) std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_generate(const CommonOpts& opts, bool strict, const std::string& dot_path) {
    GraphDocument doc = load_document(opts.input);
    Multigraph g = to_multigraph(doc);
    FullResult fr = generate_full(g, strict);
    print_full_report(doc.name, g, fr, opts, opts.json_out, dot_path);
    return 0;
}

int cmd_express(const CommonOpts& opts, const std::vector<EdgeId>& cycle_edges) {
    GraphDocument doc = load_document(opts.input);
    Multigraph g = to_multigraph(doc);
    FullResult fr = generate_full(g, false);
    std::set<EdgeId> ids(cycle_edges.begin(), cycle_edges.end());
    Cycle c = make_cycle(fr.g_prime, make_edgeset(fr.g_prime, ids));
    auto combo = express_cycle(fr.gens, c);
    if (!combo) throw input_error("cycle is outside the span of the generating set");
    if (opts.json_out) {
        json j;
        j["graph"] = doc.name;
        j["cycle"] = edgeset_json(c.edges);
        j["combination"] = *combo;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "cycle of length " << c.length() << " = sum of generators";
        for (int i : *combo) std::cout << " #" << i;
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& check) {
    GraphDocument doc = load_document(opts.input);
    Multigraph g = to_multigraph(doc);
    json j;
    j["graph"] = doc.name;
    j["check"] = check;
    if (check == "duality") {
        RotationSystem rot = planar_embed(g);
        DualPair dp = build_dual(g, rot);
        DualityReport rep = verify_duality_exhaustive(dp);
        j["subsets_checked"] = rep.subsets_checked;
        j["circuits"] = rep.circuits;
        j["tight_cuts"] = rep.tight_cuts;
        j["violations"] = rep.violations.size();
        if (opts.json_out) {
            j["ok"] = rep.ok();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "duality check on " << doc.name << ": " << rep.subsets_checked
                      << " subsets, " << rep.circuits << " circuits, " << rep.tight_cuts
                      << " tight cuts, " << rep.violations.size() << " violations -> "
                      << (rep.ok() ? "PASS" : "FAIL") << "\n";
            for (const EdgeSet& v : rep.violations) {
                std::cout << "  violation: {";
                bool first = true;
                for (EdgeId e : v.ids) {
                    if (!first) std::cout << ",";
                    std::cout << e;
                    first = false;
                }
                std::cout << "}\n";
            }
        }
        return rep.ok() ? 0 : 2;
    }
    if (check == "nested") {
        FullResult fr = generate_full(g, false);
        NestReport nr = family_nested(fr.g_prime, fr.gens.rotation, fr.gens.cycles);
        if (opts.json_out) {
            j["ok"] = nr.ok();
            if (!nr.ok()) j["violation"] = {nr.first_violation->first, nr.first_violation->second};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "nestedness of generating set on " << doc.name << ": "
                      << (nr.ok() ? "PASS" : "FAIL") << "\n";
            if (!nr.ok())
                std::cout << "  crossing pair: #" << nr.first_violation->first << " and #"
                          << nr.first_violation->second << "\n";
        }
        return nr.ok() ? 0 : 2;
    }
    if (check == "canonical") {
        CanonicityResult cr =
            canonicity_probe(g, [](const Multigraph& h) { return full_pipeline_signature(h); },
                             opts.trials, opts.seed);
        if (opts.json_out) {
            j["ok"] = cr.ok;
            j["trials"] = opts.trials;
            if (!cr.ok) j["failing_trial"] = cr.failing_trial;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "canonicity probe on " << doc.name << " (" << opts.trials
                      << " relabelings): " << (cr.ok ? "PASS" : "FAIL") << "\n";
        }
        return cr.ok ? 0 : 2;
    }
    if (check == "td") {
        if (!is_two_connected(g)) throw input_error("td check requires a 2-connected input");
        TreeDecomposition td = tutte_decomposition(g);
        TdCheck tc = check_td_axioms(g, td);
        if (opts.json_out) {
            j["ok"] = tc.ok;
            j["nodes"] = td.nodes.size();
            if (!tc.ok) j["violation"] = tc.violation;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "tree-decomposition axioms on " << doc.name << ": "
                      << (tc.ok ? "PASS" : "FAIL") << " (" << td.nodes.size() << " parts)\n";
            if (!tc.ok) std::cout << "  " << tc.violation << "\n";
        }
        return tc.ok ? 0 : 2;
    }
    throw CLI::ValidationError("--check", "unknown check '" + check + "'");
}

int cmd_audit(const CommonOpts& opts) {
    GraphDocument doc = load_document(opts.input);
    Multigraph g = to_multigraph(doc);
    AuditResult ar = counterexample_audit(g, budget_of(opts));
    if (opts.json_out) {
        json j;
        j["graph"] = doc.name;
        j["status"] = ar.possible ? "Possible" : "Impossible";
        j["total_rotations"] = ar.total_rotations;
        j["planar_rotations"] = ar.planar_rotations;
        j["orbit_count"] = ar.orbit_count;
        if (ar.possible) {
            j["family"] = json::array();
            for (const EdgeSet& f : ar.family) j["family"].push_back(edgeset_json(f));
        } else {
            j["witnesses"] = json::array();
            for (const AuditCrossing& w : ar.witnesses)
                j["witnesses"].push_back({{"rotation", w.rotation_index},
                                          {"first", edgeset_json(w.first)},
                                          {"second", edgeset_json(w.second)}});
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "audit of " << doc.name << ": " << ar.total_rotations << " rotation systems, "
                  << ar.planar_rotations << " genus-0, " << ar.orbit_count << " circuit orbits\n";
        if (ar.possible) {
            std::cout << "status: Possible — a canonical nested generating family exists ("
                      << ar.family.size() << " cycles)\n";
        } else {
            std::cout << "status: Impossible — no canonical nested generating family exists; "
                         "crossing witness per embedding:\n";
            for (const AuditCrossing& w : ar.witnesses) {
                std::cout << "  rotation " << w.rotation_index << ": {";
                bool first = true;
                for (EdgeId e : w.first.ids) {
                    std::cout << (first ? "" : ",") << e;
                    first = false;
                }
                std::cout << "} crosses {";
                first = true;
                for (EdgeId e : w.second.ids) {
                    std::cout << (first ? "" : ",") << e;
                    first = false;
                }
                std::cout << "}\n";
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical nested generating sets of the cycle space of planar multigraphs"};
    app.require_subcommand(1);

    CommonOpts opts;
    bool strict = false;
    std::string dot_path, check = "duality";
    std::vector<EdgeId> cycle_edges;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", opts.input, "input graph file ('-' for stdin)")->required();
        sub->add_flag("--json", opts.json_out, "emit JSON instead of plain text");
        sub->add_option("--seed", opts.seed, "seed for randomized probes");
        sub->add_option("--budget", opts.budget, "work budget for oracle searches");
        sub->add_option("--trials", opts.trials, "relabeling trials for canonicity probes");
    };

    auto* embed = app.add_subcommand("embed", "compute a genus-0 rotation system");
    add_common(embed);
    auto* faces = app.add_subcommand("faces", "trace the faces of the embedding");
    add_common(faces);
    auto* dual = app.add_subcommand("dual", "emit the geometric dual");
    add_common(dual);
    auto* decompose = app.add_subcommand("decompose", "block and triconnected decomposition");
    add_common(decompose);
    auto* generate = app.add_subcommand("generate", "canonical nested generating set");
    add_common(generate);
    generate->add_flag("--strict", strict, "refuse inputs requiring extension edges");
    generate->add_option("--dot", dot_path, "write a DOT rendering to this file");
    auto* express = app.add_subcommand("express", "express a cycle in the generating set");
    add_common(express);
    express->add_option("--cycle", cycle_edges, "edge ids of the cycle")->required();
    auto* verify = app.add_subcommand("verify", "run a verification oracle");
    add_common(verify);
    verify->add_option("--check", check, "duality | nested | canonical | td");
    auto* audit = app.add_subcommand("audit", "search all embeddings for a nested family");
    add_common(audit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (embed->parsed()) return cmd_embed(opts);
        if (faces->parsed()) return cmd_faces(opts);
        if (dual->parsed()) return cmd_dual(opts);
        if (decompose->parsed()) return cmd_decompose(opts);
        if (generate->parsed()) return cmd_generate(opts, strict, dot_path);
        if (express->parsed()) return cmd_express(opts, cycle_edges);
        if (verify->parsed()) return cmd_verify(opts, check);
        if (audit->parsed()) return cmd_audit(opts);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
