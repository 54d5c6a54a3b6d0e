// Command-line front end: constructions, formulas, structure detection,
// shadow expansion, core extraction, psi sampling, and the exact solver.
//
// Exit codes: 0 success (a reported "absent" is an answer), 1 domain or input
// errors, 2 usage errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "turan/expansion.hpp"
#include "turan/hg_io.hpp"
#include "turan/lists.hpp"
#include "turan/psi.hpp"
#include "turan/solver.hpp"
#include "turan/subgraphs.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw turan::Error("cannot write " + out_path);
    out << text;
}

json witness_json(const turan::StructureWitness& w, bool verified) {
    return json::parse(turan::witness_to_json(w, verified));
}

turan::StructureKind parse_kind(const std::string& name, int k) {
    auto fam = turan::family_from_name(name);
    if (!fam)
        throw turan::ParameterError("unknown kind \"" + name +
                                    "\"; expected linear-path, linear-cycle, minimal-path, "
                                    "minimal-cycle, berge-path or berge-cycle");
    return turan::StructureKind(*fam, k);
}

turan::ExtremalTarget parse_target(const std::string& name) {
    auto t = turan::target_from_name(name);
    if (!t)
        throw turan::ParameterError("unknown target \"" + name +
                                    "\"; expected path, cycle or minimal-cycle");
    return *t;
}

int run(int argc, char** argv) {
    CLI::App app{"Extremal hypergraph toolkit: constructions, detectors, solver"};
    app.require_subcommand(1);

    // construct
    auto* c_construct = app.add_subcommand("construct", "emit an extremal candidate family");
    int cn = 0, cr = 0, ck = 0;
    std::string c_target, c_out;
    c_construct->add_option("--n", cn, "vertex count")->required();
    c_construct->add_option("--r", cr, "uniformity")->required();
    c_construct->add_option("--k", ck, "forbidden length")->required();
    c_construct->add_option("--target", c_target, "path | cycle | minimal-cycle")->required();
    c_construct->add_option("--out", c_out, "output .hg path (default stdout)");

    // formula
    auto* c_formula = app.add_subcommand("formula", "evaluate the closed-form value");
    int fn = 0, fr = 0, fk = 0;
    std::string f_target;
    c_formula->add_option("--n", fn, "vertex count")->required();
    c_formula->add_option("--r", fr, "uniformity")->required();
    c_formula->add_option("--k", fk, "forbidden length")->required();
    c_formula->add_option("--target", f_target, "path | cycle | minimal-cycle")->required();

    // detect
    auto* c_detect = app.add_subcommand("detect", "search a file for a structure");
    std::string d_kind, d_in, d_witness_out;
    int dk = 0;
    std::uint64_t d_nodes = turan::kDefaultSearchNodeLimit;
    c_detect->add_option("--kind", d_kind, "structure family")->required();
    c_detect->add_option("--k", dk, "length (edge count)")->required();
    c_detect->add_option("--in", d_in, "input .hg file")->required();
    c_detect->add_option("--node-limit", d_nodes, "backtracking node limit");
    c_detect->add_option("--witness-out", d_witness_out, "write witness JSON here");

    // expand
    auto* c_expand = app.add_subcommand("expand", "expand a shadow witness into the host");
    std::string e_in, e_witness, e_out;
    c_expand->add_option("--in", e_in, "host .hg file")->required();
    c_expand->add_option("--shadow-witness", e_witness, "witness JSON file")->required();
    c_expand->add_option("--out", e_out, "output JSON path (default stdout)");

    // fullsub
    auto* c_fullsub = app.add_subcommand("fullsub", "extract the (d+1)-full core");
    int fd = 0;
    std::string fs_in, fs_out;
    c_fullsub->add_option("--d", fd, "codegree threshold")->required();
    c_fullsub->add_option("--in", fs_in, "input .hg file")->required();
    c_fullsub->add_option("--out", fs_out, "output .hg path (default stdout)");

    // sample-psi
    auto* c_sample = app.add_subcommand("sample-psi", "randomized multipartite sampling");
    std::string s_in, s_out_g;
    int st_ = 2, sk = 0, s_rounds = 20;
    std::uint64_t s_seed = 0;
    c_sample->add_option("--in", s_in, "host .hg file")->required();
    c_sample->add_option("--t", st_, "part size (default 2)");
    c_sample->add_option("--k", sk, "forbidden length")->required();
    c_sample->add_option("--seed", s_seed, "base seed; round i uses seed+i")->required();
    c_sample->add_option("--rounds", s_rounds, "retry rounds (default 20)");
    c_sample->add_option("--out-g", s_out_g, "write the found subgraph as .hg");

    // solve
    auto* c_solve = app.add_subcommand("solve", "exact Turan search");
    int sn = 0, sr = 0, sk2 = 0, s_workers = 1;
    std::string s_kind, s_witness_out;
    std::uint64_t s_nodes = 0;
    double s_time = 0;
    bool s_det = false, s_sym = false;
    c_solve->add_option("--n", sn, "vertex count")->required();
    c_solve->add_option("--r", sr, "uniformity")->required();
    c_solve->add_option("--k", sk2, "forbidden length")->required();
    c_solve->add_option("--kind", s_kind, "forbidden structure family")->required();
    c_solve->add_option("--node-limit", s_nodes, "0 = unlimited");
    c_solve->add_option("--time-limit", s_time, "seconds, 0 = unlimited");
    c_solve->add_option("--workers", s_workers, "worker threads");
    c_solve->add_flag("--deterministic", s_det, "single worker, reproducible trace");
    c_solve->add_flag("--symmetry-break", s_sym, "value-safe relabeling normalization");
    c_solve->add_option("--witness-out", s_witness_out, "write the extremal family .hg");

    // compare
    auto* c_compare = app.add_subcommand("compare", "solver vs closed form");
    int pn = 0, pr = 0, pk = 0, p_workers = 1;
    std::string p_target;
    std::uint64_t p_nodes = 0;
    double p_time = 0;
    bool p_det = false;
    c_compare->add_option("--n", pn, "vertex count")->required();
    c_compare->add_option("--r", pr, "uniformity")->required();
    c_compare->add_option("--k", pk, "forbidden length")->required();
    c_compare->add_option("--target", p_target, "path | cycle | minimal-cycle")->required();
    c_compare->add_option("--node-limit", p_nodes, "0 = unlimited");
    c_compare->add_option("--time-limit", p_time, "seconds, 0 = unlimited");
    c_compare->add_option("--workers", p_workers, "worker threads");
    c_compare->add_flag("--deterministic", p_det, "single worker");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version are fine; usage errors are 2
    }

    if (c_construct->parsed()) {
        turan::ConstructionSpec spec(cn, cr, ck, parse_target(c_target));
        emit(turan::to_hg_string(turan::extremal_candidate(spec)), c_out);
        return 0;
    }

    if (c_formula->parsed()) {
        std::cout << turan::formula_tsv_row(fn, fr, fk, parse_target(f_target)) << '\n';
        return 0;
    }

    if (c_detect->parsed()) {
        turan::Hypergraph h = turan::read_hg_file(d_in);
        turan::StructureKind kind = parse_kind(d_kind, dk);
        turan::SearchResult res = turan::find_structure(h, kind, d_nodes);
        json j;
        j["nodes"] = res.nodes;
        switch (res.status) {
            case turan::SearchStatus::found: {
                bool ok = turan::verify_witness(h, *res.witness);
                j["status"] = "found";
                j["found"] = true;
                j["witness"] = witness_json(*res.witness, ok);
                if (!d_witness_out.empty())
                    emit(turan::witness_to_json(*res.witness, ok) + "\n", d_witness_out);
                break;
            }
            case turan::SearchStatus::absent:
                j["status"] = "absent";
                j["found"] = false;
                break;
            case turan::SearchStatus::unknown:
                j["status"] = "unknown";
                j["found"] = false;
                break;
        }
        std::cout << j.dump() << '\n';
        return res.status == turan::SearchStatus::unknown ? 1 : 0;
    }

    if (c_expand->parsed()) {
        turan::Hypergraph host = turan::read_hg_file(e_in);
        std::ifstream win(e_witness);
        if (!win) throw turan::Error("cannot open " + e_witness);
        std::stringstream buf;
        buf << win.rdbuf();
        turan::StructureWitness w =
            turan::witness_from_json(buf.str(), host.vertex_count());
        auto expanded = turan::expand_witness(host, w);
        json j;
        if (expanded) {
            j["expanded"] = true;
            j["witness"] = witness_json(*expanded, true);
        } else {
            j["expanded"] = false;
            j["reason"] = "no-sdr";
        }
        emit(j.dump() + "\n", e_out);
        return 0;
    }

    if (c_fullsub->parsed()) {
        turan::Hypergraph h = turan::read_hg_file(fs_in);
        emit(turan::to_hg_string(turan::full_subgraph(h, fd)), fs_out);
        return 0;
    }

    if (c_sample->parsed()) {
        turan::Hypergraph h = turan::read_hg_file(s_in);
        std::vector<turan::VertexSet> subedges = turan::shadow(h, 1).edges();
        json j;
        j["success"] = false;
        j["rounds"] = s_rounds;
        for (int i = 0; i < s_rounds; ++i) {
            turan::SamplePsiResult res =
                turan::sample_psi(h, subedges, sk, st_, s_seed + static_cast<std::uint64_t>(i));
            if (!res.success) continue;
            j["success"] = true;
            j["round"] = i;
            j["seed"] = s_seed + static_cast<std::uint64_t>(i);
            j["psi-check"] = true;
            json parts = json::array();
            for (const auto& p : res.parts) {
                json one = json::array();
                for (int v : p) one.push_back(v + 1);
                parts.push_back(one);
            }
            j["parts"] = parts;
            if (!s_out_g.empty()) turan::write_hg_file(s_out_g, *res.g);
            break;
        }
        std::cout << j.dump() << '\n';
        return 0;
    }

    if (c_solve->parsed()) {
        turan::SolveConfig cfg(sn, sr, parse_kind(s_kind, sk2));
        cfg.node_limit = s_nodes;
        cfg.time_limit_seconds = s_time;
        cfg.workers = s_workers;
        cfg.deterministic = s_det || s_workers <= 1;
        cfg.symmetry_break = s_sym;
        turan::SolveResult res = turan::solve_exact(cfg);
        json j;
        j["status"] = res.status == turan::SolveStatus::optimal ? "optimal" : "bounds-only";
        j["lower"] = res.lower_bound;
        j["upper"] = res.upper_bound;
        j["nodes"] = res.nodes_explored;
        if (!s_witness_out.empty()) {
            turan::write_hg_file(s_witness_out, res.witness_family);
            j["witness-file"] = s_witness_out;
        } else {
            j["witness-file"] = nullptr;
        }
        std::cout << j.dump() << '\n';
        return 0;
    }

    if (c_compare->parsed()) {
        turan::SolveConfig limits(pn, pr,
                                  turan::forbidden_kind_for_target(parse_target(p_target), pk));
        limits.node_limit = p_nodes;
        limits.time_limit_seconds = p_time;
        limits.workers = p_workers;
        limits.deterministic = p_det || p_workers <= 1;
        turan::CompareReport rep =
            turan::compare_with_formula(pn, pr, pk, parse_target(p_target), limits);
        json j;
        j["solver"]["status"] =
            rep.solver_status == turan::SolveStatus::optimal ? "optimal" : "bounds-only";
        j["solver"]["lower"] = rep.solver_lower;
        j["solver"]["upper"] = rep.solver_upper;
        j["solver"]["nodes"] = rep.nodes;
        j["formula"]["value"] = rep.formula_value.get_str();
        j["formula"]["validity"] = turan::validity_name(rep.validity);
        j["formula"]["threshold-n"] = rep.threshold_n;
        j["applicable"] = rep.applicable;
        if (!rep.applicable) j["note"] = "not-applicable-below-threshold";
        if (rep.agree)
            j["agree"] = *rep.agree;
        else
            j["agree"] = nullptr;
        std::cout << j.dump() << '\n';
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const turan::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
