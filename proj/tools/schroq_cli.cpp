#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schroq/acceptance.hpp"
#include "schroq/central.hpp"
#include "schroq/errors.hpp"
#include "schroq/fdim.hpp"
#include "schroq/tensorfun.hpp"
#include "schroq/verma.hpp"

using namespace schroq;

namespace {

struct Entry {
    std::string name;
    bool pass;
    std::string witness;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Entry> entries;

    void add(std::string name, bool pass, std::string witness = "") {
        entries.push_back({std::move(name), pass, std::move(witness)});
    }
    bool all_pass() const {
        for (auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

// Text rendering carries the wall time; the JSON rendering omits it so that
// identical inputs produce byte-identical reports.
int emit(const Report& rep, const std::string& mode, double wall_ms) {
    if (mode == "json") {
        nlohmann::json j;
        j["schema"] = 1;
        j["command"] = rep.command;
        nlohmann::json in = nlohmann::json::object();
        for (auto& [k, v] : rep.inputs) in[k] = v;
        j["inputs"] = std::move(in);
        nlohmann::json checks = nlohmann::json::array();
        size_t passed = 0;
        for (auto& e : rep.entries) {
            checks.push_back({{"name", e.name},
                              {"status", e.pass ? "pass" : "fail"},
                              {"witness", e.witness}});
            passed += e.pass;
        }
        j["checks"] = std::move(checks);
        j["passed"] = passed;
        j["total"] = rep.entries.size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "command: " << rep.command << "\n";
        for (auto& [k, v] : rep.inputs) std::cout << "  " << k << ": " << v << "\n";
        size_t passed = 0;
        for (auto& e : rep.entries) {
            std::cout << (e.pass ? "PASS " : "FAIL ") << e.name;
            if (!e.witness.empty()) std::cout << " -- " << e.witness;
            std::cout << "\n";
            passed += e.pass;
        }
        std::cout << "summary: " << passed << "/" << rep.entries.size() << " checks passed ("
                  << wall_ms << " ms)\n";
    }
    return rep.all_pass() ? 0 : 1;
}

Weight parse_weight(const std::string& text) { return Weight(Scalar::parse(text)); }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text << "\n";
}

int default_depth() {
    if (const char* env = std::getenv("SCHROQ_DEPTH")) return std::atoi(env);
    return 10;
}

void add_relation_entries(Report& rep, const std::vector<RelationCheck>& checks) {
    for (auto& rc : checks) rep.add(rc.relation, rc.pass, rc.detail);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with the quantum Schrodinger algebra"};
    app.require_subcommand(1);

    std::string lambda = "w", zdot = "z", report_mode = "text", filter, xi;
    std::string module_name = "verma", file, out_file;
    int depth = default_depth();
    app.add_option("--report", report_mode, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto add_common = [&](CLI::App* sub, bool with_weight = true) {
        if (with_weight) {
            sub->add_option("--lambda", lambda, "highest weight (default: the formal w)");
            sub->add_option("--z", zdot, "central charge (default: the formal z)");
            sub->add_option("--depth", depth, "truncation depth");
        }
        sub->add_option("--report", report_mode, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* relcheck = app.add_subcommand("relcheck", "defining relations on a module");
    add_common(relcheck);
    relcheck->add_option("--module", module_name, "verma or bmod")
        ->check(CLI::IsMember({"verma", "bmod"}));

    CLI::App* verma = app.add_subcommand("verma", "highest weight module summary");
    add_common(verma);

    CLI::App* bmod = app.add_subcommand("bmod", "lowest-dimension weight module summary");
    add_common(bmod);

    CLI::App* singvec = app.add_subcommand("singvec", "singular vector search");
    add_common(singvec);

    CLI::App* tensor = app.add_subcommand("tensor", "tensor realization check");
    add_common(tensor);

    CLI::App* casimir = app.add_subcommand("casimir", "central element checks");
    add_common(casimir);

    CLI::App* block = app.add_subcommand("block", "block classification");
    add_common(block);
    block->add_option("--xi", xi, "weight coset label (echoed in the report)");

    CLI::App* quiver = app.add_subcommand("quiver", "quiver representation tools");
    quiver->require_subcommand(1);
    CLI::App* qcheck = quiver->add_subcommand("check", "verify the quiver relations");
    CLI::App* qf = quiver->add_subcommand("f", "module file -> quiver representation");
    CLI::App* qg = quiver->add_subcommand("g", "quiver representation -> module file");
    CLI::App* qround = quiver->add_subcommand("roundtrip", "glue, recover, and compare");
    for (CLI::App* sub : {qcheck, qf, qg, qround}) {
        sub->add_option("file", file, "input json file")->required();
        add_common(sub, false);
    }
    qg->add_option("--out", out_file, "output file (stdout when omitted)");

    CLI::App* accept = app.add_subcommand("accept", "run the acceptance suite");
    accept->add_option("--filter", filter, "only checks whose name contains this");
    add_common(accept, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    Report rep;
    try {
        if (*relcheck) {
            rep.command = "relcheck";
            rep.inputs = {{"module", module_name},
                          {"lambda", parse_weight(lambda).str()},
                          {"z", Scalar::parse(zdot).str()},
                          {"depth", std::to_string(depth)}};
            GradedModule m = module_name == "bmod"
                                 ? build_B_tilde(Scalar::parse(zdot), depth)
                                 : build_verma(parse_weight(lambda), Scalar::parse(zdot), depth);
            add_relation_entries(rep, check_relations(m));
        } else if (*verma) {
            rep.command = "verma";
            Weight lam = parse_weight(lambda);
            Scalar z = Scalar::parse(zdot);
            rep.inputs = {{"lambda", lam.str()},
                          {"z", z.str()},
                          {"depth", std::to_string(depth)}};
            GradedModule m = build_verma(lam, z, depth);
            std::ostringstream dims;
            for (int n = 0; n <= m.truncation(); ++n) {
                if (n) dims << " ";
                dims << m.dim(n);
            }
            rep.add("dimensions by depth", true, dims.str());
            rep.add("relations", relations_ok(m));
            auto v = reducibility_verdict(lam, z, depth);
            rep.add("simple up to this depth", !v.reducible,
                    v.reducible ? "singular vector at depth " +
                                      std::to_string(v.singular_depth) + ", weight " +
                                      v.singular_weight->str()
                                : "");
        } else if (*bmod) {
            rep.command = "bmod";
            Scalar z = Scalar::parse(zdot);
            rep.inputs = {{"z", z.str()}, {"depth", std::to_string(depth)}};
            GradedModule m = build_B_tilde(z, depth);
            add_relation_entries(rep, check_relations(m));
        } else if (*singvec) {
            rep.command = "singvec";
            Weight lam = parse_weight(lambda);
            Scalar z = Scalar::parse(zdot);
            rep.inputs = {{"lambda", lam.str()},
                          {"z", z.str()},
                          {"depth", std::to_string(depth)}};
            auto v = reducibility_verdict(lam, z, depth);
            rep.add("search", true,
                    v.reducible ? "singular vector at depth " +
                                      std::to_string(v.singular_depth) + ", weight " +
                                      v.singular_weight->str()
                                : "no singular vectors up to depth " + std::to_string(depth));
        } else if (*tensor) {
            rep.command = "tensor";
            Weight lam = parse_weight(lambda);
            Scalar z = Scalar::parse(zdot);
            rep.inputs = {{"lambda", lam.str()},
                          {"z", z.str()},
                          {"depth", std::to_string(depth)}};
            GradedModule bt = build_B_tilde(z, depth);
            GradedModule nsl2 =
                build_verma_sl2(Weight(lam.value() * Scalar::t(1)), depth);
            GradedModule t = tensor_with_B(nsl2, bt);
            GradedModule vm = build_verma(lam, z, t.truncation());
            auto maps = find_intertwiners(vm, t);
            rep.add("hom space is one-dimensional", maps.size() == 1,
                    "dimension " + std::to_string(maps.size()));
            rep.add("map is invertible on the interior",
                    !maps.empty() && maps[0].invertible_interior(vm, t));
        } else if (*casimir) {
            rep.command = "casimir";
            Weight lam = parse_weight(lambda);
            Scalar z = Scalar::parse(zdot);
            rep.inputs = {{"lambda", lam.str()}, {"z", z.str()}};
            PBWElement ct = tilde_C();
            bool central = true;
            for (Gen g : kAllGens)
                central = central && commutator(ct, PBWElement::gen(g)).is_zero();
            rep.add("central element commutes with every generator", central);
            GradedModule m = build_verma(lam, z, 6);
            Scalar ev = hw_eigenvalue(lam, z);
            GradedVec v = GradedVec::basis(0, 0, 1);
            rep.add("highest weight eigenvalue matches the closed form",
                    act(m, ct, v) == ev * v, ev.str());
        } else if (*block) {
            rep.command = "block";
            Weight lam = parse_weight(lambda);
            Scalar z = Scalar::parse(zdot);
            rep.inputs = {{"lambda", lam.str()}, {"z", z.str()}};
            if (!xi.empty()) rep.inputs.emplace_back("xi", xi);
            auto blk = classify_block(block_of(lam, z));
            rep.add("kind", true, block_kind_name(blk.kind));
            for (auto& [w, kind] : blk.simples)
                rep.add("simple", true,
                        w.str() + std::string(kind == SimpleKind::Verma
                                                  ? " (simple highest weight module)"
                                                  : " (proper simple quotient)"));
            if (!blk.warning.empty()) rep.add("warning", true, blk.warning);
        } else if (*quiver) {
            if (*qcheck) {
                rep.command = "quiver check";
                rep.inputs = {{"file", file}};
                QuiverRep qrep = quiver_from_json(read_file(file));
                for (auto& rc : quiver_relation_check(qrep))
                    rep.add(rc.relation, rc.pass, rc.detail);
            } else if (*qg) {
                QuiverRep qrep = quiver_from_json(read_file(file));
                write_output(out_file, fd_module_to_json(quiver_to_module(qrep)));
                return 0;
            } else if (*qf) {
                FdModule V = fd_module_from_json(read_file(file));
                write_output(out_file, quiver_to_json(module_to_quiver(V)));
                return 0;
            } else {
                rep.command = "quiver roundtrip";
                rep.inputs = {{"file", file}};
                QuiverRep qrep = quiver_from_json(read_file(file));
                std::vector<Mat> phi = roundtrip_iso(qrep);
                bool ok = true;
                for (size_t i = 0; i < qrep.dims.size(); ++i)
                    ok = ok && phi[i].rank() == static_cast<size_t>(qrep.dims[i]);
                rep.add("vertex isomorphisms found", ok,
                        std::to_string(phi.size()) + " vertices");
            }
        } else if (*accept) {
            rep.command = "accept";
            if (!filter.empty()) rep.inputs.emplace_back("filter", filter);
            for (auto& r : acceptance_checks(filter)) rep.add(r.name, r.pass, r.detail);
        }
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    double wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return emit(rep, report_mode, wall_ms);
}
