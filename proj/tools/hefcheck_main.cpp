#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hefcheck/certificate_io.hpp"
#include "hefcheck/dep_graph.hpp"
#include "hefcheck/dimacs.hpp"
#include "hefcheck/elementary.hpp"
#include "hefcheck/errors.hpp"
#include "hefcheck/hef.hpp"
#include "hefcheck/parser.hpp"
#include "hefcheck/printer.hpp"
#include "hefcheck/sat_reduction.hpp"
#include "hefcheck/semantics.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 property holds / success, 1 property violated / invalid,
// 2 resource limit, 3 input or usage error.
constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitResourceLimit = 2;
constexpr int kExitInputError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hefcheck::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hefcheck::Error("cannot write '" + path + "'");
    out << content;
}

int env_threads() {
    const char* raw = std::getenv("HEFCHECK_THREADS");
    if (!raw) return 1;
    int n = std::atoi(raw);
    if (n < 1) return 1;
    return std::min(n, 64);
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::string> sorted_names(const hefcheck::Program& p, const hefcheck::AtomSet& s) {
    std::vector<std::string> names;
    for (int id = s.first(); id >= 0; id = s.next(id)) names.push_back(p.atom_name(id));
    std::sort(names.begin(), names.end());
    return names;
}

std::string joined(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += " ";
        out += names[i];
    }
    return out;
}

struct CommonOptions {
    int max_atoms = 0;   // 0: command default
    int max_subset = hefcheck::kDefaultSubsetCap;
    double time_budget = 0.0;  // seconds, 0: none
    std::string format = "text";

    hefcheck::Limits limits(int default_atom_cap) const {
        hefcheck::Limits l;
        l.atom_cap = max_atoms > 0 ? max_atoms : default_atom_cap;
        l.subset_cap = max_subset;
        l.threads = env_threads();
        if (time_budget > 0)
            l.time_budget = std::chrono::milliseconds(static_cast<long>(time_budget * 1000.0));
        return l;
    }
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--max-atoms", opts.max_atoms, "Atom cap for the analysis");
    cmd->add_option("--max-subset", opts.max_subset, "Subset enumeration cap");
    cmd->add_option("--time-budget", opts.time_budget, "Cooperative time budget in seconds");
    cmd->add_option("--format", opts.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

json stats_json(const hefcheck::HefStats& s) {
    return json{{"components_scanned", s.components_scanned},
                {"candidates", s.candidates},
                {"pruned_connectivity", s.pruned_connectivity},
                {"pruned_rule_conditions", s.pruned_rule_conditions},
                {"bruteforce_checks", s.bruteforce_checks}};
}

int cmd_check(const std::string& file, const std::string& mode, const CommonOptions& opts,
              const std::string& certificate_path, const std::string& dot_path) {
    hefcheck::Program p = hefcheck::parse_program(read_file(file));
    if (!dot_path.empty()) write_file(dot_path, hefcheck::DepGraph::build(p).to_dot(p));

    if (mode == "hcf") {
        hefcheck::HcfVerdict v = hefcheck::is_hcf(p);
        if (opts.format == "json") {
            json j{{"version", 1}, {"mode", "hcf"}, {"status", v.hcf ? "hcf" : "not_hcf"}};
            if (!v.hcf) {
                j["violating_rule"] = v.violation->rule_index;
                j["atoms"] = {p.atom_name(v.violation->atom_a), p.atom_name(v.violation->atom_b)};
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "status: " << (v.hcf ? "hcf" : "not_hcf") << "\n";
            if (!v.hcf) {
                std::cout << "violating rule: " << v.violation->rule_index << ": "
                          << hefcheck::render_rule(p, p.rules()[static_cast<std::size_t>(v.violation->rule_index)])
                          << "\n";
                std::cout << "atoms in one component: " << p.atom_name(v.violation->atom_a) << " "
                          << p.atom_name(v.violation->atom_b) << "\n";
            }
        }
        return v.hcf ? kExitHolds : kExitViolated;
    }

    hefcheck::HefVerdict v = hefcheck::is_hef(p, opts.limits(hefcheck::kDefaultAtomCap));
    if (opts.format == "json") {
        json j{{"version", 1}, {"mode", "hef"}, {"status", hefcheck::to_string(v.status)},
               {"stats", stats_json(v.stats)}};
        if (v.certificate) {
            j["elementary_set"] = sorted_names(p, v.certificate->elementary_set);
            j["violating_rule"] = v.certificate->violating_rule;
            std::vector<std::string> witness;
            for (const auto& r : v.certificate->witness.rules())
                witness.push_back(hefcheck::render_rule(v.certificate->witness, r));
            j["witness"] = witness;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "status: " << hefcheck::to_string(v.status) << "\n";
        if (v.certificate) {
            std::cout << "elementary set: " << joined(sorted_names(p, v.certificate->elementary_set)) << "\n";
            std::cout << "violating rule: " << v.certificate->violating_rule << ": "
                      << hefcheck::render_rule(p, p.rules()[static_cast<std::size_t>(v.certificate->violating_rule)])
                      << "\n";
            std::cout << "witness:\n";
            for (const auto& r : v.certificate->witness.rules())
                std::cout << "  " << hefcheck::render_rule(v.certificate->witness, r) << "\n";
        }
    }
    if (!certificate_path.empty() && v.certificate)
        write_file(certificate_path, hefcheck::certificate_to_json(p, *v.certificate));
    switch (v.status) {
        case hefcheck::HefStatus::hef: return kExitHolds;
        case hefcheck::HefStatus::not_hef: return kExitViolated;
        case hefcheck::HefStatus::resource_limit: return kExitResourceLimit;
    }
    return kExitInputError;
}

int cmd_elementary(const std::string& file, const std::string& set_csv, const CommonOptions& opts) {
    hefcheck::Program p = hefcheck::parse_program(read_file(file));
    hefcheck::AtomSet y = p.set_of(split_names(set_csv));
    if (y.empty()) throw hefcheck::Error("--set must name at least one atom");
    hefcheck::ElementaryVerdict v = hefcheck::detail::elementary_bruteforce(
        y, p.rules(), opts.max_subset, opts.limits(hefcheck::kDefaultAtomCap).deadline());
    if (opts.format == "json") {
        json j{{"version", 1}, {"elementary", v.elementary}, {"set", sorted_names(p, y)}};
        if (v.failing_subset) j["non_outbound_subset"] = sorted_names(p, *v.failing_subset);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "elementary: " << (v.elementary ? "yes" : "no") << "\n";
        if (v.failing_subset)
            std::cout << "non-outbound subset: " << joined(sorted_names(p, *v.failing_subset)) << "\n";
    }
    return v.elementary ? kExitHolds : kExitViolated;
}

int cmd_verify(const std::string& file, const std::string& cert_path, const CommonOptions& opts) {
    hefcheck::Program p = hefcheck::parse_program(read_file(file));
    hefcheck::ParsedCertificate cert = hefcheck::parse_certificate_json(read_file(cert_path));
    hefcheck::CheckResult res = hefcheck::check_certificate(p, cert);
    if (opts.format == "json") {
        json j{{"version", 1}, {"valid", res.ok}};
        if (!res.ok) j["reason"] = res.reason;
        std::cout << j.dump(2) << "\n";
    } else {
        if (res.ok)
            std::cout << "certificate: valid\n";
        else
            std::cout << "certificate: invalid (" << res.reason << ")\n";
    }
    return res.ok ? kExitHolds : kExitViolated;
}

int cmd_stable(const std::string& file, const CommonOptions& opts) {
    hefcheck::Program p = hefcheck::parse_program(read_file(file));
    int cap = opts.max_atoms > 0 ? opts.max_atoms : hefcheck::kDefaultModelCap;
    auto models = hefcheck::stable_models(p, cap);
    if (opts.format == "json") {
        json j{{"version", 1}, {"models", json::array()}};
        for (const auto& m : models) j["models"].push_back(sorted_names(p, m));
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& m : models) std::cout << joined(sorted_names(p, m)) << "\n";
    }
    return kExitHolds;
}

int cmd_shift(const std::string& file) {
    hefcheck::Program p = hefcheck::parse_program(read_file(file));
    std::string text = hefcheck::render_program(hefcheck::shift(p));
    if (!text.empty()) std::cout << text << "\n";
    return kExitHolds;
}

int cmd_reduce(const std::string& cnf_path, std::string out_path) {
    hefcheck::Cnf3 f = hefcheck::parse_dimacs(read_file(cnf_path));
    hefcheck::Reduction r = hefcheck::build_reduction(f);
    if (out_path.empty()) out_path = std::filesystem::path(cnf_path).replace_extension(".lp").string();
    write_file(out_path, hefcheck::render_program(r.program) + "\n");
    std::cerr << "wrote " << r.program.rule_count() << " rules to " << out_path << "\n";
    return kExitHolds;
}

int cmd_xvalidate(const std::vector<std::string>& cnf_paths, const CommonOptions& opts,
                  const std::string& report_path) {
    hefcheck::Limits limits = opts.limits(hefcheck::kDefaultAtomCap);
    json report{{"version", 1}, {"results", json::array()}};
    bool any_refuted = false, any_inconclusive = false;
    for (const auto& path : cnf_paths) {
        hefcheck::Cnf3 f = hefcheck::parse_dimacs(read_file(path));
        hefcheck::CrossValidation cv = hefcheck::cross_validate(f, limits);
        json entry{{"file", path},
                   {"verdict", hefcheck::to_string(cv.verdict)},
                   {"hef_status", hefcheck::to_string(cv.hef_status)}};
        if (cv.satisfiable) entry["satisfiable"] = *cv.satisfiable;
        if (cv.model_set_elementary) entry["model_set_elementary"] = *cv.model_set_elementary;
        if (cv.certificate_valid) entry["certificate_valid"] = *cv.certificate_valid;
        if (!cv.note.empty()) entry["note"] = cv.note;
        report["results"].push_back(entry);
        if (opts.format != "json") {
            std::cout << path << ": " << hefcheck::to_string(cv.verdict) << " (sat="
                      << (cv.satisfiable ? (*cv.satisfiable ? "yes" : "no") : "unknown")
                      << ", hef=" << hefcheck::to_string(cv.hef_status) << ")\n";
        }
        any_refuted |= cv.verdict == hefcheck::CrossValidation::Verdict::refuted;
        any_inconclusive |= cv.verdict == hefcheck::CrossValidation::Verdict::inconclusive;
    }
    if (opts.format == "json") std::cout << report.dump(2) << "\n";
    if (!report_path.empty()) write_file(report_path, report.dump(2) + "\n");
    if (any_refuted) return kExitViolated;
    if (any_inconclusive) return kExitResourceLimit;
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural analyzer for propositional disjunctive logic programs"};
    app.require_subcommand(1);

    CommonOptions opts;

    auto* check = app.add_subcommand("check", "Decide head-cycle-freeness or head-elementary-set-freeness");
    std::string check_file, check_mode = "hef", certificate_path, dot_path;
    check->add_option("file", check_file, "Program file (.lp)")->required();
    check->add_option("--mode", check_mode, "Property to check: hcf or hef")
        ->check(CLI::IsMember({"hcf", "hef"}));
    check->add_option("--certificate", certificate_path, "Write the refutation certificate JSON here");
    check->add_option("--dot", dot_path, "Write the positive dependency graph in DOT format");
    add_common(check, opts);

    auto* elementary = app.add_subcommand("elementary", "Decide whether a set of atoms is elementary");
    std::string elem_file, elem_set;
    elementary->add_option("file", elem_file, "Program file (.lp)")->required();
    elementary->add_option("--set", elem_set, "Comma-separated atom names")->required();
    add_common(elementary, opts);

    auto* verify = app.add_subcommand("verify", "Verify a refutation certificate against a program");
    std::string verify_file, verify_cert;
    verify->add_option("file", verify_file, "Program file (.lp)")->required();
    verify->add_option("certificate", verify_cert, "Certificate JSON file")->required();
    add_common(verify, opts);

    auto* stable = app.add_subcommand("stable", "Enumerate the stable models");
    std::string stable_file;
    stable->add_option("file", stable_file, "Program file (.lp)")->required();
    add_common(stable, opts);

    auto* shift = app.add_subcommand("shift", "Print the shifted (nondisjunctive) program");
    std::string shift_file;
    shift->add_option("file", shift_file, "Program file (.lp)")->required();

    auto* reduce = app.add_subcommand("reduce", "Generate the analysis program for a 3-CNF formula");
    std::string reduce_cnf, reduce_out;
    reduce->add_option("cnf", reduce_cnf, "DIMACS file (.cnf)")->required();
    reduce->add_option("-o,--output", reduce_out, "Output program path (default: input with .lp)");

    auto* xvalidate = app.add_subcommand(
        "xvalidate", "Cross-validate satisfiability against the generated program's analysis");
    std::vector<std::string> xval_cnfs;
    std::string xval_report;
    xvalidate->add_option("cnf", xval_cnfs, "DIMACS files (.cnf)")->required();
    xvalidate->add_option("--report", xval_report, "Write the JSON report here");
    add_common(xvalidate, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (check->parsed()) return cmd_check(check_file, check_mode, opts, certificate_path, dot_path);
        if (elementary->parsed()) return cmd_elementary(elem_file, elem_set, opts);
        if (verify->parsed()) return cmd_verify(verify_file, verify_cert, opts);
        if (stable->parsed()) return cmd_stable(stable_file, opts);
        if (shift->parsed()) return cmd_shift(shift_file);
        if (reduce->parsed()) return cmd_reduce(reduce_cnf, reduce_out);
        if (xvalidate->parsed()) return cmd_xvalidate(xval_cnfs, opts, xval_report);
    } catch (const hefcheck::CapExceededError& ex) {
        std::cerr << "resource limit: " << ex.what() << "\n";
        return kExitResourceLimit;
    } catch (const hefcheck::TimeBudgetError& ex) {
        std::cerr << "resource limit: " << ex.what() << "\n";
        return kExitResourceLimit;
    } catch (const hefcheck::Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
