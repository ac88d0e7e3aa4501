#include "hefcheck/certificate_io.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "hefcheck/errors.hpp"
#include "hefcheck/parser.hpp"
#include "hefcheck/printer.hpp"
#include "hefcheck/sha256.hpp"

namespace hefcheck {

std::string program_sha256(const Program& p) {
    // Hash form: rules in source order, atom names sorted inside each
    // part. Invariant under whitespace, comments and atom reordering;
    // sensitive to rule changes and rule order.
    std::string text;
    auto append_sorted = [&p, &text](const AtomSet& s, const char* prefix) {
        std::vector<std::string> names;
        for (int id = s.first(); id >= 0; id = s.next(id)) names.push_back(p.atom_name(id));
        std::sort(names.begin(), names.end());
        for (const auto& n : names) {
            text += prefix;
            text += n;
        }
    };
    for (const Rule& r : p.rules()) {
        append_sorted(r.head, "|");
        append_sorted(r.pos_body, ",");
        append_sorted(r.neg_body, ",~");
        text += ".\n";
    }
    return sha256_hex(text);
}

std::string certificate_to_json(const Program& p, const HefCertificate& cert) {
    nlohmann::json j;
    j["version"] = 1;
    j["program_sha256"] = program_sha256(p);
    j["status"] = "not_hef";
    std::vector<std::string> names;
    for (int id = cert.elementary_set.first(); id >= 0; id = cert.elementary_set.next(id))
        names.push_back(p.atom_name(id));
    std::sort(names.begin(), names.end());
    j["elementary_set"] = names;
    std::vector<std::string> witness;
    for (const Rule& r : cert.witness.rules()) witness.push_back(render_rule(cert.witness, r));
    j["witness"] = witness;
    j["violating_rule"] = cert.violating_rule;
    return j.dump(2) + "\n";
}

ParsedCertificate parse_certificate_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(std::string("malformed certificate JSON: ") + ex.what());
    }
    ParsedCertificate cert;
    try {
        cert.version = j.at("version").get<int>();
        cert.program_sha256 = j.at("program_sha256").get<std::string>();
        cert.status = j.at("status").get<std::string>();
        cert.elementary_set = j.at("elementary_set").get<std::vector<std::string>>();
        cert.witness = j.at("witness").get<std::vector<std::string>>();
        cert.violating_rule = j.at("violating_rule").get<int>();
    } catch (const nlohmann::json::exception& ex) {
        throw Error(std::string("certificate JSON missing or mistyped field: ") + ex.what());
    }
    if (cert.version != 1)
        throw Error("unsupported certificate version " + std::to_string(cert.version));
    return cert;
}

CheckResult check_certificate(const Program& p, const ParsedCertificate& cert) {
    if (cert.status != "not_hef") return {false, "certificate status is not 'not_hef'"};
    if (cert.program_sha256 != program_sha256(p))
        return {false, "certificate was issued for a different program (hash mismatch)"};

    HefCertificate hc;
    hc.elementary_set = AtomSet(p.atom_count());
    for (const auto& name : cert.elementary_set) {
        auto id = p.atom_id(name);
        if (!id) return {false, "elementary set atom '" + name + "' does not occur in the program"};
        hc.elementary_set.insert(*id);
    }
    if (hc.elementary_set.empty()) return {false, "elementary set is empty"};

    std::string witness_text;
    for (const auto& line : cert.witness) {
        witness_text += line;
        witness_text += "\n";
    }
    try {
        hc.witness = parse_program(witness_text);
    } catch (const Error& ex) {
        return {false, std::string("witness rule does not parse: ") + ex.what()};
    }
    hc.violating_rule = cert.violating_rule;
    return verify_certificate(p, hc);
}

}  // namespace hefcheck
