#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hefcheck/hef.hpp"
#include "hefcheck/program.hpp"

namespace hefcheck {

// Hash binding a certificate to a program, taken over the canonical
// rendering so formatting differences in the source do not matter.
std::string program_sha256(const Program& p);

// Serialized certificate, schema version 1:
//   {"version":1, "program_sha256":hex, "status":"not_hef",
//    "elementary_set":[names...], "witness":[rule lines...],
//    "violating_rule":index}
// Atom names sorted, witness rules in canonical render form, rule index
// 0-based in source order. Output is byte-deterministic.
std::string certificate_to_json(const Program& p, const HefCertificate& cert);

struct ParsedCertificate {
    int version = 0;
    std::string program_sha256;
    std::string status;
    std::vector<std::string> elementary_set;
    std::vector<std::string> witness;
    int violating_rule = -1;
};

// Structural JSON validation only; malformed input raises Error.
ParsedCertificate parse_certificate_json(std::string_view text);

// Full semantic validation of a parsed certificate against a program:
// hash match, known atoms, witness well-formedness, and the certificate
// invariants. Never throws; failures carry a reason.
CheckResult check_certificate(const Program& p, const ParsedCertificate& cert);

}  // namespace hefcheck
