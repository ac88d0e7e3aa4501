#include "hefcheck/dimacs.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "hefcheck/errors.hpp"

namespace hefcheck {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    SourceSpan here() const { return {line, col, pos}; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws_and_comments() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == 'c' && col == 1) {
                while (pos < text.size() && text[pos] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws_and_comments();
        return pos >= text.size();
    }

    std::string word() {
        skip_ws_and_comments();
        std::string w;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
            w.push_back(text[pos]);
            advance();
        }
        return w;
    }

    long integer() {
        skip_ws_and_comments();
        SourceSpan span = here();
        std::string w = word();
        if (w.empty()) throw ParseError(span, "unexpected end of input, expected integer");
        char* end = nullptr;
        long v = std::strtol(w.c_str(), &end, 10);
        if (end != w.c_str() + w.size())
            throw ParseError(span, "expected integer, found '" + w + "'");
        return v;
    }
};

}  // namespace

Cnf3 parse_dimacs(std::string_view text) {
    Cursor cur{text};
    cur.skip_ws_and_comments();
    SourceSpan header_span = cur.here();
    if (cur.word() != "p") throw ParseError(header_span, "expected 'p cnf' header");
    if (cur.word() != "cnf") throw ParseError(header_span, "expected 'p cnf' header");
    long vars = cur.integer();
    long clause_count = cur.integer();
    if (vars < 1) throw ParseError(header_span, "variable count must be positive");
    if (clause_count < 1) throw ParseError(header_span, "clause count must be positive");

    Cnf3 f;
    f.num_vars = static_cast<int>(vars);
    for (long ci = 0; ci < clause_count; ++ci) {
        std::vector<int> lits;
        for (;;) {
            SourceSpan span = cur.here();
            long lit = cur.integer();
            if (lit == 0) break;
            if (lit > vars || lit < -vars)
                throw ParseError(span, "literal " + std::to_string(lit) + " out of range");
            lits.push_back(static_cast<int>(lit));
        }
        if (lits.size() != 3)
            throw NotThreeCnfError(static_cast<std::size_t>(ci),
                                   "expected exactly 3 literals, found " + std::to_string(lits.size()));
        if (lits[0] == lits[1] || lits[0] == lits[2] || lits[1] == lits[2])
            throw NotThreeCnfError(static_cast<std::size_t>(ci), "duplicate literal in clause");
        f.clauses.push_back({lits[0], lits[1], lits[2]});
    }
    if (!cur.eof()) throw ParseError(cur.here(), "trailing input after last clause");
    return f;
}

std::string render_dimacs(const Cnf3& f) {
    std::string out = "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
    for (const auto& c : f.clauses) {
        out += std::to_string(c[0]) + " " + std::to_string(c[1]) + " " + std::to_string(c[2]) + " 0\n";
    }
    return out;
}

}  // namespace hefcheck
