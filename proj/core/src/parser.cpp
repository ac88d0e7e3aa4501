#include "hefcheck/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "hefcheck/errors.hpp"

namespace hefcheck {

namespace {

enum class Tok { atom, kw_not, pipe, comma, implied_by, dot, end };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_trivia();
        SourceSpan span = here();
        if (pos_ >= text_.size()) return {Tok::end, "", span};
        char c = text_[pos_];
        if (c == '|' || c == ';') {
            advance();
            return {Tok::pipe, std::string(1, c), span};
        }
        if (c == ',') {
            advance();
            return {Tok::comma, ",", span};
        }
        if (c == '.') {
            advance();
            return {Tok::dot, ".", span};
        }
        if (c == ':') {
            advance();
            if (pos_ >= text_.size() || text_[pos_] != '-')
                throw ParseError(span, "expected ':-'");
            advance();
            return {Tok::implied_by, ":-", span};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                word.push_back(text_[pos_]);
                advance();
            }
            if (word == "not") return {Tok::kw_not, word, span};
            if (!valid_atom_name(word))
                throw ParseError(span, "bad atom name '" + word + "'");
            return {Tok::atom, word, span};
        }
        throw ParseError(span, std::string("unexpected character '") + c + "'");
    }

  private:
    SourceSpan here() const { return {line_, col_, pos_}; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

Program parse_program(std::string_view text) {
    Lexer lex(text);
    std::vector<RawRule> rules;
    Token t = lex.next();
    while (t.kind != Tok::end) {
        RawRule rule;
        // Head: atom ("|" atom)*. A rule starting with ":-" has no head.
        if (t.kind == Tok::implied_by) throw EmptyHeadError(rules.size());
        if (t.kind != Tok::atom)
            throw ParseError(t.span, "expected rule head, found '" + t.text + "'");
        rule.head.push_back(t.text);
        t = lex.next();
        while (t.kind == Tok::pipe) {
            t = lex.next();
            if (t.kind != Tok::atom)
                throw ParseError(t.span, "expected atom after '|'");
            rule.head.push_back(t.text);
            t = lex.next();
        }
        if (t.kind == Tok::implied_by) {
            // Body: lit ("," lit)*; an empty body is written by omitting ":-".
            for (;;) {
                t = lex.next();
                bool negated = false;
                if (t.kind == Tok::kw_not) {
                    negated = true;
                    t = lex.next();
                }
                if (t.kind != Tok::atom)
                    throw ParseError(t.span, "expected body literal, found '" + t.text + "'");
                (negated ? rule.neg_body : rule.pos_body).push_back(t.text);
                t = lex.next();
                if (t.kind != Tok::comma) break;
            }
        }
        if (t.kind != Tok::dot)
            throw ParseError(t.span, "expected '.' at end of rule, found '" + t.text + "'");
        rules.push_back(std::move(rule));
        t = lex.next();
    }
    return Program::intern(rules);
}

}  // namespace hefcheck
