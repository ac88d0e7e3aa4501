#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hefcheck {

// Position of a token in a source text, attached to every parse error.
struct SourceSpan {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    std::size_t offset = 0;
};

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  public:
    ParseError(SourceSpan span, const std::string& message)
        : Error("parse error at " + std::to_string(span.line) + ":" +
                std::to_string(span.column) + ": " + message),
          span_(span) {}
    const SourceSpan& span() const { return span_; }

  private:
    SourceSpan span_;
};

class EmptyHeadError : public Error {
  public:
    explicit EmptyHeadError(std::size_t rule_index)
        : Error("rule " + std::to_string(rule_index) + " has an empty head"),
          rule_index_(rule_index) {}
    std::size_t rule_index() const { return rule_index_; }

  private:
    std::size_t rule_index_;
};

class BadAtomNameError : public Error {
  public:
    explicit BadAtomNameError(const std::string& token)
        : Error("bad atom name '" + token + "'"), token_(token) {}
    const std::string& token() const { return token_; }

  private:
    std::string token_;
};

class NotThreeCnfError : public Error {
  public:
    NotThreeCnfError(std::size_t clause_index, const std::string& detail)
        : Error("clause " + std::to_string(clause_index) + ": " + detail),
          clause_index_(clause_index) {}
    std::size_t clause_index() const { return clause_index_; }

  private:
    std::size_t clause_index_;
};

class CapExceededError : public Error {
  public:
    using Error::Error;
};

class BadSubsetError : public Error {
  public:
    using Error::Error;
};

class DisjunctiveInputError : public Error {
  public:
    using Error::Error;
};

class NotElementaryError : public Error {
  public:
    using Error::Error;
};

class NotDisjunctiveError : public Error {
  public:
    using Error::Error;
};

class TimeBudgetError : public Error {
  public:
    using Error::Error;
};

}  // namespace hefcheck
