#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace umt {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define UMT_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  };

// lambda-core
UMT_DEFINE_ERROR(NonTerminating)
UMT_DEFINE_ERROR(SubtermNotFound)
UMT_DEFINE_ERROR(VariableClash)
UMT_DEFINE_ERROR(FormationError)

// mg-kernel
UMT_DEFINE_ERROR(FeatureMismatch)
UMT_DEFINE_ERROR(SmcViolation)
UMT_DEFINE_ERROR(NoRedex)

// mcfg-compiler
UMT_DEFINE_ERROR(EmptyLexicon)
UMT_DEFINE_ERROR(ArityMismatch)

// umt-engine
UMT_DEFINE_ERROR(SemanticStuck)
UMT_DEFINE_ERROR(Unrealizable)

// learner / teacher
UMT_DEFINE_ERROR(FactoringRegression)
UMT_DEFINE_ERROR(NoRepairFound)
UMT_DEFINE_ERROR(ScriptInvalid)

#undef UMT_DEFINE_ERROR

/// Malformed concrete syntax; carries the byte offset of the failure.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Malformed input file (lexicon, corpus, script); carries the line number.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Utterance not recognized; `position` is the 1-based token at which no
/// prediction could be scanned, `expected` the axiom literals tried there.
class Reject : public Error {
 public:
  Reject(const std::string& what, std::size_t position, std::vector<std::string> expected)
      : Error(what), position_(position), expected_(std::move(expected)) {}
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace umt
