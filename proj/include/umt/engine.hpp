#pragma once

// The utterance-meaning transducer: priority-queue top-down recognition over
// a compiled grammar, the semantic queue that turns a parse into a logical
// form, and production of an utterance from a logical form.

#include <functional>
#include <string>
#include <vector>

#include "umt/mcfg.hpp"

namespace umt {

/// One row of a parser trace.
struct TraceRow {
  std::size_t step = 0;
  std::string input;
  std::string queue;
  std::string operation;
};

/// `step<TAB>input<TAB>queue<TAB>operation` lines.
std::string format_trace(const std::vector<TraceRow>& rows);

/// An axiom scanned during a parse.
struct ScanEvent {
  std::size_t rule = 0;
  NodeIndex index;
  std::string input_after;
};

struct Parse {
  std::vector<TraceRow> trace;
  std::vector<ScanEvent> scans;
  /// Rules expanded or scanned, in order.
  std::vector<std::size_t> rules;
};

struct ParseOptions {
  /// Longest node index a prediction may carry; 0 picks a bound from the
  /// input length.
  std::size_t max_index_length = 0;
  /// Stop after this many parses when enumerating.
  std::size_t max_parses = 64;
};

class Parser {
 public:
  explicit Parser(const Mcfg& g);

  const Mcfg& grammar() const { return g_; }

  /// First parse of `tokens`; throws Reject.
  Parse recognize(const std::vector<std::string>& tokens, const ParseOptions& options = {}) const;
  bool accepts(const std::vector<std::string>& tokens, const ParseOptions& options = {}) const;

  /// Calls `visit` on each parse until it returns false. Returns the number of
  /// parses visited; throws Reject when there is none.
  std::size_t parses(const std::vector<std::string>& tokens,
                     const std::function<bool(const Parse&)>& visit,
                     const ParseOptions& options = {}) const;

 private:
  struct Search;
  const Mcfg& g_;
  std::vector<std::size_t> min_chars_;  // per rule
  std::map<McfgCategory, std::size_t> cat_min_chars_;
};

struct Understanding {
  Term meaning;
  Parse parse;
  std::vector<TraceRow> trace;
};

/// Runs the semantic queue over a finished parse. Throws SemanticStuck.
Understanding understand_parse(const Mcfg& g, const Parse& parse);

/// First parse whose semantic queue reduces to a single term. Throws Reject
/// or SemanticStuck.
Understanding understand(const Parser& parser, const std::vector<std::string>& tokens,
                         const ParseOptions& options = {});

/// Every distinct meaning of `tokens` (alpha-equivalence classes), in parse
/// order. Empty when the utterance is rejected.
std::vector<Term> meanings(const Parser& parser, const std::vector<std::string>& tokens,
                           const ParseOptions& options = {});

struct Production {
  std::string utterance;
  DerivationPtr tree;
  /// Other surface strings realizing the same meaning.
  std::vector<std::string> alternatives;
};

/// Smallest complete derivation whose meaning is alpha-equivalent to
/// `meaning`, searching only entries whose constants occur in it. Throws
/// Unrealizable.
Production produce(const Lexicon& lex, const Term& meaning, std::size_t budget = 0);

/// Complete derivations realizing `meaning`, smallest first.
std::vector<DerivationPtr> realizing_derivations(const Lexicon& lex, const Term& meaning,
                                                 std::size_t budget = 0);

/// Every surface string realizing `meaning` within the budget.
std::vector<std::string> realizations(const Lexicon& lex, const Term& meaning,
                                      std::size_t budget = 0);

}  // namespace umt
