#pragma once

// Lexicon acquisition from utterance-meaning pairs: alignment of exponents
// and meanings, factoring by lambda abstraction, and repair after punishment.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "umt/io.hpp"
#include "umt/mg.hpp"

namespace umt {

/// Result of one-hole anti-unification: `a` is `pattern` with `hole` replaced
/// by `residue_a`, likewise for `b`. A pattern that is just the hole means the
/// terms share nothing; no residues means they are alpha-equivalent.
struct SemanticAlignment {
  Term pattern;
  std::string hole;
  std::optional<Term> residue_a, residue_b;

  bool identical() const { return !residue_a.has_value(); }
  bool shares_structure() const;
};

SemanticAlignment anti_unify(const Term& a, const Term& b);

/// A maximal run of morph tokens: shared by both sides or a residue pair.
struct Segment {
  bool shared = false;
  std::vector<std::string> a, b;
};

struct Alignment {
  std::vector<Segment> segments;
  SemanticAlignment semantics;
  /// Constants occurring in both meanings.
  std::set<std::string> shared_constants;

  std::size_t shared_length() const;
  std::size_t residue_count() const;
};

/// Token-level alignment by longest common runs (leftmost-longest); with
/// `morphemes`, single-token residue pairs sharing a prefix of at least three
/// characters are split into stem and `-suffix`. None when nothing is shared.
std::optional<Alignment> align(const std::vector<std::string>& a, const Term& meaning_a,
                               const std::vector<std::string>& b, const Term& meaning_b,
                               bool morphemes = true);
std::optional<Alignment> align(const Sign& a, const Sign& b, bool morphemes = true);

struct LearnerOptions {
  /// Names handed out before falling back to t1, t2, ...
  std::vector<std::string> type_names;
  /// Derivation budget for learner-side searches; 0 means per-lexicon default.
  std::size_t budget = 0;
};

class Learner {
 public:
  explicit Learner(LearnerOptions options = {});

  const Lexicon& lexicon() const { return lex_; }
  std::size_t time() const { return time_; }
  const std::vector<Ump>& endorsed() const { return endorsed_; }
  const std::vector<Ump>& punished() const { return punished_; }
  const std::map<std::string, std::string>& aliases() const { return aliases_; }
  /// What each update did, one line per decision.
  const std::vector<std::string>& journal() const { return journal_; }

  /// One teaching step; always advances time.
  void ingest(const Ump& ump);

  /// Utterance for `meaning` from the current lexicon; throws Unrealizable.
  std::string express(const Term& meaning) const;
  std::vector<std::string> expressions(const Term& meaning) const;

  /// Records an endorsed production.
  void commit(const Ump& ump);
  /// Revises the lexicon after a punished production; returns the name of
  /// the repair applied. Throws NoRepairFound, leaving the lexicon unchanged.
  std::string repair(const Ump& punished);

  /// Whether the lexicon derives `ump` (meanings compared modulo aliases).
  bool derivable(const Ump& ump) const;

  /// Lexicon file with `#@` headers carrying the rest of the state.
  std::string checkpoint() const;
  static Learner restore(std::string_view text, LearnerOptions options = {});

 private:
  bool derivable(const Lexicon& lex, const Ump& ump) const;
  bool consistent(const Lexicon& lex) const;
  Term normalize(const Term& t) const;
  std::string fresh_type(const Lexicon& lex);
  std::string fresh_licensee(const Lexicon& lex) const;
  std::string fresh_var(const std::set<std::string>& avoid);
  std::size_t budget(const Lexicon& lex) const;

  bool try_analogy(const Ump& ump);
  bool try_partial(const Ump& ump);
  void revise();
  bool factor_pair(std::size_t i, std::size_t j);
  bool repair_split(const Ump& punished);
  bool repair_block(const Ump& punished);
  void note(std::string line) { journal_.push_back(std::move(line)); }

  LearnerOptions options_;
  Lexicon lex_;
  std::size_t time_ = 0;
  std::vector<Ump> endorsed_, punished_;
  std::map<std::string, std::string> aliases_;
  /// Irregular form -> stem it was modelled on.
  std::map<std::string, std::string> irregular_;
  std::set<std::string> blacklist_;
  std::size_t type_counter_ = 0, var_counter_ = 0;
  std::vector<std::string> journal_;
};

}  // namespace umt
