#pragma once

// Reference implementations and randomized property suites shared by the unit
// tests and the acceptance runner.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "umt/engine.hpp"
#include "umt/io.hpp"

namespace oracle {

// Locally nameless lambda terms: bound variables are de Bruijn indices, free
// variables keep their names. Structural equality is alpha-equivalence.
struct Db {
  enum class Kind { Free, Bound, Lam, App, Empty } kind = Kind::Empty;
  std::string name;
  int index = 0;
  std::vector<Db> kids;
  friend bool operator==(const Db&, const Db&) = default;
};

Db to_db(const umt::Term& t);
std::string show(const Db& t);
Db subst_free(const Db& t, const std::string& v, const Db& u);
std::optional<Db> step(const Db& t);
/// Normal form and the number of leftmost-outermost steps taken, or nullopt
/// when `budget` runs out.
std::optional<std::pair<Db, std::size_t>> normalize(const Db& t, std::size_t budget);
std::vector<std::string> free_names(const Db& t);

/// Licensee ids carried by more than one non-head sign, counted by brute force.
bool smc_clash(const umt::Expression& e);

/// Morph tokens of every sign, sorted.
std::vector<std::string> token_bag(const umt::Expression& e);

/// Whether two rule lists, written as `render_rule` prints them, are equal up
/// to a bijective renaming of categories and a renaming of string variables.
/// Axiom literals must agree exactly.
bool isomorphic_rules(const std::vector<std::string>& a, const std::vector<std::string>& b,
                      std::string* why = nullptr);

/// Same number of entries and a pairing of entries with identical exponents
/// and category markers, alpha-equivalent semantics, and features equal under
/// one bijective renaming of selector/base ids and one of licensor/licensee ids.
bool isomorphic_lexicons(const umt::Lexicon& a, const umt::Lexicon& b, std::string* why = nullptr);

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

umt::Term term(Rng& rng, int depth);
/// A 5-entry lexicon over a small feature alphabet; every entry well formed.
umt::Lexicon lexicon(Rng& rng, std::size_t entries = 5);

}  // namespace gen

namespace props {

struct Report {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

std::string data_path(const std::string& file);

Report lambda_idempotence(std::uint64_t seed, std::size_t n);
Report lambda_abstraction_inverse(std::uint64_t seed, std::size_t n);
Report lambda_substitution(std::uint64_t seed, std::size_t n);
Report mg_laws(std::uint64_t seed, std::size_t lexicons);
Report mg_smc(std::uint64_t seed, std::size_t n);
Report mg_mcfg_equivalence(std::uint64_t seed, std::size_t lexicons, std::size_t depth);
Report round_trip(const umt::Lexicon& lex, std::size_t depth);

}  // namespace props
