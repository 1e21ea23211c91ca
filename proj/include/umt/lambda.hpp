#pragma once

// Untyped lambda calculus over named variables: terms, capture-avoiding
// substitution, and the renaming / application / abstraction conversions.

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "umt/error.hpp"

namespace umt {

/// Reader-facing classification of variable names. Never consulted by the
/// reduction machinery.
enum class VarKind { PredicateConstant, IndividualConstant, IndividualVariable, TermVariable };

/// Heuristic kind of a name: upper-case initial -> term variable, single
/// lower-case letter from u..z -> individual variable, otherwise a constant.
VarKind var_kind(std::string_view name);

/// Immutable lambda term with shared structure. A default-constructed term is
/// the distinguished empty term (the semantics of silent lexicon entries).
class Term {
 public:
  enum class Kind { Var, Abs, App, Empty };

  Term();

  static Term var(std::string name);
  /// Church's formation rule: `binder` must occur free in `body`.
  static Term abs(std::string binder, Term body);
  static Term app(Term fun, Term arg);
  static Term empty() { return Term(); }

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_abs() const { return kind() == Kind::Abs; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_empty() const { return kind() == Kind::Empty; }

  /// Variable name (Var) or binder name (Abs).
  const std::string& name() const;
  const Term& body() const;
  const Term& fun() const;
  const Term& arg() const;

  /// Number of nodes.
  std::size_t size() const;

  /// Exact structural identity, binder names included.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const Term& t);
/// All names occurring in t, free or bound.
std::set<std::string> all_names(const Term& t);
bool occurs_free(const Term& t, const std::string& v);

/// t[v <- u]; binders of t that would capture a free variable of u are
/// renamed first.
Term substitute(const Term& t, const std::string& v, const Term& u);

bool alpha_equivalent(const Term& a, const Term& b);

/// Binders renamed v0, v1, ... in leftmost-outermost order.
Term canonical(const Term& t);

/// Function application with the empty term as two-sided identity. The
/// result is not reduced.
Term apply(const Term& f, const Term& a);

/// One leftmost-outermost step, or nullopt when t is normal.
std::optional<Term> beta_step(const Term& t);
bool is_normal(const Term& t);

inline constexpr std::size_t kDefaultReductionBudget = 10000;

/// Normal form by repeated leftmost-outermost steps. Throws NonTerminating
/// once `budget` steps have been spent.
Term beta_reduce(const Term& t, std::size_t budget = kDefaultReductionBudget);

/// λv.(t with every free occurrence of s replaced by v).
Term abstract(const Term& t, const Term& s, const std::string& v);

/// Whether s occurs in t at a position where none of its free variables is
/// captured.
bool contains_subterm(const Term& t, const Term& s);

/// Name built from `base` that is not in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

enum class Notation { Ascii, Unicode };

/// Concrete syntax: `\x.body`, Schönfinkel-Curry chains `f(a)(b)`, `eps`.
Term parse_term(std::string_view text);
std::string render_term(const Term& t, Notation notation = Notation::Ascii);

}  // namespace umt
