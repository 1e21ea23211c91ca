#pragma once

// Minimalist grammar data model: features, syntactic types, signs,
// expressions, lexicons and the five structure-building rules.

#include <compare>
#include <functional>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umt/lambda.hpp"

namespace umt {

struct Feature {
  enum class Kind { Base, Selector, Licensor, Licensee };
  Kind kind = Kind::Base;
  std::string id;

  static Feature base(std::string id) { return {Kind::Base, std::move(id)}; }
  static Feature selector(std::string id) { return {Kind::Selector, std::move(id)}; }
  static Feature licensor(std::string id) { return {Kind::Licensor, std::move(id)}; }
  static Feature licensee(std::string id) { return {Kind::Licensee, std::move(id)}; }

  friend auto operator<=>(const Feature&, const Feature&) = default;
};

using Features = std::vector<Feature>;

/// `=x`, `+y`, `-y` or `x`.
std::string render_feature(const Feature& f);
Feature parse_feature(std::string_view token);
std::string render_features(const Features& fs);
/// Whitespace-separated feature tokens.
Features parse_features(std::string_view text);

enum class Category { Lexical, Derived };

/// `::` for lexical, `:` for derived.
std::string_view category_marker(Category c);

struct SyntacticType {
  Category category = Category::Lexical;
  Features features;

  friend auto operator<=>(const SyntacticType&, const SyntacticType&) = default;
};

/// e.g. `::=n d -k`.
std::string render_type(const SyntacticType& t);

/// Features match (Selector|Licensor)* Base Licensee*.
bool check_lexical_type(const SyntacticType& t);

/// One exponent token. Tokens starting with '-' are affixes that attach to the
/// preceding token on the surface. `leaf` records the lexicon entry the token
/// came from inside a derivation (-1 outside derivations).
struct Morph {
  std::string text;
  int leaf = -1;
};

/// Token sequence of a sign; empty means ε.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::vector<Morph> morphs) : morphs_(std::move(morphs)) {}
  /// Splits on whitespace; "eps" and "ε" denote the empty exponent.
  static Exponent parse(std::string_view text);
  static Exponent from_tokens(const std::vector<std::string>& tokens);

  const std::vector<Morph>& morphs() const { return morphs_; }
  std::vector<std::string> tokens() const;
  bool empty() const { return morphs_.empty(); }
  std::size_t size() const { return morphs_.size(); }

  Exponent operator+(const Exponent& rhs) const;
  Exponent with_leaf(int leaf) const;

  /// Tokens joined by spaces ("the mouse eat -s cheese"); ε when empty.
  std::string render_raw() const;
  /// Surface form with affixes glued to their hosts ("the mouse eats cheese").
  std::string surface() const;
  /// Surface tokens and, for each, the leaves contributing to it.
  std::vector<std::pair<std::string, std::vector<int>>> surface_tokens() const;

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.tokens() == b.tokens(); }

 private:
  std::vector<Morph> morphs_;
};

/// Splits a surface string into whitespace tokens.
std::vector<std::string> tokenize(std::string_view text);
/// Glues affix tokens to their predecessors.
std::string join_surface(const std::vector<std::string>& tokens);

struct Sign {
  Exponent exponent;
  SyntacticType type;
  Term semantics;
};

/// Exponent, type and semantics identical up to alpha conversion.
bool same_sign(const Sign& a, const Sign& b);
/// ⟨the mouse, :d -k, mouse⟩ (surface exponent, Unicode notation).
std::string render_sign(const Sign& s);

/// Nonempty sign sequence; the first sign is the head.
struct Expression {
  std::vector<Sign> signs;

  const Sign& head() const { return signs.front(); }
  /// Licensee ids at the front of non-head signs that occur more than once.
  bool violates_smc() const;
  std::size_t feature_count() const;
};

std::string render_expression(const Expression& e);
/// Key usable for deduplication: exponents, types and canonical semantics.
std::string expression_key(const Expression& e);

struct Lexicon {
  std::vector<Sign> entries;
  std::string start = "c";

  /// Appends unless an identical (exponent, type, alpha-class) entry exists.
  /// Returns whether it was added.
  bool add(Sign s);
  std::optional<std::size_t> find(const Sign& s) const;
  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

enum class RuleTag { Lexical, Merge1, Merge2, Merge3, Move1, Move2, LambdaApp };

std::string_view rule_tag_name(RuleTag tag);

struct DerivationTree;
using DerivationPtr = std::shared_ptr<const DerivationTree>;

struct DerivationTree {
  Expression label;
  RuleTag rule = RuleTag::Lexical;
  std::vector<DerivationPtr> children;
  /// Lexicon position for leaves.
  int entry = -1;
  /// Per-sign node indices; empty until assigned by assign_tree_indices.
  std::vector<std::vector<int>> indices;

  /// Number of merge/move nodes.
  std::size_t structural_steps() const;
};

/// The expression a single lexicon entry denotes inside a derivation.
Expression lexical_expression(const Lexicon& lex, std::size_t entry);

/// merge-1/2/3, dispatched on the shape of the operands.
Expression merge(const Expression& a, const Expression& b, RuleTag* applied = nullptr);
/// move-1/2 under the shortest movement constraint.
Expression move(const Expression& a, RuleTag* applied = nullptr);
/// One leftmost-outermost beta step on the head semantics.
Expression reduce_step(const Expression& a);

bool can_merge(const Expression& a, const Expression& b);
bool can_move(const Expression& a);

/// Re-applies the rule tags bottom-up; the result should equal the root label.
Expression replay(const DerivationTree& tree);

/// Leaves-to-root list of non-lexical steps, arguments before functors
/// (the order in which a derivation is written out line by line).
std::vector<const DerivationTree*> linearize(const DerivationTree& tree);

struct DerivationResult {
  std::vector<DerivationPtr> trees;
  /// More items exist beyond the budget, or the item cap was reached.
  bool budget_exhausted = false;
  /// The item cap was reached; the result may be missing items within budget.
  bool truncated = false;
};

struct ClosureOptions {
  /// Maximum number of merge/move applications per tree. λ-app steps are free.
  std::size_t max_rule_applications = 0;
  /// Hard cap on the number of distinct items kept; reaching it sets
  /// budget_exhausted.
  std::size_t max_items = 200000;
  /// Entries to use; empty means all.
  std::vector<bool> entry_mask;
  /// Items failing this predicate are discarded (search pruning).
  std::function<bool(const Expression&)> keep;
};

/// Every item reachable from the lexicon within the budget, deduplicated by
/// expression, smallest derivation first.
DerivationResult closure(const Lexicon& lex, const ClosureOptions& options);

/// Complete derivations: a single sign with the lone feature `start` and
/// normal semantics, deduplicated by (exponent, alpha class of semantics).
DerivationResult complete_derivations(const Lexicon& lex, std::size_t max_rule_applications);
DerivationResult complete_derivations(const Lexicon& lex, const ClosureOptions& options);

/// Default budget for derivation searches over `lex`: 10 × its size.
std::size_t default_budget(const Lexicon& lex);

}  // namespace umt
