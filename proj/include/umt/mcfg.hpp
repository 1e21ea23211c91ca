#pragma once

// Compilation of a minimalist lexicon into a multiple context-free grammar,
// and the node-index algebra the top-down parser sorts its predictions by.

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "umt/mg.hpp"

namespace umt {

/// Address of a derivation-tree node; the root is the empty sequence.
/// Shorter indices precede longer ones; equal lengths compare
/// lexicographically.
struct NodeIndex {
  std::vector<int> digits;

  NodeIndex extended(int digit) const;
  /// Drops the last digit (no-op on the root).
  NodeIndex parent() const;
  std::size_t length() const { return digits.size(); }
  /// Digit string, "ε" for the root.
  std::string render() const;
  static NodeIndex parse(std::string_view digits);

  friend bool operator==(const NodeIndex&, const NodeIndex&) = default;
  friend std::strong_ordering operator<=>(const NodeIndex& a, const NodeIndex& b);
};

std::strong_ordering index_compare(const NodeIndex& a, const NodeIndex& b);

/// Plain lexicographic order (a prefix precedes its extensions): the surface
/// order of the material the indexed nodes contribute.
bool linear_before(const NodeIndex& a, const NodeIndex& b);

/// Tuple of syntactic types: the head's feature list followed by one list per
/// moving chain. Structural categories are always derived.
struct McfgCategory {
  Category category = Category::Derived;
  std::vector<Features> components;

  std::size_t arity() const { return components.size(); }
  friend auto operator<=>(const McfgCategory&, const McfgCategory&) = default;
};

/// ⟨:+k t, -k⟩
std::string render_category(const McfgCategory& c);

struct McfgRule {
  McfgCategory lhs;
  /// For each lhs component, the concatenated string variables.
  std::vector<std::vector<int>> pattern;
  std::vector<McfgCategory> rhs;
  /// For each rhs category, the variable bound by each of its components.
  std::vector<std::vector<int>> bindings;
  /// merge-1/2/3, move-1/2, or Lexical for axioms.
  RuleTag provenance = RuleTag::Lexical;
  /// Lexicon entry of an axiom.
  int entry = -1;
  Exponent literal;
  Term semantics;

  bool is_axiom() const { return rhs.empty(); }
};

/// `⟨:t⟩(e1 e0) <- ⟨:+k t, -k⟩(e0, e1)`; axioms `⟨::n⟩(mouse)`.
std::string render_rule(const McfgRule& r);

struct Mcfg {
  /// Structural rules in depth-first discovery order from the start
  /// category, followed by axioms in lexicon order.
  std::vector<McfgRule> rules;
  /// Start categories present in the grammar, derived first.
  std::vector<McfgCategory> start;

  /// Indices of rules with the given lhs, in rule order.
  std::vector<std::size_t> rules_for(const McfgCategory& c) const;

  std::size_t structural_count() const;
  std::size_t axiom_count() const;

 private:
  friend Mcfg compile(const Lexicon& lex);
  std::map<McfgCategory, std::vector<std::size_t>> by_lhs_;
};

/// Closure under unmerge/unmove from the start category, pruned to rules that
/// are both reachable and productive.
Mcfg compile(const Lexicon& lex);

/// Child index tuples for each rhs category of `rule`, given the lhs tuple.
std::vector<std::vector<NodeIndex>> assign_child_indices(const McfgRule& rule,
                                                         const std::vector<NodeIndex>& parent);

/// Copy of a derivation tree with per-sign node indices filled in; the root
/// head gets the empty index.
DerivationPtr assign_tree_indices(const DerivationTree& tree);

/// Surface strings of the start categories derivable with at most
/// `max_rules` structural rule applications.
std::set<std::string> generate_strings(const Mcfg& g, std::size_t max_rules);

}  // namespace umt
