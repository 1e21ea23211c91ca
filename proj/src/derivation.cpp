// Bottom-up deductive closure over a lexicon.
//
// Items are expressions paired with their smallest derivation. An item whose
// head semantics still contains a redex has exactly one successor (its λ-app
// step), so such chains are collapsed eagerly and only normal items take part
// in merge and move.

#include <unordered_map>
#include <unordered_set>

#include "umt/mg.hpp"

namespace umt {

namespace {

struct Agenda {
  const ClosureOptions& options;
  std::vector<DerivationPtr> items;
  std::vector<std::vector<std::size_t>> by_steps;
  std::unordered_map<std::string, std::size_t> seen;
  bool capped = false;

  explicit Agenda(const ClosureOptions& o) : options(o) {}

  static bool useful(const Expression& e) {
    return !e.head().type.features.empty() && !e.violates_smc();
  }

  // Chains λ-app nodes on top of `tree` until the head semantics is normal.
  static DerivationPtr normalize(DerivationPtr tree) {
    std::size_t guard = 0;
    while (auto next = beta_step(tree->label.head().semantics)) {
      if (++guard > kDefaultReductionBudget)
        throw NonTerminating("head semantics does not normalize");
      auto node = std::make_shared<DerivationTree>();
      node->label = tree->label;
      node->label.signs[0].semantics = std::move(*next);
      node->rule = RuleTag::LambdaApp;
      node->children = {std::move(tree)};
      tree = std::move(node);
    }
    return tree;
  }

  // Returns true when the item is new.
  bool offer(DerivationPtr tree, std::size_t steps, bool dry_run = false) {
    if (!useful(tree->label)) return false;
    tree = normalize(std::move(tree));
    if (options.keep && !options.keep(tree->label)) return false;
    std::string key = expression_key(tree->label);
    if (seen.count(key)) return false;
    if (dry_run) return true;
    if (items.size() >= options.max_items) {
      capped = true;
      return false;
    }
    seen.emplace(std::move(key), items.size());
    if (by_steps.size() <= steps) by_steps.resize(steps + 1);
    by_steps[steps].push_back(items.size());
    items.push_back(std::move(tree));
    return true;
  }

  // All new items derivable with exactly `steps` rule applications. With
  // dry_run, stops at the first one and stores nothing.
  bool expand(std::size_t steps, bool dry_run) {
    auto at = [&](std::size_t s) -> const std::vector<std::size_t>& {
      static const std::vector<std::size_t> none;
      return s < by_steps.size() ? by_steps[s] : none;
    };
    bool any = false;
    for (std::size_t i = 0; i < steps; ++i) {
      std::size_t j = steps - 1 - i;
      // Copies: offer() may grow by_steps.
      std::vector<std::size_t> left = at(i), right = at(j);
      for (std::size_t ia : left) {
        for (std::size_t ib : right) {
          const auto& a = items[ia];
          const auto& b = items[ib];
          if (!can_merge(a->label, b->label)) continue;
          auto node = std::make_shared<DerivationTree>();
          node->label = merge(a->label, b->label, &node->rule);
          node->children = {a, b};
          if (offer(std::move(node), steps, dry_run)) {
            any = true;
            if (dry_run) return true;
          }
        }
      }
    }
    std::vector<std::size_t> prev = at(steps - 1);
    for (std::size_t ia : prev) {
      const auto& a = items[ia];
      if (!can_move(a->label)) continue;
      auto node = std::make_shared<DerivationTree>();
      node->label = move(a->label, &node->rule);
      node->children = {a};
      if (offer(std::move(node), steps, dry_run)) {
        any = true;
        if (dry_run) return true;
      }
    }
    return any;
  }
};

}  // namespace

DerivationResult closure(const Lexicon& lex, const ClosureOptions& options) {
  Agenda agenda(options);
  for (std::size_t i = 0; i < lex.entries.size(); ++i) {
    if (!options.entry_mask.empty() && !options.entry_mask[i]) continue;
    auto leaf = std::make_shared<DerivationTree>();
    leaf->label = lexical_expression(lex, i);
    leaf->entry = static_cast<int>(i);
    agenda.offer(std::move(leaf), 0);
  }
  for (std::size_t s = 1; s <= options.max_rule_applications; ++s) agenda.expand(s, false);
  DerivationResult result;
  result.truncated = agenda.capped;
  result.budget_exhausted =
      agenda.capped || agenda.expand(options.max_rule_applications + 1, true);
  result.trees = std::move(agenda.items);
  return result;
}

DerivationResult complete_derivations(const Lexicon& lex, std::size_t max_rule_applications) {
  ClosureOptions options;
  options.max_rule_applications = max_rule_applications;
  return complete_derivations(lex, options);
}

DerivationResult complete_derivations(const Lexicon& lex, const ClosureOptions& options) {
  DerivationResult all = closure(lex, options);
  DerivationResult out;
  out.budget_exhausted = all.budget_exhausted;
  out.truncated = all.truncated;
  std::unordered_set<std::string> seen;
  for (auto& tree : all.trees) {
    const Expression& e = tree->label;
    if (e.signs.size() != 1) continue;
    const auto& fs = e.head().type.features;
    if (fs.size() != 1 || fs[0] != Feature::base(lex.start)) continue;
    if (!is_normal(e.head().semantics)) continue;
    std::string key = e.head().exponent.render_raw() + "|" +
                      render_term(canonical(e.head().semantics));
    if (seen.insert(key).second) out.trees.push_back(std::move(tree));
  }
  return out;
}

std::size_t default_budget(const Lexicon& lex) { return std::max<std::size_t>(1, 10 * lex.size()); }

}  // namespace umt
