// Production: the meaning selects the lexical material, a bounded bottom-up
// search assembles it.

#include <algorithm>

#include "umt/engine.hpp"

namespace umt {

namespace {

bool within(const std::set<std::string>& sub, const std::set<std::string>& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace

std::vector<DerivationPtr> realizing_derivations(const Lexicon& lex, const Term& meaning,
                                                 std::size_t budget) {
  if (lex.empty()) throw Unrealizable("empty lexicon");
  const auto constants = free_vars(meaning);
  ClosureOptions options;
  options.max_rule_applications = budget ? budget : default_budget(lex);
  options.entry_mask.resize(lex.size());
  for (std::size_t i = 0; i < lex.size(); ++i)
    options.entry_mask[i] = within(free_vars(lex.entries[i].semantics), constants);
  options.keep = [&](const Expression& e) {
    for (const auto& s : e.signs)
      if (!within(free_vars(s.semantics), constants)) return false;
    return true;
  };
  std::vector<DerivationPtr> out;
  for (auto& t : complete_derivations(lex, options).trees)
    if (alpha_equivalent(t->label.head().semantics, meaning)) out.push_back(std::move(t));
  return out;
}

Production produce(const Lexicon& lex, const Term& meaning, std::size_t budget) {
  auto trees = realizing_derivations(lex, meaning, budget);
  if (trees.empty()) throw Unrealizable("no derivation realizes " + render_term(meaning));
  Production p;
  p.tree = trees.front();
  p.utterance = p.tree->label.head().exponent.surface();
  for (std::size_t i = 1; i < trees.size(); ++i) {
    std::string s = trees[i]->label.head().exponent.surface();
    if (s != p.utterance &&
        std::find(p.alternatives.begin(), p.alternatives.end(), s) == p.alternatives.end())
      p.alternatives.push_back(std::move(s));
  }
  return p;
}

std::vector<std::string> realizations(const Lexicon& lex, const Term& meaning,
                                      std::size_t budget) {
  std::vector<std::string> out;
  for (const auto& t : realizing_derivations(lex, meaning, budget)) {
    std::string s = t->label.head().exponent.surface();
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace umt
