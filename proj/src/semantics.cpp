// The semantic priority queue: scanned meanings are applied deepest first.

#include <algorithm>

#include "umt/engine.hpp"

namespace umt {

namespace {

struct SemItem {
  Term term;
  NodeIndex index;
  // Root of the subtree the term stands for.
  NodeIndex node;
};

NodeIndex common_ancestor(const NodeIndex& a, const NodeIndex& b) {
  NodeIndex out;
  for (std::size_t i = 0; i < a.length() && i < b.length() && a.digits[i] == b.digits[i]; ++i)
    out.digits.push_back(a.digits[i]);
  return out;
}

std::string render_queue(const std::vector<SemItem>& q) {
  if (q.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) out += ' ';
    out += "⟨" + render_term(q[i].term, Notation::Unicode) + "⟩(" + q[i].index.render() + ")";
  }
  return out;
}

bool descending(const SemItem& a, const SemItem& b) { return b.index < a.index; }

}  // namespace

Understanding understand_parse(const Mcfg& g, const Parse& parse) {
  Understanding out;
  out.parse = parse;
  std::vector<SemItem> q;
  auto row = [&](const std::string& in, const std::string& op) {
    out.trace.push_back({out.trace.size() + 1, in, render_queue(q), op});
  };

  // Input before each scan is the input after the previous one.
  std::string before;
  for (std::size_t i = 0; i < parse.trace.size(); ++i) {
    if (parse.trace[i].operation.rfind("scan", 0) == 0) {
      before = parse.trace[i].input;
      break;
    }
  }
  for (const auto& s : parse.scans) {
    const McfgRule& rule = g.rules[s.rule];
    row(before, "scan (" + std::to_string(s.rule + 1) + ")");
    q.push_back({rule.semantics, s.index, s.index});
    if (rule.semantics.is_empty()) {
      row(s.input_after, "apply");
      q.pop_back();
    }
    before = s.input_after;
  }
  const std::string input = before.empty() ? "ε" : before;

  if (!std::is_sorted(q.begin(), q.end(), descending)) {
    row(input, "sort");
    std::stable_sort(q.begin(), q.end(), descending);
  }

  // The two items meeting lowest in the derivation tree are the only ones
  // below that meeting point, so they compose next.
  std::size_t guard = 0;
  while (true) {
    if (++guard > kDefaultReductionBudget) throw NonTerminating("semantic queue does not settle");
    if (q.empty()) throw SemanticStuck("no meaning was scanned");
    auto redex = std::find_if(q.begin(), q.end(), [](const SemItem& it) { return !is_normal(it.term); });
    if (redex != q.end()) {
      row(input, "apply");
      redex->term = *beta_step(redex->term);
      continue;
    }
    if (q.size() == 1) {
      row(input, "understand");
      out.meaning = q.front().term;
      return out;
    }
    std::size_t bi = 0, bj = 1, depth = 0;
    bool first = true;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        std::size_t d = common_ancestor(q[i].node, q[j].node).length();
        if (first || d > depth) bi = i, bj = j, depth = d, first = false;
      }
    const Term& a = q[bi].term;
    const Term& b = q[bj].term;
    Term applied;
    if (a.is_abs())
      applied = apply(a, b);
    else if (b.is_abs())
      applied = apply(b, a);
    else
      throw SemanticStuck("neither " + render_term(a) + " nor " + render_term(b) +
                          " is a function");
    row(input, "apply");
    if (auto reduced = beta_step(applied)) applied = std::move(*reduced);
    q[bi] = SemItem{std::move(applied), q[bi].index.parent(), common_ancestor(q[bi].node, q[bj].node)};
    q.erase(q.begin() + bj);
    if (!std::is_sorted(q.begin(), q.end(), descending)) {
      row(input, "sort");
      std::stable_sort(q.begin(), q.end(), descending);
    }
  }
}

Understanding understand(const Parser& parser, const std::vector<std::string>& tokens,
                         const ParseOptions& options) {
  std::optional<Understanding> result;
  std::string stuck;
  parser.parses(
      tokens,
      [&](const Parse& p) {
        try {
          result = understand_parse(parser.grammar(), p);
          return false;
        } catch (const SemanticStuck& e) {
          if (stuck.empty()) stuck = e.what();
          return true;
        }
      },
      options);
  if (!result) throw SemanticStuck(stuck);
  return std::move(*result);
}

std::vector<Term> meanings(const Parser& parser, const std::vector<std::string>& tokens,
                           const ParseOptions& options) {
  std::vector<Term> out;
  try {
    parser.parses(
        tokens,
        [&](const Parse& p) {
          try {
            Term m = understand_parse(parser.grammar(), p).meaning;
            bool known = std::any_of(out.begin(), out.end(),
                                     [&](const Term& t) { return alpha_equivalent(t, m); });
            if (!known) out.push_back(std::move(m));
          } catch (const SemanticStuck&) {
          }
          return true;
        },
        options);
  } catch (const Reject&) {
  }
  return out;
}

}  // namespace umt
