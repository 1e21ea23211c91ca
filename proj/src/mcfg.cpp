#include "umt/mcfg.hpp"

#include <algorithm>
#include <functional>

namespace umt {

// ---------------------------------------------------------------------------
// Node indices

NodeIndex NodeIndex::extended(int digit) const {
  NodeIndex out = *this;
  out.digits.push_back(digit);
  return out;
}

NodeIndex NodeIndex::parent() const {
  NodeIndex out = *this;
  if (!out.digits.empty()) out.digits.pop_back();
  return out;
}

std::string NodeIndex::render() const {
  if (digits.empty()) return "ε";
  std::string out;
  for (int d : digits) out += std::to_string(d);
  return out;
}

NodeIndex NodeIndex::parse(std::string_view text) {
  NodeIndex out;
  if (text == "ε" || text == "eps") return out;
  for (char c : text) {
    if (c < '0' || c > '9') throw SyntaxError("node index digits expected", out.digits.size());
    out.digits.push_back(c - '0');
  }
  return out;
}

std::strong_ordering operator<=>(const NodeIndex& a, const NodeIndex& b) {
  if (auto c = a.digits.size() <=> b.digits.size(); c != 0) return c;
  return a.digits <=> b.digits;
}

std::strong_ordering index_compare(const NodeIndex& a, const NodeIndex& b) { return a <=> b; }

bool linear_before(const NodeIndex& a, const NodeIndex& b) { return a.digits < b.digits; }

// ---------------------------------------------------------------------------
// Rendering

std::string render_category(const McfgCategory& c) {
  std::string out = "⟨";
  out += category_marker(c.category);
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    if (i) out += ", ";
    out += render_features(c.components[i]);
  }
  return out + "⟩";
}

std::string render_rule(const McfgRule& r) {
  std::string out = render_category(r.lhs) + "(";
  if (r.is_axiom()) return out + r.literal.render_raw() + ")";
  for (std::size_t i = 0; i < r.pattern.size(); ++i) {
    if (i) out += ", ";
    for (std::size_t j = 0; j < r.pattern[i].size(); ++j) {
      if (j) out += ' ';
      out += "e" + std::to_string(r.pattern[i][j]);
    }
  }
  out += ") <-";
  for (std::size_t k = 0; k < r.rhs.size(); ++k) {
    out += " " + render_category(r.rhs[k]) + "(";
    for (std::size_t j = 0; j < r.bindings[k].size(); ++j) {
      if (j) out += ", ";
      out += "e" + std::to_string(r.bindings[k][j]);
    }
    out += ")";
  }
  return out;
}

std::vector<std::size_t> Mcfg::rules_for(const McfgCategory& c) const {
  auto it = by_lhs_.find(c);
  return it == by_lhs_.end() ? std::vector<std::size_t>{} : it->second;
}

std::size_t Mcfg::structural_count() const {
  return std::count_if(rules.begin(), rules.end(), [](const McfgRule& r) { return !r.is_axiom(); });
}

std::size_t Mcfg::axiom_count() const { return rules.size() - structural_count(); }

// ---------------------------------------------------------------------------
// Compilation

namespace {

using Kind = Feature::Kind;

bool starts(const Features& fs, Kind k) { return !fs.empty() && fs.front().kind == k; }

Features prepend(Feature f, const Features& rest) {
  Features out{std::move(f)};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

struct Inventory {
  std::set<Features> suffixes;        // every suffix of every entry's features
  std::set<Features> lexical_lists;   // full lists of "::" entries
  std::set<Features> derived_lists;   // full lists of ":" entries
  std::vector<std::string> base_ids;  // selector targets, in order of appearance
  std::vector<std::string> move_ids;  // licensee ids, in order of appearance

  explicit Inventory(const Lexicon& lex) {
    auto note = [](std::vector<std::string>& v, const std::string& id) {
      if (std::find(v.begin(), v.end(), id) == v.end()) v.push_back(id);
    };
    for (const auto& s : lex.entries) {
      const auto& fs = s.type.features;
      (s.type.category == Category::Lexical ? lexical_lists : derived_lists).insert(fs);
      for (std::size_t i = 0; i < fs.size(); ++i) suffixes.insert(Features(fs.begin() + i, fs.end()));
      for (const auto& f : fs) {
        if (f.kind == Kind::Selector || f.kind == Kind::Base) note(base_ids, f.id);
        if (f.kind == Kind::Licensor || f.kind == Kind::Licensee) note(move_ids, f.id);
      }
    }
  }

  bool suffix(const Features& fs) const { return suffixes.count(fs) > 0; }
};

bool smc_ok(const McfgCategory& c) {
  std::set<std::string> seen;
  for (std::size_t i = 1; i < c.components.size(); ++i) {
    const auto& fs = c.components[i];
    if (!starts(fs, Kind::Licensee)) return false;
    if (!seen.insert(fs.front().id).second) return false;
  }
  return !c.components.empty() && !c.components[0].empty() &&
         !starts(c.components[0], Kind::Licensee);
}

// Whether a rhs category can exist at all: lexical categories are single
// lexical lists, every component is a suffix of some entry.
bool plausible(const McfgCategory& c, const Inventory& inv) {
  if (!smc_ok(c)) return false;
  if (c.category == Category::Lexical)
    return c.components.size() == 1 && inv.lexical_lists.count(c.components[0]);
  for (const auto& comp : c.components)
    if (!inv.suffix(comp)) return false;
  return true;
}

class Builder {
 public:
  Builder(const Lexicon& lex) : lex_(lex), inv_(lex) {}

  // All candidate rules with lhs `x`, in generation order.
  std::vector<McfgRule> unfold(const McfgCategory& x) const {
    std::vector<McfgRule> out;
    if (x.category == Category::Lexical) return out;
    const Features& t = x.components[0];
    std::vector<Features> z(x.components.begin() + 1, x.components.end());
    const std::size_t n = z.size();
    const Category cats[] = {Category::Lexical, Category::Derived};

    // merge-1: ⟨::=f t⟩ ⟨· f, z⟩
    for (const auto& f : inv_.base_ids) {
      Features head_a = prepend(Feature::selector(f), t);
      if (!inv_.lexical_lists.count(head_a)) continue;
      for (Category cb : cats) {
        McfgCategory a{Category::Lexical, {head_a}};
        McfgCategory b{cb, {{Feature::base(f)}}};
        b.components.insert(b.components.end(), z.begin(), z.end());
        McfgRule r;
        r.provenance = RuleTag::Merge1;
        r.pattern.push_back({0, 1});
        for (std::size_t i = 0; i < n; ++i) r.pattern.push_back({static_cast<int>(2 + i)});
        r.rhs = {a, b};
        r.bindings = {{0}, vars(1, 1 + n)};
        push(out, std::move(r), x);
      }
    }
    // merge-2: ⟨:=f t, z1⟩ ⟨· f, z2⟩
    for (const auto& f : inv_.base_ids) {
      Features head_a = prepend(Feature::selector(f), t);
      for (std::size_t split = 0; split <= n; ++split) {
        for (Category cb : cats) {
          McfgCategory a{Category::Derived, {head_a}};
          a.components.insert(a.components.end(), z.begin(), z.begin() + split);
          McfgCategory b{cb, {{Feature::base(f)}}};
          b.components.insert(b.components.end(), z.begin() + split, z.end());
          int nb0 = static_cast<int>(1 + split);
          McfgRule r;
          r.provenance = RuleTag::Merge2;
          r.pattern.push_back({nb0, 0});
          for (std::size_t i = 0; i < split; ++i) r.pattern.push_back({static_cast<int>(1 + i)});
          for (std::size_t i = split; i < n; ++i) r.pattern.push_back({static_cast<int>(2 + i)});
          r.rhs = {a, b};
          r.bindings = {vars(0, 1 + split), vars(nb0, 1 + (n - split))};
          push(out, std::move(r), x);
        }
      }
    }
    // merge-3: ⟨· =f t, z1⟩ ⟨· f t2, z2⟩ with t2 the k-th chain of x
    for (const auto& f : inv_.base_ids) {
      Features head_a = prepend(Feature::selector(f), t);
      for (std::size_t k = 0; k < n; ++k) {
        Features head_b = prepend(Feature::base(f), z[k]);
        for (Category ca : cats) {
          for (Category cb : cats) {
            McfgCategory a{ca, {head_a}};
            a.components.insert(a.components.end(), z.begin(), z.begin() + k);
            McfgCategory b{cb, {head_b}};
            b.components.insert(b.components.end(), z.begin() + k + 1, z.end());
            McfgRule r;
            r.provenance = RuleTag::Merge3;
            for (std::size_t i = 0; i <= n; ++i) r.pattern.push_back({static_cast<int>(i)});
            r.rhs = {a, b};
            r.bindings = {vars(0, 1 + k), vars(static_cast<int>(1 + k), n - k)};
            push(out, std::move(r), x);
          }
        }
      }
    }
    // move-1: ⟨:+f t, z1, -f, z2⟩
    for (const auto& f : inv_.move_ids) {
      for (std::size_t p = 0; p <= n; ++p) {
        McfgCategory a{Category::Derived, {prepend(Feature::licensor(f), t)}};
        a.components.insert(a.components.end(), z.begin(), z.begin() + p);
        a.components.push_back({Feature::licensee(f)});
        a.components.insert(a.components.end(), z.begin() + p, z.end());
        int mover = static_cast<int>(1 + p);
        McfgRule r;
        r.provenance = RuleTag::Move1;
        r.pattern.push_back({mover, 0});
        for (std::size_t i = 0; i < p; ++i) r.pattern.push_back({static_cast<int>(1 + i)});
        for (std::size_t i = p; i < n; ++i) r.pattern.push_back({static_cast<int>(2 + i)});
        r.rhs = {a};
        r.bindings = {vars(0, n + 2)};
        push(out, std::move(r), x);
      }
    }
    // move-2: ⟨:+f t, ..., -f t2, ...⟩
    for (const auto& f : inv_.move_ids) {
      for (std::size_t k = 0; k < n; ++k) {
        McfgCategory a = x;
        a.components[0] = prepend(Feature::licensor(f), t);
        a.components[1 + k] = prepend(Feature::licensee(f), z[k]);
        McfgRule r;
        r.provenance = RuleTag::Move2;
        for (std::size_t i = 0; i <= n; ++i) r.pattern.push_back({static_cast<int>(i)});
        r.rhs = {a};
        r.bindings = {vars(0, n + 1)};
        push(out, std::move(r), x);
      }
    }
    return out;
  }

  std::vector<McfgRule> axioms() const {
    std::vector<McfgRule> out;
    for (std::size_t i = 0; i < lex_.entries.size(); ++i) {
      const Sign& s = lex_.entries[i];
      McfgRule r;
      r.lhs = McfgCategory{s.type.category, {s.type.features}};
      r.entry = static_cast<int>(i);
      r.literal = s.exponent;
      r.semantics = s.semantics;
      out.push_back(std::move(r));
    }
    return out;
  }

  const Inventory& inventory() const { return inv_; }

 private:
  static std::vector<int> vars(int first, std::size_t count) {
    std::vector<int> v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(first + static_cast<int>(i));
    return v;
  }

  void push(std::vector<McfgRule>& out, McfgRule r, const McfgCategory& lhs) const {
    for (const auto& c : r.rhs)
      if (!plausible(c, inv_)) return;
    r.lhs = lhs;
    out.push_back(std::move(r));
  }

  const Lexicon& lex_;
  Inventory inv_;
};

}  // namespace

Mcfg compile(const Lexicon& lex) {
  if (lex.empty()) throw EmptyLexicon("cannot compile an empty lexicon");
  Builder builder(lex);
  const std::vector<McfgCategory> starts_all = {
      McfgCategory{Category::Derived, {{Feature::base(lex.start)}}},
      McfgCategory{Category::Lexical, {{Feature::base(lex.start)}}}};

  // Exhaustive unfolding of every category reachable from the start.
  std::map<McfgCategory, std::vector<McfgRule>> unfolded;
  std::vector<McfgCategory> agenda(starts_all.begin(), starts_all.end());
  while (!agenda.empty()) {
    McfgCategory c = agenda.back();
    agenda.pop_back();
    if (unfolded.count(c)) continue;
    auto rules = builder.unfold(c);
    for (const auto& r : rules)
      for (const auto& child : r.rhs)
        if (!unfolded.count(child)) agenda.push_back(child);
    unfolded.emplace(std::move(c), std::move(rules));
  }

  // Productivity fixpoint.
  auto axioms = builder.axioms();
  std::set<McfgCategory> productive;
  for (const auto& a : axioms) productive.insert(a.lhs);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [cat, rules] : unfolded) {
      if (productive.count(cat)) continue;
      for (const auto& r : rules) {
        bool ok = std::all_of(r.rhs.begin(), r.rhs.end(),
                              [&](const McfgCategory& c) { return productive.count(c) > 0; });
        if (ok) {
          productive.insert(cat);
          changed = true;
          break;
        }
      }
    }
  }

  // Depth-first discovery from the start over productive rules fixes the
  // numbering.
  Mcfg g;
  std::set<McfgCategory> visited;
  std::function<void(const McfgCategory&)> visit = [&](const McfgCategory& c) {
    if (!visited.insert(c).second) return;
    auto it = unfolded.find(c);
    if (it == unfolded.end()) return;
    std::vector<const McfgRule*> kept;
    for (const auto& r : it->second) {
      bool ok = std::all_of(r.rhs.begin(), r.rhs.end(),
                            [&](const McfgCategory& x) { return productive.count(x) > 0; });
      if (!ok) continue;
      g.rules.push_back(r);
      kept.push_back(&r);
    }
    for (const auto* r : kept)
      for (const auto& child : r->rhs) visit(child);
  };
  for (const auto& s : starts_all) {
    if (!productive.count(s)) continue;
    g.start.push_back(s);
    visit(s);
  }
  for (auto& a : axioms)
    if (visited.count(a.lhs)) g.rules.push_back(std::move(a));
  for (std::size_t i = 0; i < g.rules.size(); ++i) g.by_lhs_[g.rules[i].lhs].push_back(i);
  return g;
}

// ---------------------------------------------------------------------------
// Index assignment

std::vector<std::vector<NodeIndex>> assign_child_indices(const McfgRule& rule,
                                                         const std::vector<NodeIndex>& parent) {
  if (parent.size() != rule.pattern.size())
    throw ArityMismatch("rule " + render_rule(rule) + " has arity " +
                        std::to_string(rule.pattern.size()) + ", got " +
                        std::to_string(parent.size()) + " indices");
  std::map<int, NodeIndex> at;
  for (std::size_t c = 0; c < rule.pattern.size(); ++c) {
    const auto& vs = rule.pattern[c];
    if (vs.size() == 1) {
      at[vs[0]] = parent[c];
      continue;
    }
    for (std::size_t j = 0; j < vs.size(); ++j) at[vs[j]] = parent[c].extended(static_cast<int>(j));
  }
  std::vector<std::vector<NodeIndex>> out;
  for (const auto& b : rule.bindings) {
    std::vector<NodeIndex> tuple;
    for (int v : b) tuple.push_back(at.at(v));
    out.push_back(std::move(tuple));
  }
  return out;
}

namespace {

using Tuple = std::vector<NodeIndex>;

DerivationPtr index_node(const DerivationTree& t, const Tuple& idx) {
  auto out = std::make_shared<DerivationTree>();
  out->label = t.label;
  out->rule = t.rule;
  out->entry = t.entry;
  for (const auto& i : idx) out->indices.push_back(i.digits);
  auto child_label = [&](std::size_t k) -> const Expression& { return t.children.at(k)->label; };
  switch (t.rule) {
    case RuleTag::Lexical: break;
    case RuleTag::LambdaApp: out->children.push_back(index_node(*t.children[0], idx)); break;
    case RuleTag::Merge1: {
      Tuple a{idx[0].extended(0)};
      Tuple b{idx[0].extended(1)};
      b.insert(b.end(), idx.begin() + 1, idx.end());
      out->children = {index_node(*t.children[0], a), index_node(*t.children[1], b)};
      break;
    }
    case RuleTag::Merge2: {
      std::size_t na = child_label(0).signs.size() - 1;
      Tuple a{idx[0].extended(1)};
      a.insert(a.end(), idx.begin() + 1, idx.begin() + 1 + na);
      Tuple b{idx[0].extended(0)};
      b.insert(b.end(), idx.begin() + 1 + na, idx.end());
      out->children = {index_node(*t.children[0], a), index_node(*t.children[1], b)};
      break;
    }
    case RuleTag::Merge3: {
      std::size_t na = child_label(0).signs.size();
      Tuple a(idx.begin(), idx.begin() + na);
      Tuple b(idx.begin() + na, idx.end());
      out->children = {index_node(*t.children[0], a), index_node(*t.children[1], b)};
      break;
    }
    case RuleTag::Move1:
    case RuleTag::Move2: {
      const Expression& child = child_label(0);
      const Feature& licensor = child.head().type.features.front();
      std::size_t k = 1;
      for (; k < child.signs.size(); ++k) {
        const auto& fs = child.signs[k].type.features;
        if (!fs.empty() && fs.front() == Feature::licensee(licensor.id)) break;
      }
      Tuple c;
      if (t.rule == RuleTag::Move1) {
        c.push_back(idx[0].extended(1));
        std::size_t next = 1;
        for (std::size_t i = 1; i < child.signs.size(); ++i)
          c.push_back(i == k ? idx[0].extended(0) : idx[next++]);
      } else {
        c = idx;
      }
      out->children = {index_node(*t.children[0], c)};
      break;
    }
  }
  return out;
}

}  // namespace

DerivationPtr assign_tree_indices(const DerivationTree& tree) {
  Tuple root(tree.label.signs.size());
  return index_node(tree, root);
}

// ---------------------------------------------------------------------------
// String language by bounded enumeration

std::set<std::string> generate_strings(const Mcfg& g, std::size_t max_rules) {
  using Value = std::vector<std::vector<std::string>>;
  struct Entry {
    McfgCategory cat;
    Value value;
  };
  std::set<std::pair<McfgCategory, Value>> seen;
  std::vector<std::vector<Entry>> layers(1);
  for (const auto& r : g.rules) {
    if (!r.is_axiom()) continue;
    Value v{r.literal.tokens()};
    if (seen.insert({r.lhs, v}).second) layers[0].push_back({r.lhs, v});
  }
  auto build = [](const McfgRule& r, const std::vector<const Value*>& kids) {
    std::map<int, const std::vector<std::string>*> var;
    for (std::size_t k = 0; k < kids.size(); ++k)
      for (std::size_t j = 0; j < r.bindings[k].size(); ++j) var[r.bindings[k][j]] = &(*kids[k])[j];
    Value out;
    for (const auto& comp : r.pattern) {
      std::vector<std::string> s;
      for (int v : comp) s.insert(s.end(), var[v]->begin(), var[v]->end());
      out.push_back(std::move(s));
    }
    return out;
  };
  for (std::size_t step = 1; step <= max_rules; ++step) {
    std::vector<Entry> layer;
    auto add = [&](const McfgCategory& c, Value v) {
      if (seen.insert({c, v}).second) layer.push_back({c, std::move(v)});
    };
    for (const auto& r : g.rules) {
      if (r.rhs.size() == 1) {
        for (const auto& e : layers[step - 1])
          if (e.cat == r.rhs[0]) add(r.lhs, build(r, {&e.value}));
      } else if (r.rhs.size() == 2) {
        for (std::size_t i = 0; i < step; ++i) {
          std::size_t j = step - 1 - i;
          for (const auto& a : layers[i]) {
            if (a.cat != r.rhs[0]) continue;
            for (const auto& b : layers[j])
              if (b.cat == r.rhs[1]) add(r.lhs, build(r, {&a.value, &b.value}));
          }
        }
      }
    }
    layers.push_back(std::move(layer));
  }
  std::set<std::string> out;
  for (const auto& layer : layers)
    for (const auto& e : layer)
      if (std::find(g.start.begin(), g.start.end(), e.cat) != g.start.end())
        out.insert(join_surface(e.value[0]));
  return out;
}

}  // namespace umt
