#include "umt/mg.hpp"

#include <cctype>
#include <set>

namespace umt {

std::string render_feature(const Feature& f) {
  switch (f.kind) {
    case Feature::Kind::Base: return f.id;
    case Feature::Kind::Selector: return "=" + f.id;
    case Feature::Kind::Licensor: return "+" + f.id;
    case Feature::Kind::Licensee: return "-" + f.id;
  }
  return f.id;
}

Feature parse_feature(std::string_view token) {
  if (token.empty()) throw SyntaxError("empty feature", 0);
  Feature f;
  std::string_view id = token;
  switch (token[0]) {
    case '=': f.kind = Feature::Kind::Selector; id.remove_prefix(1); break;
    case '+': f.kind = Feature::Kind::Licensor; id.remove_prefix(1); break;
    case '-': f.kind = Feature::Kind::Licensee; id.remove_prefix(1); break;
    default: f.kind = Feature::Kind::Base; break;
  }
  if (id.empty()) throw SyntaxError("feature without identifier: '" + std::string(token) + "'", 0);
  for (std::size_t i = 0; i < id.size(); ++i) {
    auto c = static_cast<unsigned char>(id[i]);
    if (!std::isalnum(c) && c != '_')
      throw SyntaxError("invalid character in feature '" + std::string(token) + "'", i);
  }
  f.id = std::string(id);
  return f;
}

std::string render_features(const Features& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += ' ';
    out += render_feature(f);
  }
  return out;
}

Features parse_features(std::string_view text) {
  Features out;
  for (const auto& tok : tokenize(text)) out.push_back(parse_feature(tok));
  return out;
}

std::string_view category_marker(Category c) { return c == Category::Lexical ? "::" : ":"; }

std::string render_type(const SyntacticType& t) {
  return std::string(category_marker(t.category)) + render_features(t.features);
}

bool check_lexical_type(const SyntacticType& t) {
  std::size_t i = 0;
  const auto& fs = t.features;
  while (i < fs.size() &&
         (fs[i].kind == Feature::Kind::Selector || fs[i].kind == Feature::Kind::Licensor))
    ++i;
  if (i >= fs.size() || fs[i].kind != Feature::Kind::Base) return false;
  ++i;
  while (i < fs.size() && fs[i].kind == Feature::Kind::Licensee) ++i;
  return i == fs.size();
}

// ---------------------------------------------------------------------------
// Exponents

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

namespace {

bool is_affix(const std::string& token) { return token.size() > 1 && token[0] == '-'; }

}  // namespace

std::string join_surface(const std::vector<std::string>& tokens) {
  std::string out;
  bool any = false;
  for (const auto& t : tokens) {
    if (any && is_affix(t)) {
      out += t.substr(1);
      continue;
    }
    if (any) out += ' ';
    out += t;
    any = true;
  }
  return out;
}

Exponent Exponent::parse(std::string_view text) {
  auto toks = tokenize(text);
  if (toks.size() == 1 && (toks[0] == "eps" || toks[0] == "ε")) toks.clear();
  return from_tokens(toks);
}

Exponent Exponent::from_tokens(const std::vector<std::string>& tokens) {
  std::vector<Morph> ms;
  for (const auto& t : tokens) ms.push_back({t, -1});
  return Exponent(std::move(ms));
}

std::vector<std::string> Exponent::tokens() const {
  std::vector<std::string> out;
  for (const auto& m : morphs_) out.push_back(m.text);
  return out;
}

Exponent Exponent::operator+(const Exponent& rhs) const {
  std::vector<Morph> ms = morphs_;
  ms.insert(ms.end(), rhs.morphs_.begin(), rhs.morphs_.end());
  return Exponent(std::move(ms));
}

Exponent Exponent::with_leaf(int leaf) const {
  std::vector<Morph> ms = morphs_;
  for (auto& m : ms) m.leaf = leaf;
  return Exponent(std::move(ms));
}

std::string Exponent::render_raw() const {
  if (morphs_.empty()) return "ε";
  std::string out;
  for (const auto& m : morphs_) {
    if (!out.empty()) out += ' ';
    out += m.text;
  }
  return out;
}

std::string Exponent::surface() const { return join_surface(tokens()); }

std::vector<std::pair<std::string, std::vector<int>>> Exponent::surface_tokens() const {
  std::vector<std::pair<std::string, std::vector<int>>> out;
  for (const auto& m : morphs_) {
    if (!out.empty() && is_affix(m.text)) {
      out.back().first += m.text.substr(1);
      out.back().second.push_back(m.leaf);
      continue;
    }
    out.push_back({m.text, {m.leaf}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Signs and expressions

bool same_sign(const Sign& a, const Sign& b) {
  return a.exponent == b.exponent && a.type == b.type && alpha_equivalent(a.semantics, b.semantics);
}

std::string render_sign(const Sign& s) {
  std::string e = s.exponent.empty() ? "ε" : s.exponent.surface();
  return "⟨" + e + ", " + render_type(s.type) + ", " + render_term(s.semantics, Notation::Unicode) +
         "⟩";
}

bool Expression::violates_smc() const {
  std::set<std::string> seen;
  for (std::size_t i = 1; i < signs.size(); ++i) {
    const auto& fs = signs[i].type.features;
    if (fs.empty() || fs.front().kind != Feature::Kind::Licensee) continue;
    if (!seen.insert(fs.front().id).second) return true;
  }
  return false;
}

std::size_t Expression::feature_count() const {
  std::size_t n = 0;
  for (const auto& s : signs) n += s.type.features.size();
  return n;
}

std::string render_expression(const Expression& e) {
  std::string out;
  for (const auto& s : e.signs) out += render_sign(s);
  return out;
}

std::string expression_key(const Expression& e) {
  std::string out;
  for (const auto& s : e.signs) {
    out += s.exponent.render_raw();
    out += '|';
    out += render_type(s.type);
    out += '|';
    out += render_term(canonical(s.semantics));
    out += '#';
  }
  return out;
}

bool Lexicon::add(Sign s) {
  if (find(s)) return false;
  entries.push_back(std::move(s));
  return true;
}

std::optional<std::size_t> Lexicon::find(const Sign& s) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (same_sign(entries[i], s)) return i;
  return std::nullopt;
}

std::string_view rule_tag_name(RuleTag tag) {
  switch (tag) {
    case RuleTag::Lexical: return "lexical";
    case RuleTag::Merge1: return "merge-1";
    case RuleTag::Merge2: return "merge-2";
    case RuleTag::Merge3: return "merge-3";
    case RuleTag::Move1: return "move-1";
    case RuleTag::Move2: return "move-2";
    case RuleTag::LambdaApp: return "λ-app";
  }
  return "?";
}

std::size_t DerivationTree::structural_steps() const {
  std::size_t n = (rule == RuleTag::Lexical || rule == RuleTag::LambdaApp) ? 0 : 1;
  for (const auto& c : children) n += c->structural_steps();
  return n;
}

Expression lexical_expression(const Lexicon& lex, std::size_t entry) {
  Sign s = lex.entries.at(entry);
  s.exponent = s.exponent.with_leaf(static_cast<int>(entry));
  return Expression{{std::move(s)}};
}

// ---------------------------------------------------------------------------
// Structure-building rules

namespace {

bool starts_with(const Features& fs, Feature::Kind kind) {
  return !fs.empty() && fs.front().kind == kind;
}

Features tail(const Features& fs) { return Features(fs.begin() + 1, fs.end()); }

Sign derived(Exponent e, Features fs, Term sem) {
  return Sign{std::move(e), SyntacticType{Category::Derived, std::move(fs)}, std::move(sem)};
}

}  // namespace

bool can_merge(const Expression& a, const Expression& b) {
  const auto& fa = a.head().type.features;
  const auto& fb = b.head().type.features;
  return starts_with(fa, Feature::Kind::Selector) && starts_with(fb, Feature::Kind::Base) &&
         fa.front().id == fb.front().id;
}

Expression merge(const Expression& a, const Expression& b, RuleTag* applied) {
  if (!can_merge(a, b))
    throw FeatureMismatch("merge needs =f at the head of " + render_expression(a) +
                          " and f at the head of " + render_expression(b));
  const Sign& ha = a.head();
  const Sign& hb = b.head();
  Features ta = tail(ha.type.features);
  Features tb = tail(hb.type.features);
  Expression out;
  RuleTag tag;
  if (!tb.empty()) {
    tag = RuleTag::Merge3;
    out.signs.push_back(derived(ha.exponent, std::move(ta), ha.semantics));
    out.signs.insert(out.signs.end(), a.signs.begin() + 1, a.signs.end());
    out.signs.push_back(derived(hb.exponent, std::move(tb), hb.semantics));
    out.signs.insert(out.signs.end(), b.signs.begin() + 1, b.signs.end());
  } else if (a.signs.size() == 1 && ha.type.category == Category::Lexical) {
    tag = RuleTag::Merge1;
    out.signs.push_back(
        derived(ha.exponent + hb.exponent, std::move(ta), apply(ha.semantics, hb.semantics)));
    out.signs.insert(out.signs.end(), b.signs.begin() + 1, b.signs.end());
  } else {
    tag = RuleTag::Merge2;
    out.signs.push_back(
        derived(hb.exponent + ha.exponent, std::move(ta), apply(ha.semantics, hb.semantics)));
    out.signs.insert(out.signs.end(), a.signs.begin() + 1, a.signs.end());
    out.signs.insert(out.signs.end(), b.signs.begin() + 1, b.signs.end());
  }
  if (applied) *applied = tag;
  return out;
}

namespace {

// Positions of non-head signs starting with the licensee matching the head's
// licensor.
std::vector<std::size_t> movers(const Expression& a) {
  std::vector<std::size_t> out;
  const auto& fh = a.head().type.features;
  if (!starts_with(fh, Feature::Kind::Licensor)) return out;
  for (std::size_t i = 1; i < a.signs.size(); ++i) {
    const auto& fs = a.signs[i].type.features;
    if (starts_with(fs, Feature::Kind::Licensee) && fs.front().id == fh.front().id)
      out.push_back(i);
  }
  return out;
}

}  // namespace

bool can_move(const Expression& a) { return movers(a).size() == 1; }

Expression move(const Expression& a, RuleTag* applied) {
  const auto& fh = a.head().type.features;
  if (!starts_with(fh, Feature::Kind::Licensor))
    throw FeatureMismatch("move needs a licensor at the head of " + render_expression(a));
  auto found = movers(a);
  if (found.empty())
    throw FeatureMismatch("no sign carries -" + fh.front().id + " in " + render_expression(a));
  if (found.size() > 1)
    throw SmcViolation("more than one sign carries -" + fh.front().id + " in " +
                       render_expression(a));
  std::size_t k = found.front();
  const Sign& head = a.head();
  const Sign& mover = a.signs[k];
  Features rest = tail(mover.type.features);
  Expression out;
  if (rest.empty()) {
    if (applied) *applied = RuleTag::Move1;
    out.signs.push_back(derived(mover.exponent + head.exponent, tail(fh),
                                apply(head.semantics, mover.semantics)));
    for (std::size_t i = 1; i < a.signs.size(); ++i)
      if (i != k) out.signs.push_back(a.signs[i]);
  } else {
    if (applied) *applied = RuleTag::Move2;
    out.signs = a.signs;
    out.signs[0] = derived(head.exponent, tail(fh), head.semantics);
    out.signs[k] = derived(mover.exponent, std::move(rest), mover.semantics);
  }
  return out;
}

Expression reduce_step(const Expression& a) {
  auto next = beta_step(a.head().semantics);
  if (!next) throw NoRedex("head semantics is already normal");
  Expression out = a;
  out.signs[0].semantics = std::move(*next);
  return out;
}

Expression replay(const DerivationTree& tree) {
  switch (tree.rule) {
    case RuleTag::Lexical: return tree.label;
    case RuleTag::Merge1:
    case RuleTag::Merge2:
    case RuleTag::Merge3: {
      RuleTag got;
      Expression e = merge(replay(*tree.children.at(0)), replay(*tree.children.at(1)), &got);
      if (got != tree.rule) throw FeatureMismatch("replayed merge disagrees with its rule tag");
      return e;
    }
    case RuleTag::Move1:
    case RuleTag::Move2: {
      RuleTag got;
      Expression e = move(replay(*tree.children.at(0)), &got);
      if (got != tree.rule) throw FeatureMismatch("replayed move disagrees with its rule tag");
      return e;
    }
    case RuleTag::LambdaApp: return reduce_step(replay(*tree.children.at(0)));
  }
  return tree.label;
}

namespace {

void linearize_into(const DerivationTree& t, std::vector<const DerivationTree*>& out) {
  for (auto it = t.children.rbegin(); it != t.children.rend(); ++it) linearize_into(**it, out);
  if (t.rule != RuleTag::Lexical) out.push_back(&t);
}

}  // namespace

std::vector<const DerivationTree*> linearize(const DerivationTree& tree) {
  std::vector<const DerivationTree*> out;
  linearize_into(tree, out);
  return out;
}

}  // namespace umt
