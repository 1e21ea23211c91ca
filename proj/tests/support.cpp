#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oracle {

namespace {

Db free_var(const std::string& n) { return {Db::Kind::Free, n, 0, {}}; }
Db bound(int i) { return {Db::Kind::Bound, "", i, {}}; }
Db lam(Db body) { return {Db::Kind::Lam, "", 0, {std::move(body)}}; }
Db app(Db f, Db a) { return {Db::Kind::App, "", 0, {std::move(f), std::move(a)}}; }

Db convert(const umt::Term& t, std::vector<std::string>& env) {
  switch (t.kind()) {
    case umt::Term::Kind::Empty: return Db{};
    case umt::Term::Kind::Var:
      for (std::size_t i = env.size(); i-- > 0;)
        if (env[i] == t.name()) return bound(static_cast<int>(env.size() - 1 - i));
      return free_var(t.name());
    case umt::Term::Kind::Abs: {
      env.push_back(t.name());
      Db body = convert(t.body(), env);
      env.pop_back();
      return lam(std::move(body));
    }
    case umt::Term::Kind::App: return app(convert(t.fun(), env), convert(t.arg(), env));
  }
  return Db{};
}

Db shift(const Db& t, int d, int cutoff) {
  switch (t.kind) {
    case Db::Kind::Bound: return t.index >= cutoff ? bound(t.index + d) : t;
    case Db::Kind::Lam: return lam(shift(t.kids[0], d, cutoff + 1));
    case Db::Kind::App: return app(shift(t.kids[0], d, cutoff), shift(t.kids[1], d, cutoff));
    default: return t;
  }
}

Db subst(const Db& t, int j, const Db& s) {
  switch (t.kind) {
    case Db::Kind::Bound: return t.index == j ? s : t;
    case Db::Kind::Lam: return lam(subst(t.kids[0], j + 1, shift(s, 1, 0)));
    case Db::Kind::App: return app(subst(t.kids[0], j, s), subst(t.kids[1], j, s));
    default: return t;
  }
}

void collect_free(const Db& t, std::set<std::string>& out) {
  if (t.kind == Db::Kind::Free) out.insert(t.name);
  for (const auto& k : t.kids) collect_free(k, out);
}

}  // namespace

Db to_db(const umt::Term& t) {
  std::vector<std::string> env;
  return convert(t, env);
}

std::string show(const Db& t) {
  switch (t.kind) {
    case Db::Kind::Free: return t.name;
    case Db::Kind::Bound: return "#" + std::to_string(t.index);
    case Db::Kind::Lam: return "(\\." + show(t.kids[0]) + ")";
    case Db::Kind::App: return "(" + show(t.kids[0]) + " " + show(t.kids[1]) + ")";
    case Db::Kind::Empty: return "eps";
  }
  return "?";
}

Db subst_free(const Db& t, const std::string& v, const Db& u) {
  switch (t.kind) {
    case Db::Kind::Free: return t.name == v ? u : t;
    case Db::Kind::Lam: return lam(subst_free(t.kids[0], v, u));
    case Db::Kind::App: return app(subst_free(t.kids[0], v, u), subst_free(t.kids[1], v, u));
    default: return t;
  }
}

std::optional<Db> step(const Db& t) {
  if (t.kind == Db::Kind::App) {
    if (t.kids[0].kind == Db::Kind::Lam)
      return shift(subst(t.kids[0].kids[0], 0, shift(t.kids[1], 1, 0)), -1, 0);
    if (auto f = step(t.kids[0])) return app(*f, t.kids[1]);
    if (auto a = step(t.kids[1])) return app(t.kids[0], *a);
    return std::nullopt;
  }
  if (t.kind == Db::Kind::Lam) {
    if (auto b = step(t.kids[0])) return lam(*b);
  }
  return std::nullopt;
}

std::optional<std::pair<Db, std::size_t>> normalize(const Db& t, std::size_t budget) {
  Db cur = t;
  for (std::size_t n = 0; n <= budget; ++n) {
    auto next = step(cur);
    if (!next) return std::make_pair(cur, n);
    cur = std::move(*next);
  }
  return std::nullopt;
}

std::vector<std::string> free_names(const Db& t) {
  std::set<std::string> s;
  collect_free(t, s);
  return {s.begin(), s.end()};
}

bool smc_clash(const umt::Expression& e) {
  std::map<std::string, int> count;
  for (std::size_t i = 1; i < e.signs.size(); ++i) {
    const auto& fs = e.signs[i].type.features;
    if (!fs.empty() && fs[0].kind == umt::Feature::Kind::Licensee) ++count[fs[0].id];
  }
  for (const auto& [id, n] : count)
    if (n > 1) return true;
  return false;
}

std::vector<std::string> token_bag(const umt::Expression& e) {
  std::vector<std::string> out;
  for (const auto& s : e.signs)
    for (const auto& t : s.exponent.tokens()) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct RuleText {
  std::vector<std::string> cats;  // lhs, then rhs
  std::vector<std::vector<std::string>> lhs;
};

// "⟨cat⟩(a b, c)" items; returns the categories and argument components.
std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> items(const std::string& s) {
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> out;
  const std::string open = "⟨", close = "⟩";
  std::size_t pos = 0;
  while ((pos = s.find(open, pos)) != std::string::npos) {
    std::size_t c = s.find(close, pos);
    std::size_t lp = s.find('(', c), rp = s.find(')', lp);
    if (c == std::string::npos || lp == std::string::npos || rp == std::string::npos) break;
    std::vector<std::vector<std::string>> comps;
    std::string args = s.substr(lp + 1, rp - lp - 1);
    std::size_t start = 0;
    while (true) {
      std::size_t comma = args.find(", ", start);
      comps.push_back(umt::tokenize(args.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 2;
    }
    out.emplace_back(s.substr(pos + open.size(), c - pos - open.size()), std::move(comps));
    pos = rp + 1;
  }
  return out;
}

bool is_var(const std::string& t) {
  return t.size() > 1 && t[0] == 'e' && std::all_of(t.begin() + 1, t.end(), ::isdigit);
}

RuleText read_rule(const std::string& text) {
  RuleText r;
  std::size_t arrow = text.find(" <- ");
  auto lhs = items(text.substr(0, arrow));
  auto rhs = arrow == std::string::npos ? decltype(lhs){} : items(text.substr(arrow + 4));
  std::map<std::string, std::string> rename;
  for (const auto& [cat, comps] : rhs) {
    r.cats.push_back(cat);
    for (const auto& c : comps)
      for (const auto& t : c)
        if (is_var(t) && !rename.count(t)) rename[t] = "v" + std::to_string(rename.size());
  }
  if (!lhs.empty()) {
    r.cats.insert(r.cats.begin(), lhs[0].first);
    for (auto c : lhs[0].second) {
      for (auto& t : c)
        if (is_var(t)) t = rename.count(t) ? rename[t] : "?" + t;
      r.lhs.push_back(c);
    }
  }
  return r;
}

bool match(const std::vector<RuleText>& a, const std::vector<RuleText>& b, std::size_t i,
           std::vector<bool>& used, std::map<std::string, std::string>& fwd,
           std::map<std::string, std::string>& back) {
  if (i == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j] || a[i].lhs != b[j].lhs || a[i].cats.size() != b[j].cats.size()) continue;
    auto f = fwd, k = back;
    bool ok = true;
    for (std::size_t c = 0; ok && c < a[i].cats.size(); ++c) {
      const auto &x = a[i].cats[c], &y = b[j].cats[c];
      if (f.count(x) ? f[x] != y : k.count(y) != 0) ok = false;
      f[x] = y;
      k[y] = x;
    }
    if (!ok) continue;
    used[j] = true;
    if (match(a, b, i + 1, used, f, k)) {
      fwd = f;
      back = k;
      return true;
    }
    used[j] = false;
  }
  return false;
}

}  // namespace

bool isomorphic_rules(const std::vector<std::string>& a, const std::vector<std::string>& b,
                      std::string* why) {
  if (a.size() != b.size()) {
    if (why) *why = std::to_string(a.size()) + " rules vs " + std::to_string(b.size());
    return false;
  }
  std::vector<RuleText> ra, rb;
  for (const auto& s : a) ra.push_back(read_rule(s));
  for (const auto& s : b) rb.push_back(read_rule(s));
  std::vector<bool> used(b.size(), false);
  std::map<std::string, std::string> fwd, back;
  bool ok = match(ra, rb, 0, used, fwd, back);
  if (!ok && why) *why = "no category bijection maps one rule set onto the other";
  return ok;
}

namespace {

using Renaming = std::map<std::string, std::string>;

bool bind(Renaming& fwd, Renaming& back, const std::string& x, const std::string& y) {
  auto f = fwd.find(x);
  if (f != fwd.end()) return f->second == y;
  if (back.count(y)) return false;
  fwd[x] = y;
  back[y] = x;
  return true;
}

struct Names {
  Renaming cat, cat_back, lic, lic_back;
};

bool sign_match(const umt::Sign& x, const umt::Sign& y, Names& n) {
  if (x.exponent.tokens() != y.exponent.tokens() || x.type.category != y.type.category ||
      x.type.features.size() != y.type.features.size() || !umt::alpha_equivalent(x.semantics, y.semantics))
    return false;
  for (std::size_t i = 0; i < x.type.features.size(); ++i) {
    const auto &f = x.type.features[i], &g = y.type.features[i];
    if (f.kind != g.kind) return false;
    bool movement = f.kind == umt::Feature::Kind::Licensor || f.kind == umt::Feature::Kind::Licensee;
    if (!(movement ? bind(n.lic, n.lic_back, f.id, g.id) : bind(n.cat, n.cat_back, f.id, g.id)))
      return false;
  }
  return true;
}

bool pair_entries(const umt::Lexicon& a, const umt::Lexicon& b, std::size_t i, std::vector<bool>& used, Names& n) {
  if (i == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j]) continue;
    Names trial = n;
    if (!sign_match(a.entries[i], b.entries[j], trial)) continue;
    used[j] = true;
    if (pair_entries(a, b, i + 1, used, trial)) {
      n = trial;
      return true;
    }
    used[j] = false;
  }
  return false;
}

}  // namespace

bool isomorphic_lexicons(const umt::Lexicon& a, const umt::Lexicon& b, std::string* why) {
  if (a.size() != b.size()) {
    if (why) *why = std::to_string(a.size()) + " entries vs " + std::to_string(b.size());
    return false;
  }
  std::vector<bool> used(b.size(), false);
  Names n;
  if (pair_entries(a, b, 0, used, n)) return true;
  if (why) *why = "no renaming of types maps\n" + umt::format_lexicon(a) + "onto\n" + umt::format_lexicon(b);
  return false;
}

}  // namespace oracle

namespace gen {

namespace {

const std::vector<std::string> kVars = {"x", "y", "z", "f", "g"};
const std::vector<std::string> kConsts = {"a", "b", "eat"};

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

umt::Term abstraction(Rng& rng, int depth) {
  umt::Term body = term(rng, depth - 1);
  auto fv = umt::free_vars(body);
  std::vector<std::string> candidates;
  for (const auto& v : fv)
    if (std::find(kVars.begin(), kVars.end(), v) != kVars.end()) candidates.push_back(v);
  if (candidates.empty()) return body;
  return umt::Term::abs(pick(rng, candidates), body);
}

}  // namespace

umt::Term term(Rng& rng, int depth) {
  double r = std::uniform_real_distribution<double>(0, 1)(rng);
  if (depth <= 0 || r < 0.25)
    return umt::Term::var(r < 0.08 ? pick(rng, kConsts) : pick(rng, kVars));
  if (r < 0.5) return abstraction(rng, depth);
  if (r < 0.7) return umt::Term::app(abstraction(rng, depth - 1), term(rng, depth - 1));
  return umt::Term::app(term(rng, depth - 1), term(rng, depth - 1));
}

umt::Lexicon lexicon(Rng& rng, std::size_t entries) {
  using umt::Feature;
  const std::vector<std::string> bases = {"c", "d", "v"};
  const std::vector<std::string> licensees = {"k", "f"};
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
  // Redraw until every selector, licensor and licensee has a counterpart.
  for (;;) {
    umt::Lexicon lex;
    for (std::size_t i = 0; lex.size() < entries; ++i) {
      umt::Features fs;
      int prefix = std::uniform_int_distribution<int>(0, 3)(rng);
      for (int j = 0; j < prefix; ++j)
        fs.push_back(j == 0 || coin(0.5) ? Feature::selector(pick(rng, bases)) : Feature::licensor(pick(rng, licensees)));
      fs.push_back(Feature::base(lex.size() == 0 ? "c" : pick(rng, bases)));
      if (lex.size() > 0 && coin(0.5)) fs.push_back(Feature::licensee(pick(rng, licensees)));
      umt::Sign s;
      s.exponent = coin(0.2) ? umt::Exponent() : umt::Exponent::parse("w" + std::to_string(i));
      s.type = {umt::Category::Lexical, fs};
      lex.add(std::move(s));
    }
    std::set<std::string> provided, wanted;
    for (const auto& e : lex.entries)
      for (const auto& f : e.type.features) {
        if (f.kind == Feature::Kind::Base) provided.insert("=" + f.id);
        if (f.kind == Feature::Kind::Licensee) provided.insert("+" + f.id), wanted.insert("-" + f.id);
        if (f.kind == Feature::Kind::Selector) wanted.insert("=" + f.id);
        if (f.kind == Feature::Kind::Licensor) wanted.insert("+" + f.id), provided.insert("-" + f.id);
      }
    if (std::includes(provided.begin(), provided.end(), wanted.begin(), wanted.end())) return lex;
  }
}

}  // namespace gen

namespace props {

std::string data_path(const std::string& file) { return std::string(UMT_DATA_DIR) + "/" + file; }

namespace {

constexpr std::size_t kSteps = 200;

std::vector<umt::Term> subterms(const umt::Term& t) {
  std::vector<umt::Term> out{t};
  if (t.is_abs()) {
    auto b = subterms(t.body());
    out.insert(out.end(), b.begin(), b.end());
  } else if (t.is_app()) {
    for (const auto& k : {t.fun(), t.arg()}) {
      auto s = subterms(k);
      out.insert(out.end(), s.begin(), s.end());
    }
  }
  return out;
}

}  // namespace

Report lambda_idempotence(std::uint64_t seed, std::size_t n) {
  Report r{"lambda reduction idempotence", 0, 0, {}};
  gen::Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    umt::Term t = gen::term(rng, 5);
    ++r.cases;
    auto expect = oracle::normalize(oracle::to_db(t), kSteps);
    std::optional<umt::Term> nf;
    try {
      nf = umt::beta_reduce(t, kSteps);
    } catch (const umt::NonTerminating&) {
    }
    std::string label = umt::render_term(t);
    if (nf.has_value() != expect.has_value()) {
      r.fail(label + ": termination disagrees with reference reducer");
      continue;
    }
    if (!nf) continue;
    if (oracle::to_db(*nf) != expect->first)
      r.fail(label + ": normal form " + umt::render_term(*nf) + " vs " + oracle::show(expect->first));
    else if (!umt::is_normal(*nf) || !(umt::beta_reduce(*nf, kSteps) == *nf))
      r.fail(label + ": reducing the normal form again changed it");
  }
  return r;
}

Report lambda_abstraction_inverse(std::uint64_t seed, std::size_t n) {
  Report r{"lambda abstraction/application inverse", 0, 0, {}};
  gen::Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    umt::Term t = gen::term(rng, 5);
    std::vector<umt::Term> options;
    for (const auto& s : subterms(t))
      if (umt::contains_subterm(t, s)) options.push_back(s);
    if (options.empty()) {
      r.fail(umt::render_term(t) + ": term does not contain itself");
      continue;
    }
    const umt::Term& s = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    auto avoid = umt::all_names(t);
    auto more = umt::all_names(s);
    avoid.insert(more.begin(), more.end());
    std::string v = umt::fresh_name("v", avoid);
    ++r.cases;
    std::string label = umt::render_term(t) + " / " + umt::render_term(s);
    umt::Term a = umt::abstract(t, s, v);
    if (!a.is_abs() || a.name() != v) {
      r.fail(label + ": abstraction is not headed by the fresh binder");
      continue;
    }
    auto back = umt::beta_step(umt::Term::app(a, s));
    if (!back || oracle::to_db(*back) != oracle::to_db(t))
      r.fail(label + ": applying the template to the subterm does not give the term back");
  }
  return r;
}

Report lambda_substitution(std::uint64_t seed, std::size_t n) {
  Report r{"lambda substitution free-variable law", 0, 0, {}};
  gen::Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    umt::Term t = gen::term(rng, 5);
    umt::Term u = gen::term(rng, 3);
    auto fv = umt::free_vars(t);
    std::string v = "x";
    if (!fv.empty()) {
      auto it = fv.begin();
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, fv.size() - 1)(rng));
      v = *it;
    }
    ++r.cases;
    umt::Term out = umt::substitute(t, v, u);
    std::set<std::string> expect = fv;
    if (expect.erase(v)) {
      auto fu = umt::free_vars(u);
      expect.insert(fu.begin(), fu.end());
    }
    std::string label = umt::render_term(t) + "[" + v + " <- " + umt::render_term(u) + "]";
    if (umt::free_vars(out) != expect)
      r.fail(label + ": free variables of the result are wrong");
    else if (oracle::to_db(out) != oracle::subst_free(oracle::to_db(t), v, oracle::to_db(u)))
      r.fail(label + ": " + umt::render_term(out) + " differs from the reference substitution");
  }
  return r;
}

Report mg_laws(std::uint64_t seed, std::size_t lexicons) {
  Report r{"merge/move feature consumption and exponent conservation", 0, 0, {}};
  gen::Rng rng(seed);
  for (std::size_t l = 0; l < lexicons; ++l) {
    umt::Lexicon lex = gen::lexicon(rng);
    umt::ClosureOptions opts;
    opts.max_rule_applications = 4;
    opts.max_items = 2000;
    std::vector<umt::Expression> items;
    for (const auto& t : umt::closure(lex, opts).trees) items.push_back(t->label);
    auto check = [&](const umt::Expression& out, std::size_t features, std::vector<std::string> bag,
                     const std::string& what) {
      ++r.cases;
      std::sort(bag.begin(), bag.end());
      if (out.feature_count() + 2 != features) r.fail(what + ": did not consume exactly two features");
      else if (oracle::token_bag(out) != bag) r.fail(what + ": exponent tokens not conserved");
    };
    for (const auto& a : items) {
      if (umt::can_move(a)) {
        check(umt::move(a), a.feature_count(), oracle::token_bag(a), "move " + umt::render_expression(a));
      }
      for (const auto& b : items) {
        if (!umt::can_merge(a, b)) continue;
        auto bag = oracle::token_bag(a);
        auto bb = oracle::token_bag(b);
        bag.insert(bag.end(), bb.begin(), bb.end());
        check(umt::merge(a, b), a.feature_count() + b.feature_count(), bag,
              "merge " + umt::render_expression(a) + " + " + umt::render_expression(b));
      }
    }
  }
  return r;
}

Report mg_smc(std::uint64_t seed, std::size_t n) {
  using umt::Feature;
  Report r{"shortest movement constraint detection", 0, 0, {}};
  gen::Rng rng(seed);
  const std::vector<std::string> ids = {"k", "f", "q"};
  auto id = [&] { return ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)]; };
  for (std::size_t i = 0; i < n; ++i) {
    umt::Expression e;
    e.signs.push_back({umt::Exponent::parse("h"), {umt::Category::Derived, {Feature::licensor(id()), Feature::base("t")}}, {}});
    int chains = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int c = 0; c < chains; ++c)
      e.signs.push_back({umt::Exponent::parse("m" + std::to_string(c)), {umt::Category::Derived, {Feature::licensee(id())}}, {}});
    ++r.cases;
    std::string label = umt::render_expression(e);
    if (e.violates_smc() != oracle::smc_clash(e)) {
      r.fail(label + ": violates_smc disagrees with a direct count");
      continue;
    }
    std::size_t movers = 0;
    for (std::size_t s = 1; s < e.signs.size(); ++s)
      if (e.signs[s].type.features[0].id == e.head().type.features[0].id) ++movers;
    std::string got;
    try {
      umt::move(e);
      got = "moved";
    } catch (const umt::SmcViolation&) {
      got = "smc";
    } catch (const umt::FeatureMismatch&) {
      got = "mismatch";
    }
    std::string want = movers == 0 ? "mismatch" : movers == 1 ? "moved" : "smc";
    if (got != want) r.fail(label + ": move gave " + got + ", expected " + want);
    else if (umt::can_move(e) != (movers == 1)) r.fail(label + ": can_move is wrong");
  }
  return r;
}

namespace {

struct Comparison {
  std::optional<std::string> diff;
  std::size_t strings = 0;
  bool moves = false;
};

bool uses_move(const umt::DerivationTree& t) {
  if (t.rule == umt::RuleTag::Move1 || t.rule == umt::RuleTag::Move2) return true;
  return std::any_of(t.children.begin(), t.children.end(), [](const auto& c) { return uses_move(*c); });
}

Comparison compare_languages(const umt::Lexicon& lex, std::size_t depth) {
  Comparison out;
  umt::ClosureOptions opts;
  opts.max_rule_applications = depth;
  opts.max_items = 400000;
  auto d = umt::complete_derivations(lex, opts);
  if (d.truncated) {
    out.diff = "derivation search hit its item cap";
    return out;
  }
  std::set<std::string> mg;
  for (const auto& t : d.trees) {
    mg.insert(t->label.head().exponent.surface());
    out.moves |= uses_move(*t);
  }
  std::set<std::string> mcfg;
  try {
    auto g = umt::compile(lex);
    for (const auto& r : g.rules)
      out.moves |= r.provenance == umt::RuleTag::Move1 || r.provenance == umt::RuleTag::Move2;
    mcfg = umt::generate_strings(g, depth);
  } catch (const umt::EmptyLexicon&) {
  }
  std::set<std::string> all = mg;
  all.insert(mcfg.begin(), mcfg.end());
  out.strings = all.size();
  if (mg == mcfg) return out;
  std::string diff;
  for (const auto& s : mg)
    if (!mcfg.count(s)) diff += " mg-only '" + s + "'";
  for (const auto& s : mcfg)
    if (!mg.count(s)) diff += " mcfg-only '" + s + "'";
  out.diff = diff;
  return out;
}

}  // namespace

// The random sample keeps lexicons whose language is nonempty at the bound,
// at least half of them with movement.
Report mg_mcfg_equivalence(std::uint64_t seed, std::size_t lexicons, std::size_t depth) {
  Report r{"MG derivations vs compiled MCFG string sets", 0, 0, {}};
  ++r.cases;
  auto gold = compare_languages(umt::read_lexicon_file(data_path("gold.mg")), depth);
  if (gold.diff) r.fail("gold lexicon:" + *gold.diff);
  gen::Rng rng(seed);
  std::size_t kept = 0, moving = 0;
  for (std::size_t draws = 0; kept < lexicons && draws < 1000 * lexicons; ++draws) {
    umt::Lexicon lex = gen::lexicon(rng);
    auto c = compare_languages(lex, depth);
    if (c.strings == 0 && !c.diff) continue;
    if (!c.moves && kept - moving >= lexicons / 2) continue;
    ++kept;
    moving += c.moves;
    ++r.cases;
    if (c.diff) r.fail("random lexicon\n" + umt::format_lexicon(lex) + *c.diff);
  }
  if (kept < lexicons) r.fail("too few random lexicons with a nonempty language");
  return r;
}

Report round_trip(const umt::Lexicon& lex, std::size_t depth) {
  Report r{"understand after produce is the identity", 0, 0, {}};
  auto g = umt::compile(lex);
  umt::Parser parser(g);
  for (const auto& t : umt::complete_derivations(lex, depth).trees) {
    const umt::Term& m = t->label.head().semantics;
    ++r.cases;
    std::string label = umt::render_term(m);
    try {
      auto said = umt::produce(lex, m, depth).utterance;
      auto heard = umt::understand(parser, umt::tokenize(said)).meaning;
      if (!umt::alpha_equivalent(heard, m)) r.fail(label + ": '" + said + "' is understood as " + umt::render_term(heard));
    } catch (const umt::Error& e) {
      r.fail(label + ": " + e.what());
    }
  }
  return r;
}

}  // namespace props
