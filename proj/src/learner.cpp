#include "umt/learner.hpp"

#include <algorithm>

#include "umt/engine.hpp"

namespace umt {

namespace {

bool same_meaning(const Term& a, const Term& b) { return alpha_equivalent(a, b); }

Term replace(const Term& t, const Term& target, const Term& with) {
  auto avoid = all_names(t);
  auto more = all_names(with);
  avoid.insert(more.begin(), more.end());
  std::string v = fresh_name("hole", avoid);
  return substitute(abstract(t, target, v).body(), v, with);
}

std::set<std::string> feature_ids(const Lexicon& lex) {
  std::set<std::string> out{lex.start};
  for (const auto& s : lex.entries)
    for (const auto& f : s.type.features) out.insert(f.id);
  return out;
}

bool atomic(const Sign& s) {
  return s.type.category == Category::Lexical && s.exponent.size() == 1 && s.semantics.is_var() &&
         s.type.features.size() == 1 && s.type.features[0].kind == Feature::Kind::Base;
}

Lexicon rebuilt(const Lexicon& like, const std::vector<Sign>& entries) {
  Lexicon out;
  out.start = like.start;
  for (const auto& s : entries) out.add(s);
  return out;
}

Sign make_sign(std::vector<std::string> tokens, Category cat, Features fs, Term sem) {
  Sign s;
  s.exponent = Exponent::from_tokens(tokens);
  s.type = SyntacticType{cat, std::move(fs)};
  s.semantics = std::move(sem);
  return s;
}

std::string describe(const Sign& s) { return render_sign(s); }

// First leaf pair (selector entry, complement entry) combined by merge-1.
void merges(const DerivationTree& t, std::vector<std::pair<int, int>>& out) {
  if (t.rule == RuleTag::Merge1 && t.children.size() == 2) {
    const DerivationTree* a = t.children[0].get();
    const DerivationTree* b = t.children[1].get();
    while (a->rule == RuleTag::LambdaApp) a = a->children[0].get();
    while (b->rule == RuleTag::LambdaApp) b = b->children[0].get();
    if (a->rule == RuleTag::Lexical && b->rule == RuleTag::Lexical) out.emplace_back(a->entry, b->entry);
  }
  for (const auto& c : t.children) merges(*c, out);
}

}  // namespace

Learner::Learner(LearnerOptions options) : options_(std::move(options)) {}

std::size_t Learner::budget(const Lexicon& lex) const {
  return options_.budget ? options_.budget : default_budget(lex);
}

Term Learner::normalize(const Term& t) const {
  Term out = t;
  for (const auto& [from, to] : aliases_)
    if (occurs_free(out, from)) out = substitute(out, from, Term::var(to));
  return out;
}

bool Learner::derivable(const Lexicon& lex, const Ump& ump) const {
  if (lex.empty()) return false;
  try {
    Mcfg g = compile(lex);
    Parser parser(g);
    Term want = normalize(ump.meaning);
    for (const auto& m : meanings(parser, tokenize(ump.utterance)))
      if (same_meaning(normalize(m), want)) return true;
  } catch (const Error&) {
  }
  return false;
}

bool Learner::derivable(const Ump& ump) const { return derivable(lex_, ump); }

bool Learner::consistent(const Lexicon& lex) const {
  return std::all_of(endorsed_.begin(), endorsed_.end(),
                     [&](const Ump& u) { return derivable(lex, u); });
}

std::string Learner::fresh_type(const Lexicon& lex) {
  auto used = feature_ids(lex);
  while (true) {
    std::size_t i = type_counter_++;
    std::string name = i < options_.type_names.size()
                           ? options_.type_names[i]
                           : "t" + std::to_string(i + 1 - options_.type_names.size());
    if (!used.count(name)) return name;
  }
}

std::string Learner::fresh_licensee(const Lexicon& lex) const {
  auto used = feature_ids(lex);
  if (!used.count("a")) return "a";
  for (std::size_t i = 2;; ++i)
    if (!used.count("a" + std::to_string(i))) return "a" + std::to_string(i);
}

std::string Learner::fresh_var(const std::set<std::string>& avoid) {
  static const char* const names[] = {"y", "x", "z", "w", "v", "u"};
  while (true) {
    std::size_t i = var_counter_++;
    std::string name = i < 6 ? names[i] : "v" + std::to_string(i - 5);
    if (!avoid.count(name)) return name;
  }
}

// ---------------------------------------------------------------------------
// Ingestion

void Learner::ingest(const Ump& ump) {
  ++time_;
  note("t=" + std::to_string(time_) + " ingest '" + ump.utterance + "' " + render_term(ump.meaning));
  bool known = std::any_of(endorsed_.begin(), endorsed_.end(), [&](const Ump& u) {
    return u.utterance == ump.utterance && same_meaning(u.meaning, ump.meaning);
  });
  if (derivable(ump)) {
    if (!known) endorsed_.push_back(ump);
    note("  already derivable");
    return;
  }
  if (!known) endorsed_.push_back(ump);
  if (!try_analogy(ump) && !try_partial(ump)) {
    lex_.add(make_sign(tokenize(ump.utterance), Category::Derived, {Feature::base(lex_.start)},
                       ump.meaning));
    note("  stored whole: " + describe(lex_.entries.back()));
  }
  revise();
}

bool Learner::try_analogy(const Ump& ump) {
  if (lex_.empty()) return false;
  const auto toks = tokenize(ump.utterance);
  struct Candidate {
    std::size_t diffs;
    DerivationPtr tree;
  };
  std::vector<Candidate> candidates;
  for (auto& tree : complete_derivations(lex_, budget(lex_)).trees) {
    auto st = tree->label.head().exponent.surface_tokens();
    if (st.size() != toks.size()) continue;
    std::size_t diffs = 0;
    bool ok = true;
    for (std::size_t i = 0; i < st.size() && ok; ++i) {
      if (st[i].first == toks[i]) continue;
      ++diffs;
      const auto& leaves = st[i].second;
      ok = leaves.size() == 1 && lex_.entries[leaves[0]].exponent.tokens() ==
                                     std::vector<std::string>{st[i].first};
    }
    if (ok && diffs > 0) candidates.push_back({diffs, std::move(tree)});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.diffs < b.diffs; });

  for (const auto& c : candidates) {
    const Expression& e = c.tree->label;
    auto sa = anti_unify(e.head().semantics, ump.meaning);
    auto st = e.head().exponent.surface_tokens();
    std::vector<Sign> fresh;
    std::vector<std::string> stems;
    bool consumed = sa.identical();
    for (std::size_t i = 0; i < st.size(); ++i) {
      if (st[i].first == toks[i]) continue;
      const Sign& leaf = lex_.entries[st[i].second[0]];
      Term sem = leaf.semantics;
      if (!sa.identical() && contains_subterm(sem, *sa.residue_a)) {
        sem = replace(sem, *sa.residue_a, *sa.residue_b);
        consumed = true;
      }
      fresh.push_back(make_sign({toks[i]}, leaf.type.category, leaf.type.features, sem));
      stems.push_back(st[i].first);
    }
    if (!consumed) continue;
    Lexicon next = lex_;
    bool grew = false;
    for (const auto& s : fresh) grew = next.add(s) || grew;
    if (!grew || !derivable(next, ump) || !consistent(next)) continue;

    for (std::size_t k = 0; k < fresh.size(); ++k) {
      // A form modelled on a stem that already takes a realized affix is an
      // irregular candidate.
      for (const auto& f : fresh[k].type.features) {
        if (f.kind != Feature::Kind::Licensee) continue;
        for (const auto& s : lex_.entries) {
          if (s.exponent.empty()) continue;
          const auto& fs = s.type.features;
          if (std::find(fs.begin(), fs.end(), Feature::licensor(f.id)) != fs.end())
            irregular_[fresh[k].exponent.render_raw()] = stems[k];
        }
      }
    }
    lex_ = std::move(next);
    for (const auto& s : fresh) note("  analogy: " + describe(s));
    return true;
  }
  return false;
}

bool Learner::try_partial(const Ump& ump) {
  if (lex_.empty()) return false;
  const auto toks = tokenize(ump.utterance);
  ClosureOptions options;
  options.max_rule_applications = budget(lex_);
  struct Candidate {
    bool left;
    std::size_t length;
    Sign arg;
  };
  std::vector<Candidate> candidates;
  for (const auto& tree : closure(lex_, options).trees) {
    const Expression& e = tree->label;
    if (e.signs.size() != 1) continue;
    const Sign& s = e.head();
    if (s.type.features.size() != 1 || s.type.features[0].kind != Feature::Kind::Base) continue;
    if (s.semantics.is_empty() || !is_normal(s.semantics)) continue;
    if (!contains_subterm(ump.meaning, s.semantics)) continue;
    std::vector<std::string> span;
    for (const auto& [tok, leaves] : s.exponent.surface_tokens()) span.push_back(tok);
    if (span.empty() || span.size() >= toks.size()) continue;
    if (std::equal(span.begin(), span.end(), toks.begin()))
      candidates.push_back({true, span.size(), s});
    if (std::equal(span.begin(), span.end(), toks.end() - span.size()))
      candidates.push_back({false, span.size(), s});
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return a.length != b.length ? a.length > b.length : a.left && !b.left;
  });
  for (const auto& c : candidates) {
    std::vector<std::string> rest =
        c.left ? std::vector<std::string>(toks.begin() + c.length, toks.end())
               : std::vector<std::string>(toks.begin(), toks.end() - c.length);
    std::size_t saved = var_counter_;
    std::string v = fresh_var(all_names(ump.meaning));
    Term sem = abstract(ump.meaning, c.arg.semantics, v);
    Features fs{Feature::selector(c.arg.type.features[0].id), Feature::base(lex_.start)};
    Sign functor = make_sign(rest, c.left ? Category::Derived : Category::Lexical, fs, sem);
    Lexicon next = lex_;
    if (!next.add(functor) || !derivable(next, ump) || !consistent(next)) {
      var_counter_ = saved;
      continue;
    }
    lex_ = std::move(next);
    note("  partial parse: " + describe(functor) + " takes " + describe(c.arg));
    return true;
  }
  return false;
}

void Learner::revise() {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < lex_.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < lex_.size() && !changed; ++j)
        changed = factor_pair(i, j);
  }
}

bool Learner::factor_pair(std::size_t i, std::size_t j) {
  const Sign a = lex_.entries[i];
  const Sign b = lex_.entries[j];
  if (a.type != b.type) return false;
  std::string key = a.exponent.render_raw() + "|" + b.exponent.render_raw();
  if (blacklist_.count(key)) return false;
  auto al = align(a, b, false);
  if (!al || al->residue_count() != 1 || al->semantics.identical()) return false;

  const auto& segs = al->segments;
  std::size_t r = 0;
  while (segs[r].shared) ++r;
  if (segs[r].a.empty() || segs[r].b.empty()) return false;
  std::vector<std::string> prefix = r > 0 ? segs[0].a : std::vector<std::string>{};
  std::vector<std::string> suffix = r + 1 < segs.size() ? segs[r + 1].a : std::vector<std::string>{};
  bool functor_left = prefix.size() >= suffix.size();
  const auto& functor_tokens = functor_left ? prefix : suffix;

  auto arg_tokens = [&](const std::vector<std::string>& mid) {
    std::vector<std::string> out;
    if (!functor_left) out.insert(out.end(), prefix.begin(), prefix.end());
    out.insert(out.end(), mid.begin(), mid.end());
    if (functor_left) out.insert(out.end(), suffix.begin(), suffix.end());
    return out;
  };
  auto ta = arg_tokens(segs[r].a);
  auto tb = arg_tokens(segs[r].b);

  const auto& sa = al->semantics;
  std::size_t saved_types = type_counter_, saved_vars = var_counter_;
  Term functor_sem;
  if (sa.shares_structure()) {
    std::string v = fresh_var(all_names(sa.pattern));
    functor_sem = Term::abs(v, substitute(sa.pattern, sa.hole, Term::var(v)));
  }

  std::string base;
  Category cat_a = ta.size() == 1 ? Category::Lexical : Category::Derived;
  Category cat_b = tb.size() == 1 ? Category::Lexical : Category::Derived;
  if (ta.size() == 1 && tb.size() == 1 && sa.residue_a->is_var() && sa.residue_b->is_var()) {
    for (std::size_t k = 0; k < lex_.size() && base.empty(); ++k)
      if (k != i && k != j && atomic(lex_.entries[k])) base = lex_.entries[k].type.features[0].id;
  }
  if (base.empty()) base = fresh_type(lex_);

  Features ffs{Feature::selector(base)};
  ffs.insert(ffs.end(), a.type.features.begin(), a.type.features.end());
  Sign functor = make_sign(functor_tokens, functor_left ? Category::Lexical : Category::Derived, ffs,
                           functor_sem);
  Sign arg_a = make_sign(ta, cat_a, {Feature::base(base)}, *sa.residue_a);
  Sign arg_b = make_sign(tb, cat_b, {Feature::base(base)}, *sa.residue_b);

  std::vector<Sign> entries;
  for (std::size_t k = 0; k < lex_.size(); ++k) {
    if (k == j) continue;
    if (k != i) {
      entries.push_back(lex_.entries[k]);
      continue;
    }
    if (functor_left) entries.push_back(functor);
    entries.push_back(arg_a);
    entries.push_back(arg_b);
    if (!functor_left) entries.push_back(functor);
  }
  Lexicon next = rebuilt(lex_, entries);
  if (!consistent(next)) {
    type_counter_ = saved_types;
    var_counter_ = saved_vars;
    blacklist_.insert(key);
    note("  factoring " + key + " rolled back: endorsed utterances would be lost");
    return false;
  }
  lex_ = std::move(next);
  note("  factored " + describe(a) + " / " + describe(b) + " -> " + describe(functor) + ", " +
       describe(arg_a) + ", " + describe(arg_b));
  return true;
}

// ---------------------------------------------------------------------------
// Production and feedback

std::string Learner::express(const Term& meaning) const {
  return produce(lex_, meaning, budget(lex_)).utterance;
}

std::vector<std::string> Learner::expressions(const Term& meaning) const {
  if (lex_.empty()) return {};
  return realizations(lex_, meaning, budget(lex_));
}

void Learner::commit(const Ump& ump) {
  bool known = std::any_of(endorsed_.begin(), endorsed_.end(), [&](const Ump& u) {
    return u.utterance == ump.utterance && same_meaning(u.meaning, ump.meaning);
  });
  if (!known) endorsed_.push_back(ump);
  note("endorsed '" + ump.utterance + "'");
}

std::string Learner::repair(const Ump& punished) {
  punished_.push_back(punished);
  note("punished '" + punished.utterance + "' " + render_term(punished.meaning));
  if (repair_split(punished)) return "morpheme-split";
  if (repair_block(punished)) return "affix-block";
  note("  no repair found");
  throw NoRepairFound("no repair removes '" + punished.utterance + "'");
}

namespace {

bool still_says(const Lexicon& lex, const Ump& punished, std::size_t budget) {
  try {
    auto r = realizations(lex, punished.meaning, budget);
    return std::find(r.begin(), r.end(), punished.utterance) != r.end();
  } catch (const Unrealizable&) {
    return false;
  }
}

}  // namespace

bool Learner::repair_split(const Ump& punished) {
  const auto toks = tokenize(punished.utterance);
  for (std::size_t s = 0; s < lex_.size(); ++s) {
    for (std::size_t l = 0; l < lex_.size(); ++l) {
      const Sign& short_cell = lex_.entries[s];
      const Sign& long_cell = lex_.entries[l];
      if (s == l || !atomic(short_cell) || !atomic(long_cell)) continue;
      if (short_cell.type != long_cell.type) continue;
      std::string stem = short_cell.exponent.tokens()[0];
      std::string form = long_cell.exponent.tokens()[0];
      if (stem.size() < 3 || form.size() <= stem.size() || form.compare(0, stem.size(), stem) != 0)
        continue;
      if (std::find(toks.begin(), toks.end(), form) == toks.end()) continue;

      // The selector that took the cell in the punished derivation.
      int selector = -1;
      for (const auto& t : realizing_derivations(lex_, punished.meaning, budget(lex_))) {
        if (t->label.head().exponent.surface() != punished.utterance) continue;
        std::vector<std::pair<int, int>> pairs;
        merges(*t, pairs);
        for (auto [d, c] : pairs)
          if (c == static_cast<int>(l)) selector = d;
        if (selector >= 0) break;
      }
      if (selector < 0) continue;

      // Nouns that selector took in endorsed derivations.
      std::set<int> nouns{static_cast<int>(s)};
      for (const auto& u : endorsed_) {
        for (const auto& t : realizing_derivations(lex_, u.meaning, budget(lex_))) {
          if (t->label.head().exponent.surface() != u.utterance) continue;
          std::vector<std::pair<int, int>> pairs;
          merges(*t, pairs);
          for (auto [d, c] : pairs)
            if (d == selector && c != static_cast<int>(l)) nouns.insert(c);
          break;
        }
      }

      std::size_t saved = type_counter_;
      const std::string cell = short_cell.type.features[0].id;
      const std::string num = fresh_type(lex_);
      const std::string lic = fresh_licensee(lex_);
      std::vector<Sign> entries;
      for (std::size_t k = 0; k < lex_.size(); ++k) {
        if (k == l) continue;
        Sign e = lex_.entries[k];
        if (static_cast<int>(k) == selector) e.type.features[0] = Feature::selector(num);
        if (nouns.count(static_cast<int>(k))) e.type.features.push_back(Feature::licensee(lic));
        entries.push_back(std::move(e));
      }
      Features head{Feature::selector(cell), Feature::licensor(lic), Feature::base(num)};
      Sign null_head = make_sign({}, Category::Lexical, head, Term());
      Sign suffix = make_sign({"-" + form.substr(stem.size())}, Category::Lexical, head, Term());
      entries.push_back(null_head);
      entries.push_back(suffix);
      Lexicon next = rebuilt(lex_, entries);

      auto saved_aliases = aliases_;
      aliases_[long_cell.semantics.name()] = short_cell.semantics.name();
      if (consistent(next) && !still_says(next, punished, budget(next))) {
        lex_ = std::move(next);
        note("  morpheme split " + stem + " + -" + form.substr(stem.size()) + ": " +
             describe(null_head) + ", " + describe(suffix));
        return true;
      }
      aliases_ = std::move(saved_aliases);
      type_counter_ = saved;
    }
  }
  return false;
}

bool Learner::repair_block(const Ump& punished) {
  const auto toks = tokenize(punished.utterance);
  for (const auto& w : toks) {
    for (std::size_t s = 0; s < lex_.size(); ++s) {
      const Sign& stem_sign = lex_.entries[s];
      if (stem_sign.exponent.size() != 1) continue;
      std::string stem = stem_sign.exponent.tokens()[0];
      if (w.size() <= stem.size() || w.compare(0, stem.size(), stem) != 0) continue;
      std::string affix = "-" + w.substr(stem.size());

      // Needs an endorsed irregular form of this stem.
      bool irregular_seen = false;
      for (const auto& [form, base] : irregular_) {
        if (base != stem) continue;
        for (const auto& u : endorsed_) {
          auto ut = tokenize(u.utterance);
          if (std::find(ut.begin(), ut.end(), form) != ut.end()) irregular_seen = true;
        }
      }
      if (!irregular_seen) continue;

      for (const auto& f : stem_sign.type.features) {
        if (f.kind != Feature::Kind::Licensee) continue;
        auto licenses = [&](const Sign& e) {
          const auto& fs = e.type.features;
          return std::find(fs.begin(), fs.end(), Feature::licensor(f.id)) != fs.end();
        };
        bool has_affix = std::any_of(lex_.entries.begin(), lex_.entries.end(), [&](const Sign& e) {
          return licenses(e) && e.exponent.tokens() == std::vector<std::string>{affix};
        });
        auto null_it = std::find_if(lex_.entries.begin(), lex_.entries.end(),
                                    [&](const Sign& e) { return licenses(e) && e.exponent.empty(); });
        if (!has_affix || null_it == lex_.entries.end()) continue;

        const std::string lic = fresh_licensee(lex_);
        std::vector<Sign> entries = lex_.entries;
        for (auto& g : entries[s].type.features)
          if (g == f) g = Feature::licensee(lic);
        Sign null_head = *null_it;
        for (auto& g : null_head.type.features)
          if (g == Feature::licensor(f.id)) g = Feature::licensor(lic);
        entries.push_back(null_head);
        Lexicon next = rebuilt(lex_, entries);
        if (consistent(next) && !still_says(next, punished, budget(next))) {
          lex_ = std::move(next);
          note("  blocked " + stem + " " + affix + ": " + describe(lex_.entries[s]) + ", " +
               describe(null_head));
          return true;
        }
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Checkpoints

std::string Learner::checkpoint() const {
  std::string out;
  out += "#@ t " + std::to_string(time_) + "\n";
  out += "#@ start " + lex_.start + "\n";
  out += "#@ types " + std::to_string(type_counter_) + "\n";
  out += "#@ vars " + std::to_string(var_counter_) + "\n";
  for (const auto& [from, to] : aliases_) out += "#@ alias " + from + " " + to + "\n";
  for (const auto& [form, stem] : irregular_) out += "#@ irregular " + form + " " + stem + "\n";
  for (const auto& u : endorsed_) out += "#@ endorsed " + u.utterance + "\t" + render_term(u.meaning) + "\n";
  for (const auto& u : punished_) out += "#@ punished " + u.utterance + "\t" + render_term(u.meaning) + "\n";
  for (const auto& k : blacklist_) out += "#@ blacklist " + k + "\n";
  return out + format_lexicon(lex_);
}

Learner Learner::restore(std::string_view text, LearnerOptions options) {
  Learner l(std::move(options));
  std::vector<std::pair<std::string, std::string>> headers;
  l.lex_ = parse_lexicon(text, &headers);
  auto words = [](const std::string& v) { return tokenize(v); };
  auto ump = [](const std::string& v) {
    auto f = split_tabs(v);
    if (f.size() != 2) throw FormatError("bad checkpoint UMP '" + v + "'", 0);
    return Ump{f[0], parse_term(f[1])};
  };
  for (const auto& [k, v] : headers) {
    if (k == "t") l.time_ = std::stoul(v);
    else if (k == "start") l.lex_.start = v;
    else if (k == "types") l.type_counter_ = std::stoul(v);
    else if (k == "vars") l.var_counter_ = std::stoul(v);
    else if (k == "alias") l.aliases_[words(v).at(0)] = words(v).at(1);
    else if (k == "irregular") l.irregular_[words(v).at(0)] = words(v).at(1);
    else if (k == "endorsed") l.endorsed_.push_back(ump(v));
    else if (k == "punished") l.punished_.push_back(ump(v));
    else if (k == "blacklist") l.blacklist_.insert(v);
  }
  return l;
}

}  // namespace umt
