// Alignment of exponents and meanings.

#include <algorithm>

#include "umt/learner.hpp"

namespace umt {

namespace {

struct Anti {
  Term pattern;
  std::optional<Term> ra, rb;
};

Anti anti(const Term& a, const Term& b, const std::string& hole) {
  if (alpha_equivalent(a, b)) return {a, std::nullopt, std::nullopt};
  Anti root{Term::var(hole), a, b};
  if (a.is_app() && b.is_app()) {
    if (alpha_equivalent(a.fun(), b.fun())) {
      Anti inner = anti(a.arg(), b.arg(), hole);
      return {Term::app(a.fun(), inner.pattern), inner.ra, inner.rb};
    }
    if (alpha_equivalent(a.arg(), b.arg())) {
      Anti inner = anti(a.fun(), b.fun(), hole);
      return {Term::app(inner.pattern, a.arg()), inner.ra, inner.rb};
    }
    return root;
  }
  if (a.is_abs() && b.is_abs()) {
    auto avoid = all_names(a);
    auto nb = all_names(b);
    avoid.insert(nb.begin(), nb.end());
    avoid.insert(hole);
    std::string z = a.name() == b.name() || !nb.count(a.name()) ? a.name() : fresh_name(a.name(), avoid);
    Term ba = substitute(a.body(), a.name(), Term::var(z));
    Term bb = substitute(b.body(), b.name(), Term::var(z));
    Anti inner = anti(ba, bb, hole);
    if (occurs_free(*inner.ra, z) || occurs_free(*inner.rb, z)) return root;
    return {Term::abs(z, inner.pattern), inner.ra, inner.rb};
  }
  return root;
}

std::vector<Segment> token_segments(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  if (a.empty() && b.empty()) return {};
  std::size_t best = 0, ia = 0, ib = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = 0;
      while (i + k < a.size() && j + k < b.size() && a[i + k] == b[j + k]) ++k;
      if (k > best) best = k, ia = i, ib = j;
    }
  if (best == 0) return {Segment{false, a, b}};
  auto left = token_segments({a.begin(), a.begin() + ia}, {b.begin(), b.begin() + ib});
  auto right = token_segments({a.begin() + ia + best, a.end()}, {b.begin() + ib + best, b.end()});
  left.push_back(Segment{true, {a.begin() + ia, a.begin() + ia + best}, {b.begin() + ib, b.begin() + ib + best}});
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

std::vector<std::string> affix(const std::string& token, std::size_t from) {
  if (from >= token.size()) return {};
  return {"-" + token.substr(from)};
}

}  // namespace

bool SemanticAlignment::shares_structure() const {
  return identical() || !(pattern.is_var() && pattern.name() == hole);
}

SemanticAlignment anti_unify(const Term& a, const Term& b) {
  auto names = all_names(a);
  auto nb = all_names(b);
  names.insert(nb.begin(), nb.end());
  SemanticAlignment out;
  out.hole = fresh_name("hole", names);
  Anti r = anti(a, b, out.hole);
  out.pattern = r.pattern;
  out.residue_a = r.ra;
  out.residue_b = r.rb;
  return out;
}

std::size_t Alignment::shared_length() const {
  std::size_t n = 0;
  for (const auto& s : segments)
    if (s.shared) n += s.a.size();
  return n;
}

std::size_t Alignment::residue_count() const {
  return std::count_if(segments.begin(), segments.end(), [](const Segment& s) { return !s.shared; });
}

std::optional<Alignment> align(const std::vector<std::string>& a, const Term& meaning_a,
                               const std::vector<std::string>& b, const Term& meaning_b,
                               bool morphemes) {
  Alignment out;
  for (auto& seg : token_segments(a, b)) {
    bool split = morphemes && !seg.shared && seg.a.size() == 1 && seg.b.size() == 1;
    std::size_t p = 0;
    if (split) {
      const std::string &x = seg.a[0], &y = seg.b[0];
      while (p < x.size() && p < y.size() && x[p] == y[p]) ++p;
      split = p >= 3 && x[0] != '-' && y[0] != '-';
    }
    if (!split) {
      out.segments.push_back(std::move(seg));
      continue;
    }
    std::string stem = seg.a[0].substr(0, p);
    out.segments.push_back(Segment{true, {stem}, {stem}});
    out.segments.push_back(Segment{false, affix(seg.a[0], p), affix(seg.b[0], p)});
  }
  if (out.shared_length() == 0) return std::nullopt;
  out.semantics = anti_unify(meaning_a, meaning_b);
  auto fa = free_vars(meaning_a);
  for (const auto& v : free_vars(meaning_b))
    if (fa.count(v)) out.shared_constants.insert(v);
  return out;
}

std::optional<Alignment> align(const Sign& a, const Sign& b, bool morphemes) {
  return align(a.exponent.tokens(), a.semantics, b.exponent.tokens(), b.semantics, morphemes);
}

}  // namespace umt
