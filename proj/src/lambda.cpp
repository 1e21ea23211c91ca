#include "umt/lambda.hpp"

#include <cctype>
#include <functional>
#include <vector>

namespace umt {

struct Term::Node {
  Kind kind = Kind::Empty;
  std::string name;
  Term left;
  Term right;
  std::size_t size = 1;
};

namespace {

const std::string kNoName;

}  // namespace

VarKind var_kind(std::string_view name) {
  if (name.empty()) return VarKind::IndividualConstant;
  if (std::isupper(static_cast<unsigned char>(name[0]))) return VarKind::TermVariable;
  if (name.size() == 1 && name[0] >= 'u' && name[0] <= 'z') return VarKind::IndividualVariable;
  return VarKind::IndividualConstant;
}

Term::Term() = default;

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::abs(std::string binder, Term body) {
  if (!occurs_free(body, binder))
    throw FormationError("binder '" + binder + "' does not occur free in the abstraction body");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Abs;
  n->name = std::move(binder);
  n->size = 1 + body.size();
  n->left = std::move(body);
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->size = 1 + fun.size() + arg.size();
  n->left = std::move(fun);
  n->right = std::move(arg);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_ ? node_->kind : Kind::Empty; }
const std::string& Term::name() const { return node_ ? node_->name : kNoName; }
const Term& Term::body() const { return node_->left; }
const Term& Term::fun() const { return node_->left; }
const Term& Term::arg() const { return node_->right; }
std::size_t Term::size() const { return node_ ? node_->size : 1; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Empty: return true;
    case Term::Kind::Var: return a.name() == b.name();
    case Term::Kind::Abs: return a.name() == b.name() && a.body() == b.body();
    case Term::Kind::App: return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Empty: return;
    case Term::Kind::Var:
      for (const auto& b : bound)
        if (b == t.name()) return;
      out.insert(t.name());
      return;
    case Term::Kind::Abs:
      bound.push_back(t.name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
    case Term::Kind::App:
      collect_free(t.fun(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
  }
}

void collect_names(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Empty: return;
    case Term::Kind::Var: out.insert(t.name()); return;
    case Term::Kind::Abs:
      out.insert(t.name());
      collect_names(t.body(), out);
      return;
    case Term::Kind::App:
      collect_names(t.fun(), out);
      collect_names(t.arg(), out);
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(t, bound, out);
  return out;
}

std::set<std::string> all_names(const Term& t) {
  std::set<std::string> out;
  collect_names(t, out);
  return out;
}

bool occurs_free(const Term& t, const std::string& v) {
  switch (t.kind()) {
    case Term::Kind::Empty: return false;
    case Term::Kind::Var: return t.name() == v;
    case Term::Kind::Abs: return t.name() != v && occurs_free(t.body(), v);
    case Term::Kind::App: return occurs_free(t.fun(), v) || occurs_free(t.arg(), v);
  }
  return false;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

namespace {

Term substitute_impl(const Term& t, const std::string& v, const Term& u,
                     const std::set<std::string>& u_free) {
  switch (t.kind()) {
    case Term::Kind::Empty: return t;
    case Term::Kind::Var: return t.name() == v ? u : t;
    case Term::Kind::App: {
      Term f = substitute_impl(t.fun(), v, u, u_free);
      Term a = substitute_impl(t.arg(), v, u, u_free);
      return Term::app(std::move(f), std::move(a));
    }
    case Term::Kind::Abs: {
      if (t.name() == v || !occurs_free(t.body(), v)) return t;
      if (!u_free.count(t.name()))
        return Term::abs(t.name(), substitute_impl(t.body(), v, u, u_free));
      std::set<std::string> avoid = all_names(t.body());
      avoid.insert(u_free.begin(), u_free.end());
      avoid.insert(v);
      std::string renamed = fresh_name(t.name(), avoid);
      Term body = substitute(t.body(), t.name(), Term::var(renamed));
      return Term::abs(renamed, substitute_impl(body, v, u, u_free));
    }
  }
  return t;
}

}  // namespace

Term substitute(const Term& t, const std::string& v, const Term& u) {
  return substitute_impl(t, v, u, free_vars(u));
}

namespace {

// Position of `name` in the binder stack counted from the innermost binder.
int binder_depth(const std::vector<std::string>& env, const std::string& name) {
  for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i)
    if (env[i] == name) return static_cast<int>(env.size()) - 1 - i;
  return -1;
}

bool alpha_impl(const Term& a, const Term& b, std::vector<std::string>& ea,
                std::vector<std::string>& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Empty: return true;
    case Term::Kind::Var: {
      int da = binder_depth(ea, a.name());
      int db = binder_depth(eb, b.name());
      if (da != db) return false;
      return da >= 0 || a.name() == b.name();
    }
    case Term::Kind::App:
      return alpha_impl(a.fun(), b.fun(), ea, eb) && alpha_impl(a.arg(), b.arg(), ea, eb);
    case Term::Kind::Abs: {
      ea.push_back(a.name());
      eb.push_back(b.name());
      bool same = alpha_impl(a.body(), b.body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return same;
    }
  }
  return false;
}

}  // namespace

bool alpha_equivalent(const Term& a, const Term& b) {
  std::vector<std::string> ea, eb;
  return alpha_impl(a, b, ea, eb);
}

Term canonical(const Term& t) {
  std::set<std::string> names = all_names(t);
  std::string prefix = "v";
  auto clashes = [&](const std::string& p) {
    for (const auto& n : names) {
      if (n.size() > p.size() && n.compare(0, p.size(), p) == 0) {
        bool digits = true;
        for (std::size_t i = p.size(); i < n.size(); ++i)
          digits = digits && std::isdigit(static_cast<unsigned char>(n[i]));
        if (digits) return true;
      }
    }
    return false;
  };
  while (clashes(prefix)) prefix += "v";
  std::size_t counter = 0;
  std::function<Term(const Term&)> walk = [&](const Term& u) -> Term {
    switch (u.kind()) {
      case Term::Kind::Empty:
      case Term::Kind::Var: return u;
      case Term::Kind::App: {
        Term f = walk(u.fun());
        return Term::app(std::move(f), walk(u.arg()));
      }
      case Term::Kind::Abs: {
        std::string name = prefix + std::to_string(counter++);
        Term body = substitute(u.body(), u.name(), Term::var(name));
        return Term::abs(name, walk(body));
      }
    }
    return u;
  };
  return walk(t);
}

Term apply(const Term& f, const Term& a) {
  if (f.is_empty()) return a;
  if (a.is_empty()) return f;
  return Term::app(f, a);
}

std::optional<Term> beta_step(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Empty:
    case Term::Kind::Var: return std::nullopt;
    case Term::Kind::Abs: {
      auto body = beta_step(t.body());
      if (!body) return std::nullopt;
      return Term::abs(t.name(), std::move(*body));
    }
    case Term::Kind::App: {
      const Term& f = t.fun();
      if (f.is_abs()) return substitute(f.body(), f.name(), t.arg());
      if (f.is_empty()) return t.arg();
      if (t.arg().is_empty()) return f;
      if (auto nf = beta_step(f)) return Term::app(std::move(*nf), t.arg());
      if (auto na = beta_step(t.arg())) return Term::app(f, std::move(*na));
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool is_normal(const Term& t) { return !beta_step(t).has_value(); }

Term beta_reduce(const Term& t, std::size_t budget) {
  Term current = t;
  for (std::size_t step = 0; step < budget; ++step) {
    auto next = beta_step(current);
    if (!next) return current;
    current = std::move(*next);
  }
  if (is_normal(current)) return current;
  throw NonTerminating("reduction did not reach a normal form within " +
                       std::to_string(budget) + " steps");
}

namespace {

// Replaces occurrences of s whose free variables are not captured by binders
// of the surrounding context.
Term replace_subterm(const Term& t, const Term& s, const std::set<std::string>& s_free,
                     const std::string& v, std::vector<std::string>& bound, bool& found) {
  bool captured = false;
  for (const auto& b : bound) captured = captured || s_free.count(b);
  if (!captured && alpha_equivalent(t, s)) {
    found = true;
    return Term::var(v);
  }
  switch (t.kind()) {
    case Term::Kind::Empty:
    case Term::Kind::Var: return t;
    case Term::Kind::App: {
      Term f = replace_subterm(t.fun(), s, s_free, v, bound, found);
      Term a = replace_subterm(t.arg(), s, s_free, v, bound, found);
      return Term::app(std::move(f), std::move(a));
    }
    case Term::Kind::Abs: {
      bound.push_back(t.name());
      Term body = replace_subterm(t.body(), s, s_free, v, bound, found);
      bound.pop_back();
      return Term::abs(t.name(), std::move(body));
    }
  }
  return t;
}

}  // namespace

Term abstract(const Term& t, const Term& s, const std::string& v) {
  if (all_names(t).count(v)) throw VariableClash("variable '" + v + "' already occurs in the term");
  std::vector<std::string> bound;
  bool found = false;
  Term body = replace_subterm(t, s, free_vars(s), v, bound, found);
  if (!found) throw SubtermNotFound("subterm does not occur in the term");
  return Term::abs(v, std::move(body));
}

bool contains_subterm(const Term& t, const Term& s) {
  std::vector<std::string> bound;
  bool found = false;
  std::string marker = fresh_name("hole", all_names(t));
  (void)replace_subterm(t, s, free_vars(s), marker, bound, found);
  return found;
}

// ---------------------------------------------------------------------------
// Concrete syntax

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = term();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!consume(token)) throw SyntaxError("expected '" + std::string(token) + "'", pos_);
  }

  std::string name() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError("expected a name", pos_);
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Term term() {
    Term t = primary();
    while (consume("(")) {
      Term a = term();
      expect(")");
      t = Term::app(std::move(t), std::move(a));
    }
    return t;
  }

  Term primary() {
    skip_space();
    if (consume("\\") || consume("λ")) {
      std::size_t at = pos_;
      std::string binder = name();
      expect(".");
      Term body = term();
      try {
        return Term::abs(binder, std::move(body));
      } catch (const FormationError& e) {
        throw SyntaxError(e.what(), at);
      }
    }
    if (consume("(")) {
      Term t = term();
      expect(")");
      return t;
    }
    if (consume("ε")) return Term::empty();
    std::string n = name();
    if (n == "eps") return Term::empty();
    return Term::var(std::move(n));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const Term& t, Notation notation, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Empty: out += notation == Notation::Unicode ? "ε" : "eps"; return;
    case Term::Kind::Var: out += t.name(); return;
    case Term::Kind::Abs:
      out += notation == Notation::Unicode ? "λ" : "\\";
      out += t.name();
      out += '.';
      render_into(t.body(), notation, out);
      return;
    case Term::Kind::App: {
      bool wrap = t.fun().is_abs() || t.fun().is_empty();
      if (wrap) out += '(';
      render_into(t.fun(), notation, out);
      if (wrap) out += ')';
      out += '(';
      render_into(t.arg(), notation, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string render_term(const Term& t, Notation notation) {
  std::string out;
  render_into(t, notation, out);
  return out;
}

}  // namespace umt
