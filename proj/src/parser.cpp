// Priority-queue top-down recognition with chronological backtracking.

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <unordered_set>

#include "umt/engine.hpp"

namespace umt {

std::string format_trace(const std::vector<TraceRow>& rows) {
  std::string out;
  for (const auto& r : rows)
    out += std::to_string(r.step) + "\t" + r.input + "\t" + r.queue + "\t" + r.operation + "\n";
  return out;
}

namespace {

constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max() / 4;

std::size_t chars(const std::string& token) {
  return token.size() - (!token.empty() && token[0] == '-' ? 1 : 0);
}

std::size_t chars(const std::vector<std::string>& tokens) {
  std::size_t n = 0;
  for (const auto& t : tokens) n += chars(t);
  return n;
}

std::string render_input(const std::vector<std::string>& tokens, std::size_t from) {
  if (from >= tokens.size()) return "ε";
  std::string out;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    if (i > from) out += ' ';
    out += tokens[i];
  }
  return out;
}

struct Item {
  const McfgCategory* cat;
  std::vector<NodeIndex> idx;

  const NodeIndex& key() const {
    return *std::min_element(idx.begin(), idx.end(), [](const NodeIndex& a, const NodeIndex& b) {
      return linear_before(a, b);
    });
  }
  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& i : idx) d = std::max(d, i.length());
    return d;
  }
};

std::string render_item(const Item& it) {
  std::string out = render_category(*it.cat) + "(";
  for (std::size_t i = 0; i < it.idx.size(); ++i) {
    if (i) out += ", ";
    out += it.idx[i].render();
  }
  return out + ")";
}

std::string render_queue(const std::vector<Item>& q) {
  if (q.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) out += ' ';
    out += render_item(q[i]);
  }
  return out;
}

bool item_before(const Item& a, const Item& b) { return linear_before(a.key(), b.key()); }

bool sorted(const std::vector<Item>& q) { return std::is_sorted(q.begin(), q.end(), item_before); }

// Input is kept as the original token vector plus a cursor; a token partly
// consumed by a stem survives as its affix remainder in `head`.
struct Input {
  const std::vector<std::string>* tokens;
  std::size_t pos = 0;
  std::string head;  // non-empty: replaces tokens[pos]

  std::vector<std::string> rest() const {
    std::vector<std::string> out;
    for (std::size_t i = pos; i < tokens->size(); ++i) out.push_back(i == pos && !head.empty() ? head : (*tokens)[i]);
    return out;
  }
  std::string key() const { return std::to_string(pos) + "|" + head; }
};

std::optional<Input> match(const std::vector<std::string>& literal, Input in) {
  for (const auto& lit : literal) {
    if (in.pos >= in.tokens->size()) return std::nullopt;
    const std::string& front = in.head.empty() ? (*in.tokens)[in.pos] : in.head;
    if (front == lit) {
      ++in.pos;
      in.head.clear();
    } else if (front.size() > lit.size() && front.compare(0, lit.size(), lit) == 0) {
      in.head = "-" + front.substr(lit.size());
    } else {
      return std::nullopt;
    }
  }
  return in;
}

}  // namespace

Parser::Parser(const Mcfg& g) : g_(g), min_chars_(g.rules.size(), kInfinite) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t r = 0; r < g_.rules.size(); ++r) {
      const auto& rule = g_.rules[r];
      std::size_t n = 0;
      if (rule.is_axiom()) {
        n = chars(rule.literal.tokens());
      } else {
        for (const auto& c : rule.rhs) {
          auto it = cat_min_chars_.find(c);
          n += it == cat_min_chars_.end() ? kInfinite : it->second;
        }
      }
      n = std::min(n, kInfinite);
      if (n < min_chars_[r]) {
        min_chars_[r] = n;
        auto [it, fresh] = cat_min_chars_.emplace(rule.lhs, n);
        if (!fresh) it->second = std::min(it->second, n);
        changed = true;
      }
    }
  }
}

struct Parser::Search {
  const Parser& parser;
  const std::vector<std::string>& tokens;
  const std::function<bool(const Parse&)>& visit;
  std::size_t max_index;
  std::size_t max_parses;

  Search(const Parser& p, const std::vector<std::string>& t,
         const std::function<bool(const Parse&)>& v, std::size_t mi, std::size_t mp)
      : parser(p), tokens(t), visit(v), max_index(mi), max_parses(mp) {}

  std::vector<TraceRow> rows;
  std::vector<ScanEvent> scans;
  std::vector<std::size_t> rules;
  std::unordered_set<std::string> failed, on_path;
  std::size_t found = 0;
  bool stop = false;
  std::size_t furthest = 0;
  std::set<std::string> expected;

  std::size_t cat_min(const McfgCategory& c) const {
    auto it = parser.cat_min_chars_.find(c);
    return it == parser.cat_min_chars_.end() ? kInfinite : it->second;
  }

  void note_failure(std::size_t pos, const std::string& literal) {
    if (pos > furthest) {
      furthest = pos;
      expected.clear();
    }
    if (pos == furthest) expected.insert(literal);
  }

  void emit() {
    Parse p;
    p.trace = rows;
    for (std::size_t i = 0; i < p.trace.size(); ++i) p.trace[i].step = i + 1;
    p.scans = scans;
    p.rules = rules;
    ++found;
    if (!visit(p) || found >= max_parses) stop = true;
  }

  bool run(const std::vector<Item>& queue, const Input& in) {
    std::string key = render_queue(queue) + "\x1f" + in.key();
    if (failed.count(key) || on_path.count(key)) return false;
    on_path.insert(key);
    bool ok = step(queue, in);
    on_path.erase(key);
    if (!ok) failed.insert(std::move(key));
    return ok;
  }

  bool step(const std::vector<Item>& queue, const Input& in) {
    std::string input_text = render_input(in.rest(), 0);
    if (queue.empty()) {
      if (in.pos < tokens.size()) return false;
      rows.push_back({0, input_text, "ε", "accept"});
      emit();
      rows.pop_back();
      return true;
    }
    if (!sorted(queue)) {
      std::vector<Item> q = queue;
      std::stable_sort(q.begin(), q.end(), item_before);
      rows.push_back({0, input_text, render_queue(queue), "sort"});
      bool ok = run(q, in);
      rows.pop_back();
      return ok;
    }
    std::size_t need = 0;
    for (const auto& it : queue) {
      if (it.depth() > max_index) return false;
      need += cat_min(*it.cat);
    }
    if (need > chars(in.rest())) return false;

    const Item& front = queue.front();
    const std::string queue_text = render_queue(queue);
    bool any = false;
    for (std::size_t r : parser.g_.rules_for(*front.cat)) {
      if (stop) break;
      const McfgRule& rule = parser.g_.rules[r];
      std::vector<Item> next;
      Input after = in;
      std::string op;
      if (rule.is_axiom()) {
        auto m = match(rule.literal.tokens(), in);
        if (!m) {
          note_failure(in.pos, rule.literal.render_raw());
          continue;
        }
        after = *m;
        op = "scan (" + std::to_string(r + 1) + ")";
        scans.push_back({r, front.idx[0], render_input(after.rest(), 0)});
      } else {
        auto kids = assign_child_indices(rule, front.idx);
        for (std::size_t k = 0; k < rule.rhs.size(); ++k) next.push_back({&rule.rhs[k], kids[k]});
        op = "expand (" + std::to_string(r + 1) + ")";
      }
      next.insert(next.end(), queue.begin() + 1, queue.end());
      rows.push_back({0, input_text, queue_text, op});
      rules.push_back(r);
      if (run(next, after)) any = true;
      rows.pop_back();
      rules.pop_back();
      if (rule.is_axiom()) scans.pop_back();
    }
    return any;
  }
};

std::size_t Parser::parses(const std::vector<std::string>& tokens,
                           const std::function<bool(const Parse&)>& visit,
                           const ParseOptions& options) const {
  std::size_t max_index =
      options.max_index_length ? options.max_index_length : 8 + 4 * tokens.size();
  Search s(*this, tokens, visit, max_index, std::max<std::size_t>(1, options.max_parses));
  for (const auto& start : g_.start) {
    if (s.stop) break;
    Input in{&tokens, 0, {}};
    s.run({Item{&start, {NodeIndex{}}}}, in);
  }
  if (s.found == 0) {
    std::vector<std::string> expected(s.expected.begin(), s.expected.end());
    std::string msg = "utterance rejected at token " + std::to_string(s.furthest + 1);
    if (!expected.empty()) {
      msg += "; expected";
      for (const auto& e : expected) msg += " '" + e + "'";
    }
    throw Reject(msg, s.furthest + 1, std::move(expected));
  }
  return s.found;
}

Parse Parser::recognize(const std::vector<std::string>& tokens, const ParseOptions& options) const {
  Parse out;
  parses(
      tokens,
      [&](const Parse& p) {
        out = p;
        return false;
      },
      options);
  return out;
}

bool Parser::accepts(const std::vector<std::string>& tokens, const ParseOptions& options) const {
  try {
    recognize(tokens, options);
    return true;
  } catch (const Reject&) {
    return false;
  }
}

}  // namespace umt
