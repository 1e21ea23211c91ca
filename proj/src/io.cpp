#include "umt/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace umt {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      return out;
    }
    out.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    f(++line_no, line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
}

Term parse_term_at(const std::string& text, std::size_t line) {
  try {
    return parse_term(text);
  } catch (const SyntaxError& e) {
    throw FormatError(std::string("bad lambda term: ") + e.what(), line);
  }
}

}  // namespace

Lexicon parse_lexicon(std::string_view text,
                      std::vector<std::pair<std::string, std::string>>* headers) {
  Lexicon lex;
  for_each_line(text, [&](std::size_t no, std::string_view line) {
    std::string t = trim(line);
    if (t.empty()) return;
    if (t.rfind("#@", 0) == 0) {
      if (headers) {
        std::string rest = trim(std::string_view(t).substr(2));
        std::size_t sp = rest.find(' ');
        headers->emplace_back(rest.substr(0, sp),
                              sp == std::string::npos ? "" : trim(rest.substr(sp + 1)));
      }
      return;
    }
    if (t[0] == '#') return;
    auto fields = split_tabs(line);
    if (fields.size() != 4) throw FormatError("expected 4 tab-separated fields", no);
    Sign s;
    s.exponent = Exponent::parse(fields[0]);
    std::string cat = trim(fields[1]);
    if (cat == "::")
      s.type.category = Category::Lexical;
    else if (cat == ":")
      s.type.category = Category::Derived;
    else
      throw FormatError("category must be '::' or ':'", no);
    try {
      s.type.features = parse_features(fields[2]);
    } catch (const SyntaxError& e) {
      throw FormatError(e.what(), no);
    }
    if (s.type.features.empty()) throw FormatError("empty feature list", no);
    s.semantics = parse_term_at(trim(fields[3]), no);
    lex.add(std::move(s));
  });
  return lex;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
}

Lexicon read_lexicon_file(const std::string& path,
                          std::vector<std::pair<std::string, std::string>>* headers) {
  return parse_lexicon(read_file(path), headers);
}

std::string format_lexicon_line(const Sign& s) {
  std::string e = s.exponent.empty() ? "eps" : s.exponent.render_raw();
  return e + "\t" + std::string(category_marker(s.type.category)) + "\t" +
         render_features(s.type.features) + "\t" + render_term(s.semantics);
}

std::string format_lexicon(const Lexicon& lex) {
  std::string out;
  for (const auto& s : lex.entries) out += format_lexicon_line(s) + "\n";
  return out;
}

std::vector<Ump> parse_corpus(std::string_view text) {
  std::vector<Ump> out;
  for_each_line(text, [&](std::size_t no, std::string_view line) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') return;
    auto fields = split_tabs(line);
    if (fields.size() != 2) throw FormatError("expected utterance<TAB>term", no);
    out.push_back({join_surface(tokenize(fields[0])), parse_term_at(trim(fields[1]), no)});
  });
  return out;
}

std::string format_corpus(const std::vector<Ump>& corpus) {
  std::string out;
  for (const auto& u : corpus) out += u.utterance + "\t" + render_term(u.meaning) + "\n";
  return out;
}

}  // namespace umt
