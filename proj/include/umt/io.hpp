#pragma once

// Line-oriented text formats: lexicons and utterance-meaning corpora.

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "umt/mg.hpp"

namespace umt {

/// Utterance-meaning pair.
struct Ump {
  std::string utterance;
  Term meaning;
};

/// `exponent<TAB>::|:<TAB>features<TAB>term` per line; '#' starts a comment.
/// Lines of the form `#@ key value...` are returned through `headers`.
Lexicon parse_lexicon(std::string_view text,
                      std::vector<std::pair<std::string, std::string>>* headers = nullptr);
Lexicon read_lexicon_file(const std::string& path,
                          std::vector<std::pair<std::string, std::string>>* headers = nullptr);
std::string format_lexicon_line(const Sign& s);
std::string format_lexicon(const Lexicon& lex);

/// `utterance<TAB>term` per line.
std::vector<Ump> parse_corpus(std::string_view text);
std::string format_corpus(const std::vector<Ump>& corpus);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Splits on TAB characters, keeping empty fields.
std::vector<std::string> split_tabs(std::string_view line);

}  // namespace umt
