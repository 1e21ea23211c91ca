// umt: command-line workbench for lexicons, parsing, production and teaching.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "umt/engine.hpp"
#include "umt/io.hpp"
#include "umt/teacher.hpp"

namespace {

constexpr int kOk = 0, kRejected = 1, kUsage = 2;

std::size_t budget_for(const umt::Lexicon& lex, std::size_t flag) {
  if (const char* env = std::getenv("UMT_BUDGET")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw CLI::ValidationError("UMT_BUDGET", "expected a positive integer");
  }
  return flag ? flag : umt::default_budget(lex);
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream in(csv);
  for (std::string s; std::getline(in, s, ',');)
    if (!s.empty()) out.push_back(s);
  return out;
}

void print_derivation(const umt::DerivationTree& tree) {
  std::size_t n = 0;
  for (const auto* node : umt::linearize(tree)) {
    std::cout << "(" << ++n << ")\t";
    for (std::size_t i = 0; i < node->children.size(); ++i)
      std::cout << (i ? "   " : "") << umt::render_expression(node->children[i]->label);
    std::cout << "\n\t" << std::string(24, '-') << " " << umt::rule_tag_name(node->rule) << "\n\t"
              << umt::render_expression(node->label) << "\n";
  }
}

void print_reject(const umt::Reject& e) {
  std::cout << "reject\ttoken " << e.position() << "\texpected";
  for (const auto& x : e.expected()) std::cout << " '" << x << "'";
  std::cout << "\n";
}

int repl(umt::Learner& learner, const std::string& save_default) {
  std::optional<umt::Ump> pending;
  std::string line;
  std::cout << "> " << std::flush;
  while (std::getline(std::cin, line)) {
    std::istringstream words(line);
    std::string cmd;
    words >> cmd;
    std::string rest;
    std::getline(words, rest);
    rest.erase(0, rest.find_first_not_of(" \t"));
    try {
      if (cmd.empty()) {
      } else if (cmd == "quit" || cmd == "exit") {
        break;
      } else if (cmd == "teach") {
        auto bar = rest.find('|');
        if (bar == std::string::npos) throw umt::FormatError("teach <utterance> | <term>", 1);
        umt::Ump ump{umt::join_surface(umt::tokenize(rest.substr(0, bar))),
                     umt::parse_term(rest.substr(bar + 1))};
        learner.ingest(ump);
        std::cout << "lexicon now has " << learner.lexicon().size() << " entries\n";
      } else if (cmd == "ask") {
        umt::Term m = umt::parse_term(rest);
        std::string said = learner.express(m);
        pending = umt::Ump{said, m};
        std::cout << said << "\n(yes/no)\n";
      } else if (cmd == "yes" || cmd == "no") {
        if (!pending) throw umt::FormatError("nothing to judge; ask first", 1);
        if (cmd == "yes") {
          learner.commit(*pending);
        } else {
          try {
            std::cout << "repair: " << learner.repair(*pending) << "\n";
          } catch (const umt::NoRepairFound&) {
            std::cout << "repair: none\n";
          }
        }
        pending.reset();
      } else if (cmd == "lexicon") {
        std::cout << umt::format_lexicon(learner.lexicon());
      } else if (cmd == "save") {
        std::string path = rest.empty() ? save_default : rest;
        if (path.empty()) throw umt::FormatError("save <path>", 1);
        umt::write_file(path, learner.checkpoint());
        std::cout << "saved " << path << "\n";
      } else {
        std::cout << "commands: teach <utterance> | <term>, ask <term>, yes, no, lexicon, save [path], quit\n";
      }
    } catch (const umt::Error& e) {
      std::cout << "error: " << e.what() << "\n";
    }
    std::cout << "> " << std::flush;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimalist grammar workbench"};
  app.require_subcommand(1);

  std::string lexicon_path, text, script_path, out_path, log_path, restore_path, type_names = "d,n,num";
  std::size_t budget = 0;
  bool show_trace = false, show_all = false;

  auto* parse = app.add_subcommand("parse", "Recognize an utterance and print the parser trace");
  parse->add_option("-l,--lexicon", lexicon_path)->required()->check(CLI::ExistingFile);
  parse->add_option("-i,--input", text)->required();

  auto* understand = app.add_subcommand("understand", "Compute the meaning of an utterance");
  understand->add_option("-l,--lexicon", lexicon_path)->required()->check(CLI::ExistingFile);
  understand->add_option("-i,--input", text)->required();
  understand->add_flag("--syntax", show_trace, "Print the syntactic trace first");
  understand->add_flag("-q,--quiet", show_all, "Print only the meaning");

  auto* produce = app.add_subcommand("produce", "Produce an utterance for a logical form");
  produce->add_option("-l,--lexicon", lexicon_path)->required()->check(CLI::ExistingFile);
  produce->add_option("-m,--meaning", text)->required();
  produce->add_flag("--all", show_all, "List every realization");
  produce->add_flag("--trace", show_trace, "Print the derivation");
  produce->add_option("--budget", budget, "Maximum merge/move steps");

  auto* compile = app.add_subcommand("compile", "Print the compiled MCFG");
  compile->add_option("-l,--lexicon", lexicon_path)->required()->check(CLI::ExistingFile);

  auto* derive = app.add_subcommand("derive", "Print complete bottom-up derivations");
  derive->add_option("-l,--lexicon", lexicon_path)->required()->check(CLI::ExistingFile);
  derive->add_option("--budget", budget, "Maximum merge/move steps");

  auto* learn = app.add_subcommand("learn", "Run a teaching session against a gold lexicon");
  learn->add_option("-g,--gold", lexicon_path)->required()->check(CLI::ExistingFile);
  learn->add_option("-s,--script", script_path)->required()->check(CLI::ExistingFile);
  learn->add_option("-o,--out", out_path, "Write the final learner checkpoint here");
  learn->add_option("--log", log_path, "Write the session log here instead of stdout");
  learn->add_option("--replay", restore_path, "Write a replayable script here");
  learn->add_option("--types", type_names, "Comma-separated names for induced types");
  learn->add_option("--budget", budget, "Learner derivation budget");

  auto* interactive = app.add_subcommand("repl", "Teach a learner by hand");
  interactive->add_option("--restore", restore_path, "Start from a learner checkpoint")
      ->check(CLI::ExistingFile);
  interactive->add_option("--save", out_path, "Default path for save");
  interactive->add_option("--types", type_names, "Comma-separated names for induced types");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*parse) {
      auto g = umt::compile(umt::read_lexicon_file(lexicon_path));
      umt::Parser p(g);
      try {
        std::cout << umt::format_trace(p.recognize(umt::tokenize(text)).trace);
      } catch (const umt::Reject& e) {
        print_reject(e);
        return kRejected;
      }
    } else if (*understand) {
      auto g = umt::compile(umt::read_lexicon_file(lexicon_path));
      umt::Parser p(g);
      try {
        auto u = umt::understand(p, umt::tokenize(text));
        if (show_all) {
          std::cout << umt::render_term(u.meaning) << "\n";
        } else {
          if (show_trace) std::cout << umt::format_trace(u.parse.trace) << "\n";
          std::cout << umt::format_trace(u.trace);
        }
      } catch (const umt::Reject& e) {
        print_reject(e);
        return kRejected;
      } catch (const umt::SemanticStuck& e) {
        std::cout << "stuck\t" << e.what() << "\n";
        return kRejected;
      }
    } else if (*produce) {
      auto lex = umt::read_lexicon_file(lexicon_path);
      auto meaning = umt::parse_term(text);
      try {
        auto pr = umt::produce(lex, meaning, budget_for(lex, budget));
        std::cout << pr.utterance << "\n";
        if (show_all)
          for (const auto& a : pr.alternatives) std::cout << a << "\n";
        if (show_trace) print_derivation(*pr.tree);
      } catch (const umt::Unrealizable& e) {
        std::cout << "unrealizable\t" << e.what() << "\n";
        return kRejected;
      }
    } else if (*compile) {
      auto g = umt::compile(umt::read_lexicon_file(lexicon_path));
      for (std::size_t i = 0; i < g.rules.size(); ++i)
        std::cout << i + 1 << "\t" << umt::render_rule(g.rules[i]) << "\n";
    } else if (*derive) {
      auto lex = umt::read_lexicon_file(lexicon_path);
      auto r = umt::complete_derivations(lex, budget_for(lex, budget));
      for (std::size_t i = 0; i < r.trees.size(); ++i) {
        if (i) std::cout << "\n";
        print_derivation(*r.trees[i]);
      }
      if (r.trees.empty()) return kRejected;
    } else if (*learn) {
      umt::Teacher teacher(umt::read_lexicon_file(lexicon_path));
      auto script = umt::parse_script(umt::read_file(script_path));
      umt::Learner learner(umt::LearnerOptions{split_names(type_names), budget});
      auto log = umt::run_session(teacher, script, learner);
      if (log_path.empty())
        std::cout << log.tsv();
      else
        umt::write_file(log_path, log.tsv());
      if (!out_path.empty()) umt::write_file(out_path, learner.checkpoint());
      if (!restore_path.empty()) umt::write_file(restore_path, umt::format_script(log.replay_script()));
      if (!log.expectations_met()) return kRejected;
    } else if (*interactive) {
      umt::LearnerOptions opts{split_names(type_names), 0};
      umt::Learner learner = restore_path.empty()
                                 ? umt::Learner(opts)
                                 : umt::Learner::restore(umt::read_file(restore_path), opts);
      return repl(learner, out_path);
    }
  } catch (const umt::FormatError& e) {
    std::cerr << "umt: " << e.what() << "\n";
    return kUsage;
  } catch (const umt::SyntaxError& e) {
    std::cerr << "umt: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "umt: " << e.what() << "\n";
    return kUsage;
  } catch (const umt::Error& e) {
    std::cerr << "umt: " << e.what() << "\n";
    return kRejected;
  }
  return kOk;
}
