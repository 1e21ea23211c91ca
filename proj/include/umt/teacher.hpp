#pragma once

// Scripted teacher: a gold grammar that judges learner productions, and the
// session runner that drives a learner through a teaching script.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "umt/engine.hpp"
#include "umt/learner.hpp"

namespace umt {

enum class Verdict { Endorse, RejectUngrammatical, RejectMeaningMismatch };

std::string verdict_name(Verdict v);
bool endorsed(Verdict v);

class Teacher {
 public:
  explicit Teacher(Lexicon gold);

  const Lexicon& lexicon() const { return gold_; }
  const Mcfg& grammar() const { return *grammar_; }
  const Parser& parser() const { return *parser_; }

  Verdict judge(const std::string& utterance, const Term& meaning) const;

 private:
  Lexicon gold_;
  std::unique_ptr<Mcfg> grammar_;
  std::unique_ptr<Parser> parser_;
};

struct ScriptStep {
  enum class Kind { Teach, Probe, Expect } kind = Kind::Teach;
  std::string utterance;  // teach; probe with a forced production
  Term meaning;           // teach, probe
  bool expect_endorse = true;
};

/// `teach<TAB>utterance<TAB>term`, `probe<TAB>term[<TAB>utterance]`,
/// `expect<TAB>endorse|reject`; '#' comments.
std::vector<ScriptStep> parse_script(std::string_view text);
std::string format_script(const std::vector<ScriptStep>& steps);

struct SessionEvent {
  enum class Kind { Presented, LearnerSaid, Verdict, Repair, Expectation, Snapshot } kind;
  std::string utterance;
  Term meaning;
  umt::Verdict verdict = umt::Verdict::Endorse;
  /// Repair name or failure, expectation outcome.
  std::string detail;
  std::size_t time = 0;
  Lexicon lexicon;
};

struct SessionLog {
  std::vector<SessionEvent> events;

  std::vector<const SessionEvent*> snapshots() const;
  bool expectations_met() const;
  /// One event per line; snapshot entries follow their snapshot line.
  std::string tsv() const;
  /// Script that replays this session, productions forced as logged.
  std::vector<ScriptStep> replay_script() const;
};

/// Throws ScriptInvalid when a taught pair is not endorsed by the gold
/// grammar or a forced production is not one the learner can make.
SessionLog run_session(const Teacher& teacher, const std::vector<ScriptStep>& script,
                       Learner& learner);

}  // namespace umt
