#include "umt/teacher.hpp"

#include <algorithm>

namespace umt {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Endorse: return "endorse";
    case Verdict::RejectUngrammatical: return "reject-ungrammatical";
    case Verdict::RejectMeaningMismatch: return "reject-meaning";
  }
  return "?";
}

bool endorsed(Verdict v) { return v == Verdict::Endorse; }

Teacher::Teacher(Lexicon gold)
    : gold_(std::move(gold)),
      grammar_(std::make_unique<Mcfg>(compile(gold_))),
      parser_(std::make_unique<Parser>(*grammar_)) {}

Verdict Teacher::judge(const std::string& utterance, const Term& meaning) const {
  auto ms = meanings(*parser_, tokenize(utterance));
  if (ms.empty()) return Verdict::RejectUngrammatical;
  for (const auto& m : ms)
    if (alpha_equivalent(m, meaning)) return Verdict::Endorse;
  return Verdict::RejectMeaningMismatch;
}

// ---------------------------------------------------------------------------
// Scripts

std::vector<ScriptStep> parse_script(std::string_view text) {
  std::vector<ScriptStep> out;
  std::size_t no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string line(text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    auto f = split_tabs(line);
    ScriptStep s;
    try {
      if (f[0] == "teach" && f.size() == 3) {
        s.kind = ScriptStep::Kind::Teach;
        s.utterance = join_surface(tokenize(f[1]));
        s.meaning = parse_term(f[2]);
      } else if (f[0] == "probe" && (f.size() == 2 || f.size() == 3)) {
        s.kind = ScriptStep::Kind::Probe;
        s.meaning = parse_term(f[1]);
        if (f.size() == 3) s.utterance = join_surface(tokenize(f[2]));
      } else if (f[0] == "expect" && f.size() == 2 && (f[1] == "endorse" || f[1] == "reject")) {
        s.kind = ScriptStep::Kind::Expect;
        s.expect_endorse = f[1] == "endorse";
      } else {
        throw FormatError("expected teach, probe or expect line", no);
      }
    } catch (const SyntaxError& e) {
      throw FormatError(e.what(), no);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string format_script(const std::vector<ScriptStep>& steps) {
  std::string out;
  for (const auto& s : steps) {
    switch (s.kind) {
      case ScriptStep::Kind::Teach:
        out += "teach\t" + s.utterance + "\t" + render_term(s.meaning) + "\n";
        break;
      case ScriptStep::Kind::Probe:
        out += "probe\t" + render_term(s.meaning);
        if (!s.utterance.empty()) out += "\t" + s.utterance;
        out += "\n";
        break;
      case ScriptStep::Kind::Expect:
        out += std::string("expect\t") + (s.expect_endorse ? "endorse" : "reject") + "\n";
        break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sessions

std::vector<const SessionEvent*> SessionLog::snapshots() const {
  std::vector<const SessionEvent*> out;
  for (const auto& e : events)
    if (e.kind == SessionEvent::Kind::Snapshot) out.push_back(&e);
  return out;
}

bool SessionLog::expectations_met() const {
  return std::none_of(events.begin(), events.end(), [](const SessionEvent& e) {
    return e.kind == SessionEvent::Kind::Expectation && e.detail != "ok";
  });
}

std::string SessionLog::tsv() const {
  std::string out;
  for (const auto& e : events) {
    switch (e.kind) {
      case SessionEvent::Kind::Presented:
        out += "presented\t" + e.utterance + "\t" + render_term(e.meaning) + "\n";
        break;
      case SessionEvent::Kind::LearnerSaid:
        out += "said\t" + e.utterance + "\t" + render_term(e.meaning) + "\n";
        break;
      case SessionEvent::Kind::Verdict: out += "verdict\t" + verdict_name(e.verdict) + "\n"; break;
      case SessionEvent::Kind::Repair: out += "repair\t" + e.detail + "\n"; break;
      case SessionEvent::Kind::Expectation: out += "expect\t" + e.detail + "\n"; break;
      case SessionEvent::Kind::Snapshot:
        out += "snapshot\t" + std::to_string(e.time) + "\t" + std::to_string(e.lexicon.size()) + "\n";
        for (const auto& s : e.lexicon.entries) out += "entry\t" + format_lexicon_line(s) + "\n";
        break;
    }
  }
  return out;
}

std::vector<ScriptStep> SessionLog::replay_script() const {
  std::vector<ScriptStep> out;
  for (const auto& e : events) {
    ScriptStep s;
    switch (e.kind) {
      case SessionEvent::Kind::Presented:
        s.kind = ScriptStep::Kind::Teach;
        s.utterance = e.utterance;
        s.meaning = e.meaning;
        break;
      case SessionEvent::Kind::LearnerSaid:
        s.kind = ScriptStep::Kind::Probe;
        s.utterance = e.utterance;
        s.meaning = e.meaning;
        break;
      case SessionEvent::Kind::Verdict:
        s.kind = ScriptStep::Kind::Expect;
        s.expect_endorse = endorsed(e.verdict);
        break;
      default: continue;
    }
    out.push_back(std::move(s));
  }
  return out;
}

SessionLog run_session(const Teacher& teacher, const std::vector<ScriptStep>& script,
                       Learner& learner) {
  SessionLog log;
  auto snapshot = [&] {
    SessionEvent e{SessionEvent::Kind::Snapshot, "", Term(), Verdict::Endorse, "", learner.time(),
                   learner.lexicon()};
    log.events.push_back(std::move(e));
  };
  auto event = [&](SessionEvent::Kind k, std::string utt, Term m, std::string detail = {}) {
    log.events.push_back({k, std::move(utt), std::move(m), Verdict::Endorse, std::move(detail), 0, {}});
  };
  std::optional<Verdict> last;
  for (const auto& step : script) {
    switch (step.kind) {
      case ScriptStep::Kind::Teach: {
        if (!endorsed(teacher.judge(step.utterance, step.meaning)))
          throw ScriptInvalid("gold grammar does not endorse '" + step.utterance + "' as " +
                              render_term(step.meaning));
        event(SessionEvent::Kind::Presented, step.utterance, step.meaning);
        learner.ingest({step.utterance, step.meaning});
        snapshot();
        break;
      }
      case ScriptStep::Kind::Probe: {
        std::string said;
        if (!step.utterance.empty()) {
          auto options = learner.expressions(step.meaning);
          if (std::find(options.begin(), options.end(), step.utterance) == options.end())
            throw ScriptInvalid("learner cannot say '" + step.utterance + "' for " +
                                render_term(step.meaning));
          said = step.utterance;
        } else {
          try {
            said = learner.express(step.meaning);
          } catch (const Unrealizable& e) {
            event(SessionEvent::Kind::Repair, "", step.meaning, std::string("silent: ") + e.what());
            last.reset();
            snapshot();
            break;
          }
        }
        event(SessionEvent::Kind::LearnerSaid, said, step.meaning);
        Verdict v = teacher.judge(said, step.meaning);
        log.events.push_back({SessionEvent::Kind::Verdict, said, step.meaning, v, "", 0, {}});
        last = v;
        if (endorsed(v)) {
          learner.commit({said, step.meaning});
        } else {
          try {
            event(SessionEvent::Kind::Repair, said, step.meaning, learner.repair({said, step.meaning}));
          } catch (const NoRepairFound&) {
            event(SessionEvent::Kind::Repair, said, step.meaning, "none");
          }
        }
        snapshot();
        break;
      }
      case ScriptStep::Kind::Expect: {
        std::string want = step.expect_endorse ? "endorse" : "reject";
        std::string detail = "ok";
        if (!last)
          detail = "failed: expected " + want + ", learner said nothing";
        else if (endorsed(*last) != step.expect_endorse)
          detail = "failed: expected " + want + ", got " + verdict_name(*last);
        event(SessionEvent::Kind::Expectation, "", Term(), detail);
        break;
      }
    }
  }
  return log;
}

}  // namespace umt
