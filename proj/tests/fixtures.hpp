#pragma once

// Hand-transcribed reference values for the basic "the mouse eats cheese"
// lexicon: its MCFG, parser configurations and semantic queue states.

#include <array>
#include <string>
#include <vector>

namespace fixtures {

inline const std::vector<std::string> kBasicRules = {
    "⟨:c⟩(e0 e1) <- ⟨::=t c⟩(e0) ⟨:t⟩(e1)",
    "⟨:t⟩(e1 e0) <- ⟨:+k t, -k⟩(e0, e1)",
    "⟨:+k t, -k⟩(e1 e0, e2) <- ⟨:+f +k t, -f, -k⟩(e0, e1, e2)",
    "⟨:+f +k t, -f, -k⟩(e0 e1, e2, e3) <- ⟨::=pred +f +k t⟩(e0) ⟨:pred, -f, -k⟩(e1, e2, e3)",
    "⟨:pred, -f, -k⟩(e0, e1, e2) <- ⟨:=d pred, -f⟩(e0, e1) ⟨:d -k⟩(e2)",
    "⟨:=d pred, -f⟩(e2 e0, e1) <- ⟨:+k =d pred, -f, -k⟩(e0, e1, e2)",
    "⟨:+k =d pred, -f, -k⟩(e0, e1, e2) <- ⟨::=v +k =d pred⟩(e0) ⟨:v -f, -k⟩(e1, e2)",
    "⟨:v -f, -k⟩(e0, e1) <- ⟨::=n v -f⟩(e0) ⟨::n -k⟩(e1)",
    "⟨:d -k⟩(e0 e1) <- ⟨::=n d -k⟩(e0) ⟨::n⟩(e1)",
    "⟨::n⟩(mouse)",
    "⟨::n -k⟩(cheese)",
    "⟨::=n d -k⟩(the)",
    "⟨::=n v -f⟩(eat)",
    "⟨::=pred +f +k t⟩(-s)",
    "⟨::=v +k =d pred⟩(ε)",
    "⟨::=t c⟩(ε)",
};

struct Row {
  const char* input;
  const char* queue;
  const char* operation;
};

// Top-down recognition of "the mouse eats cheese" with the rules above.
inline const std::array<Row, 21> kRecognition = {{
    {"the mouse eats cheese", "⟨:c⟩(ε)", "expand (1)"},
    {"the mouse eats cheese", "⟨::=t c⟩(0) ⟨:t⟩(1)", "scan (16)"},
    {"the mouse eats cheese", "⟨:t⟩(1)", "expand (2)"},
    {"the mouse eats cheese", "⟨:+k t, -k⟩(11, 10)", "expand (3)"},
    {"the mouse eats cheese", "⟨:+f +k t, -f, -k⟩(111, 110, 10)", "expand (4)"},
    {"the mouse eats cheese", "⟨::=pred +f +k t⟩(1110) ⟨:pred, -f, -k⟩(1111, 110, 10)", "sort"},
    {"the mouse eats cheese", "⟨:pred, -f, -k⟩(1111, 110, 10) ⟨::=pred +f +k t⟩(1110)", "expand (5)"},
    {"the mouse eats cheese", "⟨:=d pred, -f⟩(1111, 110) ⟨:d -k⟩(10) ⟨::=pred +f +k t⟩(1110)", "sort"},
    {"the mouse eats cheese", "⟨:d -k⟩(10) ⟨:=d pred, -f⟩(1111, 110) ⟨::=pred +f +k t⟩(1110)", "expand (9)"},
    {"the mouse eats cheese",
     "⟨::=n d -k⟩(100) ⟨::n⟩(101) ⟨:=d pred, -f⟩(1111, 110) ⟨::=pred +f +k t⟩(1110)", "scan (12)"},
    {"mouse eats cheese", "⟨::n⟩(101) ⟨:=d pred, -f⟩(1111, 110) ⟨::=pred +f +k t⟩(1110)", "scan (10)"},
    {"eats cheese", "⟨:=d pred, -f⟩(1111, 110) ⟨::=pred +f +k t⟩(1110)", "expand (6)"},
    {"eats cheese", "⟨:+k =d pred, -f, -k⟩(11111, 110, 11110) ⟨::=pred +f +k t⟩(1110)", "expand (7)"},
    {"eats cheese", "⟨::=v +k =d pred⟩(11111) ⟨:v -f, -k⟩(110, 11110) ⟨::=pred +f +k t⟩(1110)", "sort"},
    {"eats cheese", "⟨:v -f, -k⟩(110, 11110) ⟨::=pred +f +k t⟩(1110) ⟨::=v +k =d pred⟩(11111)", "expand (8)"},
    {"eats cheese",
     "⟨::=n v -f⟩(110) ⟨::n -k⟩(11110) ⟨::=pred +f +k t⟩(1110) ⟨::=v +k =d pred⟩(11111)", "sort"},
    {"eats cheese",
     "⟨::=n v -f⟩(110) ⟨::=pred +f +k t⟩(1110) ⟨::n -k⟩(11110) ⟨::=v +k =d pred⟩(11111)", "scan (13)"},
    {"-s cheese", "⟨::=pred +f +k t⟩(1110) ⟨::n -k⟩(11110) ⟨::=v +k =d pred⟩(11111)", "scan (14)"},
    {"cheese", "⟨::n -k⟩(11110) ⟨::=v +k =d pred⟩(11111)", "scan (11)"},
    {"ε", "⟨::=v +k =d pred⟩(11111)", "scan (15)"},
    {"ε", "ε", "accept"},
}};

// Semantic queue right after the descending sort.
inline const char* const kSortedSemanticQueue =
    "⟨λP.λQ.Q(P)⟩(11111) ⟨cheese⟩(11110) ⟨λx.λy.eat(x)(y)⟩(110) ⟨mouse⟩(101)";

}  // namespace fixtures
