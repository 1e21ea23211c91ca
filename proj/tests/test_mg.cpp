#include "doctest.h"
#include "support.hpp"

using namespace umt;

namespace {

Expression lex_expr(const char* exponent, const char* marker, const char* features, const char* term) {
  Sign s{Exponent::parse(exponent),
         {std::string(marker) == "::" ? Category::Lexical : Category::Derived, parse_features(features)},
         parse_term(term)};
  return Expression{{s}};
}

Lexicon basic() { return read_lexicon_file(props::data_path("basic.mg")); }

}  // namespace

TEST_CASE("lexical type shape") {
  auto ok = [](const char* fs) { return check_lexical_type({Category::Lexical, parse_features(fs)}); };
  CHECK(ok("=pred +f +k t"));
  CHECK(ok("=v +k =d pred"));
  CHECK(ok("n -k"));
  CHECK_FALSE(ok("n =d"));
  CHECK_FALSE(ok("-k"));
  CHECK(render_type({Category::Lexical, parse_features("=n d -k")}) == "::=n d -k");
}

TEST_CASE("merge-1") {
  RuleTag tag;
  auto e = merge(lex_expr("the", "::", "=n d -k", "eps"), lex_expr("mouse", "::", "n", "mouse"), &tag);
  CHECK(tag == RuleTag::Merge1);
  CHECK(render_expression(e) == "⟨the mouse, :d -k, mouse⟩");
}

TEST_CASE("merge-2") {
  RuleTag tag;
  auto e = merge(lex_expr("eats carrot", ":", "=d c", "\\y.eat(carrot)(y)"), lex_expr("the rat", ":", "d", "rat"), &tag);
  CHECK(tag == RuleTag::Merge2);
  CHECK(e.head().exponent.surface() == "the rat eats carrot");
  CHECK(e.head().semantics == parse_term("(\\y.eat(carrot)(y))(rat)"));
}

TEST_CASE("merge-3") {
  RuleTag tag;
  auto e = merge(lex_expr("eat", "::", "=n v -f", "\\x.\\y.eat(x)(y)"), lex_expr("cheese", "::", "n -k", "cheese"), &tag);
  CHECK(tag == RuleTag::Merge3);
  CHECK(render_expression(e) == "⟨eat, :v -f, λx.λy.eat(x)(y)⟩⟨cheese, :-k, cheese⟩");
  CHECK_THROWS_AS(merge(lex_expr("a", "::", "n", "a"), lex_expr("b", "::", "n", "b")), FeatureMismatch);
}

TEST_CASE("move-1 and move-2") {
  Expression e{{lex_expr("eats cheese", ":", "+k t", "\\y.eat(cheese)(y)").head(),
                lex_expr("the mouse", ":", "-k", "mouse").head()}};
  RuleTag tag;
  auto m = move(e, &tag);
  CHECK(tag == RuleTag::Move1);
  CHECK(render_expression(m) == "⟨the mouse eats cheese, :t, (λy.eat(cheese)(y))(mouse)⟩");
  CHECK(render_expression(reduce_step(m)) == "⟨the mouse eats cheese, :t, eat(cheese)(mouse)⟩");
  CHECK_THROWS_AS(reduce_step(reduce_step(m)), NoRedex);

  Expression w{{lex_expr("a", ":", "+w t1", "s1").head(), lex_expr("b", ":", "-w -k", "s2").head()}};
  auto m2 = move(w, &tag);
  CHECK(tag == RuleTag::Move2);
  CHECK(render_expression(m2) == "⟨a, :t1, s1⟩⟨b, :-k, s2⟩");
}

TEST_CASE("shortest movement constraint") {
  Expression e{{lex_expr("h", ":", "+k t", "eps").head(), lex_expr("a", ":", "-k", "a").head(),
                lex_expr("b", ":", "-k", "b").head()}};
  CHECK(e.violates_smc());
  CHECK_FALSE(can_move(e));
  CHECK_THROWS_AS(move(e), SmcViolation);
}

TEST_CASE("basic lexicon derives the sentence in thirteen steps") {
  auto lex = basic();
  auto r = complete_derivations(lex, 20);
  REQUIRE(r.trees.size() == 1);
  const auto& tree = *r.trees[0];
  CHECK(tree.label.head().exponent.surface() == "the mouse eats cheese");
  CHECK(render_type(tree.label.head().type) == ":c");
  CHECK(alpha_equivalent(tree.label.head().semantics, parse_term("eat(cheese)(mouse)")));
  CHECK(linearize(tree).size() == 13);
  CHECK(expression_key(replay(tree)) == expression_key(tree.label));
  CHECK(tree.structural_steps() == 9);
}

TEST_CASE("complete derivations of small lexicons") {
  CHECK(complete_derivations(Lexicon{}, 10).trees.empty());
  auto x3 = read_lexicon_file(props::data_path("x3.mg"));
  bool found = false;
  for (const auto& t : complete_derivations(x3, 10).trees)
    found |= t->label.head().exponent.surface() == "the rat eats carrot" &&
             alpha_equivalent(t->label.head().semantics, parse_term("eat(carrot)(rat)"));
  CHECK(found);
}

TEST_CASE("lexicon files") {
  auto lex = basic();
  CHECK(lex.size() == 7);
  CHECK(parse_lexicon(format_lexicon(lex)).size() == 7);
  CHECK_FALSE(lex.add(lex.entries[0]));
  CHECK_THROWS_AS(parse_lexicon("mouse\t::\tn"), FormatError);
}

TEST_CASE("surface glues affixes") {
  CHECK(Exponent::parse("the mouse eat -s cheese").surface() == "the mouse eats cheese");
  CHECK(join_surface({"rat", "-s"}) == "rats");
}

TEST_CASE("property: merge and move consume two features and conserve tokens") {
  auto r = props::mg_laws(11, 20);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: SMC violations are detected") {
  auto r = props::mg_smc(12, 500);
  INFO(r.first_failure);
  CHECK(r.ok());
}
