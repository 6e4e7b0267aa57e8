#include <gtest/gtest.h>

#include "kbd/corpus.hpp"
#include "kbd/decisions.hpp"
#include "kbd/export.hpp"
#include "test_util.hpp"

using namespace kbd;
using namespace kbd::test;

namespace {

const std::vector<Letter> ab{U'a', U'b'};

Keyboard entry(const std::string& name) { return parse_keyboard(corpus_entry(name).dsl); }

} // namespace

TEST(Corpus, EveryEntryMatchesItsLanguage)
{
  for (const auto& r : run_corpus()) {
    EXPECT_TRUE(r.class_ok) << r.name << " classified " << r.class_label;
    EXPECT_TRUE(r.missing.empty()) << r.name << " misses " << utf8_encode(r.missing.front());
    EXPECT_TRUE(r.unexpected.empty()) << r.name << " has extra " << utf8_encode(r.unexpected.front());
    EXPECT_TRUE(r.decision_mismatches.empty()) << r.name << " decision differs on "
                                               << utf8_encode(r.decision_mismatches.front());
    EXPECT_GT(r.oracle_words, 0u) << r.name;
    EXPECT_GT(r.decision_checks, 0u) << r.name;
  }
}

TEST(Corpus, CoversEveryClassFamily)
{
  std::set<std::string> classes;
  for (const auto& e : corpus())
    classes.insert(e.class_label);
  EXPECT_EQ(classes, (std::set<std::string>{"AK", "BK", "BLK", "EK", "LEK", "LK", "MK"}));
  EXPECT_GE(corpus().size(), 10u);
  EXPECT_THROW(corpus_entry("nope"), KeyboardError);
}

TEST(Corpus, DslRoundTrip)
{
  for (const auto& e : corpus()) {
    const auto k = parse_keyboard(e.dsl);
    EXPECT_EQ(parse_keyboard(serialize_keyboard(k)), k) << e.name;
  }
}

TEST(Member, DispatchByClass)
{
  EXPECT_EQ(member(entry("aa_plus"), U"aaaa").procedure, "split dynamic programming");
  EXPECT_EQ(member(entry("odd_a_blocks"), U"aaa").procedure, "split dynamic programming");
  EXPECT_EQ(member(entry("backspace_figure"), U"bb").procedure, "block NFA");
  EXPECT_EQ(member(with_entry(ab, {U"a←"}, {U"b"}), U"b").procedure, "block NFA with final quotients");
  EXPECT_EQ(member(entry("dyck"), U"()").procedure, "pushdown automaton on the mirror");
  EXPECT_EQ(member(entry("ab_blocks"), U"abb").procedure, "subword-pruned search");
  EXPECT_EQ(member(automatic(ab, {U"a◄►←"}), U"a").procedure, "bounded search");
}

TEST(Member, VerdictsAndWitnesses)
{
  struct Case {
    const char* entry;
    Word word;
    Verdict expected;
  };
  const std::vector<Case> cases{
      {"aa_plus", U"aaaa", Verdict::Yes},           {"aa_plus", U"aaa", Verdict::No},
      {"odd_a_blocks", U"aaaaa", Verdict::Yes},     {"even_a_then_b", U"aabb", Verdict::Yes},
      {"even_a_then_b", U"ab", Verdict::No},         {"backspace_figure", U"babababb", Verdict::Yes},
      {"backspace_figure", U"babababc", Verdict::Yes}, {"backspace_figure", U"ab", Verdict::No},
      {"palindromes_with_c", U"abcba", Verdict::Yes}, {"palindromes_with_c", U"abba", Verdict::No},
      {"a_c_a", U"aacaa", Verdict::Yes},            {"a_c_a", U"aca", Verdict::Yes},
      {"a_c_a", U"aaca", Verdict::No},               {"ab_blocks", U"abbba", Verdict::No},
      {"ab_blocks", U"abbbaa", Verdict::Yes},        {"dyck", U"(()())", Verdict::Yes},
      {"marker_shapes", U"a◊♦", Verdict::Yes},       {"ab_or_bc_plus", U"abbcab", Verdict::Yes},
  };
  for (const auto& c : cases) {
    const auto k = entry(c.entry);
    const Decision d = member(k, c.word);
    EXPECT_EQ(d.verdict, c.expected) << c.entry << " " << utf8_encode(c.word);
    if (d.verdict == Verdict::Yes) {
      EXPECT_TRUE(witness_replays(k, c.word, d)) << c.entry << " " << utf8_encode(c.word);
    }
  }
}

TEST(Member, ForeignLetterIsNo)
{
  const Decision d = member(entry("aa_plus"), U"ab");
  EXPECT_EQ(d.verdict, Verdict::No);
  EXPECT_EQ(d.procedure, "alphabet check");
}

TEST(Member, UnknownOnlyWithoutProcedure)
{
  const auto k = automatic(ab, {U"a◄►←"});
  const Decision d = member(k, U"b");
  EXPECT_EQ(d.verdict, Verdict::Unknown);
  EXPECT_NE(d.reason.find("BAK"), std::string::npos);
  EXPECT_FALSE(witness_replays(k, U"b", d));
}

TEST(Universal, Examples)
{
  EXPECT_EQ(universal(automatic(ab, {U"", U"a", U"b"})).verdict, Verdict::Yes);
  const auto mk = universal(automatic(ab, {U"a", U"b"}));
  EXPECT_EQ(mk.verdict, Verdict::No);
  EXPECT_EQ(mk.counterexample, Word{});
  EXPECT_EQ(universal(automatic(ab, {U"a", U"b", U"←"})).verdict, Verdict::Yes);
  EXPECT_EQ(universal(with_entry(ab, {U"a", U"b"}, {U""})).verdict, Verdict::Yes);
  const auto ek = universal(with_entry(ab, {U"a", U"b"}, {U"a"}));
  EXPECT_EQ(ek.verdict, Verdict::No);
  EXPECT_EQ(ek.counterexample, Word{});
  EXPECT_EQ(universal(with_entry(ab, {U"a", U"b", U"←"}, {U"←a", U"b"})).verdict, Verdict::No);
  EXPECT_EQ(universal(entry("dyck")).verdict, Verdict::Unknown);
}

TEST(Export, NfaJson)
{
  const Nfa nfa = build_nfa(entry("backspace_figure"));
  const auto j = nfa_to_json(nfa);
  EXPECT_EQ(j["states"].size(), nfa.size());
  EXPECT_EQ(j["initial"], nlohmann::json::array({"Init"}));
  EXPECT_EQ(j["accepting"], nlohmann::json::array({"0"}));
  EXPECT_EQ(j["edges"].size(), nfa.letter_edges().size() + nfa.eps_edges().size());
  bool saw_eps = false;
  for (const auto& e : j["edges"])
    saw_eps = saw_eps || e["label"].is_null();
  EXPECT_TRUE(saw_eps);
}

TEST(Export, NfaDot)
{
  const auto dot = nfa_to_dot(build_nfa(entry("backspace_figure")));
  EXPECT_EQ(dot.rfind("digraph nfa {", 0), 0u);
  EXPECT_NE(dot.find("doublecircle"), std::string::npos);
  EXPECT_NE(dot.find("label=\"eps\""), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
}
