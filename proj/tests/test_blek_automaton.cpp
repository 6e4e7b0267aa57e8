#include <gtest/gtest.h>

#include "kbd/blek_automaton.hpp"
#include "kbd/corpus.hpp"
#include "kbd/export.hpp"
#include "kbd/oracle.hpp"
#include "kbd/properties.hpp"
#include "test_util.hpp"

using namespace kbd;
using namespace kbd::test;

namespace {

const std::vector<Letter> ab{U'a', U'b'};

Keyboard palindromes_with_c() { return parse_keyboard(corpus_entry("palindromes_with_c").dsl); }

WordSet recognized(const BlekRecognizer& r, const std::vector<Letter>& alphabet, std::size_t max_len)
{
  return filter_words(alphabet, max_len, [&r](const Word& w) { return r.member(w); });
}

/// Key prefixes over transient and final keys, ε included.
std::size_t prefix_count(const Keyboard& k)
{
  std::set<Key> pref;
  for (const auto* keys : {&k.transient(), &k.final_keys()})
    for (const auto& t : *keys)
      for (std::size_t i = 0; i <= t.size(); ++i)
        pref.emplace(t.begin(), t.begin() + static_cast<long>(i));
  return pref.size();
}

} // namespace

TEST(BlekMember, PalindromesWithC)
{
  const BlekRecognizer r(palindromes_with_c());
  EXPECT_TRUE(r.member(U"abcba"));
  EXPECT_TRUE(r.member(U"abccba"));
  EXPECT_TRUE(r.member(U"c"));
  EXPECT_FALSE(r.member(U"ab"));
  EXPECT_FALSE(r.member(U"abba"));
  EXPECT_FALSE(r.member(U""));
}

TEST(BlekMember, WitnessReplays)
{
  const auto k = palindromes_with_c();
  const BlekRecognizer r(k);
  for (const Word w : {U"abcba", U"abccba", U"c", U"babaccabab"}) {
    const auto exec = r.witness(w);
    ASSERT_TRUE(exec) << utf8_encode(w);
    EXPECT_TRUE(replays_to(k, *exec, w)) << utf8_encode(w);
  }
}

TEST(BuildPda, StatesArePrefixesPlusFin)
{
  const auto k = palindromes_with_c();
  const auto b = build_blek_pda(k);
  EXPECT_EQ(b.pda.states.size(), prefix_count(k) + 1);
  EXPECT_EQ(b.pda.states.size(), 10u);
  EXPECT_EQ(b.pda.states.at(b.fin), "Fin");
  EXPECT_EQ(b.pda.accepting, std::vector<std::size_t>{b.fin});
  EXPECT_EQ(b.completes.size(), b.pda.transitions.size());
}

TEST(BuildPda, RejectsRightArrow)
{
  EXPECT_THROW(build_blek_pda(automatic(ab, {U"a◄►"})), KeyboardError);
}

TEST(BuildPda, RunReplaysOnMirror)
{
  const auto k = palindromes_with_c();
  const Pda pda = build_pda_blek(k);
  const auto g = build_triple_grammar(pda);
  const Word w = U"abccba";
  const auto run = pda_accepting_run(g, Word(w.rbegin(), w.rend()));
  ASSERT_TRUE(run);
  EXPECT_TRUE(pda_replays(pda, *run, Word(w.rbegin(), w.rend())));
  EXPECT_FALSE(pda_replays(pda, *run, U"abc"));
}

// ε ∈ L iff some execution empties the configuration; ← on an empty left part is blocked for ⊥.
TEST(BlekMember, EmptyWord)
{
  EXPECT_TRUE(blek_member(automatic(ab, {U"", U"a"}), U""));
  EXPECT_TRUE(blek_member(automatic(ab, {U"a", U"←"}), U""));
  EXPECT_TRUE(blek_member(with_entry(ab, {U"ab"}, {U"←←"}), U""));
  EXPECT_FALSE(blek_member(with_entry(ab, {U"ab"}, {U"a"}), U""));
}

TEST(BlekMember, EdgeEffects)
{
  // ← and ◄ at the left edge do nothing.
  const auto k = with_entry(ab, {U"←a", U"◄b"}, {U"◄◄"});
  const BlekRecognizer r(k);
  EXPECT_EQ(recognized(r, ab, 6), enumerate(k, 6, 8, true).words);
}

TEST(BlekMember, CorpusEntries)
{
  for (const char* name : {"a_c_a", "dyck", "even_palindromes", "palindromes_with_c"}) {
    const auto& e = corpus_entry(name);
    const auto k = parse_keyboard(e.dsl);
    const BlekRecognizer r(k);
    const std::size_t len = std::min<std::size_t>(e.max_len, 7);
    EXPECT_EQ(recognized(r, k.alphabet(), len), filter_words(k.alphabet(), len, e.predicate)) << name;
  }
}

TEST(BlekMember, RandomAgreesWithOracle)
{
  Generator g(71);
  for (int i = 0; i < 60; ++i) {
    std::vector<Key> t, f;
    for (std::size_t j = 0, n = 1 + g.below(3); j < n; ++j)
      t.push_back(g.key(ab, 4, right_free_ops));
    for (std::size_t j = 0, n = 1 + g.below(2); j < n; ++j)
      f.push_back(g.key(ab, 3, right_free_ops));
    const Keyboard k(ab, t, f);
    const BlekRecognizer r(k);
    const auto oracle = enumerate(k, 7, 7 + 2 * k.norm_inf() + 2, true).words;
    EXPECT_EQ(recognized(r, ab, 7), oracle) << serialize_keyboard(k);
    for (const auto& w : oracle) {
      const auto exec = r.witness(w);
      ASSERT_TRUE(exec) << serialize_keyboard(k) << utf8_encode(w);
      EXPECT_TRUE(replays_to(k, *exec, w)) << serialize_keyboard(k) << utf8_encode(w);
    }
  }
}

TEST(TripleGrammar, PrunedRulesAreSmall)
{
  const BlekRecognizer r(palindromes_with_c());
  const auto& g = r.grammar();
  EXPECT_EQ(g.stack_symbols.front(), pda_bottom);
  EXPECT_FALSE(g.start.empty());
  for (const auto& rule : g.rules)
    EXPECT_LE(rule.rhs.size(), 2u);
}

TEST(PdaExport, JsonShape)
{
  const auto j = pda_to_json(build_pda_blek(palindromes_with_c()));
  EXPECT_EQ(j["bottom"], "⊥");
  EXPECT_EQ(j["states"].size(), 10u);
  EXPECT_EQ(j["accepting"][0], "Fin");
  EXPECT_TRUE(j["transitions"].is_array());
}
