#include <gtest/gtest.h>

#include "kbd/marked.hpp"
#include "kbd/properties.hpp"
#include "kbd/tracking.hpp"
#include "test_util.hpp"

using namespace kbd;
using namespace kbd::test;

namespace {

MarkedOp km(int k) { return MarkedOp::write(MarkedSymbol::key_mark(k)); }
MarkedOp mop(OpKind kind) { return MarkedOp{kind, MarkedSymbol{}}; }

} // namespace

TEST(MarkKey, ReplacesLettersByPosition)
{
  const MarkedKey expected{mop(OpKind::Left),  mop(OpKind::Backspace), km(3),
                           mop(OpKind::Right), mop(OpKind::Right),     mop(OpKind::Right),
                           mop(OpKind::Backspace), km(8),              km(9)};
  EXPECT_EQ(mark_key(K(U"◄←a►►►←ba")), expected);
}

TEST(MarkKey, ArrowsOnlyUnchanged)
{
  EXPECT_EQ(mark_key(K(U"◄►←")), (MarkedKey{mop(OpKind::Left), mop(OpKind::Right), mop(OpKind::Backspace)}));
  EXPECT_EQ(mark_key(K(U"a")), (MarkedKey{km(1)}));
}

TEST(MarkConfig, CursorRelativeMarks)
{
  const auto m = mark_config(Configuration{U"xy", U"z"});
  EXPECT_EQ(m.left, (MarkedWord{MarkedSymbol::config_mark(-2), MarkedSymbol::config_mark(-1)}));
  EXPECT_EQ(m.right, (MarkedWord{MarkedSymbol::config_mark(1)}));
}

TEST(WritesSymbolAt, Examples)
{
  EXPECT_EQ(writes_symbol_at(K(U"a◄◄►b"), Configuration{U"ab", U""}, 5), -1);
  EXPECT_EQ(writes_symbol_at(K(U"a◄◄►b"), Configuration{U"ab", U""}, 1), 1);
  EXPECT_EQ(writes_symbol_at(K(U"a←"), Configuration{U"b", U"b"}, 1), std::nullopt);
  EXPECT_EQ(writes_symbol_at(K(U"a"), Configuration{}, 1), -1);
  EXPECT_THROW(writes_symbol_at(K(U"a←"), Configuration{}, 2), KeyboardError);
  EXPECT_THROW(writes_symbol_at(K(U"a"), Configuration{}, 0), KeyboardError);
}

TEST(WritesLetter, BackspaceThenLetter)
{
  EXPECT_EQ(writes_letter(K(U"←a"), Configuration{U"a", U"b"}, U'a'), (std::set<long>{-1}));
  EXPECT_TRUE(writes_letter(K(U"←a"), Configuration{U"a", U"b"}, U'b').empty());
}

// On a configuration without a, the key writes an a iff the result contains one.
TEST(WritesLetter, AlternativeOnLetterFreeConfigurations)
{
  Generator g(21);
  const std::vector<Letter> ab{U'a', U'b'};
  for (int i = 0; i < 1000; ++i) {
    const Key t = g.key(ab, 6, all_ops);
    const Configuration c{Word(g.upto(6), U'b'), Word(g.upto(6), U'b')};
    const bool contains = kbd::apply(c, t).word().find(U'a') != Word::npos;
    EXPECT_EQ(!writes_letter(t, c, U'a').empty(), contains) << to_display(t) << " on " << str(c);
  }
}

// More a's after the key than before means the key wrote one.
TEST(WritesLetter, CountIncreaseImpliesWrite)
{
  Generator g(22);
  const std::vector<Letter> ab{U'a', U'b'};
  int increases = 0;
  for (int i = 0; i < 1000; ++i) {
    const Key t = g.key(ab, 6, all_ops);
    const Configuration c = g.config(ab, 6);
    const Word before = c.word(), after = kbd::apply(c, t).word();
    if (std::count(after.begin(), after.end(), U'a') > std::count(before.begin(), before.end(), U'a')) {
      ++increases;
      EXPECT_FALSE(writes_letter(t, c, U'a').empty()) << to_display(t) << " on " << str(c);
    }
  }
  EXPECT_GT(increases, 100);
}

TEST(EnsuresFarFromEdges, SingleLetter) { EXPECT_TRUE(ensures_far_from_edges(K(U"a"), U'a', {U'a', U'b'})); }

// Far from the edges ► steps over a filler letter and ← erases that filler,
// so the a survives; only near the right edge does ← reach the a.
TEST(EnsuresFarFromEdges, RightArrowThenBackspace)
{
  const Key t = K(U"a►←");
  EXPECT_TRUE(ensures_far_from_edges(t, U'a', {U'a', U'b'}));
  EXPECT_EQ(kbd::apply(Configuration{U"bbb", U"bbb"}, t), (Configuration{U"bbba", U"bb"}));
  EXPECT_TRUE(writes_letter(t, Configuration{}, U'a').empty());
}

TEST(EnsuresFarFromEdges, UnionKeyboardKey) { EXPECT_TRUE(ensures_far_from_edges(K(U"←aca◄"), U'c', {U'a', U'c'})); }

TEST(EnsuresFarFromEdges, ErasedLetter) { EXPECT_FALSE(ensures_far_from_edges(K(U"a←"), U'a', {U'a', U'b'})); }

TEST(EnsuresFarFromEdges, SingleLetterAlphabetUsesInternalFiller)
{
  EXPECT_EQ(filler_for(U'a', {U'a'}), internal_filler);
  EXPECT_EQ(filler_for(U'a', {U'a', U'c'}), U'c');
  EXPECT_TRUE(ensures_far_from_edges(K(U"a◄"), U'a', {U'a'}));
}

TEST(DistanceA, Examples)
{
  EXPECT_EQ(distance_a(U"abba", U'a'), 2u);
  EXPECT_EQ(distance_a(U"ab", U'a'), infinite_distance);
  EXPECT_EQ(distance_a(U"", U'a'), infinite_distance);
  EXPECT_EQ(distance_a(U"aa", U'a'), 0u);
  // max |w| over factors a·w·a: w = "bcab" spans the first and last a.
  EXPECT_EQ(distance_a(U"abcaba", U'a'), 4u);
}

TEST(TrackingProperties, CoherenceOfTheFourFolds)
{
  PropertyOptions o;
  o.seed = 31;
  const auto r = check_tracking_coherence(o);
  EXPECT_TRUE(r.ok()) << r.first_violation;
}

TEST(TrackingProperties, BlindKey)
{
  PropertyOptions o;
  o.seed = 32;
  const auto r = check_blind_key(o);
  EXPECT_TRUE(r.ok()) << r.first_violation;
}

// Where t acts effectively on two configurations, it writes at the same positions.
TEST(TrackingProperties, EffectiveWritesCoincide)
{
  Generator g(33);
  const std::vector<Letter> ab{U'a', U'b'};
  int compared = 0;
  for (int i = 0; i < 1000; ++i) {
    const Key t = g.key(ab, 6, all_ops);
    const Configuration c = g.config(ab, 8), d = g.config(ab, 8);
    if (!apply_effective(c, t).effective() || !apply_effective(d, t).effective())
      continue;
    ++compared;
    for (std::size_t k = 1; k <= t.size(); ++k)
      if (t[k - 1].is_write()) {
        EXPECT_EQ(writes_symbol_at(t, c, k), writes_symbol_at(t, d, k)) << to_display(t);
      }
  }
  EXPECT_GT(compared, 200);
}

TEST(TrackingProperties, EnsuredLetterIsPresent)
{
  PropertyOptions o;
  o.seed = 34;
  const auto r = check_ensures_contains(o);
  EXPECT_TRUE(r.ok()) << r.first_violation;
  EXPECT_LT(r.skipped, r.cases);
}
