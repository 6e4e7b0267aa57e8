#include <gtest/gtest.h>

#include "kbd/marked.hpp"
#include "kbd/normalform.hpp"
#include "kbd/oracle.hpp"
#include "kbd/properties.hpp"
#include "test_util.hpp"

using namespace kbd;
using namespace kbd::test;

TEST(NormalizeKey, Examples)
{
  EXPECT_EQ(normalize_key(K(U"a←")), (NatKey{0, U""}));
  EXPECT_EQ(normalize_key(K(U"←←ab←c")), (NatKey{2, U"ac"}));
  EXPECT_EQ(normalize_key(K(U"")), (NatKey{0, U""}));
  EXPECT_EQ(normalize_key(K(U"ab←←←")), (NatKey{1, U""}));
  EXPECT_EQ(normalize_key(K(U"←a←b")), (NatKey{1, U"b"}));
}

TEST(NormalizeKey, RejectsArrows)
{
  EXPECT_THROW(normalize_key(K(U"a◄")), KeyboardError);
  EXPECT_THROW(normalize_key(K(U"►")), KeyboardError);
}

TEST(NatKeyToKey, RoundTrip)
{
  const NatKey n{2, U"ab"};
  EXPECT_EQ(n.to_key(), K(U"←←ab"));
  EXPECT_EQ(n.balance(), 0);
  EXPECT_EQ((NatKey{3, U"a"}).balance(), -2);
}

TEST(NormalizeKey, RandomEquivalentAndIdempotent)
{
  Generator g(51);
  const std::vector<Letter> abc{U'a', U'b', U'c'};
  for (int i = 0; i < 200; ++i) {
    const Key t = g.key(abc, 8, backspace_only_ops);
    const NatKey n = normalize_key(t);
    EXPECT_TRUE(keys_equivalent(t, n.to_key())) << to_display(t);
    EXPECT_EQ(normalize_key(n.to_key()), n) << to_display(t);
    for (int j = 0; j < 5; ++j) {
      const Configuration c = g.config(abc, 6);
      EXPECT_EQ(kbd::apply(c, t), kbd::apply(c, n.to_key())) << to_display(t) << " on " << str(c);
    }
  }
}

TEST(NormalizeKeyboard, SameLanguage)
{
  const auto k = with_entry({U'a', U'b'}, {U"ab←a", U"a←←b"}, {U"bb←"});
  const auto n = normalize_keyboard(k);
  EXPECT_EQ(n.transient(), keys({U"aa", U"←b"}));
  EXPECT_EQ(n.final_keys(), keys({U"b"}));
  EXPECT_EQ(enumerate(k, 6, 10, true).words, enumerate(n, 6, 10, true).words);
}

TEST(NormalizeKeyboard, KeepsAutomaticFlag)
{
  const auto n = normalize_keyboard(automatic({U'a'}, {U"aa←"}));
  EXPECT_TRUE(n.automatic());
  EXPECT_EQ(n.transient(), keys({U"a"}));
}
