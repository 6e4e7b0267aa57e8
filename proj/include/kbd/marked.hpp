#ifndef KBD_MARKED_HPP
#define KBD_MARKED_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "core.hpp"

namespace kbd {

/**
 * A letter, or a mark standing for the k-th symbol of a key (KeyMark, k ≥ 1)
 * or for the cursor-relative position k of a source configuration
 * (ConfigMark, k ≠ 0). Marks are never letters, so the edge rules of the
 * shared fold are unaffected by them.
 */
struct MarkedSymbol {
  enum class Kind : std::uint8_t { Plain, KeyMark, ConfigMark };

  Kind kind = Kind::Plain;
  int index = 0;
  Letter letter = 0;

  static constexpr MarkedSymbol plain(Letter a) { return {Kind::Plain, 0, a}; }
  static constexpr MarkedSymbol key_mark(int k) { return {Kind::KeyMark, k, 0}; }
  static constexpr MarkedSymbol config_mark(int k) { return {Kind::ConfigMark, k, 0}; }

  bool is_key_mark(int k) const { return kind == Kind::KeyMark && index == k; }

  friend constexpr auto operator<=>(const MarkedSymbol&, const MarkedSymbol&) = default;
};

using MarkedWord = std::vector<MarkedSymbol>;
using MarkedConfiguration = BasicConfiguration<MarkedWord>;
using MarkedOp = BasicOp<MarkedSymbol>;
using MarkedKey = std::vector<MarkedOp>;

/// f_t: the letter at position i (1-based) becomes KeyMark(i); moves are kept.
inline MarkedKey mark_key(const Key& t)
{
  MarkedKey out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& o = t[i];
    if (o.is_write())
      out.push_back(MarkedOp::write(MarkedSymbol::key_mark(static_cast<int>(i + 1))));
    else
      out.push_back({o.kind, MarkedSymbol{}});
  }
  return out;
}

/// The key itself, over the marked symbol domain.
inline MarkedKey lift_key(const Key& t)
{
  MarkedKey out;
  out.reserve(t.size());
  for (const auto& o : t)
    out.push_back(o.is_write() ? MarkedOp::write(MarkedSymbol::plain(o.symbol)) : MarkedOp{o.kind, MarkedSymbol{}});
  return out;
}

/// f_c for a configuration with the given side sizes.
inline MarkedConfiguration mark_sizes(std::size_t left, std::size_t right)
{
  MarkedConfiguration c;
  for (std::size_t i = left; i > 0; --i)
    c.left.push_back(MarkedSymbol::config_mark(-static_cast<int>(i)));
  for (std::size_t i = 1; i <= right; ++i)
    c.right.push_back(MarkedSymbol::config_mark(static_cast<int>(i)));
  return c;
}

/// f_c: letters replaced by their cursor-relative positions.
inline MarkedConfiguration mark_config(const Configuration& c) { return mark_sizes(c.left.size(), c.right.size()); }

inline MarkedConfiguration lift_config(const Configuration& c)
{
  MarkedConfiguration m;
  for (Letter a : c.left)
    m.left.push_back(MarkedSymbol::plain(a));
  for (Letter a : c.right)
    m.right.push_back(MarkedSymbol::plain(a));
  return m;
}

/**
 * t1 ∼ t2: same result on every configuration.
 *
 * A key cannot read letters, so its behaviour on ⟨u|v⟩ depends only on
 * (|u|, |v|); and a key of length n never reaches further than n symbols from
 * the cursor, so sizes above N = max(|t1|, |t2|) behave like N. Applying both
 * keys to configurations of pairwise-distinct marks for every size pair in
 * [0, N]² therefore decides equivalence exactly.
 */
inline bool keys_equivalent(const Key& t1, const Key& t2)
{
  const std::size_t n = std::max(t1.size(), t2.size());
  const MarkedKey m1 = lift_key(t1);
  const MarkedKey m2 = lift_key(t2);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      const auto c = mark_sizes(i, j);
      if (kbd::apply(c, m1) != kbd::apply(c, m2))
        return false;
    }
  return true;
}

} // namespace kbd

#endif // KBD_MARKED_HPP
