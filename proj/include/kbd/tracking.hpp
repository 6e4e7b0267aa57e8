#ifndef KBD_TRACKING_HPP
#define KBD_TRACKING_HPP

#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "core.hpp"
#include "marked.hpp"

namespace kbd {

/// Cursor-relative index (−|u|..−1, 1..|v|) of the first symbol satisfying `pred`.
template <class Pred>
std::optional<long> find_position(const MarkedConfiguration& c, Pred pred)
{
  const long n = static_cast<long>(c.left.size());
  for (long i = 0; i < n; ++i)
    if (pred(c.left[static_cast<std::size_t>(i)]))
      return i - n;
  for (std::size_t i = 0; i < c.right.size(); ++i)
    if (pred(c.right[i]))
      return static_cast<long>(i) + 1;
  return std::nullopt;
}

/// f_c(config) · f_t(t).
inline MarkedConfiguration track(const Key& t, const Configuration& config)
{
  return kbd::apply(mark_config(config), mark_key(t));
}

/**
 * Where t writes its k-th symbol (1-based) from `config`, or nullopt if that
 * symbol does not survive. Throws if t[k] is not a letter.
 */
inline std::optional<long> writes_symbol_at(const Key& t, const Configuration& config, std::size_t k)
{
  if (k == 0 || k > t.size() || !t[k - 1].is_write())
    throw KeyboardError("symbol " + std::to_string(k) + " of the key is not a letter");
  const auto result = track(t, config);
  const int mark = static_cast<int>(k);
  return find_position(result, [mark](const MarkedSymbol& s) { return s.is_key_mark(mark); });
}

/// Positions at which t writes an `a` from `config`.
inline std::set<long> writes_letter(const Key& t, const Configuration& config, Letter a)
{
  std::set<long> out;
  const auto result = track(t, config);
  for (std::size_t k = 1; k <= t.size(); ++k) {
    if (t[k - 1] != AtomicOp::write(a))
      continue;
    const int mark = static_cast<int>(k);
    if (auto pos = find_position(result, [mark](const MarkedSymbol& s) { return s.is_key_mark(mark); }))
      out.insert(*pos);
  }
  return out;
}

/// Reserved filler for single-letter alphabets; lies outside every DSL alphabet.
inline constexpr Letter internal_filler = U'\U0010FFFD';

/// First alphabet letter different from `a`, or the internal filler.
inline Letter filler_for(Letter a, const std::vector<Letter>& alphabet)
{
  for (Letter b : alphabet)
    if (b != a)
      return b;
  return a == internal_filler ? U'\U0010FFFC' : internal_filler;
}

/**
 * t writes an `a` from ⟨b^|t| | b^|t|⟩, where t acts effectively; the answer
 * is then the same for every configuration on which t acts effectively.
 */
inline bool ensures_far_from_edges(const Key& t, Letter a, const std::vector<Letter>& alphabet = {})
{
  const Letter b = filler_for(a, alphabet);
  const Word side(t.size(), b);
  return !writes_letter(t, Configuration{side, side}, a).empty();
}

inline constexpr std::size_t infinite_distance = std::numeric_limits<std::size_t>::max();

/// max |w| such that a·w·a is a factor of `word`; infinite_distance with fewer than two a's.
inline std::size_t distance_a(const Word& word, Letter a)
{
  const auto first = word.find(a);
  const auto last = word.rfind(a);
  if (first == Word::npos || first == last)
    return infinite_distance;
  return last - first - 1;
}

} // namespace kbd

#endif // KBD_TRACKING_HPP
