#ifndef KBD_EAK_HPP
#define KBD_EAK_HPP

#include <cstddef>
#include <deque>
#include <optional>
#include <unordered_map>
#include <vector>

#include "core.hpp"

/** \file
 * Membership for keyboards without ←. Letters are never erased, so the word
 * of every intermediate configuration is a (scattered) subword of the
 * produced word; the search space below a target is finite.
 */
namespace kbd {

/// u embeds into w as a scattered subsequence.
inline bool is_subword(const Word& u, const Word& w)
{
  std::size_t i = 0;
  for (Letter a : w)
    if (i < u.size() && u[i] == a)
      ++i;
  return i == u.size();
}

namespace eak_detail {

inline void require_backspace_free(const Keyboard& k)
{
  if (k.uses(OpKind::Backspace))
    throw KeyboardError("keyboard uses backspace; expected a ←-free keyboard");
}

} // namespace eak_detail

/**
 * Breadth-first search over configurations whose word is a subword of
 * `target`. Returns a shortest accepting execution producing `target`, or
 * nullopt when none exists (exact).
 */
inline std::optional<std::vector<Key>> eak_member(const Keyboard& k, const Word& target)
{
  eak_detail::require_backspace_free(k);
  struct Node {
    Configuration config;
    std::size_t parent;
    std::size_t key;
  };
  std::vector<Node> nodes{{Configuration{}, 0, 0}};
  std::unordered_map<Configuration, std::size_t> seen{{Configuration{}, 0}};

  auto path = [&](std::size_t id, const Key& last) {
    std::vector<Key> keys{last};
    for (; id != 0; id = nodes[id].parent)
      keys.push_back(k.transient()[nodes[id].key]);
    return std::vector<Key>(keys.rbegin(), keys.rend());
  };

  for (std::size_t id = 0; id < nodes.size(); ++id) {
    for (const auto& f : k.final_keys())
      if (kbd::apply(nodes[id].config, f).word() == target)
        return path(id, f);
    for (std::size_t i = 0; i < k.transient().size(); ++i) {
      Configuration c = kbd::apply(nodes[id].config, k.transient()[i]);
      if (!is_subword(c.word(), target) || seen.contains(c))
        continue;
      seen.emplace(c, nodes.size());
      nodes.push_back({std::move(c), id, i});
    }
  }
  return std::nullopt;
}

/**
 * A word of L(K) with at least `n` occurrences of `a`, built as t^m f for a
 * transient key t writing `a` and the final key f minimizing m. Letter counts
 * add up along executions of ←-free keyboards, so |t^m f|_a = m|t|_a + |f|_a.
 * Returns nullopt when no transient key writes `a` (occurrences of `a` are
 * then bounded by ‖K‖∞) or F is empty.
 */
inline std::optional<Word> letter_iteration_check(const Keyboard& k, Letter a, std::size_t n)
{
  eak_detail::require_backspace_free(k);
  const Key* pump = nullptr;
  for (const auto& t : k.transient())
    if (count_letter(t, a) > 0 && (!pump || count_letter(t, a) > count_letter(*pump, a)))
      pump = &t;
  if (!pump || k.final_keys().empty())
    return std::nullopt;

  const std::size_t per = count_letter(*pump, a);
  std::optional<std::pair<std::size_t, const Key*>> best;
  for (const auto& f : k.final_keys()) {
    const std::size_t have = count_letter(f, a);
    const std::size_t m = have >= n ? 0 : (n - have + per - 1) / per;
    if (!best || m < best->first)
      best.emplace(m, &f);
  }
  std::vector<Key> keys(best->first, *pump);
  keys.push_back(*best->second);
  return run(k, keys).word();
}

} // namespace kbd

#endif // KBD_EAK_HPP
