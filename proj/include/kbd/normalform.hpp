#ifndef KBD_NORMALFORM_HPP
#define KBD_NORMALFORM_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "core.hpp"

namespace kbd {

/// The arrow-free key ←^erase · write.
struct NatKey {
  std::size_t erase = 0;
  Word write;

  Key to_key() const
  {
    Key k(erase, AtomicOp::backspace());
    for (Letter a : write)
      k.push_back(AtomicOp::write(a));
    return k;
  }

  /// |w| − r, the net effect on the length away from the left edge.
  long balance() const { return static_cast<long>(write.size()) - static_cast<long>(erase); }

  friend auto operator<=>(const NatKey&, const NatKey&) = default;
};

/**
 * Normal form of an arrow-free key: repeatedly delete the first
 * (letter, backspace) pair until none remains. At most |t| rounds, each a
 * linear scan.
 */
inline NatKey normalize_key(const Key& t)
{
  for (const auto& o : t)
    if (o.kind == OpKind::Left || o.kind == OpKind::Right)
      throw KeyboardError("normal form is only defined for arrow-free keys: " + to_display(t));

  Key cur = t;
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i].is_write() && cur[i + 1].kind == OpKind::Backspace) {
        cur.erase(cur.begin() + static_cast<long>(i), cur.begin() + static_cast<long>(i + 2));
        changed = true;
        break;
      }
    }
    if (!changed)
      break;
  }

  NatKey nk;
  std::size_t i = 0;
  while (i < cur.size() && cur[i].kind == OpKind::Backspace)
    ++i, ++nk.erase;
  for (; i < cur.size(); ++i)
    nk.write.push_back(cur[i].symbol);
  return nk;
}

inline std::vector<NatKey> normalize_keys(const std::vector<Key>& keys)
{
  std::vector<NatKey> out;
  out.reserve(keys.size());
  for (const auto& t : keys)
    out.push_back(normalize_key(t));
  return out;
}

/// Every key replaced by its normal form (only for MK, EK, BK and BEK keyboards).
inline Keyboard normalize_keyboard(const Keyboard& k)
{
  auto lift = [](const std::vector<Key>& keys) {
    std::vector<Key> out;
    for (const auto& t : keys)
      out.push_back(normalize_key(t).to_key());
    return out;
  };
  if (k.automatic())
    return Keyboard::automatic(k.alphabet(), lift(k.transient()));
  return Keyboard(k.alphabet(), lift(k.transient()), lift(k.final_keys()));
}

} // namespace kbd

#endif // KBD_NORMALFORM_HPP
