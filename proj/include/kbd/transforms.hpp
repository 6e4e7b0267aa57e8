#ifndef KBD_TRANSFORMS_HPP
#define KBD_TRANSFORMS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "blek_automaton.hpp"
#include "core.hpp"
#include "eak.hpp"
#include "oracle.hpp"

namespace kbd {

/// Reverses every key of a keyboard without operators.
inline Keyboard mirror_mk(const Keyboard& k)
{
  const auto label = classify(k);
  if (label.name != "MK")
    throw KeyboardError("mirror_mk expects an MK keyboard, got " + label.name);
  std::vector<Key> keys;
  for (const auto& t : k.transient())
    keys.emplace_back(t.rbegin(), t.rend());
  return Keyboard::automatic(k.alphabet(), std::move(keys));
}

/// Image of a key under ► ↦ ◄, ◄ ↦ ►, a ↦ a◄.
inline Key mirror_key(const Key& t)
{
  Key out;
  for (const auto& o : t) {
    switch (o.kind) {
    case OpKind::Write:
      out.push_back(o);
      out.push_back(AtomicOp::left());
      break;
    case OpKind::Left: out.push_back(AtomicOp::right()); break;
    case OpKind::Right: out.push_back(AtomicOp::left()); break;
    case OpKind::Backspace: throw KeyboardError("mirror_key is only defined for ←-free keys");
    }
  }
  return out;
}

/// Mirror construction for ←-free keyboards; automatic keyboards stay automatic.
inline Keyboard mirror_ak(const Keyboard& k)
{
  if (k.uses(OpKind::Backspace))
    throw KeyboardError("mirror_ak expects a ←-free keyboard");
  auto image = [](const std::vector<Key>& keys) {
    std::vector<Key> out;
    for (const auto& t : keys)
      out.push_back(mirror_key(t));
    return out;
  };
  if (k.automatic())
    return Keyboard::automatic(k.alphabet(), image(k.transient()));
  return Keyboard(k.alphabet(), image(k.transient()), image(k.final_keys()));
}

/// mirror_mk for MK keyboards, mirror_ak for other ←-free keyboards.
inline Keyboard mirror(const Keyboard& k)
{
  const auto label = classify(k);
  if (label.name == "MK")
    return mirror_mk(k);
  if (!label.has_backspace)
    return mirror_ak(k);
  throw KeyboardError("class " + label.name + " is not closed under mirror; no construction exists");
}

using LetterMap = std::map<Letter, Letter>;

/// Maps letters inside every key; operators are left unchanged.
inline Keyboard apply_morphism(const Keyboard& k, const LetterMap& g)
{
  std::vector<Letter> alphabet;
  for (Letter a : k.alphabet()) {
    auto it = g.find(a);
    if (it == g.end())
      throw KeyboardError("morphism is not defined on letter '" + utf8_encode(a) + "'");
    if (std::find(alphabet.begin(), alphabet.end(), it->second) == alphabet.end())
      alphabet.push_back(it->second);
  }
  auto image = [&g](const std::vector<Key>& keys) {
    std::vector<Key> out;
    for (const auto& t : keys) {
      Key u;
      for (const auto& o : t)
        u.push_back(o.is_write() ? AtomicOp::write(g.at(o.symbol)) : o);
      out.push_back(std::move(u));
    }
    return out;
  };
  if (k.automatic())
    return Keyboard::automatic(std::move(alphabet), image(k.transient()));
  return Keyboard(std::move(alphabet), image(k.transient()), image(k.final_keys()));
}

inline Word apply_morphism(const Word& w, const LetterMap& g)
{
  Word out;
  for (Letter a : w)
    out.push_back(g.at(a));
  return out;
}

// ---------------------------------------------------------------------------
// Post correspondence

inline constexpr Letter pcp_marker = U'♦'; // ♦

struct PcpInstance {
  std::vector<std::pair<Word, Word>> pairs;

  void validate() const
  {
    if (pairs.empty())
      throw KeyboardError("PCP instance needs at least one pair");
    for (const auto& [u, v] : pairs) {
      if (u.empty() || v.empty())
        throw KeyboardError("PCP words must be nonempty");
      if (u.find(pcp_marker) != Word::npos || v.find(pcp_marker) != Word::npos)
        throw KeyboardError("PCP words must not contain the marker ♦");
    }
  }

  std::vector<Letter> letters() const
  {
    std::set<Letter> s;
    for (const auto& [u, v] : pairs)
      s.insert(u.begin(), u.end()), s.insert(v.begin(), v.end());
    return {s.begin(), s.end()};
  }
};

/// x♦: a marker after each letter.
inline Word interleave_marker(const Word& x)
{
  Word out;
  for (Letter a : x)
    out.push_back(a), out.push_back(pcp_marker);
  return out;
}

/**
 * Pair of ◄-only keyboards whose languages intersect iff the instance has a
 * solution. K1 writes u_i♦ left of the cursor and the reversed v_i♦ right of
 * it, so its words are U♦·reverse(V♦); K2 produces the even palindromes.
 */
inline std::pair<Keyboard, Keyboard> pcp_to_lk(const PcpInstance& inst)
{
  inst.validate();
  std::vector<Letter> alphabet = inst.letters();
  alphabet.push_back(pcp_marker);

  std::vector<Key> k1;
  for (const auto& [u, v] : inst.pairs) {
    Word body = interleave_marker(u);
    const Word vm = interleave_marker(v);
    body.append(vm.rbegin(), vm.rend());
    Key t = key_from_word(body);
    t.insert(t.end(), 2 * v.size(), AtomicOp::left());
    k1.push_back(std::move(t));
  }
  std::vector<Key> pal{Key{}};
  for (Letter a : alphabet)
    pal.push_back({AtomicOp::write(a), AtomicOp::write(a), AtomicOp::left()});
  return {Keyboard::automatic(alphabet, std::move(k1)), Keyboard::automatic(alphabet, std::move(pal))};
}

struct IntersectionWitness {
  Word word;
  std::vector<Key> first_execution;
  std::vector<Key> second_execution;
};

namespace transforms_detail {

/// Execution producing `w` on `k`, using an exact procedure when one applies.
inline std::optional<std::vector<Key>> find_execution(const Keyboard& k, const Word& w, std::size_t cap)
{
  if (!k.uses(OpKind::Backspace))
    return eak_member(k, w);
  if (!k.uses(OpKind::Right))
    return BlekRecognizer(k).witness(w);
  auto r = member_semidecide(k, w, cap);
  if (auto* found = std::get_if<FoundExecution>(&r))
    return found->keys;
  return std::nullopt;
}

} // namespace transforms_detail

/**
 * Shortlex-first word of length ≤ max_len in both languages, searching the
 * bounded enumeration of `k1` and testing each word against `k2`. A miss is
 * only evidence up to the bounds.
 */
inline std::optional<IntersectionWitness> intersection_nonempty_bounded(const Keyboard& k1, const Keyboard& k2,
                                                                        std::size_t max_len, std::size_t cap)
{
  const auto sample = enumerate(k1, max_len, cap);
  for (const auto& w : sample.words)
    if (auto exec = transforms_detail::find_execution(k2, w, cap))
      return IntersectionWitness{w, sample.witnesses.at(w), std::move(*exec)};
  return std::nullopt;
}

} // namespace kbd

#endif // KBD_TRANSFORMS_HPP
