#ifndef KBD_CORE_HPP
#define KBD_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "utf8.hpp"

/** \file
 * Atomic operations, configurations, keys and keyboards.
 *
 * The fold that applies operations to a configuration is written once and
 * parameterized by the symbol type, so the plain semantics (letters) and the
 * tracking semantics (marked symbols) cannot drift apart.
 */
namespace kbd {

using Letter = char32_t;
using Word = std::u32string;

/** Raised for malformed keyboards, keys outside a keyboard, or class mismatches. */
class KeyboardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class OpKind : std::uint8_t { Write, Backspace, Left, Right };

template <class Sym>
struct BasicOp {
  OpKind kind = OpKind::Write;
  Sym symbol{};

  static constexpr BasicOp write(Sym s) { return {OpKind::Write, s}; }
  static constexpr BasicOp backspace() { return {OpKind::Backspace, Sym{}}; }
  static constexpr BasicOp left() { return {OpKind::Left, Sym{}}; }
  static constexpr BasicOp right() { return {OpKind::Right, Sym{}}; }

  constexpr bool is_write() const { return kind == OpKind::Write; }

  friend constexpr auto operator<=>(const BasicOp&, const BasicOp&) = default;
};

using AtomicOp = BasicOp<Letter>;
using Key = std::vector<AtomicOp>;

/// Shorthands used throughout tests and the corpus.
namespace ops {
inline constexpr AtomicOp BS = AtomicOp::backspace();
inline constexpr AtomicOp LA = AtomicOp::left();
inline constexpr AtomicOp RA = AtomicOp::right();
constexpr AtomicOp W(Letter a) { return AtomicOp::write(a); }

/// Builds a key from a compact string: letters are written, and the code
/// points U+2190 (←), U+25C4 (◄) and U+25BA (►) denote the three moves.
inline Key key(std::u32string_view spec)
{
  Key k;
  for (char32_t c : spec) {
    switch (c) {
    case U'←': k.push_back(BS); break;
    case U'◄': k.push_back(LA); break;
    case U'►': k.push_back(RA); break;
    default: k.push_back(W(c)); break;
    }
  }
  return k;
}
} // namespace ops

/// Configuration <left|right>; the cursor sits between the two sequences.
template <class Seq>
struct BasicConfiguration {
  Seq left{};
  Seq right{};

  std::size_t size() const { return left.size() + right.size(); }

  Seq word() const
  {
    Seq w = left;
    w.insert(w.end(), right.begin(), right.end());
    return w;
  }

  /// Cursor-relative access: -1 is the last symbol of `left`, +1 the first of `right`.
  const typename Seq::value_type& at(long i) const
  {
    if (i < 0) {
      auto n = static_cast<long>(left.size());
      if (-i > n)
        throw std::out_of_range("cursor index out of range");
      return left[static_cast<std::size_t>(n + i)];
    }
    if (i == 0 || i > static_cast<long>(right.size()))
      throw std::out_of_range("cursor index out of range");
    return right[static_cast<std::size_t>(i - 1)];
  }

  friend auto operator<=>(const BasicConfiguration&, const BasicConfiguration&) = default;
  friend bool operator==(const BasicConfiguration&, const BasicConfiguration&) = default;
};

using Configuration = BasicConfiguration<Word>;

/**
 * Applies one operation in place.
 *
 * Returns false iff the operation had no applicable effective rule
 * (backspace or left arrow on an empty left part, right arrow on an empty
 * right part). Under the standard semantics such a step is the identity.
 */
template <class Seq>
bool step(BasicConfiguration<Seq>& c, const BasicOp<typename Seq::value_type>& op)
{
  switch (op.kind) {
  case OpKind::Write:
    c.left.push_back(op.symbol);
    return true;
  case OpKind::Backspace:
    if (c.left.empty())
      return false;
    c.left.pop_back();
    return true;
  case OpKind::Left:
    if (c.left.empty())
      return false;
    c.right.insert(c.right.begin(), c.left.back());
    c.left.pop_back();
    return true;
  case OpKind::Right:
    if (c.right.empty())
      return false;
    c.left.push_back(c.right.front());
    c.right.erase(c.right.begin());
    return true;
  }
  return false;
}

/// Standard semantics: edge effects are identity steps.
template <class Seq>
BasicConfiguration<Seq> apply(BasicConfiguration<Seq> c,
                              std::span<const BasicOp<typename Seq::value_type>> key)
{
  for (const auto& op : key)
    step(c, op);
  return c;
}

template <class Seq>
BasicConfiguration<Seq> apply(BasicConfiguration<Seq> c,
                              const std::vector<BasicOp<typename Seq::value_type>>& key)
{
  return kbd::apply(std::move(c), std::span<const BasicOp<typename Seq::value_type>>(key));
}

template <class Seq>
struct EffectiveOutcome {
  BasicConfiguration<Seq> config;        ///< configuration reached before blocking
  std::optional<std::size_t> blocked_at; ///< index of the first non-effective op

  bool effective() const { return !blocked_at.has_value(); }
};

/// Effective semantics: stops at the first operation without an applicable rule.
template <class Seq>
EffectiveOutcome<Seq> apply_effective(BasicConfiguration<Seq> c,
                                      const std::vector<BasicOp<typename Seq::value_type>>& key)
{
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (!step(c, key[i]))
      return {std::move(c), i};
  }
  return {std::move(c), std::nullopt};
}

// ---------------------------------------------------------------------------
// Key statistics

inline std::size_t count_op(const Key& t, OpKind kind)
{
  return static_cast<std::size_t>(
      std::count_if(t.begin(), t.end(), [kind](const AtomicOp& o) { return o.kind == kind; }));
}

inline std::size_t count_letters(const Key& t) { return count_op(t, OpKind::Write); }

inline std::size_t count_letter(const Key& t, Letter a)
{
  return static_cast<std::size_t>(std::count(t.begin(), t.end(), AtomicOp::write(a)));
}

/// Letters written by an arrow-free, backspace-free key.
inline Word written_word(const Key& t)
{
  Word w;
  for (const auto& o : t)
    if (o.is_write())
      w.push_back(o.symbol);
  return w;
}

inline Key key_from_word(const Word& w)
{
  Key k;
  k.reserve(w.size());
  for (Letter a : w)
    k.push_back(AtomicOp::write(a));
  return k;
}

/// Human-readable rendering with the arrow glyphs; the empty key prints as ε.
inline std::string to_display(const Key& t)
{
  if (t.empty())
    return "\xCE\xB5";
  std::string s;
  for (const auto& o : t) {
    switch (o.kind) {
    case OpKind::Write: utf8_append(s, o.symbol); break;
    case OpKind::Backspace: s += "\xE2\x86\x90"; break;
    case OpKind::Left: s += "\xE2\x97\x84"; break;
    case OpKind::Right: s += "\xE2\x96\xBA"; break;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Keyboards

/**
 * A keyboard (T, F) over a declared alphabet.
 *
 * Key sets keep their declaration order (duplicates dropped) so that the
 * text format round-trips. An automatic keyboard K is stored as (K, K) with
 * the `automatic` flag set.
 */
class Keyboard {
public:
  Keyboard() = default;

  Keyboard(std::vector<Letter> alphabet, std::vector<Key> transient, std::vector<Key> final_keys)
      : alphabet_(dedup(std::move(alphabet))),
        transient_(dedup(std::move(transient))),
        final_(dedup(std::move(final_keys)))
  {
    validate();
  }

  static Keyboard automatic(std::vector<Letter> alphabet, std::vector<Key> keys)
  {
    Keyboard k(std::move(alphabet), keys, keys);
    k.automatic_ = true;
    return k;
  }

  const std::vector<Letter>& alphabet() const { return alphabet_; }
  const std::vector<Key>& transient() const { return transient_; }
  const std::vector<Key>& final_keys() const { return final_; }
  bool automatic() const { return automatic_; }

  bool in_alphabet(Letter a) const
  {
    return std::find(alphabet_.begin(), alphabet_.end(), a) != alphabet_.end();
  }
  bool is_transient(const Key& t) const
  {
    return std::find(transient_.begin(), transient_.end(), t) != transient_.end();
  }
  bool is_final(const Key& t) const { return std::find(final_.begin(), final_.end(), t) != final_.end(); }

  /// Same transient and final sets, ignoring order.
  bool same_key_sets() const
  {
    return std::set<Key>(transient_.begin(), transient_.end()) ==
           std::set<Key>(final_.begin(), final_.end());
  }

  /// ‖K‖∞: longest key over T ∪ F (0 when both are empty).
  std::size_t norm_inf() const
  {
    std::size_t n = 0;
    for (const auto& t : transient_)
      n = std::max(n, t.size());
    for (const auto& t : final_)
      n = std::max(n, t.size());
    return n;
  }

  /// |K| = Σ (|t| + 1) over T ∪ F.
  std::size_t size_sum() const
  {
    std::set<Key> all(transient_.begin(), transient_.end());
    all.insert(final_.begin(), final_.end());
    std::size_t s = 0;
    for (const auto& t : all)
      s += t.size() + 1;
    return s;
  }

  bool uses(OpKind kind) const
  {
    auto has = [kind](const std::vector<Key>& keys) {
      return std::any_of(keys.begin(), keys.end(), [kind](const Key& t) {
        return std::any_of(t.begin(), t.end(), [kind](const AtomicOp& o) { return o.kind == kind; });
      });
    };
    return has(transient_) || has(final_);
  }

  friend bool operator==(const Keyboard& a, const Keyboard& b)
  {
    return a.alphabet_ == b.alphabet_ && a.transient_ == b.transient_ && a.final_ == b.final_ &&
           a.automatic_ == b.automatic_;
  }

private:
  template <class T>
  static std::vector<T> dedup(std::vector<T> xs)
  {
    std::vector<T> out;
    for (auto& x : xs)
      if (std::find(out.begin(), out.end(), x) == out.end())
        out.push_back(std::move(x));
    return out;
  }

  void validate() const
  {
    auto check = [this](const std::vector<Key>& keys) {
      for (const auto& t : keys)
        for (const auto& o : t)
          if (o.is_write() && !in_alphabet(o.symbol))
            throw KeyboardError("letter '" + utf8_encode(o.symbol) + "' is not in the alphabet");
    };
    check(transient_);
    check(final_);
  }

  std::vector<Letter> alphabet_;
  std::vector<Key> transient_;
  std::vector<Key> final_;
  bool automatic_ = false;
};

// ---------------------------------------------------------------------------
// Executions

/// Left fold of the keys from `start`. Every key must belong to T ∪ F.
inline Configuration run(const Keyboard& k, const std::vector<Key>& keys, Configuration start = {})
{
  if (keys.empty())
    throw KeyboardError("an execution needs at least one key");
  for (const auto& t : keys) {
    if (!k.is_transient(t) && !k.is_final(t))
      throw KeyboardError("key " + to_display(t) + " does not belong to the keyboard");
    start = kbd::apply(std::move(start), t);
  }
  return start;
}

/// All keys but the last are transient and the last is final.
inline bool is_accepting_run(const Keyboard& k, const std::vector<Key>& keys)
{
  if (keys.empty())
    return false;
  for (std::size_t i = 0; i + 1 < keys.size(); ++i)
    if (!k.is_transient(keys[i]))
      return false;
  return k.is_final(keys.back());
}

/// True iff `keys` is an accepting execution that produces `w`.
inline bool replays_to(const Keyboard& k, const std::vector<Key>& keys, const Word& w)
{
  return is_accepting_run(k, keys) && run(k, keys).word() == w;
}

// ---------------------------------------------------------------------------
// Classes

struct ClassLabel {
  bool has_backspace = false;
  bool has_left = false;
  bool has_right = false;
  bool has_entry = false;
  std::string name;
  std::optional<std::string> warning;

  /// Both arrows allowed (the A classes); also set when ► appears alone.
  bool arrows() const { return has_right; }
  bool backspace_free() const { return !has_backspace; }
  bool right_free() const { return !has_right; }
};

inline ClassLabel classify(const Keyboard& k)
{
  ClassLabel c;
  c.has_backspace = k.uses(OpKind::Backspace);
  c.has_left = k.uses(OpKind::Left);
  c.has_right = k.uses(OpKind::Right);
  c.has_entry = !k.same_key_sets();
  if (c.has_right && !c.has_left)
    c.warning = "right arrow without left arrow never has any effect; classified with both arrows";

  std::string name;
  if (c.has_backspace)
    name += 'B';
  if (c.has_left && !c.has_right)
    name += 'L';
  if (c.has_entry)
    name += 'E';
  if (c.has_right)
    name += 'A';
  c.name = name.empty() ? "MK" : name + "K";
  return c;
}

} // namespace kbd

namespace std {
template <class Seq>
struct hash<kbd::BasicConfiguration<Seq>> {
  std::size_t operator()(const kbd::BasicConfiguration<Seq>& c) const noexcept
  {
    std::size_t h1 = std::hash<Seq>{}(c.left);
    std::size_t h2 = std::hash<Seq>{}(c.right);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};
} // namespace std

#endif // KBD_CORE_HPP
