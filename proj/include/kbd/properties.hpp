#ifndef KBD_PROPERTIES_HPP
#define KBD_PROPERTIES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "blek_automaton.hpp"
#include "core.hpp"
#include "eak.hpp"
#include "marked.hpp"
#include "oracle.hpp"
#include "tracking.hpp"
#include "utf8.hpp"

/** \file
 * Seeded random checks of the general lemmas on keys and keyboards. Each
 * property runs a fixed number of cases and reports the first violation.
 */
namespace kbd {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t skipped = 0; ///< cases where the hypothesis did not hold
  std::size_t violations = 0;
  std::string first_violation;

  bool ok() const { return violations == 0; }
};

struct PropertyOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 1000;
  std::vector<Letter> alphabet{U'a', U'b'};
  std::size_t max_key_len = 6;
  std::size_t max_side = 10;
};

// ---------------------------------------------------------------------------
// Generators

class Generator {
public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::size_t upto(std::size_t n) { return below(n + 1); }

  Word word(const std::vector<Letter>& alphabet, std::size_t len)
  {
    Word w;
    for (std::size_t i = 0; i < len; ++i)
      w.push_back(alphabet[below(alphabet.size())]);
    return w;
  }

  Configuration config(const std::vector<Letter>& alphabet, std::size_t max_side)
  {
    return {word(alphabet, upto(max_side)), word(alphabet, upto(max_side))};
  }

  /// Random key; `ops` lists the allowed operator kinds besides writing.
  Key key(const std::vector<Letter>& alphabet, std::size_t max_len, const std::vector<OpKind>& ops)
  {
    Key t;
    const std::size_t len = upto(max_len);
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t r = below(alphabet.size() + ops.size());
      if (r < alphabet.size())
        t.push_back(AtomicOp::write(alphabet[r]));
      else
        t.push_back({ops[r - alphabet.size()], Letter{}});
    }
    return t;
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

inline const std::vector<OpKind> all_ops{OpKind::Backspace, OpKind::Left, OpKind::Right};
inline const std::vector<OpKind> right_free_ops{OpKind::Backspace, OpKind::Left};
inline const std::vector<OpKind> backspace_free_ops{OpKind::Left, OpKind::Right};
inline const std::vector<OpKind> backspace_only_ops{OpKind::Backspace};

inline std::string describe(const Configuration& c)
{
  return "<" + utf8_encode(c.left) + "|" + utf8_encode(c.right) + ">";
}

namespace props_detail {

inline bool is_prefix(const Word& p, const Word& w) { return p.size() <= w.size() && w.compare(0, p.size(), p) == 0; }
inline bool is_suffix(const Word& s, const Word& w)
{
  return s.size() <= w.size() && w.compare(w.size() - s.size(), s.size(), s) == 0;
}
/// w without its last n letters.
inline Word drop_back(const Word& w, std::size_t n) { return w.substr(0, w.size() > n ? w.size() - n : 0); }
/// w without its first n letters.
inline Word drop_front(const Word& w, std::size_t n) { return n >= w.size() ? Word{} : w.substr(n); }

inline long written_letters(const Key& t) { return static_cast<long>(count_letters(t)); }
inline long backspaces(const Key& t) { return static_cast<long>(count_op(t, OpKind::Backspace)); }

/// Outcome of one case: nullopt when the hypothesis fails, "" on success, a description otherwise.
using CaseOutcome = std::optional<std::string>;

inline PropertyResult run_cases(std::string name, std::size_t cases, const std::function<CaseOutcome()>& check)
{
  PropertyResult r;
  r.name = std::move(name);
  for (std::size_t i = 0; i < cases; ++i) {
    ++r.cases;
    const CaseOutcome out = check();
    if (!out)
      ++r.skipped;
    else if (!out->empty() && r.violations++ == 0)
      r.first_violation = *out;
  }
  return r;
}

} // namespace props_detail

// ---------------------------------------------------------------------------
// General lemmas

/// Letters more than |t| away from the cursor are untouched, in both directions.
inline PropertyResult check_locality(const PropertyOptions& o)
{
  using namespace props_detail;
  Generator g(o.seed);
  return run_cases("locality", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, all_ops);
    const Configuration c = g.config(o.alphabet, o.max_side);
    const Configuration r = kbd::apply(c, t);
    const std::size_t n = t.size();
    const bool ok = is_prefix(drop_back(c.left, n), r.left) && is_suffix(drop_front(c.right, n), r.right) &&
                    is_prefix(drop_back(r.left, n), c.left) && is_suffix(drop_front(r.right, n), c.right);
    return ok ? "" : to_display(t) + " on " + describe(c);
  });
}

inline PropertyResult check_length_bounds(const PropertyOptions& o)
{
  using namespace props_detail;
  Generator g(o.seed + 1);
  return run_cases("length bounds", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, all_ops);
    const Configuration c = g.config(o.alphabet, o.max_side);
    const Configuration r = kbd::apply(c, t);
    const long before = static_cast<long>(c.size()), after = static_cast<long>(r.size());
    const long n = static_cast<long>(t.size());
    const bool ok = before - backspaces(t) + written_letters(t) <= after && after <= before + written_letters(t) &&
                    std::labs(static_cast<long>(r.left.size()) - static_cast<long>(c.left.size())) <= n &&
                    std::labs(static_cast<long>(r.right.size()) - static_cast<long>(c.right.size())) <= n;
    return ok ? "" : to_display(t) + " on " + describe(c);
  });
}

/// With |u| ≥ |t| every backspace erases: |u'v'| = |uv| − |t|_← + Σ|t|_a.
inline PropertyResult check_left_edge_length(const PropertyOptions& o)
{
  using namespace props_detail;
  Generator g(o.seed + 2);
  return run_cases("left-edge length equality", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, all_ops);
    Configuration c = g.config(o.alphabet, o.max_side);
    if (c.left.size() < t.size())
      c.left += g.word(o.alphabet, t.size() - c.left.size());
    const Configuration r = kbd::apply(c, t);
    const long expected = static_cast<long>(c.size()) - backspaces(t) + written_letters(t);
    return static_cast<long>(r.size()) == expected ? "" : to_display(t) + " on " + describe(c);
  });
}

inline PropertyResult check_monotonicity(const PropertyOptions& o)
{
  Generator g(o.seed + 3);
  return props_detail::run_cases("monotonicity", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, all_ops);
    const Configuration small = g.config(o.alphabet, o.max_side);
    const Configuration big{g.word(o.alphabet, small.left.size() + g.upto(3)),
                            g.word(o.alphabet, small.right.size() + g.upto(3))};
    const Configuration r1 = kbd::apply(small, t), r2 = kbd::apply(big, t);
    const bool ok = r1.left.size() <= r2.left.size() && r1.right.size() <= r2.right.size();
    return ok ? "" : to_display(t) + " on " + describe(small) + " vs " + describe(big);
  });
}

/// ⟨u|v⟩ →eff t ⟨u'|v'⟩ implies ⟨xu|vy⟩ →eff t ⟨xu'|v'y⟩.
inline PropertyResult check_effective_extension(const PropertyOptions& o)
{
  Generator g(o.seed + 4);
  return props_detail::run_cases("effective-context extension", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, all_ops);
    const Configuration c = g.config(o.alphabet, o.max_side);
    const auto base = apply_effective(c, t);
    if (!base.effective())
      return std::nullopt;
    const Word x = g.word(o.alphabet, g.upto(4)), y = g.word(o.alphabet, g.upto(4));
    const auto ext = apply_effective(Configuration{x + c.left, c.right + y}, t);
    const Configuration expected{x + base.config.left, base.config.right + y};
    return ext.effective() && ext.config == expected ? "" : to_display(t) + " on " + describe(c);
  });
}

inline PropertyResult check_effective_same_size(const PropertyOptions& o)
{
  Generator g(o.seed + 5);
  return props_detail::run_cases("size-determined effectiveness", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, all_ops);
    // Small sides make blocking frequent.
    const Configuration c{g.word(o.alphabet, g.upto(3)), g.word(o.alphabet, g.upto(3))};
    const Configuration d{g.word(o.alphabet, c.left.size()), g.word(o.alphabet, c.right.size())};
    const bool same = apply_effective(c, t).blocked_at == apply_effective(d, t).blocked_at;
    return same ? "" : to_display(t) + " on " + describe(c) + " vs " + describe(d);
  });
}

inline PropertyResult check_effective_agrees_standard(const PropertyOptions& o)
{
  Generator g(o.seed + 6);
  return props_detail::run_cases("effective/standard agreement", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, all_ops);
    const Configuration c{g.word(o.alphabet, g.upto(4)), g.word(o.alphabet, g.upto(4))};
    const auto eff = apply_effective(c, t);
    if (!eff.effective())
      return std::nullopt;
    return eff.config == kbd::apply(c, t) ? "" : to_display(t) + " on " + describe(c);
  });
}

/// |u|, |v| ≥ |t| ⇒ t acts effectively.
inline PropertyResult check_effective_far_from_edges(const PropertyOptions& o)
{
  Generator g(o.seed + 7);
  return props_detail::run_cases("effectiveness far from edges", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, all_ops);
    const Configuration c{g.word(o.alphabet, t.size() + g.upto(3)), g.word(o.alphabet, t.size() + g.upto(3))};
    return apply_effective(c, t).effective() ? "" : to_display(t) + " on " + describe(c);
  });
}

// ---------------------------------------------------------------------------
// Tracking

/**
 * The plain fold, the key-marked fold, the configuration-marked fold and the
 * doubly marked fold have the same side sizes, and each position of the plain
 * result holds `a` iff the marked result names a source symbol equal to `a`.
 */
inline PropertyResult check_tracking_coherence(const PropertyOptions& o)
{
  Generator g(o.seed + 8);
  return props_detail::run_cases("tracking coherence", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, all_ops);
    const Configuration c = g.config(o.alphabet, o.max_side);
    const Configuration plain = kbd::apply(c, t);
    const MarkedConfiguration both = track(t, c);
    const MarkedConfiguration key_only = kbd::apply(lift_config(c), mark_key(t));
    const MarkedConfiguration config_only = kbd::apply(mark_config(c), lift_key(t));
    for (const auto* m : {&both, &key_only, &config_only})
      if (m->left.size() != plain.left.size() || m->right.size() != plain.right.size())
        return "sizes differ: " + to_display(t) + " on " + describe(c);

    auto source = [&](const MarkedSymbol& s) -> Letter {
      switch (s.kind) {
      case MarkedSymbol::Kind::KeyMark: return t[static_cast<std::size_t>(s.index - 1)].symbol;
      case MarkedSymbol::Kind::ConfigMark: return c.at(s.index);
      case MarkedSymbol::Kind::Plain: return s.letter;
      }
      return 0;
    };
    const long nl = static_cast<long>(plain.left.size()), nr = static_cast<long>(plain.right.size());
    for (long j = -nl; j <= nr; ++j) {
      if (j == 0)
        continue;
      const Letter expected = plain.at(j);
      if (source(both.at(j)) != expected || source(key_only.at(j)) != expected ||
          source(config_only.at(j)) != expected)
        return "position " + std::to_string(j) + ": " + to_display(t) + " on " + describe(c);
    }
    return "";
  });
}

/// Write positions depend only on the side sizes of the configuration.
inline PropertyResult check_blind_key(const PropertyOptions& o)
{
  Generator g(o.seed + 9);
  return props_detail::run_cases("blind key", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, all_ops);
    const Configuration c = g.config(o.alphabet, o.max_side);
    const Configuration d{g.word(o.alphabet, c.left.size()), g.word(o.alphabet, c.right.size())};
    for (std::size_t k = 1; k <= t.size(); ++k)
      if (t[k - 1].is_write() && writes_symbol_at(t, c, k) != writes_symbol_at(t, d, k))
        return "symbol " + std::to_string(k) + " of " + to_display(t) + " on " + describe(c) + " vs " + describe(d);
    return "";
  });
}

/// A key that ensures an `a` far from the edges leaves one in every large enough configuration.
inline PropertyResult check_ensures_contains(const PropertyOptions& o)
{
  Generator g(o.seed + 10);
  return props_detail::run_cases("ensured letter present", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, all_ops);
    const Letter a = o.alphabet[g.below(o.alphabet.size())];
    if (!ensures_far_from_edges(t, a, o.alphabet))
      return std::nullopt;
    const Configuration c{g.word(o.alphabet, t.size() + g.upto(3)), g.word(o.alphabet, t.size() + g.upto(3))};
    return kbd::apply(c, t).word().find(a) != Word::npos ? "" : to_display(t) + " on " + describe(c);
  });
}

// ---------------------------------------------------------------------------
// Keys without ►

/// ⟨u|v⟩·t = ⟨u'|v'·v⟩.
inline PropertyResult check_right_suffix(const PropertyOptions& o)
{
  Generator g(o.seed + 11);
  return props_detail::run_cases("►-free suffix preservation", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, right_free_ops);
    const Configuration c = g.config(o.alphabet, o.max_side);
    return props_detail::is_suffix(c.right, kbd::apply(c, t).right) ? "" : to_display(t) + " on " + describe(c);
  });
}

/**
 * With ⟨x|y⟩ = ⟨ε|ε⟩·τ for a sequence τ of ►-free keys, ⟨u|v⟩·τ = ⟨u'x | v'v⟩
 * with u' a prefix of u and y a subword of v'.
 */
inline PropertyResult check_right_free_decomposition(const PropertyOptions& o)
{
  using namespace props_detail;
  Generator g(o.seed + 12);
  return run_cases("►-free fundamental decomposition", o.cases, [&]() -> props_detail::CaseOutcome {
    std::vector<Key> keys(1 + g.below(3));
    for (auto& t : keys)
      t = g.key(o.alphabet, o.max_key_len, right_free_ops);
    const Configuration c = g.config(o.alphabet, o.max_side);
    Configuration from_empty, from_c = c;
    for (const auto& t : keys) {
      from_empty = kbd::apply(from_empty, t);
      from_c = kbd::apply(from_c, t);
    }
    const Word& x = from_empty.left;
    const Word& y = from_empty.right;
    auto fail = [&] {
      std::string s;
      for (const auto& t : keys)
        s += to_display(t) + " ";
      return s + "on " + describe(c);
    };
    if (!is_suffix(x, from_c.left) || !is_suffix(c.right, from_c.right))
      return fail();
    const Word u_n = drop_back(from_c.left, x.size());
    const Word v_n = drop_back(from_c.right, c.right.size());
    return is_prefix(u_n, c.left) && is_subword(y, v_n) ? "" : fail();
  });
}

/// If a ►-free key writes `a` from one configuration, it does from every other.
inline PropertyResult check_position_independence(const PropertyOptions& o, std::size_t others = 50)
{
  Generator g(o.seed + 13);
  return props_detail::run_cases("►-free position independence", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, right_free_ops);
    const Letter a = o.alphabet[g.below(o.alphabet.size())];
    const Configuration c = g.config(o.alphabet, o.max_side);
    if (writes_letter(t, c, a).empty())
      return std::nullopt;
    for (std::size_t i = 0; i < others; ++i) {
      const Configuration d = g.config(o.alphabet, o.max_side);
      if (writes_letter(t, d, a).empty())
        return to_display(t) + " writes " + utf8_encode(a) + " on " + describe(c) + " but not on " + describe(d);
    }
    return "";
  });
}

// ---------------------------------------------------------------------------
// Keys without ←

/// Along executions of ←-free keys each word is a subword of the next.
inline PropertyResult check_subword_growth(const PropertyOptions& o)
{
  Generator g(o.seed + 14);
  return props_detail::run_cases("←-free subword growth", o.cases, [&]() -> props_detail::CaseOutcome {
    Configuration c;
    for (std::size_t i = 0, n = 1 + g.below(5); i < n; ++i) {
      const Key t = g.key(o.alphabet, o.max_key_len, backspace_free_ops);
      const Configuration next = kbd::apply(c, t);
      if (!is_subword(c.word(), next.word()))
        return to_display(t) + " on " + describe(c);
      c = next;
    }
    return "";
  });
}

/// |⟨u|v⟩·t|_a = |uv|_a + |t|_a for ←-free t.
inline PropertyResult check_letter_additivity(const PropertyOptions& o)
{
  Generator g(o.seed + 15);
  return props_detail::run_cases("←-free letter additivity", o.cases, [&]() -> props_detail::CaseOutcome {
    const Key t = g.key(o.alphabet, o.max_key_len, backspace_free_ops);
    const Configuration c = g.config(o.alphabet, o.max_side);
    const Word before = c.word(), after = kbd::apply(c, t).word();
    for (Letter a : o.alphabet) {
      const auto n0 = std::count(before.begin(), before.end(), a);
      const auto n1 = std::count(after.begin(), after.end(), a);
      if (static_cast<std::size_t>(n1 - n0) != count_letter(t, a))
        return to_display(t) + " on " + describe(c);
    }
    return "";
  });
}

/**
 * Consecutive word lengths of a language differ by at most 3‖K‖∞. Checked on
 * complete enumerations of small random ←-free keyboards.
 */
inline PropertyResult check_growth_gap(const PropertyOptions& o, std::size_t max_len = 8)
{
  Generator g(o.seed + 16);
  return props_detail::run_cases("growth gap", o.cases, [&]() -> props_detail::CaseOutcome {
    std::vector<Key> keys(1 + g.below(3));
    for (auto& t : keys)
      t = g.key(o.alphabet, 3, backspace_free_ops);
    std::vector<Key> finals;
    if (g.below(2) == 0)
      finals.push_back(g.key(o.alphabet, 3, backspace_free_ops));
    const Keyboard k = finals.empty() ? Keyboard::automatic(o.alphabet, keys) : Keyboard(o.alphabet, keys, finals);
    const auto sample = enumerate(k, max_len, max_len);
    if (!sample.complete)
      return "enumeration not complete";
    std::vector<std::size_t> lengths;
    for (const auto& w : sample.words)
      if (lengths.empty() || lengths.back() != w.size())
        lengths.push_back(w.size());
    for (std::size_t i = 1; i < lengths.size(); ++i)
      if (lengths[i] - lengths[i - 1] > 3 * k.norm_inf())
        return "gap " + std::to_string(lengths[i] - lengths[i - 1]) + " in " + std::to_string(keys.size()) + " keys";
    return "";
  });
}

inline std::vector<PropertyResult> run_property_suite(const PropertyOptions& o)
{
  return {check_locality(o),
          check_length_bounds(o),
          check_left_edge_length(o),
          check_monotonicity(o),
          check_effective_extension(o),
          check_effective_same_size(o),
          check_effective_agrees_standard(o),
          check_effective_far_from_edges(o),
          check_tracking_coherence(o),
          check_blind_key(o),
          check_ensures_contains(o),
          check_right_suffix(o),
          check_right_free_decomposition(o),
          check_position_independence(o),
          check_subword_growth(o),
          check_letter_additivity(o),
          check_growth_gap(o)};
}

} // namespace kbd

#endif // KBD_PROPERTIES_HPP
