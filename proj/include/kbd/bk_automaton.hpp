#ifndef KBD_BK_AUTOMATON_HPP
#define KBD_BK_AUTOMATON_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "core.hpp"
#include "nfa.hpp"
#include "normalform.hpp"

/** \file
 * Regularity of backspace keyboards.
 *
 * Keys are taken in normal form ←^r w. An execution producing v is cut into
 * blocks: a key erases the s leftover letters of the previous block, writes a
 * piece of v, and leaves |x| extra letters, which a run of effective keys then
 * resizes for the next block. The NFA tracks the number of leftover letters,
 * bounded by ‖K‖∞.
 */
namespace kbd {

/// n · (←^r w) = max(0, n − r) + |w|.
inline std::size_t nat_action(std::size_t n, const NatKey& t)
{
  return (n > t.erase ? n - t.erase : 0) + t.write.size();
}

inline std::size_t norm_inf(const std::vector<NatKey>& keys)
{
  std::size_t n = 0;
  for (const auto& t : keys)
    n = std::max(n, t.erase + t.write.size());
  return n;
}

namespace bk_detail {

/// Reachability over [0, bound] with effective steps only (r ≤ s) staying within the bound.
inline bool bounded_reachable(const std::vector<NatKey>& keys, std::size_t bound, std::size_t x, std::size_t target)
{
  std::vector<char> seen(bound + 1, 0);
  std::vector<std::size_t> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    const std::size_t s = stack.back();
    stack.pop_back();
    if (s == target)
      return true;
    for (const auto& t : keys) {
      if (t.erase > s)
        continue;
      const std::size_t s2 = s - t.erase + t.write.size();
      if (s2 <= bound && !seen[s2]) {
        seen[s2] = 1;
        stack.push_back(s2);
      }
    }
  }
  return false;
}

} // namespace bk_detail

/**
 * Is there a key sequence τ (possibly empty) with x →eff τ x'?
 * Both values must lie in [0, ‖K‖∞].
 *
 * (a) every negative key writes more than x': positive keys only, so the
 *     bounded graph decides;
 * (b) every positive key erases more than x: symmetric;
 * (c) a negative key writing at most x' and a positive key erasing at most x
 *     exist: reachable iff gcd of the balances divides x' − x;
 * (d) otherwise unreachable.
 */
inline bool effective_reachable(const std::vector<NatKey>& keys, std::size_t x, std::size_t x2)
{
  const std::size_t bound = norm_inf(keys);
  if (x > bound || x2 > bound)
    throw std::out_of_range("effective_reachable: values must lie in [0, ‖K‖∞]");
  if (x == x2)
    return true;

  const bool no_usable_negative = std::all_of(keys.begin(), keys.end(), [x2](const NatKey& t) {
    return !(t.balance() < 0) || t.write.size() > x2;
  });
  if (no_usable_negative)
    return bk_detail::bounded_reachable(keys, bound, x, x2);

  const bool no_usable_positive = std::all_of(keys.begin(), keys.end(), [x](const NatKey& t) {
    return !(t.balance() > 0) || t.erase > x;
  });
  if (no_usable_positive)
    return bk_detail::bounded_reachable(keys, bound, x, x2);

  long p = 0;
  for (const auto& t : keys)
    p = std::gcd(p, t.balance());
  const long diff = static_cast<long>(x2) - static_cast<long>(x);
  // Here both a usable negative and a usable positive key exist, so p > 0.
  return p != 0 && diff % p == 0;
}

namespace bk_detail {

struct NatAutomaton {
  Nfa nfa;
  Nfa::State init = 0;
  std::vector<Nfa::State> level; // level[n] is the state for n leftover letters
};

/// Init and numeric states of the block automaton for transient keys in normal form.
inline NatAutomaton build_nat_automaton(const std::vector<NatKey>& keys)
{
  NatAutomaton a;
  const std::size_t bound = norm_inf(keys);
  a.init = a.nfa.add_state("Init");
  a.nfa.set_initial(a.init);
  for (std::size_t n = 0; n <= bound; ++n)
    a.level.push_back(a.nfa.add_state(std::to_string(n)));
  a.nfa.set_accepting(a.level[0]);

  std::set<std::tuple<Nfa::State, Word, Nfa::State>> word_edges;
  for (const auto& t : keys) {
    for (std::size_t i = 0; i <= t.write.size(); ++i) {
      const Word v = t.write.substr(0, i);
      const std::size_t rest = t.write.size() - i;
      word_edges.emplace(a.init, v, a.level[rest]);
      word_edges.emplace(a.level[t.erase], v, a.level[rest]);
    }
  }
  for (const auto& [from, v, to] : word_edges)
    a.nfa.add_word_path(from, v, to);

  for (std::size_t n1 = 0; n1 <= bound; ++n1)
    for (std::size_t n2 = 0; n2 <= bound; ++n2)
      if (n1 != n2 && effective_reachable(keys, n1, n2))
        a.nfa.add_eps(a.level[n1], a.level[n2]);
  return a;
}

inline void require_no_arrows(const Keyboard& k)
{
  if (k.uses(OpKind::Left) || k.uses(OpKind::Right))
    throw KeyboardError("keyboard uses arrows; expected a keyboard of MK, EK, BK or BEK");
}

} // namespace bk_detail

/// NFA for an automatic keyboard without arrows (MK or BK).
inline Nfa build_nfa_bk(const Keyboard& k)
{
  bk_detail::require_no_arrows(k);
  if (!k.same_key_sets())
    throw KeyboardError("keyboard has distinct final keys; expected a keyboard of MK or BK");
  return bk_detail::build_nat_automaton(normalize_keys(k.transient())).nfa;
}

/**
 * States from which an accepting state is reachable reading exactly `k`
 * letters (ε-edges allowed anywhere). These are the accepting states of the
 * right quotient by A^k.
 */
inline Nfa::StateSet quotient_states(const Nfa& a, std::size_t k)
{
  std::vector<std::vector<Nfa::State>> eps_in(a.size());
  std::vector<std::vector<Nfa::State>> letter_in(a.size());
  for (Nfa::State s = 0; s < a.size(); ++s) {
    for (Nfa::State t : a.eps_out(s))
      eps_in[t].push_back(s);
    for (const auto& [l, t] : a.letter_out(s))
      letter_in[t].push_back(s);
  }
  auto back_closure = [&](std::vector<char> mark) {
    std::vector<Nfa::State> stack;
    for (Nfa::State s = 0; s < mark.size(); ++s)
      if (mark[s])
        stack.push_back(s);
    while (!stack.empty()) {
      Nfa::State s = stack.back();
      stack.pop_back();
      for (Nfa::State p : eps_in[s])
        if (!mark[p]) {
          mark[p] = 1;
          stack.push_back(p);
        }
    }
    return mark;
  };
  std::vector<char> cur(a.size(), 0);
  for (Nfa::State s = 0; s < a.size(); ++s)
    cur[s] = a.is_accepting(s) ? 1 : 0;
  cur = back_closure(std::move(cur));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<char> prev(a.size(), 0);
    for (Nfa::State s = 0; s < a.size(); ++s)
      if (cur[s])
        for (Nfa::State p : letter_in[s])
          prev[p] = 1;
    cur = back_closure(std::move(prev));
  }
  Nfa::StateSet out;
  for (Nfa::State s = 0; s < a.size(); ++s)
    if (cur[s])
      out.push_back(s);
  return out;
}

/**
 * NFA for a keyboard (T, F) without arrows. With A_T the automaton of T, each
 * final key ←^k u contributes (L(A_T) / A^k)·u + u.
 */
inline Nfa build_nfa_bek(const Keyboard& k)
{
  bk_detail::require_no_arrows(k);
  auto at = bk_detail::build_nat_automaton(normalize_keys(k.transient()));
  Nfa& nfa = at.nfa;
  const auto finals = normalize_keys(k.final_keys());

  std::vector<Nfa::StateSet> quotients;
  for (const auto& f : finals)
    quotients.push_back(quotient_states(nfa, f.erase));
  for (Nfa::State s = 0; s < nfa.size(); ++s)
    nfa.set_accepting(s, false);

  const Nfa::State fin = nfa.add_state("Fin");
  nfa.set_accepting(fin);
  const Nfa::State start = nfa.add_state("Start");
  nfa.set_initial(start);
  std::set<Word> direct;
  for (std::size_t i = 0; i < finals.size(); ++i) {
    const Nfa::State hub = nfa.add_state("F" + std::to_string(i));
    for (Nfa::State q : quotients[i])
      nfa.add_eps(q, hub);
    nfa.add_word_path(hub, finals[i].write, fin);
    if (direct.insert(finals[i].write).second)
      nfa.add_word_path(start, finals[i].write, fin);
  }
  return nfa;
}

/**
 * Alternative construction reading final keys straight into Fin: from
 * numeric state i for each final key erasing exactly i letters, and from Init
 * for every final key. A final key erasing into earlier blocks is not
 * modelled, so this can miss words; kept only for comparison with
 * build_nfa_bek.
 */
inline Nfa build_nfa_bek_direct(const Keyboard& k)
{
  bk_detail::require_no_arrows(k);
  auto at = bk_detail::build_nat_automaton(normalize_keys(k.transient()));
  Nfa& nfa = at.nfa;
  nfa.set_accepting(at.level[0], false);
  const Nfa::State fin = nfa.add_state("Fin");
  nfa.set_accepting(fin);
  std::set<std::pair<Nfa::State, Word>> edges;
  for (const auto& f : normalize_keys(k.final_keys())) {
    if (f.erase < at.level.size())
      edges.emplace(at.level[f.erase], f.write);
    edges.emplace(at.init, f.write);
  }
  for (const auto& [from, w] : edges)
    nfa.add_word_path(from, w, fin);
  return nfa;
}

/// NFA of any keyboard without arrows; automatic keyboards use the block automaton directly.
inline Nfa build_nfa(const Keyboard& k)
{
  return k.same_key_sets() ? build_nfa_bk(k) : build_nfa_bek(k);
}

/**
 * Universality of an automatic keyboard without arrows: the language is A*
 * iff it contains every word of length at most ‖K‖∞ + 1. Returns the
 * shortlex-first missing word, or nullopt when universal.
 */
inline std::optional<Word> bk_universal(const Keyboard& k)
{
  const Nfa nfa = build_nfa_bk(k);
  const std::size_t bound = k.norm_inf() + 1;
  std::vector<std::pair<Word, Nfa::StateSet>> layer{{Word{}, nfa.closure(nfa.initial_states())}};
  for (std::size_t len = 0; len <= bound; ++len) {
    std::vector<std::pair<Word, Nfa::StateSet>> nxt;
    for (auto& [w, set] : layer) {
      if (!nfa.any_accepting(set))
        return w;
      if (len == bound)
        continue;
      for (Letter a : k.alphabet()) {
        Word w2 = w;
        w2.push_back(a);
        nxt.emplace_back(std::move(w2), nfa.next(set, a));
      }
    }
    layer = std::move(nxt);
  }
  return std::nullopt;
}

} // namespace kbd

#endif // KBD_BK_AUTOMATON_HPP
