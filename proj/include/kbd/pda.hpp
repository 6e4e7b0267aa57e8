#ifndef KBD_PDA_HPP
#define KBD_PDA_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "core.hpp"

/** \file
 * Pushdown automata accepting on a final state with an empty stack, and a
 * polynomial membership test through the triple grammar [p, X, q].
 */
namespace kbd {

using StackSymbol = char32_t;

/// Bottom-of-stack marker; outside the Unicode range, so never a letter.
inline constexpr StackSymbol pda_bottom = 0x110000;

struct PdaTransition {
  std::size_t from = 0;
  std::optional<Letter> read;
  std::optional<StackSymbol> pop;
  std::optional<StackSymbol> push;
  std::size_t to = 0;
};

/// Initial stack is [⊥]; a word is accepted when the run ends in an accepting state with an empty stack.
struct Pda {
  std::vector<std::string> states;
  std::vector<Letter> alphabet;
  std::size_t initial = 0;
  std::vector<std::size_t> accepting;
  std::vector<PdaTransition> transitions;

  std::size_t add_state(std::string name)
  {
    states.push_back(std::move(name));
    return states.size() - 1;
  }
};

/**
 * Context-free grammar over triples [p, X, q]: the PDA can go from p with X
 * on top to q having net-popped X. Transitions are first normalized to pop
 * exactly one symbol; a transition that pushes Y then Z (Z on top) yields
 * [p, X, r] → x [q, Z, s] [s, Y, r].
 */
struct TripleGrammar {
  struct Rule {
    std::size_t lhs = 0;
    std::optional<Letter> terminal;
    std::vector<std::size_t> rhs; // 0, 1 or 2 nonterminals
    std::size_t transition = 0;   // originating PDA transition
  };

  std::size_t num_states = 0;
  std::vector<StackSymbol> stack_symbols; // index 0 is ⊥
  std::vector<std::size_t> start;         // nonterminals [q0, ⊥, f], f accepting
  std::vector<Rule> rules;

  std::size_t nonterminal(std::size_t p, std::size_t x, std::size_t q) const
  {
    return (p * stack_symbols.size() + x) * num_states + q;
  }
  std::size_t num_nonterminals() const { return num_states * stack_symbols.size() * num_states; }
};

namespace pda_detail {

struct NormalTransition {
  std::size_t from;
  std::optional<Letter> read;
  std::size_t pop;               // stack symbol index
  std::vector<std::size_t> push; // bottom first
  std::size_t to;
  std::size_t origin;
};

inline std::vector<NormalTransition> normalize(const Pda& pda, const std::map<StackSymbol, std::size_t>& sym)
{
  std::vector<NormalTransition> out;
  for (std::size_t i = 0; i < pda.transitions.size(); ++i) {
    const auto& t = pda.transitions[i];
    if (t.pop) {
      std::vector<std::size_t> push;
      if (t.push)
        push.push_back(sym.at(*t.push));
      out.push_back({t.from, t.read, sym.at(*t.pop), std::move(push), t.to, i});
    } else {
      for (std::size_t x = 0; x < sym.size(); ++x) {
        std::vector<std::size_t> push{x};
        if (t.push)
          push.push_back(sym.at(*t.push));
        out.push_back({t.from, t.read, x, std::move(push), t.to, i});
      }
    }
  }
  return out;
}

/// Keeps only rules whose nonterminals are all productive and reachable from a start symbol.
inline void prune(TripleGrammar& g)
{
  const std::size_t n = g.num_nonterminals();
  std::vector<char> productive(n, 0);
  std::vector<std::size_t> need(g.rules.size());
  std::vector<std::vector<std::size_t>> occurs(n);
  std::vector<std::size_t> work;
  for (std::size_t r = 0; r < g.rules.size(); ++r) {
    need[r] = g.rules[r].rhs.size();
    for (std::size_t b : g.rules[r].rhs)
      occurs[b].push_back(r);
    if (need[r] == 0 && !productive[g.rules[r].lhs]) {
      productive[g.rules[r].lhs] = 1;
      work.push_back(g.rules[r].lhs);
    }
  }
  while (!work.empty()) {
    const std::size_t b = work.back();
    work.pop_back();
    for (std::size_t r : occurs[b])
      if (--need[r] == 0 && !productive[g.rules[r].lhs]) {
        productive[g.rules[r].lhs] = 1;
        work.push_back(g.rules[r].lhs);
      }
  }

  std::vector<std::vector<std::size_t>> by_lhs(n);
  for (std::size_t r = 0; r < g.rules.size(); ++r)
    if (need[r] == 0)
      by_lhs[g.rules[r].lhs].push_back(r);
  std::vector<char> reachable(n, 0);
  for (std::size_t s : g.start)
    if (productive[s] && !reachable[s]) {
      reachable[s] = 1;
      work.push_back(s);
    }
  while (!work.empty()) {
    const std::size_t a = work.back();
    work.pop_back();
    for (std::size_t r : by_lhs[a])
      for (std::size_t b : g.rules[r].rhs)
        if (!reachable[b]) {
          reachable[b] = 1;
          work.push_back(b);
        }
  }

  std::vector<TripleGrammar::Rule> kept;
  for (std::size_t r = 0; r < g.rules.size(); ++r)
    if (need[r] == 0 && reachable[g.rules[r].lhs])
      kept.push_back(std::move(g.rules[r]));
  g.rules = std::move(kept);
  std::erase_if(g.start, [&](std::size_t s) { return !reachable[s]; });
}

} // namespace pda_detail

/// Triple grammar of `pda`, with dead nonterminals pruned.
inline TripleGrammar build_triple_grammar(const Pda& pda)
{
  TripleGrammar g;
  g.num_states = pda.states.size();
  std::map<StackSymbol, std::size_t> sym;
  g.stack_symbols.push_back(pda_bottom);
  sym[pda_bottom] = 0;
  for (Letter a : pda.alphabet)
    if (sym.emplace(a, g.stack_symbols.size()).second)
      g.stack_symbols.push_back(a);
  for (const auto& t : pda.transitions)
    for (auto s : {t.pop, t.push})
      if (s && sym.emplace(*s, g.stack_symbols.size()).second)
        g.stack_symbols.push_back(*s);

  const std::size_t q = g.num_states;
  for (const auto& t : pda_detail::normalize(pda, sym)) {
    switch (t.push.size()) {
    case 0:
      g.rules.push_back({g.nonterminal(t.from, t.pop, t.to), t.read, {}, t.origin});
      break;
    case 1:
      for (std::size_t r = 0; r < q; ++r)
        g.rules.push_back({g.nonterminal(t.from, t.pop, r), t.read, {g.nonterminal(t.to, t.push[0], r)}, t.origin});
      break;
    default:
      for (std::size_t s = 0; s < q; ++s)
        for (std::size_t r = 0; r < q; ++r)
          g.rules.push_back({g.nonterminal(t.from, t.pop, r),
                             t.read,
                             {g.nonterminal(t.to, t.push[1], s), g.nonterminal(s, t.push[0], r)},
                             t.origin});
      break;
    }
  }
  for (std::size_t f : pda.accepting)
    g.start.push_back(g.nonterminal(pda.initial, 0, f));
  pda_detail::prune(g);
  return g;
}

/**
 * Bottom-up deduction of the items (A, i, j), "A derives word[i, j)". Each
 * item keeps the rule and children that first produced it, so a derivation
 * can be read back.
 */
class TripleParser {
public:
  TripleParser(const TripleGrammar& g, const Word& word) : g_(g), w_(word)
  {
    first_of_.resize(g.num_nonterminals());
    second_of_.resize(g.num_nonterminals());
    unit_of_.resize(g.num_nonterminals());
    for (std::size_t r = 0; r < g.rules.size(); ++r) {
      const auto& rule = g.rules[r];
      if (rule.rhs.size() == 1)
        unit_of_[rule.rhs[0]].push_back(r);
      else if (rule.rhs.size() == 2) {
        first_of_[rule.rhs[0]].push_back(r);
        second_of_[rule.rhs[1]].push_back(r);
      }
    }
    for (std::size_t r = 0; r < g.rules.size(); ++r) {
      const auto& rule = g.rules[r];
      if (!rule.rhs.empty())
        continue;
      for (std::size_t i = 0; i <= w_.size(); ++i)
        if (auto j = shift(rule.terminal, i))
          add(rule.lhs, i, *j, r, {});
    }
    while (!agenda_.empty()) {
      const std::size_t id = agenda_.front();
      agenda_.pop_front();
      propagate(id);
    }
  }

  /// Index of a start item spanning the whole word, if any.
  std::optional<std::size_t> accepting_item() const
  {
    for (std::size_t s : g_.start)
      if (auto it = index_.find(pack(s, 0, w_.size())); it != index_.end())
        return it->second;
    return std::nullopt;
  }

  /// Originating PDA transitions along the derivation of `item`, in run order.
  std::vector<std::size_t> run_of(std::size_t item) const
  {
    std::vector<std::size_t> out;
    std::vector<std::size_t> stack{item};
    while (!stack.empty()) {
      const Item& it = items_[stack.back()];
      stack.pop_back();
      out.push_back(g_.rules[it.rule].transition);
      for (auto c = it.children.rbegin(); c != it.children.rend(); ++c)
        stack.push_back(*c);
    }
    return out;
  }

  std::size_t item_count() const { return items_.size(); }

private:
  struct Item {
    std::size_t nt, i, j, rule;
    std::vector<std::size_t> children;
  };

  std::uint64_t pack(std::size_t nt, std::size_t i, std::size_t j) const
  {
    const std::uint64_t n = w_.size() + 1;
    return (static_cast<std::uint64_t>(nt) * n + i) * n + j;
  }

  std::optional<std::size_t> shift(const std::optional<Letter>& x, std::size_t i) const
  {
    if (!x)
      return i;
    if (i < w_.size() && w_[i] == *x)
      return i + 1;
    return std::nullopt;
  }

  /// Start position of a rule whose terminal must end at `j`.
  std::optional<std::size_t> unshift(const std::optional<Letter>& x, std::size_t j) const
  {
    if (!x)
      return j;
    if (j > 0 && w_[j - 1] == *x)
      return j - 1;
    return std::nullopt;
  }

  void add(std::size_t nt, std::size_t i, std::size_t j, std::size_t rule, std::vector<std::size_t> children)
  {
    if (!index_.emplace(pack(nt, i, j), items_.size()).second)
      return;
    items_.push_back({nt, i, j, rule, std::move(children)});
    starts_[pack(nt, i, 0)].push_back(items_.size() - 1);
    ends_[pack(nt, 0, j)].push_back(items_.size() - 1);
    agenda_.push_back(items_.size() - 1);
  }

  void propagate(std::size_t id)
  {
    const std::size_t nt = items_[id].nt, i = items_[id].i, j = items_[id].j;
    for (std::size_t r : unit_of_[nt]) {
      const auto& rule = g_.rules[r];
      if (auto s = unshift(rule.terminal, i))
        add(rule.lhs, *s, j, r, {id});
    }
    // id as the first child: the second child starts at j.
    for (std::size_t r : first_of_[nt]) {
      const auto& rule = g_.rules[r];
      auto s = unshift(rule.terminal, i);
      if (!s)
        continue;
      auto it = starts_.find(pack(rule.rhs[1], j, 0));
      if (it == starts_.end())
        continue;
      const auto seconds = it->second; // add() may grow the list
      for (std::size_t other : seconds)
        add(rule.lhs, *s, items_[other].j, r, {id, other});
    }
    // id as the second child: the first child ends at i.
    for (std::size_t r : second_of_[nt]) {
      const auto& rule = g_.rules[r];
      auto it = ends_.find(pack(rule.rhs[0], 0, i));
      if (it == ends_.end())
        continue;
      const auto firsts = it->second;
      for (std::size_t other : firsts)
        if (auto s = unshift(rule.terminal, items_[other].i))
          add(rule.lhs, *s, j, r, {other, id});
    }
  }

  const TripleGrammar& g_;
  const Word& w_;
  std::vector<std::vector<std::size_t>> first_of_, second_of_, unit_of_;
  std::vector<Item> items_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> starts_, ends_;
  std::deque<std::size_t> agenda_;
};

/// Transitions of an accepting run on `word`, or nullopt.
inline std::optional<std::vector<std::size_t>> pda_accepting_run(const TripleGrammar& g, const Word& word)
{
  TripleParser parser(g, word);
  if (auto item = parser.accepting_item())
    return parser.run_of(*item);
  return std::nullopt;
}

inline bool pda_member(const Pda& pda, const Word& word)
{
  return pda_accepting_run(build_triple_grammar(pda), word).has_value();
}

/**
 * Replays a transition sequence from (initial, [⊥]) and checks it reads
 * `word` and ends accepting with an empty stack.
 */
inline bool pda_replays(const Pda& pda, const std::vector<std::size_t>& run, const Word& word)
{
  std::size_t state = pda.initial;
  std::vector<StackSymbol> stack{pda_bottom};
  std::size_t pos = 0;
  for (std::size_t idx : run) {
    if (idx >= pda.transitions.size())
      return false;
    const auto& t = pda.transitions[idx];
    if (t.from != state)
      return false;
    if (t.read) {
      if (pos >= word.size() || word[pos] != *t.read)
        return false;
      ++pos;
    }
    if (t.pop) {
      if (stack.empty() || stack.back() != *t.pop)
        return false;
      stack.pop_back();
    } else if (stack.empty()) {
      return false;
    }
    if (t.push)
      stack.push_back(*t.push);
    state = t.to;
  }
  const bool accepting = std::find(pda.accepting.begin(), pda.accepting.end(), state) != pda.accepting.end();
  return pos == word.size() && stack.empty() && accepting;
}

} // namespace kbd

#endif // KBD_PDA_HPP
