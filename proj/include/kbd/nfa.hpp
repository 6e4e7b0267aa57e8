#ifndef KBD_NFA_HPP
#define KBD_NFA_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"

namespace kbd {

/** One step of an NFA run; `letter` is empty for ε-edges. */
struct NfaStep {
  std::size_t from;
  std::optional<Letter> letter;
  std::size_t to;
};

using NfaPath = std::vector<NfaStep>;

/**
 * Letter-labelled NFA with ε-edges. States are dense indices carrying an
 * optional display name; ε-closures are computed on the fly.
 */
class Nfa {
public:
  using State = std::size_t;
  using StateSet = std::vector<State>; // sorted, unique

  struct Edge {
    State from;
    Letter letter;
    State to;
  };

  State add_state(std::string name = {})
  {
    if (name.empty())
      name = "q" + std::to_string(names_.size());
    names_.push_back(std::move(name));
    out_letter_.emplace_back();
    out_eps_.emplace_back();
    initial_.push_back(false);
    accepting_.push_back(false);
    return names_.size() - 1;
  }

  void set_initial(State s, bool v = true) { initial_.at(s) = v; }
  void set_accepting(State s, bool v = true) { accepting_.at(s) = v; }

  void add_edge(State from, Letter a, State to)
  {
    check(from), check(to);
    for (const auto& [b, t] : out_letter_[from])
      if (b == a && t == to)
        return;
    out_letter_[from].emplace_back(a, to);
  }

  void add_eps(State from, State to)
  {
    check(from), check(to);
    auto& v = out_eps_[from];
    if (std::find(v.begin(), v.end(), to) == v.end())
      v.push_back(to);
  }

  /// Reads `w` from `from` to `to` through fresh intermediate states (an ε-edge when w is empty).
  void add_word_path(State from, const Word& w, State to)
  {
    if (w.empty()) {
      add_eps(from, to);
      return;
    }
    State cur = from;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      State next = add_state();
      add_edge(cur, w[i], next);
      cur = next;
    }
    add_edge(cur, w.back(), to);
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(State s) const { return names_.at(s); }
  bool is_initial(State s) const { return initial_.at(s); }
  bool is_accepting(State s) const { return accepting_.at(s); }
  const std::vector<std::pair<Letter, State>>& letter_out(State s) const { return out_letter_.at(s); }
  const std::vector<State>& eps_out(State s) const { return out_eps_.at(s); }

  StateSet initial_states() const { return where(initial_); }
  StateSet accepting_states() const { return where(accepting_); }

  std::vector<Edge> letter_edges() const
  {
    std::vector<Edge> out;
    for (State s = 0; s < size(); ++s)
      for (const auto& [a, t] : out_letter_[s])
        out.push_back({s, a, t});
    return out;
  }

  std::vector<std::pair<State, State>> eps_edges() const
  {
    std::vector<std::pair<State, State>> out;
    for (State s = 0; s < size(); ++s)
      for (State t : out_eps_[s])
        out.emplace_back(s, t);
    return out;
  }

  StateSet closure(const StateSet& from) const
  {
    std::vector<char> seen(size(), 0);
    std::vector<State> stack(from.begin(), from.end());
    for (State s : from)
      seen[s] = 1;
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (State t : out_eps_[s])
        if (!seen[t]) {
          seen[t] = 1;
          stack.push_back(t);
        }
    }
    return where(seen);
  }

  /// Letter step followed by ε-closure.
  StateSet next(const StateSet& from, Letter a) const
  {
    std::vector<char> hit(size(), 0);
    for (State s : from)
      for (const auto& [b, t] : out_letter_[s])
        if (b == a)
          hit[t] = 1;
    return closure(where(hit));
  }

  bool any_accepting(const StateSet& set) const
  {
    return std::any_of(set.begin(), set.end(), [this](State s) { return accepting_[s] != 0; });
  }

  bool member(const Word& w) const
  {
    StateSet cur = closure(initial_states());
    for (Letter a : w) {
      if (cur.empty())
        return false;
      cur = next(cur, a);
    }
    return any_accepting(cur);
  }

  /// An accepting run on `w`, found by breadth-first search over (position, state).
  std::optional<NfaPath> accepting_path(const Word& w) const
  {
    const std::size_t n = w.size();
    auto id = [this](std::size_t pos, State s) { return pos * size() + s; };
    std::vector<long> parent((n + 1) * size(), -2);
    std::deque<std::pair<std::size_t, State>> queue;
    for (State s : initial_states()) {
      parent[id(0, s)] = -1;
      queue.emplace_back(0, s);
    }
    while (!queue.empty()) {
      auto [pos, s] = queue.front();
      queue.pop_front();
      if (pos == n && accepting_[s]) {
        NfaPath path;
        std::size_t cur = id(pos, s);
        while (parent[cur] >= 0) {
          const auto prev = static_cast<std::size_t>(parent[cur]);
          const std::size_t ppos = prev / size(), ps = prev % size();
          const std::size_t cpos = cur / size(), cs = cur % size();
          path.push_back({ps, cpos == ppos ? std::nullopt : std::optional<Letter>(w[ppos]), cs});
          cur = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      for (State t : out_eps_[s])
        if (parent[id(pos, t)] == -2) {
          parent[id(pos, t)] = static_cast<long>(id(pos, s));
          queue.emplace_back(pos, t);
        }
      if (pos < n)
        for (const auto& [a, t] : out_letter_[s])
          if (a == w[pos] && parent[id(pos + 1, t)] == -2) {
            parent[id(pos + 1, t)] = static_cast<long>(id(pos, s));
            queue.emplace_back(pos + 1, t);
          }
    }
    return std::nullopt;
  }

  /// Checks that `path` is a run of this NFA from an initial to an accepting state reading `w`.
  bool validates(const NfaPath& path, const Word& w) const
  {
    if (path.empty()) {
      const StateSet init = initial_states();
      return w.empty() && any_accepting(init);
    }
    if (!initial_[path.front().from] || !accepting_[path.back().to])
      return false;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const auto& st = path[i];
      if (i > 0 && path[i - 1].to != st.from)
        return false;
      if (!st.letter) {
        const auto& v = out_eps_[st.from];
        if (std::find(v.begin(), v.end(), st.to) == v.end())
          return false;
      } else {
        if (pos >= w.size() || w[pos] != *st.letter)
          return false;
        const auto& v = out_letter_[st.from];
        if (std::find(v.begin(), v.end(), std::make_pair(*st.letter, st.to)) == v.end())
          return false;
        ++pos;
      }
    }
    return pos == w.size();
  }

  /**
   * Shortest word over `alphabet` rejected by the automaton, or nullopt when
   * it accepts every word. Breadth-first over determinized subsets.
   */
  std::optional<Word> universality_counterexample(const std::vector<Letter>& alphabet) const
  {
    std::map<StateSet, Word> seen;
    std::deque<StateSet> queue;
    StateSet start = closure(initial_states());
    seen.emplace(start, Word{});
    queue.push_back(start);
    while (!queue.empty()) {
      StateSet cur = std::move(queue.front());
      queue.pop_front();
      const Word w = seen.at(cur);
      if (!any_accepting(cur))
        return w;
      for (Letter a : alphabet) {
        StateSet nxt = next(cur, a);
        if (!seen.contains(nxt)) {
          Word w2 = w;
          w2.push_back(a);
          seen.emplace(nxt, std::move(w2));
          queue.push_back(std::move(nxt));
        }
      }
    }
    return std::nullopt;
  }

  /// All accepted words of length ≤ max_len over `alphabet` (small bounds only).
  std::set<Word> words_up_to(const std::vector<Letter>& alphabet, std::size_t max_len) const
  {
    std::set<Word> out;
    std::vector<std::pair<Word, StateSet>> layer{{Word{}, closure(initial_states())}};
    for (std::size_t len = 0; len <= max_len; ++len) {
      std::vector<std::pair<Word, StateSet>> nxt;
      for (auto& [w, set] : layer) {
        if (set.empty())
          continue;
        if (any_accepting(set))
          out.insert(w);
        if (len == max_len)
          continue;
        for (Letter a : alphabet) {
          Word w2 = w;
          w2.push_back(a);
          nxt.emplace_back(std::move(w2), next(set, a));
        }
      }
      layer = std::move(nxt);
    }
    return out;
  }

private:
  void check(State s) const
  {
    if (s >= size())
      throw std::out_of_range("NFA state out of range");
  }

  static StateSet where(const std::vector<char>& mask)
  {
    StateSet out;
    for (State s = 0; s < mask.size(); ++s)
      if (mask[s])
        out.push_back(s);
    return out;
  }

  std::vector<std::string> names_;
  std::vector<std::vector<std::pair<Letter, State>>> out_letter_;
  std::vector<std::vector<State>> out_eps_;
  std::vector<char> initial_;
  std::vector<char> accepting_;
};

} // namespace kbd

#endif // KBD_NFA_HPP
