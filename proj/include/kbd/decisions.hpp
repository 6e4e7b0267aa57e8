#ifndef KBD_DECISIONS_HPP
#define KBD_DECISIONS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bk_automaton.hpp"
#include "blek_automaton.hpp"
#include "core.hpp"
#include "eak.hpp"
#include "nfa.hpp"
#include "oracle.hpp"

/** \file
 * Class-dispatching membership and universality.
 */
namespace kbd {

enum class Verdict { Yes, No, Unknown };

inline const char* to_string(Verdict v)
{
  switch (v) {
  case Verdict::Yes: return "yes";
  case Verdict::No: return "no";
  case Verdict::Unknown: return "unknown";
  }
  return "?";
}

struct Decision {
  Verdict verdict = Verdict::Unknown;
  std::string procedure;
  std::string reason;                      ///< set for Unknown
  std::optional<std::vector<Key>> execution; ///< accepting execution for a Yes on membership
  std::optional<NfaPath> nfa_path;         ///< NFA run for a Yes decided by an automaton
  std::optional<Word> counterexample;      ///< missing word for a No on universality
};

namespace decisions_detail {

/// w ∈ T*·F for keyboards whose keys only write. Returns the key sequence.
inline std::optional<std::vector<Key>> split_member(const Keyboard& k, const Word& w)
{
  const std::size_t n = w.size();
  std::vector<long> from(n + 1, -1); // predecessor position, -1 unreachable
  std::vector<std::size_t> via(n + 1, 0);
  from[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (from[i] < 0)
      continue;
    for (std::size_t j = 0; j < k.transient().size(); ++j) {
      const Word u = written_word(k.transient()[j]);
      if (u.empty() || i + u.size() > n || from[i + u.size()] >= 0)
        continue;
      if (w.compare(i, u.size(), u) == 0) {
        from[i + u.size()] = static_cast<long>(i);
        via[i + u.size()] = j;
      }
    }
  }
  for (const auto& f : k.final_keys()) {
    const Word u = written_word(f);
    if (u.size() > n || from[n - u.size()] < 0 || w.compare(n - u.size(), u.size(), u) != 0)
      continue;
    std::vector<Key> keys{f};
    for (std::size_t pos = n - u.size(); pos != 0; pos = static_cast<std::size_t>(from[pos]))
      keys.push_back(k.transient()[via[pos]]);
    return std::vector<Key>(keys.rbegin(), keys.rend());
  }
  return std::nullopt;
}

} // namespace decisions_detail

inline Decision member(const Keyboard& k, const Word& w)
{
  Decision d;
  for (Letter a : w)
    if (!k.in_alphabet(a)) {
      d.verdict = Verdict::No;
      d.procedure = "alphabet check";
      return d;
    }
  const auto label = classify(k);
  auto set_execution = [&d](std::optional<std::vector<Key>> exec) {
    d.verdict = exec ? Verdict::Yes : Verdict::No;
    d.execution = std::move(exec);
  };

  if (label.name == "MK" || label.name == "EK") {
    d.procedure = "split dynamic programming";
    set_execution(decisions_detail::split_member(k, w));
  } else if (label.name == "BK" || label.name == "BEK") {
    d.procedure = label.name == "BK" ? "block NFA" : "block NFA with final quotients";
    const Nfa nfa = build_nfa(k);
    auto path = nfa.accepting_path(w);
    d.verdict = path ? Verdict::Yes : Verdict::No;
    d.nfa_path = std::move(path);
  } else if (label.right_free()) {
    d.procedure = "pushdown automaton on the mirror";
    set_execution(BlekRecognizer(k).witness(w));
  } else if (label.backspace_free()) {
    d.procedure = "subword-pruned search";
    set_execution(eak_member(k, w));
  } else {
    d.procedure = "bounded search";
    const std::size_t cap = default_cap(k, w.size());
    auto r = member_semidecide(k, w, cap);
    if (auto* found = std::get_if<FoundExecution>(&r)) {
      d.verdict = Verdict::Yes;
      d.execution = std::move(found->keys);
    } else {
      d.verdict = Verdict::Unknown;
      d.reason = "no execution with configurations of size ≤ " + std::to_string(cap) +
                 "; no decision procedure for class " + label.name;
    }
  }
  return d;
}

/// Re-validates the witness carried by a Yes membership decision.
inline bool witness_replays(const Keyboard& k, const Word& w, const Decision& d)
{
  if (d.verdict != Verdict::Yes)
    return false;
  if (d.execution)
    return replays_to(k, *d.execution, w);
  if (d.nfa_path)
    return build_nfa(k).validates(*d.nfa_path, w);
  return false;
}

inline Decision universal(const Keyboard& k)
{
  Decision d;
  const auto label = classify(k);
  auto from_counterexample = [&d](std::optional<Word> cx) {
    d.verdict = cx ? Verdict::No : Verdict::Yes;
    d.counterexample = std::move(cx);
  };
  if (label.name == "MK") {
    d.procedure = "A ∪ {ε} ⊆ K";
    std::optional<Word> cx;
    if (!k.is_transient(Key{}))
      cx = Word{};
    else
      for (Letter a : k.alphabet())
        if (!k.is_transient(Key{AtomicOp::write(a)})) {
          cx = Word(1, a);
          break;
        }
    from_counterexample(std::move(cx));
  } else if (label.name == "BK") {
    d.procedure = "all words up to ‖K‖∞ + 1";
    from_counterexample(bk_universal(k));
  } else if (label.name == "EK" || label.name == "BEK") {
    d.procedure = "NFA subset construction";
    from_counterexample(build_nfa(k).universality_counterexample(k.alphabet()));
  } else {
    d.verdict = Verdict::Unknown;
    d.procedure = "none";
    d.reason = "no universality procedure for class " + label.name;
  }
  return d;
}

} // namespace kbd

#endif // KBD_DECISIONS_HPP
