#ifndef KBD_BLEK_AUTOMATON_HPP
#define KBD_BLEK_AUTOMATON_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "core.hpp"
#include "pda.hpp"

/** \file
 * Keyboards without ► are context-free. The stack of the PDA holds the left
 * part of the configuration, top = letter just left of the cursor. The right
 * part only grows by ◄, so its letters are read as they move and the left
 * part is read while draining the stack at Fin: the PDA reads the mirror of
 * the produced word.
 */
namespace kbd {

struct BlekPda {
  Pda pda;
  /// For each transition: the key it completes (loop back to ε, or entry into Fin).
  std::vector<std::optional<Key>> completes;
  std::size_t fin = 0;
};

inline BlekPda build_blek_pda(const Keyboard& k)
{
  if (k.uses(OpKind::Right))
    throw KeyboardError("keyboard uses the right arrow; the pushdown construction needs a ►-free keyboard");

  BlekPda out;
  Pda& pda = out.pda;
  pda.alphabet = k.alphabet();

  std::map<Key, std::size_t> state_of;
  auto state = [&](const Key& prefix) {
    auto [it, fresh] = state_of.emplace(prefix, 0);
    if (fresh)
      it->second = pda.add_state(to_display(prefix));
    return it->second;
  };
  pda.initial = state(Key{});
  std::vector<Key> all = k.transient();
  all.insert(all.end(), k.final_keys().begin(), k.final_keys().end());
  for (const auto& t : all)
    for (std::size_t i = 0; i <= t.size(); ++i)
      state(Key(t.begin(), t.begin() + static_cast<long>(i)));
  out.fin = pda.add_state("Fin");
  pda.accepting = {out.fin};

  auto add = [&](PdaTransition tr, std::optional<Key> completes = std::nullopt) {
    pda.transitions.push_back(tr);
    out.completes.push_back(std::move(completes));
  };
  // Prefix steps: each prefix state is visited once even if shared by several keys.
  for (const auto& [prefix, from] : state_of) {
    std::vector<AtomicOp> nexts;
    for (const auto& t : all)
      if (t.size() > prefix.size() && std::equal(prefix.begin(), prefix.end(), t.begin()))
        nexts.push_back(t[prefix.size()]);
    std::sort(nexts.begin(), nexts.end());
    nexts.erase(std::unique(nexts.begin(), nexts.end()), nexts.end());
    for (const auto& op : nexts) {
      Key longer = prefix;
      longer.push_back(op);
      const std::size_t to = state_of.at(longer);
      switch (op.kind) {
      case OpKind::Write:
        add({from, std::nullopt, std::nullopt, op.symbol, to});
        break;
      case OpKind::Left:
        for (Letter a : pda.alphabet)
          add({from, a, a, std::nullopt, to});
        add({from, std::nullopt, pda_bottom, pda_bottom, to});
        break;
      case OpKind::Backspace:
        for (Letter a : pda.alphabet)
          add({from, std::nullopt, a, std::nullopt, to});
        add({from, std::nullopt, pda_bottom, pda_bottom, to});
        break;
      case OpKind::Right:
        break;
      }
    }
  }
  for (const auto& t : k.transient())
    add({state_of.at(t), std::nullopt, std::nullopt, std::nullopt, pda.initial}, t);
  for (const auto& f : k.final_keys())
    add({state_of.at(f), std::nullopt, std::nullopt, std::nullopt, out.fin}, f);
  for (Letter a : pda.alphabet)
    add({out.fin, a, a, std::nullopt, out.fin});
  add({out.fin, std::nullopt, pda_bottom, std::nullopt, out.fin});
  return out;
}

/// PDA recognizing the mirror of L(K); states are the prefixes of keys plus Fin.
inline Pda build_pda_blek(const Keyboard& k) { return build_blek_pda(k).pda; }

/// Membership for ►-free keyboards; the grammar is built once and reused across words.
class BlekRecognizer {
public:
  explicit BlekRecognizer(const Keyboard& k) : blek_(build_blek_pda(k)), grammar_(build_triple_grammar(blek_.pda))
  {
  }

  const BlekPda& automaton() const { return blek_; }
  const TripleGrammar& grammar() const { return grammar_; }

  bool member(const Word& w) const { return witness(w).has_value(); }

  /// An accepting execution producing `w`, read off the PDA run on the mirror of `w`.
  std::optional<std::vector<Key>> witness(const Word& w) const
  {
    const Word mirrored(w.rbegin(), w.rend());
    auto run = pda_accepting_run(grammar_, mirrored);
    if (!run)
      return std::nullopt;
    std::vector<Key> keys;
    for (std::size_t t : *run)
      if (blek_.completes[t])
        keys.push_back(*blek_.completes[t]);
    return keys;
  }

private:
  BlekPda blek_;
  TripleGrammar grammar_;
};

inline bool blek_member(const Keyboard& k, const Word& w) { return BlekRecognizer(k).member(w); }

} // namespace kbd

#endif // KBD_BLEK_AUTOMATON_HPP
