#ifndef KBD_EXPORT_HPP
#define KBD_EXPORT_HPP

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "nfa.hpp"
#include "pda.hpp"
#include "utf8.hpp"

namespace kbd {

inline nlohmann::json nfa_to_json(const Nfa& nfa)
{
  using nlohmann::json;
  json states = json::array(), initial = json::array(), accepting = json::array(), edges = json::array();
  for (Nfa::State s = 0; s < nfa.size(); ++s) {
    states.push_back(nfa.name(s));
    if (nfa.is_initial(s))
      initial.push_back(nfa.name(s));
    if (nfa.is_accepting(s))
      accepting.push_back(nfa.name(s));
  }
  for (const auto& e : nfa.letter_edges())
    edges.push_back({{"from", nfa.name(e.from)}, {"label", utf8_encode(e.letter)}, {"to", nfa.name(e.to)}});
  for (const auto& [from, to] : nfa.eps_edges())
    edges.push_back({{"from", nfa.name(from)}, {"label", nullptr}, {"to", nfa.name(to)}});
  return {{"states", states}, {"initial", initial}, {"accepting", accepting}, {"edges", edges}};
}

inline std::string nfa_to_dot(const Nfa& nfa)
{
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\')
        out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph nfa {\n  rankdir=LR;\n";
  for (Nfa::State s = 0; s < nfa.size(); ++s) {
    out << "  " << s << " [label=" << quote(nfa.name(s)) << ", shape=" << (nfa.is_accepting(s) ? "doublecircle" : "circle")
        << "];\n";
    if (nfa.is_initial(s))
      out << "  start" << s << " [shape=point];\n  start" << s << " -> " << s << ";\n";
  }
  for (const auto& e : nfa.letter_edges())
    out << "  " << e.from << " -> " << e.to << " [label=" << quote(utf8_encode(e.letter)) << "];\n";
  for (const auto& [from, to] : nfa.eps_edges())
    out << "  " << from << " -> " << to << " [label=\"eps\", style=dotted];\n";
  out << "}\n";
  return out.str();
}

inline std::string stack_symbol_text(StackSymbol s) { return s == pda_bottom ? "⊥" : utf8_encode(s); }

inline nlohmann::json pda_to_json(const Pda& pda)
{
  using nlohmann::json;
  json states = json::array(), accepting = json::array(), transitions = json::array();
  for (const auto& s : pda.states)
    states.push_back(s);
  for (auto f : pda.accepting)
    accepting.push_back(pda.states.at(f));
  auto opt = [](const auto& v, auto render) -> json { return v ? json(render(*v)) : json(nullptr); };
  for (const auto& t : pda.transitions)
    transitions.push_back({{"from", pda.states.at(t.from)},
                           {"read", opt(t.read, [](Letter a) { return utf8_encode(a); })},
                           {"pop", opt(t.pop, stack_symbol_text)},
                           {"push", opt(t.push, stack_symbol_text)},
                           {"to", pda.states.at(t.to)}});
  return {{"states", states},
          {"initial", pda.states.at(pda.initial)},
          {"accepting", accepting},
          {"bottom", "⊥"},
          {"transitions", transitions}};
}

} // namespace kbd

#endif // KBD_EXPORT_HPP
