#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kbd/bk_automaton.hpp"
#include "kbd/blek_automaton.hpp"
#include "kbd/corpus.hpp"
#include "kbd/decisions.hpp"
#include "kbd/dsl.hpp"
#include "kbd/export.hpp"
#include "kbd/normalform.hpp"
#include "kbd/oracle.hpp"
#include "kbd/properties.hpp"
#include "kbd/transforms.hpp"

using nlohmann::json;
using namespace kbd;

namespace {

// Exit codes.
constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_unknown = 2;
constexpr int exit_input = 3;

struct Globals {
  std::uint64_t seed = 1;
  std::size_t max_len = 8;
  std::size_t cap = 0; // 0: per-command default
  bool json = false;
};

struct Source {
  std::string file;
  std::string entry;

  void add_to(CLI::App* cmd)
  {
    auto* f = cmd->add_option("keyboard", file, "keyboard file in the DSL format, - for stdin");
    auto* e = cmd->add_option("-e,--entry", entry, "use a corpus keyboard instead of a file");
    f->excludes(e);
  }

  Keyboard load() const
  {
    if (!entry.empty())
      return parse_keyboard(corpus_entry(entry).dsl);
    if (file.empty())
      throw KeyboardError("no keyboard given (pass a file or --entry NAME)");
    if (file == "-") {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      return parse_keyboard(ss.str());
    }
    std::ifstream in(file);
    if (!in)
      throw KeyboardError("cannot read " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_keyboard(ss.str());
  }
};

std::string show(const Word& w) { return w.empty() ? "ε" : utf8_encode(w); }

json strings_of(const std::vector<Word>& words)
{
  json out = json::array();
  for (const auto& w : words)
    out.push_back(utf8_encode(w));
  return out;
}

/// States visited by an NFA run; empty for the run of length zero.
std::vector<std::size_t> path_states(const NfaPath& path)
{
  std::vector<std::size_t> out;
  for (const auto& step : path) {
    if (out.empty())
      out.push_back(step.from);
    out.push_back(step.to);
  }
  return out;
}

json keys_json(const std::vector<Key>& keys)
{
  json out = json::array();
  for (const auto& t : keys)
    out.push_back(to_display(t));
  return out;
}

std::string keys_text(const std::vector<Key>& keys)
{
  std::string out;
  for (const auto& t : keys)
    out += (out.empty() ? "" : " · ") + (t.empty() ? std::string("ε") : to_display(t));
  return out;
}

int verdict_code(Verdict v)
{
  switch (v) {
  case Verdict::Yes: return exit_yes;
  case Verdict::No: return exit_no;
  case Verdict::Unknown: return exit_unknown;
  }
  return exit_unknown;
}

json decision_json(const Decision& d)
{
  json j{{"verdict", to_string(d.verdict)}, {"procedure", d.procedure}};
  if (!d.reason.empty())
    j["reason"] = d.reason;
  if (d.execution)
    j["execution"] = keys_json(*d.execution);
  if (d.nfa_path) {
    json steps = json::array();
    for (const auto& step : *d.nfa_path)
      steps.push_back({{"from", step.from}, {"letter", step.letter ? json(utf8_encode(*step.letter)) : json(nullptr)},
                       {"to", step.to}});
    j["nfa_path"] = steps;
  }
  if (d.counterexample)
    j["counterexample"] = utf8_encode(*d.counterexample);
  return j;
}

/// "a=b,b=a" → {a↦b, b↦a}.
LetterMap parse_map(const std::string& spec)
{
  LetterMap g;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw KeyboardError("morphism entry '" + item + "' is not of the form a=b");
    const Word from = utf8_decode(item.substr(0, eq)), to = utf8_decode(item.substr(eq + 1));
    if (from.size() != 1 || to.size() != 1)
      throw KeyboardError("morphism entry '" + item + "' must map one letter to one letter");
    if (!g.emplace(from[0], to[0]).second)
      throw KeyboardError("letter '" + utf8_encode(from[0]) + "' is mapped twice");
  }
  return g;
}

/// One pair per line: two whitespace-separated words; # starts a comment.
PcpInstance read_pcp(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw KeyboardError("cannot read " + path);
  PcpInstance inst;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::string u, v, extra;
    if (!(ls >> u))
      continue;
    if (!(ls >> v) || (ls >> extra))
      throw KeyboardError("PCP line '" + line + "' must hold exactly two words");
    inst.pairs.emplace_back(utf8_decode(u), utf8_decode(v));
  }
  inst.validate();
  return inst;
}

void write_output(const std::string& text, const std::string& path)
{
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw KeyboardError("cannot write " + path);
  out << text;
}

bool ends_with(const std::string& s, const std::string& suffix)
{
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Keyboard languages: enumeration, membership, automata and transformations"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may also follow the subcommand
  Globals g;
  app.add_option("--seed", g.seed, "seed for randomized commands");
  app.add_option("--max-len", g.max_len, "maximal word length for enumeration and searches");
  app.add_option("--cap", g.cap, "cap on intermediate configuration sizes");
  app.add_flag("--json", g.json, "machine-readable output");

  int code = exit_yes;

  Source enum_src;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "words of length ≤ --max-len, with a witness each");
  enum_src.add_to(enumerate_cmd);
  enumerate_cmd->callback([&] {
    const Keyboard k = enum_src.load();
    const std::size_t cap = g.cap ? g.cap : default_cap(k, g.max_len);
    const auto s = enumerate(k, g.max_len, cap);
    if (g.json) {
      json words = json::array();
      for (const auto& w : s.words)
        words.push_back({{"word", utf8_encode(w)}, {"execution", keys_json(s.witnesses.at(w))}});
      std::cout << json{{"max_len", s.max_len}, {"cap", s.size_cap}, {"complete", s.complete}, {"words", words}}.dump(2)
                << "\n";
    } else {
      for (const auto& w : s.words)
        std::cout << show(w) << "\n";
      if (!s.complete)
        std::cerr << "note: complete only up to configurations of size " << cap << "\n";
    }
  });

  Source member_src;
  std::string member_word;
  bool member_witness = false;
  auto* member_cmd = app.add_subcommand("member", "is a word in the language?");
  member_cmd->add_option("word", member_word, "the word (UTF-8; empty string for ε)")->required();
  member_src.add_to(member_cmd);
  member_cmd->add_flag("--witness", member_witness, "print the accepting execution or NFA path");
  member_cmd->callback([&] {
    const Keyboard k = member_src.load();
    const Word w = utf8_decode(member_word);
    const Decision d = member(k, w);
    code = verdict_code(d.verdict);
    if (g.json) {
      std::cout << decision_json(d).dump(2) << "\n";
      return;
    }
    std::cout << to_string(d.verdict) << " (" << d.procedure << ")\n";
    if (!d.reason.empty())
      std::cout << d.reason << "\n";
    if (member_witness && d.execution)
      std::cout << "execution: " << keys_text(*d.execution) << "\n";
    if (member_witness && d.nfa_path) {
      const Nfa nfa = build_nfa(k);
      std::cout << "path:";
      for (auto s : path_states(*d.nfa_path))
        std::cout << " " << nfa.name(s);
      std::cout << "\n";
    }
  });

  Source universal_src;
  auto* universal_cmd = app.add_subcommand("universal", "is the language A*?");
  universal_src.add_to(universal_cmd);
  universal_cmd->callback([&] {
    const Decision d = universal(universal_src.load());
    code = verdict_code(d.verdict);
    if (g.json) {
      std::cout << decision_json(d).dump(2) << "\n";
      return;
    }
    std::cout << to_string(d.verdict) << " (" << d.procedure << ")\n";
    if (d.counterexample)
      std::cout << "missing word: " << show(*d.counterexample) << "\n";
    if (!d.reason.empty())
      std::cout << d.reason << "\n";
  });

  Source nfa_src;
  std::string nfa_out;
  auto* nfa_cmd = app.add_subcommand("compile-nfa", "NFA of an MK, EK, BK or BEK keyboard");
  nfa_src.add_to(nfa_cmd);
  nfa_cmd->add_option("--out", nfa_out, "output file; .dot gives Graphviz, anything else JSON");
  nfa_cmd->callback([&] {
    const Nfa nfa = build_nfa(nfa_src.load());
    write_output(ends_with(nfa_out, ".dot") ? nfa_to_dot(nfa) : nfa_to_json(nfa).dump(2) + "\n", nfa_out);
  });

  Source pda_src;
  std::string pda_out;
  auto* pda_cmd = app.add_subcommand("compile-pda", "PDA of a ►-free keyboard (reads the mirror)");
  pda_src.add_to(pda_cmd);
  pda_cmd->add_option("--out", pda_out, "output JSON file");
  pda_cmd->callback([&] { write_output(pda_to_json(build_pda_blek(pda_src.load())).dump(2) + "\n", pda_out); });

  Source norm_src;
  auto* norm_cmd = app.add_subcommand("normalize", "replace every key by its normal form ←^r w");
  norm_src.add_to(norm_cmd);
  norm_cmd->callback([&] { std::cout << serialize_keyboard(normalize_keyboard(norm_src.load())); });

  Source class_src;
  auto* class_cmd = app.add_subcommand("classify", "class of the keyboard");
  class_src.add_to(class_cmd);
  class_cmd->callback([&] {
    const auto label = classify(class_src.load());
    if (g.json) {
      json j{{"class", label.name}};
      if (label.warning)
        j["warning"] = *label.warning;
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::cout << label.name << "\n";
    if (label.warning)
      std::cerr << "warning: " << *label.warning << "\n";
  });

  Source mirror_src;
  auto* mirror_cmd = app.add_subcommand("mirror", "keyboard for the reversed language");
  mirror_src.add_to(mirror_cmd);
  mirror_cmd->callback([&] { std::cout << serialize_keyboard(mirror(mirror_src.load())); });

  Source morph_src;
  std::string morph_map;
  auto* morph_cmd = app.add_subcommand("morphism", "keyboard for the image under a letter-to-letter morphism");
  morph_src.add_to(morph_cmd);
  morph_cmd->add_option("--map", morph_map, "letter map, e.g. a=b,b=a")->required();
  morph_cmd->callback([&] { std::cout << serialize_keyboard(apply_morphism(morph_src.load(), parse_map(morph_map))); });

  std::string pcp_file;
  std::size_t pcp_search = 0;
  auto* pcp_cmd = app.add_subcommand("pcp-reduce", "two LK keyboards intersecting iff the PCP instance is solvable");
  pcp_cmd->add_option("pairs", pcp_file, "file with one pair 'u v' per line")->required();
  pcp_cmd->add_option("--search-len", pcp_search, "also search the intersection up to this word length");
  pcp_cmd->callback([&] {
    const auto [k1, k2] = pcp_to_lk(read_pcp(pcp_file));
    std::optional<IntersectionWitness> found;
    if (pcp_search) {
      found = intersection_nonempty_bounded(k1, k2, pcp_search, std::max(g.cap, pcp_search));
      code = found ? exit_yes : exit_unknown;
    }
    if (g.json) {
      json j{{"first", serialize_keyboard(k1)}, {"second", serialize_keyboard(k2)}};
      if (pcp_search)
        j["witness"] = found ? json{{"word", utf8_encode(found->word)},
                                    {"first_execution", keys_json(found->first_execution)},
                                    {"second_execution", keys_json(found->second_execution)}}
                             : json(nullptr);
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::cout << "# first keyboard\n" << serialize_keyboard(k1) << "# second keyboard\n" << serialize_keyboard(k2);
    if (pcp_search) {
      if (found)
        std::cout << "# common word: " << utf8_encode(found->word) << "\n# first execution: "
                  << keys_text(found->first_execution) << "\n";
      else
        std::cout << "# no common word of length ≤ " << pcp_search << "\n";
    }
  });

  std::size_t props_cases = 1000;
  auto* props_cmd = app.add_subcommand("props", "randomized checks of the algebraic properties");
  props_cmd->add_option("--cases", props_cases, "cases per property");
  props_cmd->callback([&] {
    PropertyOptions o;
    o.seed = g.seed;
    o.cases = props_cases;
    json all = json::array();
    for (const auto& r : run_property_suite(o)) {
      if (!r.ok())
        code = exit_no;
      if (g.json)
        all.push_back({{"name", r.name}, {"cases", r.cases}, {"skipped", r.skipped}, {"violations", r.violations},
                       {"first_violation", r.first_violation}});
      else
        std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << " (" << r.cases - r.skipped << " checked, "
                  << r.skipped << " skipped)" << (r.ok() ? "" : ": " + r.first_violation) << "\n";
    }
    if (g.json)
      std::cout << all.dump(2) << "\n";
  });

  std::string corpus_name;
  auto* corpus_cmd = app.add_subcommand("corpus", "check the example keyboards against their languages");
  corpus_cmd->add_option("--name", corpus_name, "check a single entry");
  corpus_cmd->callback([&] {
    std::vector<CorpusResult> results;
    if (corpus_name.empty())
      results = run_corpus();
    else
      results.push_back(check_entry(corpus_entry(corpus_name)));
    json all = json::array();
    for (const auto& r : results) {
      if (!r.ok())
        code = exit_no;
      if (g.json) {
        all.push_back({{"name", r.name},
                       {"class", r.class_label},
                       {"class_ok", r.class_ok},
                       {"words", r.oracle_words},
                       {"missing", strings_of(r.missing)},
                       {"unexpected", strings_of(r.unexpected)},
                       {"decision_checks", r.decision_checks},
                       {"decision_mismatches", strings_of(r.decision_mismatches)}});
        continue;
      }
      std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << " [" << r.class_label << "] " << r.oracle_words
                << " words, " << r.decision_checks << " decisions";
      if (!r.missing.empty())
        std::cout << ", missing e.g. " << show(r.missing.front());
      if (!r.unexpected.empty())
        std::cout << ", unexpected e.g. " << show(r.unexpected.front());
      if (!r.decision_mismatches.empty())
        std::cout << ", decision mismatch on " << show(r.decision_mismatches.front());
      std::cout << "\n";
    }
    if (g.json)
      std::cout << all.dump(2) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  } catch (const KeyboardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return code;
}
