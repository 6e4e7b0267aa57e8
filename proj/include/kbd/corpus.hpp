#ifndef KBD_CORPUS_HPP
#define KBD_CORPUS_HPP

#include <algorithm>
#include <functional>
#include <regex>
#include <string>
#include <vector>

#include "core.hpp"
#include "decisions.hpp"
#include "dsl.hpp"
#include "oracle.hpp"
#include "utf8.hpp"

/** \file
 * Example keyboards with known languages. Each entry is checked by comparing
 * the bounded enumeration with the predicate applied to every word up to the
 * same length, then by running the class decision procedure on shorter words.
 */
namespace kbd {

struct CorpusEntry {
  std::string name;
  std::string dsl;
  std::string class_label;
  std::function<bool(const Word&)> predicate;
  std::size_t max_len = 0;
  std::size_t cap = 0; ///< known to be sufficient for complete enumeration at max_len
};

namespace corpus_detail {

inline bool all_of_letter(const Word& w, Letter a)
{
  return std::all_of(w.begin(), w.end(), [a](Letter b) { return b == a; });
}

inline bool is_palindrome(const Word& w) { return std::equal(w.begin(), w.begin() + static_cast<long>(w.size() / 2), w.rbegin()); }

inline bool is_dyck(const Word& w)
{
  long depth = 0;
  for (Letter a : w) {
    depth += a == U'(' ? 1 : -1;
    if (depth < 0)
      return false;
  }
  return depth == 0;
}

/// a b^{n+1} a^n for n ≥ 0.
inline bool is_ab_block(const Word& w)
{
  if (w.size() < 2 || w.size() % 2 != 0 || w[0] != U'a')
    return false;
  const std::size_t n = (w.size() - 2) / 2;
  return w == U"a" + Word(n + 1, U'b') + Word(n, U'a');
}

inline bool regex_word(const Word& w, const std::regex& re)
{
  return std::regex_match(utf8_encode(w), re);
}

inline Word marker_image(const Word& x)
{
  // x_1 w_{x1x2} x_2 ... x_n v_{xn}
  Word out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back(x[i]);
    if (i + 1 < x.size()) {
      const Letter p = x[i], q = x[i + 1];
      if (p == q)
        out += U"◊";
      else if (p == U'b' && q == U'a')
        out += U"◊♦";
    }
  }
  out += x.back() == U'a' ? U"◊♦" : U"◊♦$";
  return out;
}

inline bool is_marker_image(const Word& w)
{
  Word x;
  for (Letter a : w)
    if (a == U'a' || a == U'b')
      x.push_back(a);
  return !x.empty() && marker_image(x) == w;
}

} // namespace corpus_detail

inline std::vector<CorpusEntry> corpus()
{
  using namespace corpus_detail;
  std::vector<CorpusEntry> c;
  c.push_back({"aa_plus", "alphabet: a\n[transient]\na a\n", "MK",
               [](const Word& w) { return !w.empty() && w.size() % 2 == 0 && all_of_letter(w, U'a'); }, 10, 10});
  c.push_back({"odd_a_blocks", "alphabet: a\n[transient]\na a\n[final]\na\n", "EK",
               [](const Word& w) { return w.size() % 2 == 1 && all_of_letter(w, U'a'); }, 10, 10});
  c.push_back({"even_palindromes", "alphabet: a b\n[transient]\na a LA\nb b LA\n", "LK",
               [](const Word& w) { return !w.empty() && w.size() % 2 == 0 && is_palindrome(w); }, 8, 8});
  c.push_back({"palindromes_with_c", "alphabet: a b c\n[transient]\na a LA\nb b LA\n[final]\nc\nc c\n", "LEK",
               [](const Word& w) {
                 const auto cs = std::count(w.begin(), w.end(), U'c');
                 if (!is_palindrome(w) || cs < 1 || cs > 2)
                   return false;
                 const std::size_t mid = w.size() / 2;
                 return cs == 1 ? w.size() % 2 == 1 && w[mid] == U'c'
                                : w.size() % 2 == 0 && w[mid - 1] == U'c' && w[mid] == U'c';
               },
               8, 8});
  c.push_back({"dyck", "alphabet: ( )\n[transient]\n( ) LA\nLA\n", "LK", is_dyck, 10, 10});
  c.push_back({"ab_blocks", "alphabet: a b\n[transient]\na LA LA RA b\n", "AK", is_ab_block, 13, 13});
  c.push_back({"backspace_figure", "alphabet: a b c\n[transient]\nBS a b c\nBS BS BS BS b b\n", "BK",
               [re = std::regex("abc|bb|abb|(ab|b)(ab)*ab(b|c)")](const Word& w) { return regex_word(w, re); }, 10, 14});
  c.push_back({"even_a_then_b", "alphabet: a b\n[transient]\na a\n[final]\nb\nb b\n", "EK",
               [re = std::regex("(aa)*(b|bb)")](const Word& w) { return regex_word(w, re); }, 10, 10});
  c.push_back({"a_c_a", "alphabet: a c\n[transient]\nBS c\nBS a c a LA\n", "BLK",
               [](const Word& w) {
                 const std::size_t n = w.size() / 2;
                 return w.size() % 2 == 1 && w == Word(n, U'a') + U"c" + Word(n, U'a');
               },
               9, 13});
  c.push_back({"marker_shapes", "alphabet: a b ◊ ♦ $\n[transient]\nBS a ◊ ♦\nBS BS b ◊ ♦ $\n", "BK", is_marker_image, 8,
               13});
  c.push_back({"ab_or_bc_plus", "alphabet: a b c\n[transient]\na b\nb c\n", "MK",
               [re = std::regex("(ab|bc)+")](const Word& w) { return regex_word(w, re); }, 10, 10});
  std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
  return c;
}

/// All words over `alphabet` of length ≤ max_len satisfying `pred`.
inline WordSet filter_words(const std::vector<Letter>& alphabet, std::size_t max_len,
                            const std::function<bool(const Word&)>& pred)
{
  WordSet out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      if (pred(w))
        out.insert(w);
      if (len < max_len)
        for (Letter a : alphabet)
          next.push_back(w + a);
    }
    layer = std::move(next);
  }
  return out;
}

struct CorpusResult {
  std::string name;
  std::string class_label;
  bool class_ok = false;
  std::size_t oracle_words = 0;
  std::vector<Word> missing;   ///< predicate words absent from the enumeration
  std::vector<Word> unexpected; ///< enumerated words rejected by the predicate
  std::size_t decision_checks = 0;
  std::vector<Word> decision_mismatches;

  bool ok() const { return class_ok && missing.empty() && unexpected.empty() && decision_mismatches.empty(); }
};

/**
 * Checks one entry. The decision procedure is compared with the enumeration
 * on every word of length ≤ min(max_len, decision_len).
 */
inline CorpusResult check_entry(const CorpusEntry& e, std::size_t decision_len = 6)
{
  CorpusResult r;
  r.name = e.name;
  const Keyboard k = parse_keyboard(e.dsl);
  r.class_label = classify(k).name;
  r.class_ok = r.class_label == e.class_label;

  const auto sample = enumerate(k, e.max_len, e.cap, true);
  r.oracle_words = sample.words.size();
  const WordSet expected = filter_words(k.alphabet(), e.max_len, e.predicate);
  std::set_difference(expected.begin(), expected.end(), sample.words.begin(), sample.words.end(),
                      std::back_inserter(r.missing), ShortLex{});
  std::set_difference(sample.words.begin(), sample.words.end(), expected.begin(), expected.end(),
                      std::back_inserter(r.unexpected), ShortLex{});

  const std::size_t len = std::min(e.max_len, decision_len);
  for (const auto& w : filter_words(k.alphabet(), len, [](const Word&) { return true; })) {
    const Decision d = member(k, w);
    ++r.decision_checks;
    const bool in_oracle = sample.words.contains(w);
    const bool agrees = in_oracle ? witness_replays(k, w, d) : d.verdict == Verdict::No;
    if (!agrees)
      r.decision_mismatches.push_back(w);
  }
  return r;
}

inline std::vector<CorpusResult> run_corpus(std::size_t decision_len = 6)
{
  std::vector<CorpusResult> out;
  for (const auto& e : corpus())
    out.push_back(check_entry(e, decision_len));
  return out;
}

inline const CorpusEntry& corpus_entry(const std::string& name)
{
  static const std::vector<CorpusEntry> entries = corpus();
  for (const auto& e : entries)
    if (e.name == name)
      return e;
  throw KeyboardError("no corpus entry named " + name);
}

} // namespace kbd

#endif // KBD_CORPUS_HPP
