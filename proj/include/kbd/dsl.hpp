#ifndef KBD_DSL_HPP
#define KBD_DSL_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "utf8.hpp"

/** \file
 * Text format for keyboards.
 *
 *   alphabet: a b c
 *   [transient]
 *   a a LA        # one key per line, tokens separated by spaces
 *   EPS           # the empty key
 *   [final]
 *   c
 *
 * Tokens are single alphabet characters or BS (←), LA (◄), RA (►), EPS.
 * A file without a [final] section describes an automatic keyboard.
 */
namespace kbd {

class ParseError : public KeyboardError {
public:
  ParseError(std::size_t line, const std::string& msg)
      : KeyboardError("line " + std::to_string(line) + ": " + msg), line_(line)
  {
  }
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

namespace dsl_detail {

inline std::vector<std::string> split_ws(std::string_view s)
{
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty())
        out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty())
    out.push_back(std::move(cur));
  return out;
}

inline bool is_reserved_word(const std::string& tok)
{
  return tok == "BS" || tok == "LA" || tok == "RA" || tok == "EPS" || tok == "ENT";
}

inline bool is_entry_token(const std::string& tok) { return tok == "ENT" || tok == "\xE2\x96\xA0"; }

} // namespace dsl_detail

inline Keyboard parse_keyboard(std::string_view text)
{
  using namespace dsl_detail;
  enum class Section { None, Transient, Final } section = Section::None;
  std::vector<Letter> alphabet;
  bool have_alphabet = false;
  bool have_final = false;
  std::vector<Key> transient;
  std::vector<Key> final_keys;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty())
      continue;

    if (!have_alphabet) {
      if (tokens[0] != "alphabet:")
        throw ParseError(lineno, "expected 'alphabet:' line first");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        std::u32string cp;
        try {
          cp = utf8_decode(tokens[i]);
        } catch (const std::invalid_argument& e) {
          throw ParseError(lineno, e.what());
        }
        if (cp.size() != 1)
          throw ParseError(lineno, "alphabet entries must be single characters: '" + tokens[i] + "'");
        if (is_entry_token(tokens[i]))
          throw ParseError(lineno, "reserved token used as a letter");
        alphabet.push_back(cp[0]);
      }
      have_alphabet = true;
      continue;
    }

    if (tokens.size() == 1 && tokens[0] == "[transient]") {
      if (section != Section::None)
        throw ParseError(lineno, "[transient] must come first");
      section = Section::Transient;
      continue;
    }
    if (tokens.size() == 1 && tokens[0] == "[final]") {
      if (section != Section::Transient)
        throw ParseError(lineno, "[final] must follow [transient]");
      section = Section::Final;
      have_final = true;
      continue;
    }
    if (section == Section::None)
      throw ParseError(lineno, "key outside of a section");

    Key key;
    if (tokens.size() == 1 && tokens[0] == "EPS") {
      // empty key
    } else {
      for (const auto& tok : tokens) {
        if (tok == "BS")
          key.push_back(AtomicOp::backspace());
        else if (tok == "LA")
          key.push_back(AtomicOp::left());
        else if (tok == "RA")
          key.push_back(AtomicOp::right());
        else if (is_entry_token(tok))
          throw ParseError(lineno, "entry is expressed by the [final] section, not inside a key");
        else if (tok == "EPS")
          throw ParseError(lineno, "EPS must stand alone on its line");
        else {
          std::u32string cp;
          try {
            cp = utf8_decode(tok);
          } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
          }
          if (cp.size() != 1)
            throw ParseError(lineno, "unknown token '" + tok + "'");
          if (std::find(alphabet.begin(), alphabet.end(), cp[0]) == alphabet.end())
            throw ParseError(lineno, "letter '" + tok + "' is not in the alphabet");
          key.push_back(AtomicOp::write(cp[0]));
        }
      }
    }
    (section == Section::Transient ? transient : final_keys).push_back(std::move(key));
  }
  if (!have_alphabet)
    throw ParseError(lineno, "missing 'alphabet:' line");
  if (section == Section::None)
    throw ParseError(lineno, "missing [transient] section");
  if (!have_final)
    return Keyboard::automatic(std::move(alphabet), std::move(transient));
  return Keyboard(std::move(alphabet), std::move(transient), std::move(final_keys));
}

/// Space-separated DSL tokens of one key ("EPS" for the empty key).
inline std::string key_tokens(const Key& t)
{
  if (t.empty())
    return "EPS";
  std::string s;
  for (const auto& o : t) {
    if (!s.empty())
      s += ' ';
    switch (o.kind) {
    case OpKind::Write: utf8_append(s, o.symbol); break;
    case OpKind::Backspace: s += "BS"; break;
    case OpKind::Left: s += "LA"; break;
    case OpKind::Right: s += "RA"; break;
    }
  }
  return s;
}

inline std::string serialize_keyboard(const Keyboard& k)
{
  std::ostringstream out;
  out << "alphabet:";
  for (Letter a : k.alphabet())
    out << ' ' << utf8_encode(a);
  out << "\n[transient]\n";
  for (const auto& t : k.transient())
    out << key_tokens(t) << '\n';
  if (!k.automatic()) {
    out << "[final]\n";
    for (const auto& t : k.final_keys())
      out << key_tokens(t) << '\n';
  }
  return out.str();
}

} // namespace kbd

#endif // KBD_DSL_HPP
