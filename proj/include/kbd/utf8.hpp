#ifndef KBD_UTF8_HPP
#define KBD_UTF8_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace kbd {

/// Decodes UTF-8 into code points; throws std::invalid_argument on malformed input.
inline std::u32string utf8_decode(std::string_view text)
{
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const auto c0 = static_cast<unsigned char>(text[i]);
    int extra = 0;
    char32_t cp = 0;
    if (c0 < 0x80) {
      cp = c0;
    } else if ((c0 & 0xE0) == 0xC0) {
      cp = c0 & 0x1F;
      extra = 1;
    } else if ((c0 & 0xF0) == 0xE0) {
      cp = c0 & 0x0F;
      extra = 2;
    } else if ((c0 & 0xF8) == 0xF0) {
      cp = c0 & 0x07;
      extra = 3;
    } else {
      throw std::invalid_argument("invalid UTF-8 lead byte");
    }
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= text.size())
        throw std::invalid_argument("truncated UTF-8 sequence");
      const auto ck = static_cast<unsigned char>(text[i + k]);
      if ((ck & 0xC0) != 0x80)
        throw std::invalid_argument("invalid UTF-8 continuation byte");
      cp = (cp << 6) | (ck & 0x3F);
    }
    out.push_back(cp);
    i += 1 + extra;
  }
  return out;
}

inline void utf8_append(std::string& out, char32_t cp)
{
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string utf8_encode(std::u32string_view text)
{
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text)
    utf8_append(out, cp);
  return out;
}

inline std::string utf8_encode(char32_t cp)
{
  std::string out;
  utf8_append(out, cp);
  return out;
}

} // namespace kbd

#endif // KBD_UTF8_HPP
