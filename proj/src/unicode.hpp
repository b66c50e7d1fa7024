#pragma once

// Thin wrappers over ICU for the handful of Unicode queries the tokenizer
// and normalizer need. Internal header.

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace powerwords::detail {

// Decodes the code point at `pos` and advances past it. Malformed input
// yields a negative value.
inline UChar32 next_code_point(std::string_view s, std::size_t& pos) {
  int32_t i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_NEXT(reinterpret_cast<const uint8_t*>(s.data()), i,
          static_cast<int32_t>(s.size()), c);
  pos = static_cast<std::size_t>(i);
  return c;
}

inline UChar32 peek_code_point(std::string_view s, std::size_t pos) {
  return pos < s.size() ? next_code_point(s, pos) : U_SENTINEL;
}

inline void append_utf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<uint8_t*>(buf), len, U8_MAX_LENGTH, c, error);
  if (!error) out.append(buf, static_cast<std::size_t>(len));
}

inline bool is_letter(UChar32 c) { return c >= 0 && u_isalpha(c); }
inline bool is_digit(UChar32 c) { return c >= 0 && u_isdigit(c); }
inline bool is_mark(UChar32 c) {
  if (c < 0) return false;
  const auto mask = U_GET_GC_MASK(c);
  return (mask & (U_GC_MN_MASK | U_GC_MC_MASK | U_GC_ME_MASK)) != 0;
}
inline bool is_space(UChar32 c) { return c >= 0 && u_isUWhiteSpace(c); }
inline bool is_upper(UChar32 c) { return c >= 0 && (u_isupper(c) || u_istitle(c)); }

inline bool is_apostrophe(UChar32 c) { return c == U'\'' || c == 0x2019; }
inline bool is_hyphen(UChar32 c) { return c == U'-' || c == 0x2010 || c == 0x2011; }

std::string to_lower(std::string_view text);
std::string to_nfc(std::string_view text);

}  // namespace powerwords::detail
