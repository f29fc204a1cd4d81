#pragma once

#include <string>
#include <string_view>

namespace letterstat::utf8 {

inline constexpr char32_t kReplacement = U'�';

/// Decodes UTF-8; malformed or truncated sequences become U+FFFD.
std::u32string decode(std::string_view bytes);

void append(std::string& out, char32_t cp);
std::string encode(char32_t cp);
std::string encode(std::u32string_view cps);

/// Simple one-to-one lowercase mapping for Latin (Basic, Latin-1, Extended-A),
/// Greek and Cyrillic capitals. Everything else maps to itself.
char32_t to_lower(char32_t cp);

bool is_space(char32_t cp);

}  // namespace letterstat::utf8
