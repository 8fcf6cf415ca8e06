#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <regex>
#include <string>
#include <string_view>

#include "arxivnet/arxiv_id.hpp"
#include "arxivnet/ingest.hpp"

namespace arxivnet {

/// Maps text to an ISO 639-1 code, or nullopt when undecided. May throw;
/// failures are treated as undecided.
using LanguageDetector = std::function<std::optional<std::string>(std::string_view)>;

inline std::string strip_urls(std::string_view text) {
  static const std::regex url(R"((https?://|www\.)\S*)", std::regex::icase);
  return std::regex_replace(std::string(text), url, " ");
}

/// Language of a profile text after URL removal; "UD" when nothing is left,
/// the detector fails, or it returns something that is not a language code.
inline std::string profile_language(std::string_view profile_text, const LanguageDetector& detector) {
  const auto stripped = strip_urls(profile_text);
  if (detail::trim(stripped).empty() || !detector) return "UD";
  try {
    const auto code = detector(stripped);
    if (!code) return "UD";
    const auto norm = normalize_lang_code(*code);
    return norm ? *norm : "UD";
  } catch (...) {
    return "UD";
  }
}

namespace detail {

// Decodes one UTF-8 code point starting at s[i]; invalid bytes yield U+FFFD.
inline char32_t next_code_point(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  int len = b0 < 0x80 ? 1 : (b0 >> 5) == 0x6 ? 2 : (b0 >> 4) == 0xE ? 3 : (b0 >> 3) == 0x1E ? 4 : 0;
  if (len == 0 || i + static_cast<std::size_t>(len) > s.size()) {
    ++i;
    return 0xFFFD;
  }
  char32_t cp = len == 1 ? b0 : len == 2 ? (b0 & 0x1F) : len == 3 ? (b0 & 0x0F) : (b0 & 0x07);
  for (int k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
    if ((b >> 6) != 0x2) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += static_cast<std::size_t>(len);
  return cp;
}

}  // namespace detail

/// Bundled detector that only looks at writing systems: kana -> ja,
/// Hangul -> ko, Han without kana -> zh, Cyrillic -> ru, Greek -> el,
/// Arabic -> ar, Hebrew -> he, Thai -> th, Devanagari -> hi, Latin -> en.
/// The most frequent script wins. It exists for tests and offline runs;
/// real analyses should plug in a statistical detector.
inline std::optional<std::string> script_detector(std::string_view text) {
  enum Script { latin, kana, han, hangul, cyrillic, greek, arabic, hebrew, thai, devanagari, kCount };
  std::array<std::size_t, kCount> counts{};
  for (std::size_t i = 0; i < text.size();) {
    const char32_t c = detail::next_code_point(text, i);
    if ((c >= U'A' && c <= U'Z') || (c >= U'a' && c <= U'z') || (c >= 0xC0 && c <= 0x24F && c != 0xD7 && c != 0xF7))
      ++counts[latin];
    else if ((c >= 0x3040 && c <= 0x30FF) || (c >= 0x31F0 && c <= 0x31FF) || (c >= 0xFF66 && c <= 0xFF9F))
      ++counts[kana];
    else if ((c >= 0x4E00 && c <= 0x9FFF) || (c >= 0x3400 && c <= 0x4DBF))
      ++counts[han];
    else if ((c >= 0xAC00 && c <= 0xD7AF) || (c >= 0x1100 && c <= 0x11FF) || (c >= 0x3130 && c <= 0x318F))
      ++counts[hangul];
    else if (c >= 0x0400 && c <= 0x04FF)
      ++counts[cyrillic];
    else if (c >= 0x0370 && c <= 0x03FF)
      ++counts[greek];
    else if (c >= 0x0600 && c <= 0x06FF)
      ++counts[arabic];
    else if (c >= 0x0590 && c <= 0x05FF)
      ++counts[hebrew];
    else if (c >= 0x0E00 && c <= 0x0E7F)
      ++counts[thai];
    else if (c >= 0x0900 && c <= 0x097F)
      ++counts[devanagari];
  }
  // Japanese text mixes kanji with kana.
  if (counts[kana] > 0) {
    counts[kana] += counts[han];
    counts[han] = 0;
  }
  static constexpr std::array<const char*, kCount> codes = {"en", "ja", "zh", "ko", "ru",
                                                            "el", "ar", "he", "th", "hi"};
  std::size_t best = kCount;
  for (std::size_t s = 0; s < kCount; ++s)
    if (counts[s] > 0 && (best == kCount || counts[s] > counts[best])) best = s;
  if (best == kCount) return std::nullopt;
  return std::string(codes[best]);
}

}  // namespace arxivnet
