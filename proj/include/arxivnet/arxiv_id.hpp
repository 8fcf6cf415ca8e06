#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace arxivnet {

namespace detail {

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool iequals_prefix(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
  return true;
}

// Removes a trailing "vN" version marker.
inline std::string_view strip_version(std::string_view id) {
  const auto v = id.rfind('v');
  if (v != std::string_view::npos && v + 1 < id.size() && all_digits(id.substr(v + 1)))
    return id.substr(0, v);
  return id;
}

// "YYMM.NNNN" or "YYMM.NNNNN"
inline bool is_new_style(std::string_view id) {
  if (id.size() < 9 || id[4] != '.') return false;
  const auto yymm = id.substr(0, 4);
  const auto seq = id.substr(5);
  if (!all_digits(yymm) || !all_digits(seq) || (seq.size() != 4 && seq.size() != 5)) return false;
  const int month = (yymm[2] - '0') * 10 + (yymm[3] - '0');
  return month >= 1 && month <= 12;
}

// "archive/YYMMNNN", optionally "archive.XX/YYMMNNN"; returns the canonical
// form without the subject class, or nullopt.
inline std::optional<std::string> old_style(std::string_view id) {
  const auto slash = id.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  auto archive = id.substr(0, slash);
  const auto number = id.substr(slash + 1);
  if (number.size() != 7 || !all_digits(number)) return std::nullopt;
  if (const auto dot = archive.find('.'); dot != std::string_view::npos) {
    const auto cls = archive.substr(dot + 1);
    if (cls.size() != 2 || !std::all_of(cls.begin(), cls.end(), [](unsigned char c) { return std::isalpha(c); }))
      return std::nullopt;
    archive = archive.substr(0, dot);
  }
  if (archive.empty() || archive.front() == '-' || archive.back() == '-') return std::nullopt;
  for (unsigned char c : archive)
    if (!(std::islower(c) || c == '-')) return std::nullopt;
  return std::string(archive) + "/" + std::string(number);
}

inline std::optional<std::string> canonical_id(std::string_view id) {
  id = strip_version(id);
  if (is_new_style(id)) return std::string(id);
  return old_style(id);
}

inline bool is_arxiv_host(std::string_view host) {
  std::string h(host);
  std::transform(h.begin(), h.end(), h.begin(), [](unsigned char c) { return std::tolower(c); });
  if (const auto colon = h.find(':'); colon != std::string::npos) h.resize(colon);
  constexpr std::string_view base = "arxiv.org";
  if (h == base) return true;
  return h.size() > base.size() + 1 && h.ends_with(base) && h[h.size() - base.size() - 1] == '.';
}

}  // namespace detail

/// Normalizes an arXiv URL or bare identifier to its canonical, version-free
/// form: "1810.04805" or "hep-th/9901001". Accepts `/abs/` and `/pdf/` URLs
/// (with or without scheme and `.pdf` suffix) and an optional "arXiv:" prefix
/// on bare identifiers. Anything else yields nullopt.
inline std::optional<std::string> normalize_arxiv_id(std::string_view raw) {
  using namespace detail;
  std::string_view s = trim(raw);
  if (s.empty()) return std::nullopt;

  bool had_scheme = false;
  for (std::string_view scheme : {"https://", "http://"}) {
    if (iequals_prefix(s, scheme)) {
      s.remove_prefix(scheme.size());
      had_scheme = true;
      break;
    }
  }

  const auto first_slash = s.find('/');
  const auto host = s.substr(0, first_slash);
  if (first_slash != std::string_view::npos && is_arxiv_host(host)) {
    std::string_view path = s.substr(first_slash + 1);
    path = path.substr(0, path.find_first_of("?#"));
    while (!path.empty() && path.back() == '/') path.remove_suffix(1);
    std::string_view id;
    if (path.starts_with("abs/")) {
      id = path.substr(4);
    } else if (path.starts_with("pdf/")) {
      id = path.substr(4);
      if (id.ends_with(".pdf")) id.remove_suffix(4);
    } else {
      return std::nullopt;
    }
    return canonical_id(id);
  }
  if (had_scheme) return std::nullopt;

  if (iequals_prefix(s, "arxiv:")) s.remove_prefix(6);
  return canonical_id(s);
}

}  // namespace arxivnet
