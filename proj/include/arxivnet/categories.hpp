#pragma once

#include <array>
#include <string>
#include <string_view>

namespace arxivnet {

inline constexpr std::string_view kPhysicsGroup = "physics*";
inline constexpr std::string_view kOtherGroup = "other";

enum class CategoryView { archive, subcategory };

namespace detail {

// Current arXiv archives.
inline constexpr std::array<std::string_view, 20> kArchives = {
    "astro-ph", "cond-mat", "cs",      "econ",  "eess",   "gr-qc",   "hep-ex", "hep-lat", "hep-ph", "hep-th",
    "math",     "math-ph",  "nlin",    "nucl-ex", "nucl-th", "physics", "q-bio",  "q-fin",   "quant-ph", "stat"};

struct Legacy {
  std::string_view from, to;
};

// Retired archives and the archive that absorbed them.
inline constexpr std::array<Legacy, 18> kLegacy = {{{"acc-phys", "physics"},
                                                     {"adap-org", "nlin"},
                                                     {"alg-geom", "math"},
                                                     {"ao-sci", "physics"},
                                                     {"atom-ph", "physics"},
                                                     {"bayes-an", "physics"},
                                                     {"chao-dyn", "nlin"},
                                                     {"chem-ph", "physics"},
                                                     {"cmp-lg", "cs"},
                                                     {"comp-gas", "nlin"},
                                                     {"dg-ga", "math"},
                                                     {"funct-an", "math"},
                                                     {"mtrl-th", "cond-mat"},
                                                     {"patt-sol", "nlin"},
                                                     {"plasm-ph", "physics"},
                                                     {"q-alg", "math"},
                                                     {"solv-int", "nlin"},
                                                     {"supr-con", "cond-mat"}}};

}  // namespace detail

/// Archive part of a category code: "astro-ph.EP" -> "astro-ph".
inline std::string_view archive_of(std::string_view code) { return code.substr(0, code.find('.')); }

/// Current archive for a code, mapping retired archives forward; empty when
/// the archive is unknown.
inline std::string_view resolve_archive(std::string_view code) {
  const auto a = archive_of(code);
  for (auto known : detail::kArchives)
    if (known == a) return known;
  for (const auto& l : detail::kLegacy)
    if (l.from == a) return l.to;
  return {};
}

inline bool is_physics_family(std::string_view archive) {
  return archive == "physics" || archive == "gr-qc" || archive == "nlin" || archive == "quant-ph" ||
         archive.starts_with("nucl-");
}

inline bool is_known_category(std::string_view code) { return !resolve_archive(code).empty(); }

/// Display group of a category code. The archive view collapses gr-qc,
/// nlin, nucl-*, quant-ph and physics.* into "physics*"; the sub-category
/// view keeps the code. Unknown archives map to "other" in both views.
inline std::string rollup_category(std::string_view code, CategoryView view) {
  const auto archive = resolve_archive(code);
  if (archive.empty()) return std::string(kOtherGroup);
  if (view == CategoryView::subcategory) return std::string(code);
  if (is_physics_family(archive)) return std::string(kPhysicsGroup);
  return std::string(archive);
}

}  // namespace arxivnet
