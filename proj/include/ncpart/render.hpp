#pragma once

// Arc diagrams: vertices on a line, one arch per arc of the standard
// representation.

#include "ncpart/core_model.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace ncpart {

namespace detail {

struct LeveledArc {
  Arc arc;
  int level;
};

/// Shortest arcs first; each arc takes the lowest level above every arc it
/// encloses that is free over its whole span (shared endpoints included).
inline std::vector<LeveledArc> assign_levels(std::vector<Arc> arcs) {
  std::stable_sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return x.right - x.left < y.right - y.left;
  });
  std::vector<LeveledArc> placed;
  for (const Arc& a : arcs) {
    int level = 1;
    for (const auto& p : placed)
      if (a.left <= p.arc.left && p.arc.right <= a.right) level = std::max(level, p.level + 1);
    auto clashes = [&](int l) {
      return std::any_of(placed.begin(), placed.end(), [&](const LeveledArc& p) {
        return p.level == l && p.arc.left <= a.right && a.left <= p.arc.right;
      });
    };
    while (clashes(level)) ++level;
    placed.push_back({a, level});
  }
  return placed;
}

}  // namespace detail

inline std::string render_ascii(const SetPartition& p) {
  const int n = p.n();
  const int width = std::max<int>(4, static_cast<int>(std::to_string(n).size()) + 1);
  auto col = [&](int v) { return static_cast<std::size_t>((v - 1) * width); };
  const auto arcs = detail::assign_levels(canonical_arcs(p));
  int top = 0;
  for (const auto& a : arcs) top = std::max(top, a.level);

  std::string out;
  const std::size_t line_width = col(n) + 1;
  for (int h = top; h >= 1; --h) {
    std::string row(line_width, ' ');
    for (const auto& a : arcs) {
      if (a.level != h) continue;
      for (std::size_t c = col(a.arc.left); c <= col(a.arc.right); ++c) row[c] = '-';
      row[col(a.arc.left)] = row[col(a.arc.right)] = '+';
    }
    for (const auto& a : arcs)
      if (a.level > h)
        for (std::size_t c : {col(a.arc.left), col(a.arc.right)})
          if (row[c] != '+') row[c] = '|';
    row.erase(row.find_last_not_of(' ') + 1);
    out += row + '\n';
  }
  std::string labels;
  for (int v = 1; v <= n; ++v) {
    labels.resize(col(v), ' ');
    labels += std::to_string(v);
  }
  return out + labels + '\n';
}

/// Standalone SVG document with one semicircle per arc.
inline std::string render_svg(const SetPartition& p) {
  constexpr int spacing = 40, margin = 30, label_gap = 18;
  const int n = p.n();
  const auto arcs = canonical_arcs(p);
  int span = 0;
  for (const auto& a : arcs) span = std::max(span, a.right - a.left);
  const int radius_max = span * spacing / 2;
  const int width = (n - 1) * spacing + 2 * margin;
  const int baseline = margin + radius_max;
  const int height = baseline + label_gap + margin;
  auto x = [&](int v) { return margin + (v - 1) * spacing; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "  <title>" << format_partition(p) << "</title>\n";
  svg << "  <line x1=\"" << x(1) << "\" y1=\"" << baseline << "\" x2=\"" << x(n) << "\" y2=\"" << baseline
      << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (const auto& a : arcs) {
    const int r = (a.right - a.left) * spacing / 2;
    svg << "  <path d=\"M " << x(a.left) << ' ' << baseline << " A " << r << ' ' << r << " 0 0 1 " << x(a.right)
        << ' ' << baseline << "\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  }
  for (int v = 1; v <= n; ++v) {
    svg << "  <circle cx=\"" << x(v) << "\" cy=\"" << baseline << "\" r=\"4\" fill=\"#000\"/>\n";
    svg << "  <text x=\"" << x(v) << "\" y=\"" << baseline + label_gap
        << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ncpart
