#include "cubeplan/render.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace cubeplan {

namespace {

using Point = std::pair<long long, long long>;

std::vector<Point> joint_positions(const ArmSpec& spec,
                                   const std::string& word) {
  if (!is_valid_state(spec, word))
    throw InvalidState("word '" + word + "' is not a state of the arm");
  std::vector<Point> points{{0, 0}};
  for (char c : word) {
    Point next = points.back();
    if (c == 'R')
      ++next.first;
    else if (c == 'U')
      ++next.second;
    else
      --next.second;
    points.push_back(next);
  }
  return points;
}

std::string render_ascii(const ArmSpec& spec, const std::string& word) {
  const std::vector<Point> points = joint_positions(spec, word);
  const std::size_t rows = 2 * spec.height + 1;
  const std::size_t cols = 2 * spec.length + 1;
  std::vector<std::string> grid(rows, std::string(cols, ' '));

  // cell of a half-unit position (2x, 2y); row 0 is the ceiling
  auto at = [&](long long x2, long long y2) -> char& {
    return grid[static_cast<std::size_t>(2 * spec.height - y2)]
               [static_cast<std::size_t>(x2)];
  };

  for (std::size_t x = 0; x <= spec.length; ++x)
    for (std::size_t y = 0; y <= spec.height; ++y)
      at(2 * static_cast<long long>(x), 2 * static_cast<long long>(y)) = '.';
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const auto [ax, ay] = points[k];
    const auto [bx, by] = points[k + 1];
    at(ax + bx, ay + by) = (ay == by) ? '-' : '|';
  }
  for (const auto& [x, y] : points) at(2 * x, 2 * y) = '+';

  std::string out;
  for (std::string& row : grid) {
    row.erase(row.find_last_not_of(' ') + 1);
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const ArmSpec& spec, const std::string& word) {
  const std::vector<Point> points = joint_positions(spec, word);
  constexpr long long kUnit = 40, kMargin = 20;
  const long long width = kUnit * static_cast<long long>(spec.length) +
                          2 * kMargin;
  const long long height = kUnit * static_cast<long long>(spec.height) +
                           2 * kMargin;
  auto px = [&](long long x) { return std::to_string(kMargin + kUnit * x); };
  auto py = [&](long long y) {
    return std::to_string(kMargin +
                          kUnit * (static_cast<long long>(spec.height) - y));
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  out += "  <rect width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" fill=\"#ffffff\"/>\n";
  out += "  <g stroke=\"#c8c8c8\" stroke-width=\"1\">\n";
  for (std::size_t x = 0; x <= spec.length; ++x)
    out += "    <line x1=\"" + px(x) + "\" y1=\"" + py(0) + "\" x2=\"" +
           px(x) + "\" y2=\"" + py(spec.height) + "\"/>\n";
  for (std::size_t y = 0; y <= spec.height; ++y)
    out += "    <line x1=\"" + px(0) + "\" y1=\"" + py(y) + "\" x2=\"" +
           px(spec.length) + "\" y2=\"" + py(y) + "\"/>\n";
  out += "  </g>\n";
  out += "  <polyline fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"6\""
         " stroke-linecap=\"round\" stroke-linejoin=\"round\" points=\"";
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k) out += ' ';
    out += px(points[k].first) + "," + py(points[k].second);
  }
  out += "\"/>\n";
  out += "  <circle cx=\"" + px(0) + "\" cy=\"" + py(0) +
         "\" r=\"8\" fill=\"#c0392b\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string_view render_extension(RenderFormat format) {
  return format == RenderFormat::Svg ? "svg" : "txt";
}

std::string render_frame(const ArmSpec& spec, const std::string& word,
                         RenderFormat format) {
  return format == RenderFormat::Svg ? render_svg(spec, word)
                                     : render_ascii(spec, word);
}

}  // namespace cubeplan
