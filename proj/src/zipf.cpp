#include "letterstat/zipf.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "letterstat/error.hpp"

namespace letterstat {

RankFrequency word_rank_frequency(const WordSequence& words) {
  if (words.words.empty()) throw Error("word_rank_frequency: no words");
  std::map<Word, std::uint64_t> counts;
  for (const Word& w : words.words) ++counts[w];

  RankFrequency rf{words.alphabet, {}};
  rf.entries.reserve(counts.size());
  for (auto& [w, c] : counts) rf.entries.push_back({0, w, c});
  // map iteration is already lexicographic; a stable sort keeps it for ties
  std::stable_sort(rf.entries.begin(), rf.entries.end(),
                   [](const RankEntry& a, const RankEntry& b) { return a.count > b.count; });
  for (std::size_t i = 0; i < rf.entries.size(); ++i) rf.entries[i].rank = i + 1;
  return rf;
}

PowerLawFit fit_power_law(std::span<const RankCount> points, double min_count) {
  std::vector<std::pair<double, double>> xy;
  xy.reserve(points.size());
  for (const auto& p : points) {
    if (p.count >= min_count && p.count > 0.0 && p.rank > 0.0) {
      xy.emplace_back(std::log(p.rank), std::log(p.count));
    }
  }
  if (xy.size() < 2) {
    throw Error("fit_power_law: fewer than 2 points with count >= " + std::to_string(min_count));
  }
  const double k = static_cast<double>(xy.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= k;
  my /= k;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& [x, y] : xy) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0) throw Error("fit_power_law: all usable points share one rank");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss_res = 0.0;
  for (const auto& [x, y] : xy) {
    const double r = y - (intercept + slope * x);
    ss_res += r * r;
  }
  const double r2 = syy == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return {-slope, intercept, r2, xy.size()};
}

PowerLawFit fit_power_law(const RankFrequency& rf, double min_count) {
  std::vector<RankCount> pts;
  pts.reserve(rf.entries.size());
  for (const auto& e : rf.entries) {
    pts.push_back({static_cast<double>(e.rank), static_cast<double>(e.count)});
  }
  return fit_power_law(pts, min_count);
}

}  // namespace letterstat
