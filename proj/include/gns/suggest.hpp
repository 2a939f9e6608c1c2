#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace gns::detail {

inline std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

/// Closest candidate within edit distance 3, or empty when nothing is near.
inline std::string closest_match(const std::string& word,
                                 const std::vector<std::string>& candidates) {
  std::string best;
  std::size_t best_dist = 4;
  for (const auto& c : candidates) {
    const std::size_t d = edit_distance(word, c);
    if (d < best_dist) {
      best_dist = d;
      best = c;
    }
  }
  return best;
}

}  // namespace gns::detail
