#include "lagint/tables.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <vector>

namespace lagint {

namespace {

std::string render_grid(const std::vector<long>& row_keys,
                        const std::vector<long>& col_keys,
                        const std::map<std::pair<long, long>, unsigned long>& entries,
                        const std::string& row_label) {
  std::ostringstream out;
  size_t width = 4;
  for (const auto& [key, v] : entries)
    width = std::max(width, std::to_string(v).size() + 1);
  out << std::setw(8) << row_label << " |";
  for (long c : col_keys) out << std::setw(static_cast<int>(width)) << c;
  out << "\n";
  out << std::string(9, '-') << "+" << std::string(col_keys.size() * width, '-') << "\n";
  for (long r : row_keys) {
    out << std::setw(8) << r << " |";
    for (long c : col_keys) {
      auto it = entries.find({r, c});
      if (it == entries.end())
        out << std::setw(static_cast<int>(width)) << ".";
      else
        out << std::setw(static_cast<int>(width)) << it->second;
    }
    out << "\n";
  }
  return out.str();
}

} // namespace

std::string BigradedDimsTable::to_string() const {
  std::map<std::pair<long, long>, unsigned long> grid;
  std::vector<long> rows, cols;
  for (const auto& [key, v] : entries) grid[{key.first, key.second}] = v;
  for (int k = 0; k >= k_min; --k) rows.push_back(k);
  for (long d = 0; d <= d_max; ++d) cols.push_back(d);
  return render_grid(rows, cols, grid, "h\\d");
}

std::string TotalDimsTable::to_string() const {
  if (entries.empty()) return "(empty)\n";
  long t_min = entries.begin()->first.first, t_max = t_min;
  long d_min = 0, d_max = 0;
  bool first = true;
  for (const auto& [key, v] : entries) {
    t_min = std::min(t_min, key.first);
    t_max = std::max(t_max, key.first);
    if (first) {
      d_min = d_max = key.second;
      first = false;
    }
    d_min = std::min(d_min, key.second);
    d_max = std::max(d_max, key.second);
  }
  std::vector<long> rows, cols;
  for (long t = t_min; t <= t_max; ++t) rows.push_back(t);
  for (long d = d_min; d <= d_max; ++d) cols.push_back(d);
  return render_grid(rows, cols, entries, "tot\\d");
}

} // namespace lagint
