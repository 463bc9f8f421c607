#pragma once

#include <map>
#include <string>

namespace lagint {

/// Truncation window for bigraded homology: homological degrees in
/// [homological_min, 0] and internal degrees in [0, internal_max].
struct Window {
  int homological_min = -4;
  long internal_max = 10;
};

/// Finite map (homological degree k <= 0, internal degree d >= 0) -> dim,
/// with an explicit truncation window; zero entries are not stored.
struct BigradedDimsTable {
  int k_min = 0;
  long d_max = 0;
  std::map<std::pair<int, long>, unsigned long> entries;

  void set(int k, long d, unsigned long value) {
    if (value != 0) entries[{k, d}] = value;
  }
  unsigned long at(int k, long d) const {
    auto it = entries.find({k, d});
    return it == entries.end() ? 0 : it->second;
  }
  bool operator==(const BigradedDimsTable& o) const {
    return k_min == o.k_min && d_max == o.d_max && entries == o.entries;
  }
  std::string to_string() const;
};

/// Dimension table keyed by (total degree >= 0, internal degree in Z); used
/// for closed-form and equivariant assemblies where duality reindexing can
/// produce negative internal degrees.
struct TotalDimsTable {
  std::map<std::pair<long, long>, unsigned long> entries;

  void set(long total, long d, unsigned long value) {
    if (value != 0) entries[{total, d}] = value;
  }
  unsigned long at(long total, long d) const {
    auto it = entries.find({total, d});
    return it == entries.end() ? 0 : it->second;
  }
  bool operator==(const TotalDimsTable& o) const { return entries == o.entries; }
  std::string to_string() const;
};

} // namespace lagint
