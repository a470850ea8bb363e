#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permpat/pattern.hpp"

namespace permpat {

// On-disk memo of avoidance-class results. One record per line, tab
// separated: canonical pattern-set string, m, count, optional comma-joined
// member list. UTF-8, LF line endings. The cache is a pure memo: records
// are keyed by exact canonical strings and never recomputed or validated.
class Cache {
public:
  Cache() = default;                            // in-memory only
  explicit Cache(std::filesystem::path file);   // loads existing records

  struct Entry {
    long long count = 0;
    std::optional<std::vector<Permutation>> members;
  };

  // Canonical key: sorted canonical pattern texts joined by commas.
  static std::string key_for(const std::vector<Pattern>& patterns);

  std::optional<Entry> lookup(const std::string& key, int m) const;
  void store(const std::string& key, int m, Entry entry);

  size_t size() const { return records_.size(); }

private:
  std::filesystem::path file_;
  std::map<std::pair<std::string, int>, Entry> records_;

  void append_record(const std::string& key, int m, const Entry& e) const;
};

}  // namespace permpat
