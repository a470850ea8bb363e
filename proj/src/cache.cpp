#include "permpat/cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "permpat/text.hpp"

namespace permpat {

Cache::Cache(std::filesystem::path file) : file_(std::move(file)) {
  std::ifstream in(file_);
  if (!in)
    return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    std::istringstream fields(line);
    std::string key, m_text, count_text, members_text;
    if (!std::getline(fields, key, '\t') || !std::getline(fields, m_text, '\t') ||
        !std::getline(fields, count_text, '\t'))
      continue;  // malformed record; the cache is only a memo
    // a fourth field may be empty (a collected class with no members), so
    // detect it by the separator count rather than by getline succeeding
    const bool has_members = std::count(line.begin(), line.end(), '\t') >= 3;
    std::getline(fields, members_text, '\t');
    try {
      Entry e;
      e.count = std::stoll(count_text);
      if (has_members) {
        std::vector<Permutation> members;
        std::istringstream items(members_text);
        std::string item;
        while (std::getline(items, item, ','))
          members.push_back(parse_permutation(item));
        e.members = std::move(members);
      }
      records_[{key, std::stoi(m_text)}] = std::move(e);
    } catch (const std::exception&) {
      continue;
    }
  }
}

std::string Cache::key_for(const std::vector<Pattern>& patterns) {
  std::vector<std::string> texts;
  texts.reserve(patterns.size());
  for (const Pattern& p : patterns)
    texts.push_back(format_pattern(p));
  std::sort(texts.begin(), texts.end());
  std::string key;
  for (size_t i = 0; i < texts.size(); ++i) {
    if (i)
      key += ',';
    key += texts[i];
  }
  return key;
}

std::optional<Cache::Entry> Cache::lookup(const std::string& key, int m) const {
  auto it = records_.find({key, m});
  if (it == records_.end())
    return std::nullopt;
  return it->second;
}

void Cache::store(const std::string& key, int m, Entry entry) {
  auto it = records_.find({key, m});
  if (it != records_.end()) {
    // only upgrade a count-only record to one with members; the loader
    // keeps the last record for a key, so appending suffices
    if (!entry.members || it->second.members)
      return;
    it->second = std::move(entry);
    append_record(key, m, it->second);
    return;
  }
  auto [pos, _] = records_.emplace(std::pair{key, m}, std::move(entry));
  append_record(key, m, pos->second);
}

void Cache::append_record(const std::string& key, int m, const Entry& e) const {
  if (file_.empty())
    return;
  std::ofstream out(file_, std::ios::app);
  if (!out)
    return;
  out << key << '\t' << m << '\t' << e.count;
  if (e.members) {
    out << '\t';
    for (size_t i = 0; i < e.members->size(); ++i) {
      if (i)
        out << ',';
      out << format_pattern((*e.members)[i]);
    }
  }
  out << '\n';
}

}  // namespace permpat
