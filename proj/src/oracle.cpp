#include "permpat/oracle.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <thread>

#include "permpat/transforms.hpp"

namespace permpat {

namespace {

long long factorial(int m) {
  long long f = 1;
  for (int i = 2; i <= m; ++i)
    f *= i;
  return f;
}

void check_depth(int m_max, const OracleOptions& opts) {
  if (m_max < 1)
    throw std::invalid_argument("m_max must be at least 1");
  if (m_max > 10)
    throw std::invalid_argument("m_max " + std::to_string(m_max) +
                                " is above the hard ceiling of 10");
  if (m_max > 8 && !opts.allow_deep)
    throw std::invalid_argument("m_max above 8 requires the deep-scan override");
}

struct BudgetMeter {
  unsigned long long budget;
  unsigned long long spent = 0;

  // Charged per scanned length, before the scan, as m! x |patterns|.
  void charge(unsigned long long planned) {
    if (planned > budget - spent)
      throw budget_exceeded("containment-check budget of " + std::to_string(budget) +
                            " exceeded");
    spent += planned;
  }
};

// All permutations of [m] with the given first letter, lexicographic;
// stops early when fn returns false.
template <typename F>
void for_each_with_first(int m, int first, F&& fn) {
  std::vector<int> rest;
  rest.reserve(static_cast<size_t>(m) - 1);
  for (int v = 1; v <= m; ++v)
    if (v != first)
      rest.push_back(v);
  std::vector<int> letters(static_cast<size_t>(m));
  letters[0] = first;
  do {
    std::copy(rest.begin(), rest.end(), letters.begin() + 1);
    if (!fn(Permutation{std::vector<int>(letters)}))
      return;
  } while (std::next_permutation(rest.begin(), rest.end()));
}

int resolve_threads(const OracleOptions& opts, int shards) {
  int t = opts.max_threads > 0 ? opts.max_threads
                               : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1)
    t = 1;
  return std::min(t, shards);
}

// Runs task(1..shards) and returns results in shard order; shards share
// nothing, so any schedule yields the same merged output.
template <typename Task>
auto run_shards(int shards, int threads, Task task) {
  using Out = decltype(task(1));
  std::vector<Out> results;
  results.reserve(static_cast<size_t>(shards));
  if (threads <= 1) {
    for (int s = 1; s <= shards; ++s)
      results.push_back(task(s));
  } else {
    std::vector<std::future<Out>> futures;
    futures.reserve(static_cast<size_t>(shards));
    for (int s = 1; s <= shards; ++s)
      futures.push_back(std::async(std::launch::async, task, s));
    for (auto& f : futures)
      results.push_back(f.get());
  }
  return results;
}

}  // namespace

AvoidanceClass avoidance_class(const std::vector<Pattern>& patterns, int m_max,
                               ClassMode mode, const OracleOptions& opts) {
  check_depth(m_max, opts);
  const bool collect = mode == ClassMode::collect;
  AvoidanceClass result;
  result.patterns = patterns;
  result.collected = collect;
  BudgetMeter meter{opts.budget};

  Cache* cache = opts.semantics == BarredSemantics::subset ? opts.cache : nullptr;
  const std::string key = cache ? Cache::key_for(patterns) : std::string{};

  for (int m = 1; m <= m_max; ++m) {
    if (cache) {
      if (auto hit = cache->lookup(key, m); hit && (!collect || hit->members)) {
        result.counts.push_back(hit->count);
        if (collect)
          result.members.push_back(*hit->members);
        continue;
      }
    }
    meter.charge(static_cast<unsigned long long>(factorial(m)) * patterns.size());

    struct ShardOut {
      long long count = 0;
      std::vector<Permutation> members;
    };
    auto scan = [&](int first) {
      ShardOut out;
      for_each_with_first(m, first, [&](const Permutation& w) {
        if (avoids_all(w, patterns, opts.semantics)) {
          ++out.count;
          if (collect)
            out.members.push_back(w);
        }
        return true;
      });
      return out;
    };
    auto shards = run_shards(m, resolve_threads(opts, m), scan);

    long long count = 0;
    std::vector<Permutation> members;
    for (auto& s : shards) {
      count += s.count;
      if (collect)
        members.insert(members.end(), std::make_move_iterator(s.members.begin()),
                       std::make_move_iterator(s.members.end()));
    }
    result.counts.push_back(count);
    if (collect)
      result.members.push_back(members);
    if (cache) {
      Cache::Entry e;
      e.count = count;
      if (collect)
        e.members = std::move(members);
      cache->store(key, m, std::move(e));
    }
  }
  return result;
}

VerificationReport verify_equal(const std::vector<Pattern>& lhs,
                                const std::vector<Pattern>& rhs, int m_max,
                                const OracleOptions& opts) {
  check_depth(m_max, opts);
  BudgetMeter meter{opts.budget};

  VerificationReport report;
  for (int m = 1; m <= m_max; ++m) {
    meter.charge(static_cast<unsigned long long>(factorial(m)) * (lhs.size() + rhs.size()));

    struct ShardOut {
      std::optional<Permutation> witness;
      WitnessSide side = WitnessSide::left;
    };
    auto scan = [&](int first) {
      ShardOut out;
      for_each_with_first(m, first, [&](const Permutation& w) {
        const bool in_left = avoids_all(w, lhs, opts.semantics);
        const bool in_right = avoids_all(w, rhs, opts.semantics);
        if (in_left != in_right) {
          out.witness = w;
          out.side = in_left ? WitnessSide::left : WitnessSide::right;
          return false;
        }
        return true;
      });
      return out;
    };
    auto shards = run_shards(m, resolve_threads(opts, m), scan);

    for (const auto& s : shards) {
      if (s.witness) {
        report.status = VerifyStatus::counterexample;
        report.bound = m;
        report.witness = s.witness;
        report.witness_side = s.side;
        return report;
      }
    }
    report.bound = m;
  }
  report.status = VerifyStatus::equal_up_to_bound;
  return report;
}

namespace {

std::vector<Pattern> as_patterns(const std::vector<BarredPattern>& barred) {
  return {barred.begin(), barred.end()};
}

std::vector<Pattern> as_patterns(const std::vector<VincularPattern>& vincular) {
  return {vincular.begin(), vincular.end()};
}

}  // namespace

VerificationReport verify_coincidence(const std::vector<BarredPattern>& barred,
                                      const std::vector<VincularPattern>& vincular,
                                      int m_max, const OracleOptions& opts) {
  return verify_equal(as_patterns(barred), as_patterns(vincular), m_max, opts);
}

VerificationReport nat_co_semantic_check(const BarredPattern& b, int m_max,
                                         const OracleOptions& opts) {
  const auto bonds = bond_set(b);
  return verify_coincidence({b}, {bonds.begin(), bonds.end()}, m_max, opts);
}

std::optional<Permutation> find_counterexample(const std::vector<BarredPattern>& barred,
                                               const std::vector<VincularPattern>& vincular,
                                               int m_max, const OracleOptions& opts) {
  return verify_coincidence(barred, vincular, m_max, opts).witness;
}

}  // namespace permpat
