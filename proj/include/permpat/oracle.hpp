#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "permpat/cache.hpp"
#include "permpat/matcher.hpp"

namespace permpat {

class budget_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  // Elementary containment checks, charged as m! x |patterns| per scanned
  // length before the scan starts.
  unsigned long long budget = 1'000'000'000ULL;
  int max_threads = 0;         // 0 = hardware concurrency
  bool allow_deep = false;     // permit m_max of 9 or 10; 10 is a hard ceiling
  BarredSemantics semantics = BarredSemantics::subset;
  Cache* cache = nullptr;      // optional memo; consulted under subset semantics only
};

enum class ClassMode { collect, count };

struct AvoidanceClass {
  std::vector<Pattern> patterns;
  std::vector<long long> counts;                  // counts[m-1] for m = 1..m_max
  std::vector<std::vector<Permutation>> members;  // lexicographic, collect mode only
  bool collected = false;
};

// Exact scan of all m! permutations for every m <= m_max.
AvoidanceClass avoidance_class(const std::vector<Pattern>& patterns, int m_max,
                               ClassMode mode = ClassMode::collect,
                               const OracleOptions& opts = {});

enum class VerifyStatus { equal_up_to_bound, counterexample };

// The side whose avoidance class holds the witness (the witness avoids that
// side's patterns and contains one from the other side).
enum class WitnessSide { left, right };

struct VerificationReport {
  VerifyStatus status = VerifyStatus::equal_up_to_bound;
  int bound = 0;                       // largest length fully compared
  std::optional<Permutation> witness;  // minimal length, lexicographically least
  WitnessSide witness_side = WitnessSide::left;
};

// Membership comparison of Av(lhs) and Av(rhs), length by length, stopping
// at the first counterexample. Deterministic for any thread count.
VerificationReport verify_equal(const std::vector<Pattern>& lhs,
                                const std::vector<Pattern>& rhs, int m_max,
                                const OracleOptions& opts = {});

// left = the barred side, right = the vincular side.
VerificationReport verify_coincidence(const std::vector<BarredPattern>& barred,
                                      const std::vector<VincularPattern>& vincular,
                                      int m_max, const OracleOptions& opts = {});

// Av(b) vs Av(bond(b)).
VerificationReport nat_co_semantic_check(const BarredPattern& b, int m_max,
                                         const OracleOptions& opts = {});

std::optional<Permutation> find_counterexample(const std::vector<BarredPattern>& barred,
                                               const std::vector<VincularPattern>& vincular,
                                               int m_max, const OracleOptions& opts = {});

}  // namespace permpat
