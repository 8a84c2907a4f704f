#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mcurve/syzygy/linalg.hpp"

namespace mcurve {

enum class RankMode { Exact, ModularCertified };

std::string to_string(RankMode mode);

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Backend metadata echoed in reports.
struct RankBackend {
  RankMode mode = RankMode::ModularCertified;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::uint64_t> primes_used;
  bool exact_fallback_triggered = false;
  std::size_t exact_verifications = 0;
  std::size_t modular_ranks = 0;
  /// Largest number of primes one rank certificate needed.
  std::size_t max_certificate_primes = 0;
};

/// Computes matrix ranks either exactly or modulo several random 62-bit
/// primes. In exact mode every rank comes from fraction-free elimination.
/// In modular mode the reported rank is the maximum over the primes, which
/// is a lower bound for the rank over Q.
///
/// Ranks flagged verdict-critical are verified exactly unless the modular
/// rank already equals min(rows, cols). The verification is a multi-modular
/// certificate: a nonzero minor is an integer bounded by Hadamard's bound,
/// so once the product of the primes exceeds that bound some prime keeps it
/// nonzero and the maximum modular rank is the rank over Q. Disagreement
/// between primes, or a certified rank above the modular one, sets
/// exact_fallback_triggered.
///
/// Not thread-safe: one engine per orchestration thread.
class RankEngine {
 public:
  explicit RankEngine(RankMode mode = RankMode::ModularCertified, std::uint64_t seed = kDefaultSeed,
                      std::size_t prime_count = 3);

  std::size_t rank(const IntMatrix& m, bool verdict_critical = false);

  /// Rank over Q proven by enough primes to exceed the Hadamard bound on the
  /// next larger minor. known_lower must be a true lower bound, such as a
  /// rank modulo some prime.
  std::size_t certified_rank(const IntMatrix& m, std::size_t known_lower = 0);

  /// Rank modulo every prime (diagnostics and differential tests).
  std::vector<std::size_t> modular_ranks(const IntMatrix& m) const;

  RankMode mode() const { return backend_.mode; }
  const std::vector<std::uint64_t>& primes() const { return backend_.primes_used; }
  const RankBackend& backend() const { return backend_; }
  void note_fallback() { backend_.exact_fallback_triggered = true; }

 private:
  const std::vector<std::uint64_t>& certificate_primes(std::size_t count);

  RankBackend backend_;
  std::vector<std::uint64_t> certificate_primes_;
};

}  // namespace mcurve
