#include "mcurve/syzygy/rank_engine.hpp"

#include <algorithm>
#include <cmath>

#include "mcurve/error.hpp"

namespace mcurve {

std::string to_string(RankMode mode) { return mode == RankMode::Exact ? "exact" : "modular-certified"; }

RankEngine::RankEngine(RankMode mode, std::uint64_t seed, std::size_t prime_count) {
  backend_.mode = mode;
  backend_.seed = seed;
  if (mode == RankMode::ModularCertified) {
    if (prime_count < 3) throw Error(ErrorKind::InvalidArgument, "modular backend needs at least 3 primes");
    backend_.primes_used = random_primes(seed, prime_count);
  }
}

std::vector<std::size_t> RankEngine::modular_ranks(const IntMatrix& m) const {
  std::vector<std::size_t> out;
  for (auto p : backend_.primes_used) out.push_back(rank_mod_p(m, p));
  return out;
}

const std::vector<std::uint64_t>& RankEngine::certificate_primes(std::size_t count) {
  if (certificate_primes_.size() < count) {
    // The base primes come first; the rest are drawn from a derived seed and
    // deduplicated against everything already in the list.
    std::vector<std::uint64_t> all = backend_.primes_used;
    const auto extra = random_primes(backend_.seed ^ 0x9e3779b97f4a7c15ULL, count + all.size());
    for (auto p : extra) {
      if (all.size() >= count) break;
      if (std::find(all.begin(), all.end(), p) == all.end()) all.push_back(p);
    }
    certificate_primes_ = std::move(all);
  }
  return certificate_primes_;
}

std::size_t RankEngine::certified_rank(const IntMatrix& m, std::size_t known_lower) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;
  // If the rank over Q exceeded best, some (best+1)-minor would be a nonzero
  // integer below 2^bits; every prime is at least 2^61, so enough distinct
  // primes cannot all divide it.
  std::size_t best = std::min(known_lower, full);
  std::size_t used = 0;
  while (best < full) {
    const auto needed = static_cast<std::size_t>(std::floor(hadamard_bits(m, best + 1) / 61.0)) + 1;
    if (used >= needed) break;
    const auto& primes = certificate_primes(needed);
    backend_.max_certificate_primes = std::max(backend_.max_certificate_primes, needed);
    bool grew = false;
    for (; used < needed; ++used) {
      const std::size_t r = rank_mod_p(m, primes[used]);
      if (r > best) {
        best = r;
        ++used;
        grew = true;
        break;
      }
    }
    if (!grew) break;
  }
  return best;
}

std::size_t RankEngine::rank(const IntMatrix& m, bool verdict_critical) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (backend_.mode == RankMode::Exact) {
    ++backend_.exact_verifications;
    return rank_exact(m);
  }
  auto ranks = modular_ranks(m);
  backend_.modular_ranks += ranks.size();
  const auto [lo, hi] = std::minmax_element(ranks.begin(), ranks.end());
  const std::size_t best = *hi;
  const bool disagree = *lo != *hi;
  const bool full = best == std::min(m.rows(), m.cols());
  if (disagree || (verdict_critical && !full)) {
    ++backend_.exact_verifications;
    const std::size_t exact = certified_rank(m, best);
    if (disagree || exact != best) backend_.exact_fallback_triggered = true;
    return exact;
  }
  return best;
}

}  // namespace mcurve
