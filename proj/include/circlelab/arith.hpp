#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "circlelab/errors.hpp"
#include "circlelab/util.hpp"

namespace circlelab {

// Sieve-backed primality / smallest-prime-factor table over [0, limit].
// Immutable after construction; safe to share across threads.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");
    spf_.assign(limit + 1, 0);
    primes_.reserve(limit > 16 ? static_cast<std::size_t>(limit / std::log(static_cast<double>(limit)) * 1.2)
                               : 8);
    // linear sieve: each composite crossed once by its smallest prime factor
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        spf_[i] = static_cast<std::uint32_t>(i);
        primes_.push_back(static_cast<std::uint32_t>(i));
      }
      for (std::uint32_t p : primes_) {
        if (p > spf_[i] || i * p > limit) break;
        spf_[i * p] = p;
      }
    }
  }

  std::uint64_t limit() const { return limit_; }

  bool is_prime(std::uint64_t m) const {
    check_range(m);
    return m >= 2 && spf_[m] == m;
  }

  // smallest prime factor; requires 2 <= m <= limit
  std::uint32_t spf(std::uint64_t m) const {
    if (m < 2 || m > limit_) throw std::invalid_argument("PrimeTable::spf: out of range");
    return spf_[m];
  }

  const std::vector<std::uint32_t>& primes() const { return primes_; }

  std::uint64_t prime_count(std::uint64_t n) const {
    check_range(n);
    std::uint64_t c = 0;
    for (std::uint32_t p : primes_) {
      if (p > n) break;
      ++c;
    }
    return c;
  }

 private:
  void check_range(std::uint64_t m) const {
    if (m > limit_) throw std::invalid_argument("PrimeTable: argument exceeds sieve limit");
  }

  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

struct Factorization {
  std::uint64_t value = 1;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;  // (prime, exponent), primes increasing
};

inline Factorization factorize(std::uint64_t m, const PrimeTable& t) {
  if (m < 1 || m > t.limit()) throw std::invalid_argument("factorize: out of table range");
  Factorization f;
  f.value = m;
  while (m > 1) {
    std::uint64_t p = t.spf(m);
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  return f;
}

// Trial-division factorization; used where no table of the right size is at hand
// (moduli in the singular series stay <= ~1e4).
inline Factorization factorize_trial(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("factorize_trial: m must be >= 1");
  Factorization f;
  f.value = m;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p == 0) {
      std::uint32_t e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      f.factors.emplace_back(p, e);
    }
  }
  if (m > 1) f.factors.emplace_back(m, 1);
  return f;
}

// Lambda(m): log p if m = p^k, else 0.
inline double von_mangoldt(std::uint64_t m, const PrimeTable& t) {
  if (m < 1 || m > t.limit()) throw std::invalid_argument("von_mangoldt: out of table range");
  if (m == 1) return 0.0;
  std::uint64_t p = t.spf(m);
  std::uint64_t r = m;
  while (r % p == 0) r /= p;
  return r == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

// (mu(q), phi(q)) via factorization.
inline std::pair<std::int64_t, std::uint64_t> mu_phi(std::uint64_t q) {
  if (q < 1) throw std::invalid_argument("mu_phi: q must be >= 1");
  Factorization f = factorize_trial(q);
  std::int64_t mu = 1;
  std::uint64_t phi = 1;
  for (auto [p, e] : f.factors) {
    if (e > 1) mu = 0;
    mu = -mu;
    phi *= (p - 1);
    for (std::uint32_t i = 1; i < e; ++i) phi *= p;
  }
  return {mu, phi};
}

// c_q(a) = sum over reduced residues r mod q of e(a r / q), an integer.
// Closed form mu(q/g') phi(q) / phi(q/g') with g' = q / gcd(a, q); the direct
// complex summation stays in the tests as an oracle.
inline std::int64_t ramanujan_sum(std::uint64_t q, std::uint64_t a) {
  if (q < 1) throw std::invalid_argument("ramanujan_sum: q must be >= 1");
  std::uint64_t g = gcd_u64(a % q == 0 ? q : a % q, q);
  std::uint64_t qg = q / g;
  auto [mu_qg, phi_qg] = mu_phi(qg);
  auto [mu_q, phi_q] = mu_phi(q);
  (void)mu_q;
  return mu_qg * static_cast<std::int64_t>(phi_q / phi_qg);
}

struct ProgressionCounts {
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> pi;   // pi(n; q, a), indexed by a in [0, q)
  std::vector<double> psi;         // psi(n; q, a)
};

// Exact counts of primes (and Lambda mass) <= n in each residue class mod q.
inline ProgressionCounts progression_counts(std::uint64_t n, std::uint64_t q, const PrimeTable& t) {
  if (q < 1) throw std::invalid_argument("progression_counts: q must be >= 1");
  if (n > t.limit()) throw std::invalid_argument("progression_counts: n exceeds sieve limit");
  ProgressionCounts pc;
  pc.n = n;
  pc.q = q;
  pc.pi.assign(q, 0);
  std::vector<KahanSum<double>> psi(q);
  for (std::uint32_t p : t.primes()) {
    if (p > n) break;
    pc.pi[p % q] += 1;
    double lp = std::log(static_cast<double>(p));
    for (std::uint64_t pk = p; pk <= n; pk *= p) {
      psi[pk % q].add(lp);
      if (pk > n / p) break;  // overflow guard
    }
  }
  pc.psi.resize(q);
  for (std::uint64_t a = 0; a < q; ++a) pc.psi[a] = psi[a].value();
  return pc;
}

}  // namespace circlelab
