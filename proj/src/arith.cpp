#include "classdist/arith.hpp"

#include <algorithm>
#include <numeric>

#include "classdist/errors.hpp"

namespace classdist {

namespace {

constexpr long long kPrimeTableLimit = 10000;

// Primes up to kPrimeTableLimit, sieved once.
const std::vector<long long>& prime_table() {
  static const std::vector<long long> primes = [] {
    std::vector<long long> out;
    std::vector<bool> composite(kPrimeTableLimit + 1, false);
    for (long long p = 2; p <= kPrimeTableLimit; ++p) {
      if (composite[static_cast<std::size_t>(p)]) continue;
      out.push_back(p);
      for (long long q = p * p; q <= kPrimeTableLimit; q += p)
        composite[static_cast<std::size_t>(q)] = true;
    }
    return out;
  }();
  return primes;
}

void require_positive(long long n) {
  if (n <= 0) throw DomainError("argument must be a positive integer");
}

}  // namespace

std::vector<std::pair<long long, int>> factorize(long long n) {
  require_positive(n);
  std::vector<std::pair<long long, int>> factors;
  long long rest = n;
  auto strip = [&](long long p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  };
  for (long long p : prime_table()) {
    if (p * p > rest) break;
    strip(p);
  }
  // Trial division past the table; needed only for n > table_limit^2.
  for (long long p = kPrimeTableLimit + 1; p * p <= rest; p += 2) strip(p);
  if (rest > 1) factors.emplace_back(rest, 1);
  return factors;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

DivisorSet divisor_set(long long n) {
  require_positive(n);
  DivisorSet ds;
  ds.n = n;
  ds.divisors = {1};
  for (auto [p, e] : factorize(n)) {
    std::size_t existing = ds.divisors.size();
    long long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t idx = 0; idx < existing; ++idx)
        ds.divisors.push_back(ds.divisors[idx] * pk);
    }
  }
  std::sort(ds.divisors.begin(), ds.divisors.end());
  return ds;
}

long long totient(long long n) {
  require_positive(n);
  long long result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

int mobius(long long n) {
  require_positive(n);
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

long long tau(long long n) {
  require_positive(n);
  long long count = 1;
  for (auto [p, e] : factorize(n)) count *= e + 1;
  return count;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

CosetOrderProfile generating_coset_profile(long long i, long long j) {
  require_positive(i);
  require_positive(j);
  if (j % i != 0) throw DomainError("generating_coset_profile: i must divide j");
  CosetOrderProfile profile;
  profile.i = i;
  profile.j = j;
  long long quotient = j / i;
  long long v = i;
  for (long long g = std::gcd(v, quotient); g > 1; g = std::gcd(v, quotient))
    v /= g;
  profile.v = v;
  profile.u = i / v;
  for (long long d : divisor_set(v).divisors)
    profile.order_counts[j / v * d] = profile.u * totient(d);
  return profile;
}

}  // namespace classdist
