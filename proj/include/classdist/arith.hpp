#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace classdist {

/// All positive divisors of n, sorted ascending.
struct DivisorSet {
  long long n = 1;
  std::vector<long long> divisors;
};

/// Element-order census of one generating coset of C_i inside C_j.
///
/// v is the largest divisor of i coprime with j/i and u = i/v.  Every
/// element of a generating coset has order divisible by j/v, and for each
/// d | v the coset holds exactly u*phi(d) elements of order j*d/v.
struct CosetOrderProfile {
  long long i = 1;
  long long j = 1;
  long long u = 1;
  long long v = 1;
  std::map<long long, long long> order_counts;
};

DivisorSet divisor_set(long long n);

/// Euler's totient.
long long totient(long long n);

/// Mobius function, in {-1, 0, 1}.
int mobius(long long n);

/// Number of divisors.
long long tau(long long n);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

bool is_prime(long long n);

/// Prime factorization as (prime, exponent) pairs, ascending primes.
std::vector<std::pair<long long, int>> factorize(long long n);

/// Order census of a generating coset of the order-i cyclic subgroup
/// inside the cyclic group of order j.  Requires i | j.
CosetOrderProfile generating_coset_profile(long long i, long long j);

}  // namespace classdist
