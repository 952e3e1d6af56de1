#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "classdist/report.hpp"

namespace classdist {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" (or plain "p" when integral) rendering.
std::string to_string(const Rational& q);

// gmpxx lacks long long constructors on LP64; funnel conversions here.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

Rational make_rational(long long num, long long den);

/// An exact-rational square matrix whose rows and columns are indexed by
/// the divisor pairs {(i,j) : j | n, i | j}, ordered by ascending j then
/// ascending i.  This order is normative for every serialized matrix.
class DivisorMatrix {
 public:
  explicit DivisorMatrix(long long n);

  long long n() const { return n_; }
  std::size_t side() const { return index_.size(); }
  const std::vector<std::pair<long long, long long>>& index() const { return index_; }

  std::size_t position(long long i, long long j) const;

  Rational& at(std::size_t row, std::size_t col) { return entries_[row * side() + col]; }
  const Rational& at(std::size_t row, std::size_t col) const {
    return entries_[row * side() + col];
  }

  bool operator==(const DivisorMatrix& other) const;

 private:
  long long n_;
  std::vector<std::pair<long long, long long>> index_;
  std::map<std::pair<long long, long long>, std::size_t> positions_;
  std::vector<Rational> entries_;
};

/// Left-hand-side coefficient matrix of the coset-counting linear system:
/// the row at (i,j) carries, per column (d,c), the number of times the
/// count for (d,c) enters the tally of non-splitting classes in the
/// intermediate subgroup of index i.
DivisorMatrix lhs_matrix(long long n);

/// Right-hand-side coefficient matrix: the analogous tally over a
/// generating coset, assembled from the coset order census.
DivisorMatrix rhs_matrix(long long n);

/// Exact determinant (fraction-free elimination over big integers after
/// clearing denominators).
Rational det_exact(const DivisorMatrix& m);

/// Rank over the rationals.
std::size_t rank_exact(const DivisorMatrix& m);

/// dim ker(M - lambda*I), via exact rank computation.
std::size_t eigenspace_dimension(const DivisorMatrix& m, const Rational& lambda);

/// Exact inverse (Gauss-Jordan over rationals); throws DomainError if singular.
DivisorMatrix inverse(const DivisorMatrix& m);

DivisorMatrix multiply(const DivisorMatrix& a, const DivisorMatrix& b);

/// rhs_matrix(n) * inverse(lhs_matrix(n)).
DivisorMatrix transfer_matrix(long long n);

/// Tensor product with the index identification (i,j) x (I,J) -> (iI, jJ);
/// rows and columns land in the canonical order for parameter a.n()*b.n().
/// The parameters must be coprime.
DivisorMatrix kronecker(const DivisorMatrix& a, const DivisorMatrix& b);

/// Row vector (indexed like the matrices for n = p^a) that annihilates
/// p*rhs + lhs: entry 1 at (p^b,p^b), p^2-1 at (p^b,p^(b+1)), -p at
/// (p^(b+1),p^(b+1)), 0 elsewhere.  Requires 0 <= b <= a-1.
std::vector<Rational> kernel_witness(long long p, long long a, long long b);

/// Predicted eigenvalue-multiplicity table for the transfer matrix of a
/// given n, with coinciding eigenvalues pooled (every non-squarefree
/// divisor contributes to the eigenvalue 0).
std::map<Rational, long long> predicted_spectrum(long long n);

/// Check that the transfer matrix is diagonalizable with the predicted
/// pooled spectrum, plus trace/determinant cross-checks.
VerificationReport verify_spectrum(long long n);

/// Prime-power structure checks for n = p^a: row proportionality of the
/// rhs matrix, the kernel witnesses of p*rhs + lhs (with independence and
/// a columnwise zero test of the defining identity), and the exact
/// eigenspace dimensions a+1, a, a(a-1)/2.
VerificationReport verify_prime_power_kernel(long long p, long long a);

/// CSV dump: first row/column carry the "(i,j)" index labels, entries are
/// exact rationals.
std::string to_csv(const DivisorMatrix& m);

}  // namespace classdist
