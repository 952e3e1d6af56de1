#include "classdist/matrices.hpp"

#include <algorithm>
#include <sstream>

#include "classdist/arith.hpp"
#include "classdist/errors.hpp"

namespace classdist {

namespace {

long long pow_ll(long long base, long long exp) {
  long long result = 1;
  for (long long k = 0; k < exp; ++k) result *= base;
  return result;
}

using IntGrid = std::vector<std::vector<Integer>>;

// Scale each row by the lcm of its denominators.  Row scaling preserves
// rank; the scales are reported so determinants can be corrected.
IntGrid clear_denominators(const std::vector<std::vector<Rational>>& rows,
                           std::vector<Integer>* scales = nullptr) {
  IntGrid out(rows.size());
  if (scales) scales->assign(rows.size(), Integer(1));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Integer scale = 1;
    for (const auto& q : rows[r])
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den().get_mpz_t());
    out[r].reserve(rows[r].size());
    for (const auto& q : rows[r]) {
      Rational scaled = q * Rational(scale);
      out[r].push_back(scaled.get_num());  // denominator is 1 by construction
    }
    if (scales) (*scales)[r] = scale;
  }
  return out;
}

// Fraction-free (Bareiss) echelon; entries stay integral because every
// intermediate value is a minor of the input.
std::size_t bareiss_rank(IntGrid w) {
  if (w.empty()) return 0;
  const std::size_t rows = w.size();
  const std::size_t cols = w[0].size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && w[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(w[pivot], w[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer t = w[rank][col] * w[i][j] - w[i][col] * w[rank][j];
        mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w[i][col] = 0;
    }
    prev = w[rank][col];
    ++rank;
  }
  return rank;
}

// Bareiss determinant of a square integer grid.
Integer bareiss_det(IntGrid w) {
  const std::size_t side = w.size();
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < side; ++k) {
    std::size_t pivot = k;
    while (pivot < side && w[pivot][k] == 0) ++pivot;
    if (pivot == side) return 0;
    if (pivot != k) {
      std::swap(w[pivot], w[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < side; ++i) {
      for (std::size_t j = k + 1; j < side; ++j) {
        Integer t = w[k][k] * w[i][j] - w[i][k] * w[k][j];
        mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  return sign > 0 ? w[side - 1][side - 1] : Integer(-w[side - 1][side - 1]);
}

std::vector<std::vector<Rational>> matrix_rows(const DivisorMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.side());
  for (std::size_t r = 0; r < m.side(); ++r) {
    rows[r].reserve(m.side());
    for (std::size_t c = 0; c < m.side(); ++c) rows[r].push_back(m.at(r, c));
  }
  return rows;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

Rational make_rational(long long num, long long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(to_integer(num), to_integer(den));
  q.canonicalize();
  return q;
}

DivisorMatrix::DivisorMatrix(long long n) : n_(n) {
  if (n <= 0) throw DomainError("matrix parameter must be positive");
  for (long long j : divisor_set(n).divisors)
    for (long long i : divisor_set(j).divisors) index_.emplace_back(i, j);
  for (std::size_t pos = 0; pos < index_.size(); ++pos) positions_[index_[pos]] = pos;
  entries_.assign(index_.size() * index_.size(), Rational(0));
}

std::size_t DivisorMatrix::position(long long i, long long j) const {
  auto it = positions_.find({i, j});
  if (it == positions_.end()) throw DomainError("no such divisor pair index");
  return it->second;
}

bool DivisorMatrix::operator==(const DivisorMatrix& other) const {
  return n_ == other.n_ && entries_ == other.entries_;
}

DivisorMatrix lhs_matrix(long long n) {
  DivisorMatrix m(n);
  for (std::size_t row = 0; row < m.side(); ++row) {
    auto [i, j] = m.index()[row];
    for (std::size_t col = 0; col < m.side(); ++col) {
      auto [d, c] = m.index()[col];
      if (i % d == 0 && lcm_ll(i, c) % j == 0)
        m.at(row, col) = to_rational(totient(d) * (n / lcm_ll(j, c)));
    }
  }
  return m;
}

DivisorMatrix rhs_matrix(long long n) {
  DivisorMatrix m(n);
  const auto n_divisors = divisor_set(n).divisors;
  for (std::size_t row = 0; row < m.side(); ++row) {
    auto [i, j] = m.index()[row];
    auto profile = generating_coset_profile(i, j);
    for (long long d : divisor_set(profile.v).divisors) {
      const long long target = j / profile.v * d;
      for (long long c : n_divisors) {
        if (c % d != 0 || lcm_ll(i, c) % j != 0) continue;
        std::size_t col = m.position(target, c);
        m.at(row, col) += to_rational(profile.u * totient(d) * (n / lcm_ll(j, c)));
      }
    }
  }
  return m;
}

Rational det_exact(const DivisorMatrix& m) {
  std::vector<Integer> scales;
  IntGrid grid = clear_denominators(matrix_rows(m), &scales);
  Integer det_scaled = bareiss_det(std::move(grid));
  Rational det(det_scaled);
  for (const auto& s : scales) det /= Rational(s);
  return det;
}

std::size_t rank_exact(const DivisorMatrix& m) {
  return bareiss_rank(clear_denominators(matrix_rows(m)));
}

std::size_t eigenspace_dimension(const DivisorMatrix& m, const Rational& lambda) {
  auto rows = matrix_rows(m);
  for (std::size_t k = 0; k < rows.size(); ++k) rows[k][k] -= lambda;
  return m.side() - bareiss_rank(clear_denominators(rows));
}

DivisorMatrix inverse(const DivisorMatrix& m) {
  const std::size_t side = m.side();
  // Gauss-Jordan on [M | I].
  std::vector<std::vector<Rational>> aug(side, std::vector<Rational>(2 * side, Rational(0)));
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) aug[r][c] = m.at(r, c);
    aug[r][side + r] = 1;
  }
  for (std::size_t col = 0; col < side; ++col) {
    std::size_t pivot = col;
    while (pivot < side && aug[pivot][col] == 0) ++pivot;
    if (pivot == side) throw DomainError("matrix is singular");
    std::swap(aug[pivot], aug[col]);
    Rational inv_pivot = 1 / aug[col][col];
    for (std::size_t j = col; j < 2 * side; ++j) aug[col][j] *= inv_pivot;
    for (std::size_t r = 0; r < side; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rational factor = aug[r][col];
      for (std::size_t j = col; j < 2 * side; ++j) aug[r][j] -= factor * aug[col][j];
    }
  }
  DivisorMatrix out(m.n());
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c) out.at(r, c) = aug[r][side + c];
  return out;
}

DivisorMatrix multiply(const DivisorMatrix& a, const DivisorMatrix& b) {
  if (a.n() != b.n()) throw DomainError("matrix parameter mismatch");
  const std::size_t side = a.side();
  DivisorMatrix out(a.n());
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t k = 0; k < side; ++k) {
      const Rational& left = a.at(r, k);
      if (left == 0) continue;
      for (std::size_t c = 0; c < side; ++c) {
        if (b.at(k, c) == 0) continue;
        out.at(r, c) += left * b.at(k, c);
      }
    }
  }
  return out;
}

DivisorMatrix transfer_matrix(long long n) {
  return multiply(rhs_matrix(n), inverse(lhs_matrix(n)));
}

DivisorMatrix kronecker(const DivisorMatrix& a, const DivisorMatrix& b) {
  if (gcd_ll(a.n(), b.n()) != 1) throw DomainError("tensor parameters must be coprime");
  DivisorMatrix out(a.n() * b.n());
  for (std::size_t ra = 0; ra < a.side(); ++ra) {
    auto [i, j] = a.index()[ra];
    for (std::size_t rb = 0; rb < b.side(); ++rb) {
      auto [bi, bj] = b.index()[rb];
      std::size_t row = out.position(i * bi, j * bj);
      for (std::size_t ca = 0; ca < a.side(); ++ca) {
        auto [d, c] = a.index()[ca];
        if (a.at(ra, ca) == 0) continue;
        for (std::size_t cb = 0; cb < b.side(); ++cb) {
          auto [bd, bc] = b.index()[cb];
          std::size_t col = out.position(d * bd, c * bc);
          out.at(row, col) = a.at(ra, ca) * b.at(rb, cb);
        }
      }
    }
  }
  return out;
}

std::vector<Rational> kernel_witness(long long p, long long a, long long b) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (a < 1) throw DomainError("a must be at least 1");
  if (b < 0 || b > a - 1) throw DomainError("b must lie in [0, a-1]");
  DivisorMatrix shape(pow_ll(p, a));
  std::vector<Rational> w(shape.side(), Rational(0));
  const long long pb = pow_ll(p, b);
  const long long pb1 = pb * p;
  w[shape.position(pb, pb)] = 1;
  w[shape.position(pb, pb1)] = to_rational(p * p - 1);
  w[shape.position(pb1, pb1)] = to_rational(-p);
  return w;
}

std::map<Rational, long long> predicted_spectrum(long long n) {
  std::map<Rational, long long> spectrum;
  for (long long d : divisor_set(n).divisors)
    spectrum[make_rational(mobius(d), d)] += tau(n / d);
  return spectrum;
}

VerificationReport verify_spectrum(long long n) {
  VerificationReport report;
  report.check_name = "transfer_spectrum";
  report.subject = "n=" + std::to_string(n);

  DivisorMatrix m = transfer_matrix(n);
  auto spectrum = predicted_spectrum(n);

  long long total = 0;
  Rational expected_trace(0);
  Rational expected_det(1);
  for (const auto& [lambda, mult] : spectrum) {
    long long dim = static_cast<long long>(eigenspace_dimension(m, lambda));
    report.expect("eigenspace dim at " + to_string(lambda), mult, dim);
    total += dim;
    expected_trace += lambda * to_rational(mult);
    for (long long k = 0; k < mult; ++k) expected_det *= lambda;
  }
  report.expect("sum of eigenspace dimensions", static_cast<long long>(m.side()), total);

  Rational trace(0);
  for (std::size_t k = 0; k < m.side(); ++k) trace += m.at(k, k);
  report.expect("trace", to_string(expected_trace), to_string(trace));
  report.expect("determinant", to_string(expected_det), to_string(det_exact(m)));
  return report;
}

VerificationReport verify_prime_power_kernel(long long p, long long a) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (a < 1) throw DomainError("a must be at least 1");
  const long long n = pow_ll(p, a);

  VerificationReport report;
  report.check_name = "prime_power_kernel";
  report.subject = "p=" + std::to_string(p) + " a=" + std::to_string(a);

  DivisorMatrix lhs = lhs_matrix(n);
  DivisorMatrix rhs = rhs_matrix(n);

  // Rows of the rhs matrix at (p^r, p^s) with r >= 1 are scalar multiples
  // of the r = 0 row, which forces the rank deficiency a(a-1)/2.
  for (long long s = 2; s <= a; ++s) {
    for (long long r = 1; r < s; ++r) {
      std::size_t row_rs = rhs.position(pow_ll(p, r), pow_ll(p, s));
      std::size_t row_0s = rhs.position(1, pow_ll(p, s));
      Rational factor = to_rational(pow_ll(p, r));
      bool proportional = true;
      for (std::size_t col = 0; col < rhs.side(); ++col)
        if (rhs.at(row_rs, col) != factor * rhs.at(row_0s, col)) proportional = false;
      report.expect("row (" + std::to_string(pow_ll(p, r)) + "," + std::to_string(pow_ll(p, s)) +
                        ") = p^" + std::to_string(r) + " * row (1," + std::to_string(pow_ll(p, s)) +
                        ")",
                    "true", proportional ? "true" : "false");
    }
  }

  // Kernel witnesses of p*rhs + lhs.
  std::vector<std::vector<Rational>> witnesses;
  Rational p_rat = to_rational(p);
  for (long long b = 0; b < a; ++b) {
    auto w = kernel_witness(p, a, b);
    bool annihilates = true;
    for (std::size_t col = 0; col < lhs.side(); ++col) {
      Rational sum(0);
      for (std::size_t row = 0; row < lhs.side(); ++row)
        sum += w[row] * (p_rat * rhs.at(row, col) + lhs.at(row, col));
      if (sum != 0) annihilates = false;
    }
    report.expect("witness " + std::to_string(b) + " annihilates p*rhs+lhs", "true",
                  annihilates ? "true" : "false");
    witnesses.push_back(std::move(w));
  }
  report.expect("witness independence rank", a,
                static_cast<long long>(bareiss_rank(clear_denominators(witnesses))));

  // Columnwise form of the same identity, assembled from four rows.
  for (long long b = 0; b < a; ++b) {
    const long long pb = pow_ll(p, b);
    const long long pb1 = pb * p;
    std::size_t row_bb = lhs.position(pb, pb);
    std::size_t row_bb1 = lhs.position(pb, pb1);
    std::size_t row_b1b1 = lhs.position(pb1, pb1);
    bool all_zero = true;
    for (std::size_t col = 0; col < lhs.side(); ++col) {
      Rational value = to_rational(p + 1) * lhs.at(row_bb, col) +
                       to_rational(p * p - 1) *
                           (p_rat * rhs.at(row_bb1, col) + lhs.at(row_bb1, col)) -
                       to_rational(p * (p + 1)) * lhs.at(row_b1b1, col);
      if (value != 0) all_zero = false;
    }
    report.expect("columnwise identity at b=" + std::to_string(b), "true",
                  all_zero ? "true" : "false");
  }

  // Exact eigenspace dimensions of the transfer matrix.
  DivisorMatrix m = multiply(rhs, inverse(lhs));
  report.expect("dim at 1", a + 1, static_cast<long long>(eigenspace_dimension(m, Rational(1))));
  report.expect("dim at -1/p", a,
                static_cast<long long>(eigenspace_dimension(m, make_rational(-1, p))));
  report.expect("dim at 0", a * (a - 1) / 2,
                static_cast<long long>(eigenspace_dimension(m, Rational(0))));
  return report;
}

std::string to_csv(const DivisorMatrix& m) {
  std::ostringstream out;
  auto label = [](std::pair<long long, long long> ij) {
    return "\"(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")\"";
  };
  out << "\"\"";
  for (const auto& ij : m.index()) out << "," << label(ij);
  out << "\n";
  for (std::size_t r = 0; r < m.side(); ++r) {
    out << label(m.index()[r]);
    for (std::size_t c = 0; c < m.side(); ++c) out << "," << to_string(m.at(r, c));
    out << "\n";
  }
  return out.str();
}

}  // namespace classdist
