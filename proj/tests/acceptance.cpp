// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits nonzero if any criterion fails.  All comparisons are exact.
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "classdist/arith.hpp"
#include "classdist/classes.hpp"
#include "classdist/errors.hpp"
#include "classdist/matrices.hpp"
#include "classdist/theorems.hpp"
#include "oracles.hpp"

using namespace classdist;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct CorpusEntry {
  std::string name;
  ClassTable table;
};

std::vector<CorpusEntry>& corpus() {
  static std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    namespace fs = std::filesystem;
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(std::string(CLASSDIST_DATA_DIR) + "/corpus"))
      if (entry.path().extension() == ".grp") paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
      auto [g, h] = parse_group_spec(read_file(p.string()));
      CosetStructure cs = build_coset_structure(g, h);
      cs.label = p.stem().string();
      out.push_back({p.stem().string(), build_class_table(cs)});
    }
    return out;
  }();
  return entries;
}

double g_distribution_seconds = 0;  // criteria 1 and 2 share a runtime budget

bool criterion_equal_distribution(std::string& note) {
  auto start = Clock::now();
  bool ok = true;
  for (const auto& entry : corpus()) {
    auto report = verify_equal_distribution(entry.table);
    if (!report.passed) {
      ok = false;
      note += " counterexample in " + entry.name + ";";
    }
  }
  // the non-cyclic fixture must be rejected
  bool fired = false;
  try {
    auto [g, h] = parse_group_spec(
        read_file(std::string(CLASSDIST_DATA_DIR) + "/fixtures/noncyclic_c3xs4.grp"));
    build_coset_structure(g, h);
  } catch (const HypothesisError& e) {
    fired = std::string(e.what()).find("not cyclic") != std::string::npos;
  }
  if (!fired) {
    ok = false;
    note += " non-cyclic quotient check did not fire;";
  }
  g_distribution_seconds += seconds_since(start);
  note += " corpus size " + std::to_string(corpus().size());
  return ok;
}

bool criterion_generating_coset_count(std::string& note) {
  auto start = Clock::now();
  bool ok = true;
  for (const auto& entry : corpus())
    if (!verify_generating_coset_count(entry.table).passed) {
      ok = false;
      note += " counterexample in " + entry.name + ";";
    }
  g_distribution_seconds += seconds_since(start);
  note += " combined runtime " + std::to_string(g_distribution_seconds) + "s";
  if (g_distribution_seconds >= 5.0) {
    ok = false;
    note += " (budget 5s exceeded)";
  }
  return ok;
}

bool criterion_linear_system(std::string& note) {
  for (const auto& entry : corpus())
    if (!verify_coset_linear_system(entry.table).passed) {
      note += " counterexample in " + entry.name;
      return false;
    }
  return true;
}

bool criterion_subgroup_counts(std::string& note) {
  bool ok = true;
  for (const auto& entry : corpus())
    if (!verify_subgroup_class_counts(entry.table).passed) {
      ok = false;
      note += " counterexample in " + entry.name + ";";
    }
  // anchors for S4 over A4
  for (const auto& entry : corpus()) {
    if (entry.name != "s4_a4") continue;
    if (entry.table.own_counts.at(1) != 4 || entry.table.own_counts.at(2) != 5) {
      ok = false;
      note += " S* anchors (4, 5) violated;";
    }
  }
  return ok;
}

bool criterion_determinant(std::string& note) {
  auto start = Clock::now();
  bool ok = true;
  for (long long n = 1; n <= 200; ++n) {
    auto lhs = lhs_matrix(n);
    Rational expected(1);
    for (auto [i, j] : lhs.index()) expected *= to_rational(totient(i) * (n / j));
    Rational det = det_exact(lhs);
    if (det != expected || det == 0) {
      ok = false;
      note += " mismatch at n=" + std::to_string(n) + ";";
      break;
    }
  }
  if (det_exact(lhs_matrix(2)) != 2) {
    ok = false;
    note += " det anchor at n=2 violated;";
  }
  double elapsed = seconds_since(start);
  note += " runtime " + std::to_string(elapsed) + "s";
  if (elapsed >= 60.0) {
    ok = false;
    note += " (budget 60s exceeded)";
  }
  return ok;
}

bool criterion_spectrum(std::string& note) {
  auto start = Clock::now();
  bool ok = true;
  for (long long n = 1; n <= 200; ++n) {
    if (!verify_spectrum(n).passed) {
      ok = false;
      note += " spectrum mismatch at n=" + std::to_string(n) + ";";
      break;
    }
  }
  // anchor: n = 2 has dimensions (2, 1)
  auto m2 = transfer_matrix(2);
  if (eigenspace_dimension(m2, Rational(1)) != 2 ||
      eigenspace_dimension(m2, make_rational(-1, 2)) != 1) {
    ok = false;
    note += " n=2 anchor violated;";
  }
  // anchor: prime powers pool to dimensions (a+1, a, a(a-1)/2)
  for (long long n = 2; n <= 200; ++n) {
    auto factors = factorize(n);
    if (factors.size() != 1) continue;
    auto [p, a] = factors[0];
    auto predicted = predicted_spectrum(n);
    long long at_one = predicted.count(Rational(1)) ? predicted.at(Rational(1)) : 0;
    long long at_p = predicted.count(make_rational(-1, p)) ? predicted.at(make_rational(-1, p)) : 0;
    long long at_zero = predicted.count(Rational(0)) ? predicted.at(Rational(0)) : 0;
    if (at_one != a + 1 || at_p != a || at_zero != a * (a - 1) / 2) {
      ok = false;
      note += " prime-power pooling anchor violated at n=" + std::to_string(n) + ";";
      break;
    }
  }
  note += " runtime " + std::to_string(seconds_since(start)) + "s";
  return ok;
}

bool criterion_tensor(std::string& note) {
  auto start = Clock::now();
  std::vector<DivisorMatrix> lhs_cache, rhs_cache, transfer_cache;
  lhs_cache.reserve(121);
  for (long long n = 0; n <= 120; ++n) {
    lhs_cache.push_back(lhs_matrix(std::max<long long>(n, 1)));
    rhs_cache.push_back(rhs_matrix(std::max<long long>(n, 1)));
    transfer_cache.push_back(transfer_matrix(std::max<long long>(n, 1)));
  }
  long long pairs = 0;
  for (long long m = 1; m <= 120; ++m) {
    for (long long big = 1; m * big <= 120; ++big) {
      if (gcd_ll(m, big) != 1) continue;
      ++pairs;
      const long long n = m * big;
      if (!(lhs_cache[n] == kronecker(lhs_cache[m], lhs_cache[big])) ||
          !(rhs_cache[n] == kronecker(rhs_cache[m], rhs_cache[big])) ||
          !(transfer_cache[n] == kronecker(transfer_cache[m], transfer_cache[big]))) {
        note += " factorization fails at m=" + std::to_string(m) +
                " M=" + std::to_string(big);
        return false;
      }
    }
  }
  note += " " + std::to_string(pairs) + " coprime pairs, runtime " +
          std::to_string(seconds_since(start)) + "s";
  return true;
}

bool criterion_kernel_witnesses(std::string& note) {
  // anchor: (1, 3, -2) annihilates 2*rhs(2) + lhs(2)
  auto lhs2 = lhs_matrix(2);
  auto rhs2 = rhs_matrix(2);
  std::array<long long, 3> anchor = {1, 3, -2};
  for (std::size_t col = 0; col < 3; ++col) {
    Rational sum(0);
    for (std::size_t row = 0; row < 3; ++row)
      sum += to_rational(anchor[row]) * (Rational(2) * rhs2.at(row, col) + lhs2.at(row, col));
    if (sum != 0) {
      note += " hand anchor violated";
      return false;
    }
  }
  for (long long p : {2, 3, 5}) {
    for (long long a = 1; a <= 4; ++a) {
      auto report = verify_prime_power_kernel(p, a);
      bool witness_rows_ok = report.passed;
      if (!witness_rows_ok) {
        note += " failure at p=" + std::to_string(p) + " a=" + std::to_string(a);
        return false;
      }
    }
  }
  return true;
}

bool criterion_row_proportionality(std::string& note) {
  for (long long p : {2, 3, 5}) {
    for (long long a = 1; a <= 4; ++a) {
      long long n = 1;
      for (int k = 0; k < a; ++k) n *= p;
      auto rhs = rhs_matrix(n);
      for (long long s = 2; s <= a; ++s) {
        for (long long r = 1; r < s; ++r) {
          long long pr = 1, ps = 1;
          for (int k = 0; k < r; ++k) pr *= p;
          for (int k = 0; k < s; ++k) ps *= p;
          std::size_t row_rs = rhs.position(pr, ps);
          std::size_t row_0s = rhs.position(1, ps);
          for (std::size_t col = 0; col < rhs.side(); ++col) {
            if (rhs.at(row_rs, col) != to_rational(pr) * rhs.at(row_0s, col)) {
              note += " violated at p=" + std::to_string(p) + " a=" + std::to_string(a) +
                      " (r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")";
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool criterion_power_map(std::string& note) {
  for (const auto& entry : corpus()) {
    const long long order = static_cast<long long>(entry.table.cs.group.order());
    for (long long a = 1; a <= order; ++a) {
      if (std::gcd(a, order) != 1) continue;
      if (!verify_power_map_properties(entry.table.cs, a).passed) {
        note += " failure in " + entry.name + " at a=" + std::to_string(a);
        return false;
      }
    }
  }
  return true;
}

bool criterion_coset_profiles(std::string& note) {
  for (long long j = 1; j <= 200; ++j) {
    for (long long i : divisor_set(j).divisors) {
      auto profile = generating_coset_profile(i, j);
      const long long q = j / i;
      for (long long t = 0; t < q; ++t) {
        if (std::gcd(t, q) != 1) continue;
        if (profile.order_counts != oracle::coset_order_census(i, j, t)) {
          note += " census mismatch at i=" + std::to_string(i) + " j=" + std::to_string(j);
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_failure_path(std::string& note) {
  std::string command = std::string(CLASSDIST_CLI_PATH) + " verify --group " +
                        std::string(CLASSDIST_DATA_DIR) +
                        "/corpus/s4_a4.grp --inject-fault 2,2 2>&1";
  std::array<char, 4096> buffer{};
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    note += " could not launch CLI";
    return false;
  }
  while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
  int status = pclose(pipe);
  if (WEXITSTATUS(status) != 1) {
    note += " expected exit 1, got " + std::to_string(WEXITSTATUS(status));
    return false;
  }
  if (output.find("witness") == std::string::npos ||
      output.find("d=2") == std::string::npos || output.find("c=2") == std::string::npos) {
    note += " witness does not name the perturbed pair";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    std::string description;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 equal distribution of classes over cosets, bundled corpus", criterion_equal_distribution},
      {"2 generating-coset counts for every intermediate pair", criterion_generating_coset_count},
      {"3 linear-system three-way agreement", criterion_linear_system},
      {"4 subgroup class-count formulas against brute force", criterion_subgroup_counts},
      {"5 lhs determinant product formula for n <= 200", criterion_determinant},
      {"6 transfer spectrum for n <= 200", criterion_spectrum},
      {"7 tensor factorization for coprime splits up to 120", criterion_tensor},
      {"8 kernel witnesses for p in {2,3,5}, a <= 4", criterion_kernel_witnesses},
      {"9 rhs row proportionality for p in {2,3,5}, a <= 4", criterion_row_proportionality},
      {"10 power-map property suite over the corpus", criterion_power_map},
      {"11 generating-coset order census up to 200", criterion_coset_profiles},
      {"12 failure path: injected fault exits 1 with a witness", criterion_failure_path},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = criterion.run(note);
    } catch (const std::exception& e) {
      note += std::string(" exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion.description
              << (note.empty() ? "" : " —" + note) << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
