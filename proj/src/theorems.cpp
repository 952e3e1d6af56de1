#include "classdist/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "classdist/arith.hpp"
#include "classdist/errors.hpp"
#include "classdist/matrices.hpp"

namespace classdist {

namespace {

std::string subject_of(const CosetStructure& cs) {
  std::string subject = "|G|=" + std::to_string(cs.group.order()) +
                        " |H|=" + std::to_string(cs.subgroup.order()) +
                        " n=" + std::to_string(cs.n);
  if (!cs.label.empty()) subject = cs.label + ": " + subject;
  return subject;
}

// Classes of `table` whose coset exponent is e, filtered by centralizing index.
long long count_at_exponent(const ClassTable& table, long long e, long long c) {
  long long count = 0;
  for (const auto& cls : table.classes)
    if (table.cs.coset_of(cls.representative) == e && cls.centralizing_index == c) ++count;
  return count;
}

long long classes_at_exponent(const ClassTable& table, long long e) {
  long long count = 0;
  for (const auto& cls : table.classes)
    if (table.cs.coset_of(cls.representative) == e) ++count;
  return count;
}

// Direct data for one intermediate pair: K_j-classes in a generating coset
// of K_j/K_i versus non-splitting K_j-classes in K_i.
struct PairCounts {
  long long coset_side;
  long long subgroup_side;
};

PairCounts direct_pair_counts(const CosetStructure& cs, long long i, long long j) {
  FiniteGroup k_i = intermediate_subgroup(cs, i);
  FiniteGroup k_j = intermediate_subgroup(cs, j);
  CosetStructure sub = build_coset_structure(k_j, k_i);
  auto gamma = representative_coset(sub, sub.n);
  std::set<Permutation> gamma_set(gamma.begin(), gamma.end());
  long long in_coset = 0;
  for (const auto& cls : conjugacy_classes(k_j))
    if (gamma_set.count(cls.representative)) ++in_coset;
  long long unsplit = unsplit_class_count(k_j, k_i, k_i.elements());
  return {in_coset, unsplit};
}

// Simple index-parallel runner; each task owns its slot.
void parallel_tasks(std::vector<std::function<void()>> tasks) {
  unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(tasks.size()));
  if (workers <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t idx = next.fetch_add(1); idx < tasks.size(); idx = next.fetch_add(1))
        tasks[idx]();
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

VerificationReport verify_equal_distribution(const ClassTable& table) {
  const CosetStructure& cs = table.cs;
  VerificationReport report;
  report.check_name = "equal_distribution";
  report.subject = subject_of(cs);

  const auto divisors = divisor_set(cs.n).divisors;
  for (long long c : divisors) {
    const long long base = table.count(1, c);
    for (long long d : divisor_set(c).divisors) {
      report.expect("N[d=" + std::to_string(d) + ",c=" + std::to_string(c) + "] = N[d=1,c=" +
                        std::to_string(c) + "]",
                    base, table.count(d, c));
    }
  }

  // Stronger per-coset form: every order-d coset inside K_c, not only the
  // representative one.
  for (long long c : divisors) {
    const long long base = table.count(1, c);
    for (long long d : divisor_set(c).divisors) {
      for (long long e = 0; e < cs.n; ++e) {
        if (cs.coset_order_of_exponent(e) != d) continue;
        report.expect("coset e=" + std::to_string(e) + " count at c=" + std::to_string(c), base,
                      count_at_exponent(table, e, c));
      }
    }
  }
  return report;
}

VerificationReport verify_generating_coset_count(const ClassTable& table) {
  const CosetStructure& cs = table.cs;
  VerificationReport report;
  report.check_name = "generating_coset_count";
  report.subject = subject_of(cs);

  const long long unsplit_in_h =
      unsplit_class_count(cs.group, cs.subgroup, cs.subgroup.elements());
  for (long long e = 0; e < cs.n; ++e) {
    if (gcd_ll(e, cs.n) != 1) continue;  // gcd(0,1)=1 keeps the n=1 case
    report.expect("classes in generating coset e=" + std::to_string(e), unsplit_in_h,
                  classes_at_exponent(table, e));
  }

  for (long long j : divisor_set(cs.n).divisors) {
    for (long long i : divisor_set(j).divisors) {
      auto pair = direct_pair_counts(cs, i, j);
      report.expect("pair (i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                        ") coset count = non-splitting count",
                    pair.subgroup_side, pair.coset_side);
    }
  }
  return report;
}

VerificationReport verify_coset_linear_system(const ClassTable& table) {
  const CosetStructure& cs = table.cs;
  const long long n = cs.n;
  VerificationReport report;
  report.check_name = "coset_linear_system";
  report.subject = subject_of(cs);

  const auto n_divisors = divisor_set(n).divisors;
  for (long long j : n_divisors) {
    for (long long i : divisor_set(j).divisors) {
      long long lhs_value = 0;
      for (long long d : divisor_set(i).divisors)
        for (long long c : n_divisors)
          if (c % d == 0 && lcm_ll(i, c) % j == 0)
            lhs_value += totient(d) * (n / lcm_ll(j, c)) * table.count(d, c);

      auto profile = generating_coset_profile(i, j);
      long long rhs_value = 0;
      for (long long d : divisor_set(profile.v).divisors)
        for (long long c : n_divisors)
          if (c % d == 0 && lcm_ll(i, c) % j == 0)
            rhs_value += profile.u * totient(d) * (n / lcm_ll(j, c)) *
                         table.count(j / profile.v * d, c);

      auto pair = direct_pair_counts(cs, i, j);
      const std::string tag = "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ") ";
      report.expect(tag + "subgroup-side formula = coset-side formula", lhs_value, rhs_value);
      report.expect(tag + "subgroup-side formula = direct count", pair.subgroup_side, lhs_value);
      report.expect(tag + "coset-side formula = direct count", pair.coset_side, rhs_value);
    }
  }
  return report;
}

VerificationReport verify_subgroup_class_counts(const ClassTable& table) {
  const CosetStructure& cs = table.cs;
  const long long n = cs.n;
  VerificationReport report;
  report.check_name = "subgroup_class_counts";
  report.subject = subject_of(cs);

  const auto n_divisors = divisor_set(n).divisors;
  for (long long d : n_divisors) {
    const long long brute = table.own_counts.at(d);

    Rational from_coset_totals(0);
    for (long long c : n_divisors)
      for (long long a : divisor_set(c).divisors)
        from_coset_totals += to_rational(mobius(c / a)) *
                             make_rational(gcd_ll(a, d), lcm_ll(a, d)) *
                             to_rational(table.coset_totals.at(c));
    from_coset_totals *= to_rational(n);

    Rational from_subgroup_totals(0);
    for (long long c : n_divisors) {
      Rational inner(0);
      for (long long a : divisor_set(c).divisors)
        for (long long b : divisor_set(c).divisors)
          inner += to_rational(mobius(c / a) * mobius(c / b)) *
                   make_rational(gcd_ll(a, d), lcm_ll(a, d)) *
                   to_rational(table.subgroup_totals.at(b));
      from_subgroup_totals += inner / to_rational(totient(c));
    }
    from_subgroup_totals *= to_rational(n);

    Rational from_base_counts(0);
    for (long long c : n_divisors)
      from_base_counts += to_rational(n) * make_rational(gcd_ll(c, d), lcm_ll(c, d)) *
                          to_rational(table.count(1, c));

    const std::string tag = "d=" + std::to_string(d) + " ";
    report.expect(tag + "count from coset totals", std::to_string(brute),
                  to_string(from_coset_totals));
    report.expect(tag + "count from subgroup totals", std::to_string(brute),
                  to_string(from_subgroup_totals));
    report.expect(tag + "count from base-coset counts", std::to_string(brute),
                  to_string(from_base_counts));
  }
  return report;
}

VerificationReport verify_power_map_properties(const CosetStructure& cs, long long a) {
  const FiniteGroup& g = cs.group;
  VerificationReport report;
  report.check_name = "power_map";
  report.subject = subject_of(cs) + " a=" + std::to_string(a);

  auto sigma = power_map(g, a);

  // 1. Subgroup invariance, on the base subgroup and every intermediate one.
  for (long long d : divisor_set(cs.n).divisors) {
    FiniteGroup k = intermediate_subgroup(cs, d);
    bool invariant = true;
    for (const auto& elem : k.elements())
      if (!k.contains(g.element(sigma[g.index_of(elem)]))) invariant = false;
    report.expect("subgroup invariance at d=" + std::to_string(d), "true",
                  invariant ? "true" : "false");
  }

  // 2. Commuting pairs are preserved in both directions.
  bool commuting_ok = true;
  for (std::size_t x = 0; x < g.order() && commuting_ok; ++x) {
    for (std::size_t y = x + 1; y < g.order(); ++y) {
      const Permutation& gx = g.element(x);
      const Permutation& gy = g.element(y);
      bool before = gx * gy == gy * gx;
      bool after = g.element(sigma[x]) * g.element(sigma[y]) ==
                   g.element(sigma[y]) * g.element(sigma[x]);
      if (before != after) {
        commuting_ok = false;
        report.add_witness("non-preserved pair", gx.to_cycles() + ", " + gy.to_cycles());
        break;
      }
    }
  }
  report.expect("commuting pairs preserved", "true", commuting_ok ? "true" : "false");

  // 3. Conjugacy classes map onto conjugacy classes.
  auto classes = conjugacy_classes(g);
  std::vector<std::size_t> class_of(g.order());
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (const auto& m : classes[k].members) class_of[g.index_of(m)] = k;
  bool classes_ok = true;
  for (const auto& cls : classes) {
    std::vector<Permutation> image;
    for (const auto& m : cls.members) image.push_back(g.element(sigma[g.index_of(m)]));
    std::sort(image.begin(), image.end());
    const auto& target = classes[class_of[g.index_of(image.front())]];
    if (image != target.members) {
      classes_ok = false;
      report.add_witness("class not mapped to a class", cls.representative.to_cycles());
      break;
    }
  }
  report.expect("classes mapped onto classes", "true", classes_ok ? "true" : "false");

  // 4. Coset translation: the image of exponent e lies at exponent a*e mod n.
  bool cosets_ok = true;
  for (std::size_t idx = 0; idx < g.order(); ++idx) {
    long long e = cs.coset_exponent[idx];
    long long expected = (a % cs.n * e) % cs.n;
    if (expected < 0) expected += cs.n;
    if (cs.coset_exponent[sigma[idx]] != expected) {
      cosets_ok = false;
      report.add_witness("coset translation failure", g.element(idx).to_cycles());
      break;
    }
  }
  report.expect("coset translation", "true", cosets_ok ? "true" : "false");
  return report;
}

VerificationReport verify_equal_distribution(const CosetStructure& cs) {
  return verify_equal_distribution(build_class_table(cs));
}
VerificationReport verify_generating_coset_count(const CosetStructure& cs) {
  return verify_generating_coset_count(build_class_table(cs));
}
VerificationReport verify_coset_linear_system(const CosetStructure& cs) {
  return verify_coset_linear_system(build_class_table(cs));
}
VerificationReport verify_subgroup_class_counts(const CosetStructure& cs) {
  return verify_subgroup_class_counts(build_class_table(cs));
}

VerificationReport verify_tensor_factorization(long long m, long long big_m) {
  if (gcd_ll(m, big_m) != 1) throw DomainError("tensor parameters must be coprime");
  VerificationReport report;
  report.check_name = "tensor_factorization";
  report.subject = "m=" + std::to_string(m) + " M=" + std::to_string(big_m);
  const long long n = m * big_m;

  report.expect("lhs factorizes", "true",
                lhs_matrix(n) == kronecker(lhs_matrix(m), lhs_matrix(big_m)) ? "true" : "false");
  report.expect("rhs factorizes", "true",
                rhs_matrix(n) == kronecker(rhs_matrix(m), rhs_matrix(big_m)) ? "true" : "false");
  report.expect(
      "transfer factorizes", "true",
      transfer_matrix(n) == kronecker(transfer_matrix(m), transfer_matrix(big_m)) ? "true"
                                                                                  : "false");
  return report;
}

long long smallest_coprime_exponent(const FiniteGroup& g) {
  long long a = 2;
  while (gcd_ll(a, static_cast<long long>(g.order())) != 1) ++a;
  return a;
}

std::vector<VerificationReport> verify_group_suite(const ClassTable& table) {
  std::vector<VerificationReport> reports;
  reports.push_back(verify_equal_distribution(table));
  reports.push_back(verify_generating_coset_count(table));
  reports.push_back(verify_coset_linear_system(table));
  reports.push_back(verify_subgroup_class_counts(table));
  reports.push_back(
      verify_power_map_properties(table.cs, smallest_coprime_exponent(table.cs.group)));
  return reports;
}

std::vector<VerificationReport> run_corpus(const std::vector<CorpusSpec>& specs, long long n_max,
                                           std::size_t order_cap) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");

  struct Slot {
    std::vector<VerificationReport> reports;
  };
  std::vector<Slot> slots(specs.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t idx = 0; idx < specs.size(); ++idx) {
    tasks.push_back([idx, &specs, &slots, order_cap] {
      const CorpusSpec& spec = specs[idx];
      try {
        auto [g, h] = parse_group_spec(spec.text, order_cap);
        CosetStructure cs = build_coset_structure(g, h);
        cs.label = spec.name;
        slots[idx].reports = verify_group_suite(build_class_table(cs));
      } catch (const Error& err) {
        VerificationReport failure;
        failure.check_name = "parse";
        failure.subject = spec.name;
        failure.expect("load group spec", "ok", err.what());
        slots[idx].reports = {failure};
      }
    });
  }
  parallel_tasks(std::move(tasks));

  std::vector<VerificationReport> reports;
  for (auto& slot : slots)
    for (auto& r : slot.reports) reports.push_back(std::move(r));

  for (long long n = 1; n <= n_max; ++n) {
    reports.push_back(verify_spectrum(n));
    auto factors = factorize(n);
    if (n > 1 && factors.size() == 1)
      reports.push_back(verify_prime_power_kernel(factors[0].first, factors[0].second));
    if (factors.size() >= 2) {
      // Split off the smallest prime-power factor.
      long long m = 1;
      for (int k = 0; k < factors[0].second; ++k) m *= factors[0].first;
      reports.push_back(verify_tensor_factorization(m, n / m));
    }
  }
  return reports;
}

}  // namespace classdist
