#pragma once

#include <string>
#include <vector>

#include "classdist/classes.hpp"
#include "classdist/report.hpp"

namespace classdist {

/// Equal distribution of classes over cosets: for every c | n and d | c
/// the representative order-d coset holds as many index-c classes as the
/// base subgroup does, and (stronger form) so does every order-d coset.
VerificationReport verify_equal_distribution(const ClassTable& table);

/// Every generating coset holds exactly as many classes as there are
/// non-splitting classes in the base subgroup; also checked for every
/// intermediate pair (K_i inside K_j).
VerificationReport verify_generating_coset_count(const ClassTable& table);

/// Three-way agreement, for every pair i | j | n, between the two formula
/// evaluations of the non-splitting class tally (subgroup side and
/// generating-coset side, both on the measured counts) and the direct
/// group count.
VerificationReport verify_coset_linear_system(const ClassTable& table);

/// The two closed-form expressions for each intermediate subgroup's own
/// class count (one from coset totals, one from subgroup totals), plus
/// the single-sum intermediate identity, against brute force.  All
/// arithmetic exact rational; non-integer outputs fail the check.
VerificationReport verify_subgroup_class_counts(const ClassTable& table);

/// The four properties of g -> g^a for gcd(a, |G|) = 1: subgroup
/// invariance (base subgroup and every intermediate one), preservation of
/// commuting pairs, permutation of classes, and coset translation.
VerificationReport verify_power_map_properties(const CosetStructure& cs, long long a);

VerificationReport verify_equal_distribution(const CosetStructure& cs);
VerificationReport verify_generating_coset_count(const CosetStructure& cs);
VerificationReport verify_coset_linear_system(const CosetStructure& cs);
VerificationReport verify_subgroup_class_counts(const CosetStructure& cs);

/// Entrywise tensor factorization of the lhs, rhs, and transfer matrices
/// for coprime parameters.
VerificationReport verify_tensor_factorization(long long m, long long big_m);

/// Smallest exponent a > 1 coprime to |G|.
long long smallest_coprime_exponent(const FiniteGroup& g);

/// The five group-level checks on one class table (the power-map check
/// uses the smallest valid exponent above 1).
std::vector<VerificationReport> verify_group_suite(const ClassTable& table);

struct CorpusSpec {
  std::string name;
  std::string text;
};

/// Runs the group suite on every spec (in parallel) and the parameter
/// checks for every n <= n_max: spectrum for all n, prime-power kernel
/// structure for every prime power, tensor factorization for every n with
/// a coprime split.  A spec that fails to load yields a failed "parse"
/// report; remaining entries still run.
std::vector<VerificationReport> run_corpus(const std::vector<CorpusSpec>& specs,
                                           long long n_max,
                                           std::size_t order_cap = kDefaultOrderCap);

}  // namespace classdist
