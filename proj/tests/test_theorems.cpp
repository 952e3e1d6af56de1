#include <doctest.h>

#include <fstream>
#include <sstream>

#include "classdist/errors.hpp"
#include "classdist/theorems.hpp"
#include "oracles.hpp"

using namespace classdist;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string corpus_path(const std::string& name) {
  return std::string(CLASSDIST_DATA_DIR) + "/corpus/" + name;
}

ClassTable table_for(const std::string& corpus_file) {
  auto [g, h] = parse_group_spec(read_file(corpus_path(corpus_file)));
  auto cs = build_coset_structure(g, h);
  cs.label = corpus_file;
  return build_class_table(cs);
}

const std::vector<std::string> kCorpusFiles = {
    "s4_a4.grp", "d12_c6.grp", "q8_c4.grp", "dic3_c3.grp",
    "f20_c5.grp", "f21_c7.grp", "a4_v4.grp"};

}  // namespace

TEST_CASE("equal distribution holds on every corpus group") {
  for (const auto& file : kCorpusFiles) {
    auto report = verify_equal_distribution(table_for(file));
    CHECK(report.passed);
    for (const auto& d : report.details) CHECK(d.expected == d.actual);
  }
}

TEST_CASE("equal distribution detail values for S4 over A4") {
  auto report = verify_equal_distribution(table_for("s4_a4.grp"));
  REQUIRE(report.passed);
  bool found = false;
  for (const auto& d : report.details)
    if (d.label == "N[d=2,c=2] = N[d=1,c=2]") {
      found = true;
      CHECK(d.expected == "2");
    }
  CHECK(found);
}

TEST_CASE("equal distribution is vacuous but well formed for n = 1") {
  auto [g, h] = parse_group_spec(read_file(corpus_path("s4_a4.grp")));
  auto cs = build_coset_structure(g, g);
  auto report = verify_equal_distribution(build_class_table(cs));
  CHECK(report.passed);
}

TEST_CASE("generating coset count holds on every corpus group") {
  for (const auto& file : kCorpusFiles) CHECK(verify_generating_coset_count(table_for(file)).passed);
}

TEST_CASE("coset linear system: three-way agreement on every corpus group") {
  for (const auto& file : kCorpusFiles) {
    auto report = verify_coset_linear_system(table_for(file));
    CHECK(report.passed);
  }
}

TEST_CASE("coset linear system values for S4 over A4") {
  auto report = verify_coset_linear_system(table_for("s4_a4.grp"));
  REQUIRE(report.passed);
  // both formula evaluations give 2 at the pair (1, 2)
  bool found = false;
  for (const auto& d : report.details)
    if (d.label == "(i=1,j=2) subgroup-side formula = coset-side formula") {
      found = true;
      CHECK(d.actual == "2");
    }
  CHECK(found);
}

TEST_CASE("full suite on the degenerate n = 1 structure") {
  auto [g, h] = parse_group_spec(read_file(corpus_path("s4_a4.grp")));
  auto cs = build_coset_structure(g, g);
  auto reports = verify_group_suite(build_class_table(cs));
  REQUIRE(reports.size() == 5);
  for (const auto& r : reports) CHECK(r.passed);
}

TEST_CASE("full suite on the trivial group") {
  auto [g, h] = parse_group_spec("degree: 3\ngenerators:\nsubgroup:\n");
  REQUIRE(g.order() == 1);
  auto cs = build_coset_structure(g, h);
  for (const auto& r : verify_group_suite(build_class_table(cs))) CHECK(r.passed);
}

TEST_CASE("full suite on structures beyond the bundled corpus") {
  // composite quotient orders, abelian bases, and an abelian G
  const std::vector<std::pair<const char*, const char*>> extra = {
      {"order 42 Frobenius over C7, n=6",
       "degree: 7\ngenerators:\n(1 2 3 4 5 6 7)\n(1 3 2 6 4 5)\nsubgroup:\n(1 2 3 4 5 6 7)\n"},
      {"generalized dihedral over C3 x C3, n=2",
       "degree: 6\ngenerators:\n(1 2 3)\n(4 5 6)\n(2 3)(5 6)\nsubgroup:\n(1 2 3)\n(4 5 6)\n"},
      {"order 60 metacyclic over C15, n=4",
       "degree: 8\ngenerators:\n(1 2 3)\n(4 5 6 7 8)\n(2 3)(5 6 8 7)\nsubgroup:\n(1 2 3)\n"
       "(4 5 6 7 8)\n"},
      {"cyclic C12 over its order-2 subgroup, n=6",
       "degree: 7\ngenerators:\n(1 2 3 4)(5 6 7)\nsubgroup:\n(1 3)(2 4)\n"},
      {"dihedral of order 16 over C8, n=2",
       "degree: 8\ngenerators:\n(1 2 3 4 5 6 7 8)\n(2 8)(3 7)(4 6)\nsubgroup:\n"
       "(1 2 3 4 5 6 7 8)\n"},
  };
  for (const auto& [name, spec] : extra) {
    CAPTURE(name);
    auto [g, h] = parse_group_spec(spec);
    auto cs = build_coset_structure(g, h);
    cs.label = name;
    for (const auto& r : verify_group_suite(build_class_table(cs))) {
      CAPTURE(r.check_name);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("subgroup class counts on every corpus group") {
  for (const auto& file : kCorpusFiles) CHECK(verify_subgroup_class_counts(table_for(file)).passed);
}

TEST_CASE("subgroup class count anchors for S4 over A4") {
  auto table = table_for("s4_a4.grp");
  REQUIRE(table.own_counts.at(1) == 4);
  REQUIRE(table.own_counts.at(2) == 5);
  auto report = verify_subgroup_class_counts(table);
  REQUIRE(report.passed);
  for (const auto& d : report.details) {
    if (d.label.rfind("d=1", 0) == 0) CHECK(d.actual == "4");
    if (d.label.rfind("d=2", 0) == 0) CHECK(d.actual == "5");
  }
}

TEST_CASE("power map properties on corpus groups for every admissible exponent") {
  for (const auto& file : kCorpusFiles) {
    auto table = table_for(file);
    const long long order = static_cast<long long>(table.cs.group.order());
    for (long long a = 1; a <= order; ++a) {
      if (std::gcd(a, order) != 1) continue;
      CHECK(verify_power_map_properties(table.cs, a).passed);
    }
  }
}

TEST_CASE("power map rejects non-coprime exponents") {
  auto table = table_for("s4_a4.grp");
  CHECK_THROWS_AS(verify_power_map_properties(table.cs, 2), DomainError);
}

TEST_CASE("fault injection produces a failing report with a witness") {
  auto table = table_for("s4_a4.grp");
  table.counts[{2, 2}] += 1;
  auto report = verify_equal_distribution(table);
  CHECK_FALSE(report.passed);
  REQUIRE_FALSE(report.witnesses.empty());
  CHECK(report.witnesses.front().name.find("d=2") != std::string::npos);
  CHECK(report.witnesses.front().name.find("c=2") != std::string::npos);
}

TEST_CASE("tensor factorization report") {
  CHECK(verify_tensor_factorization(4, 3).passed);
  CHECK(verify_tensor_factorization(1, 7).passed);
  CHECK_THROWS_AS(verify_tensor_factorization(2, 4), DomainError);
}

TEST_CASE("report passed flag equals conjunction of detail matches") {
  auto report = verify_equal_distribution(table_for("q8_c4.grp"));
  bool all = true;
  for (const auto& d : report.details) all = all && d.expected == d.actual;
  CHECK(report.passed == all);
}

TEST_CASE("report serialization is deterministic and round-trips") {
  auto reports = verify_group_suite(table_for("f20_c5.grp"));
  auto j1 = reports_to_json(reports);
  auto j2 = reports_to_json(reports);
  std::string s1 = j1.dump(2);
  CHECK(s1 == j2.dump(2));
  CHECK(nlohmann::json::parse(s1).dump(2) == s1);
}

TEST_CASE("run_corpus with empty spec list and n_max 1") {
  auto reports = run_corpus({}, 1);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].check_name == "transfer_spectrum");
  CHECK(reports[0].subject == "n=1");
  CHECK(reports[0].passed);
}

TEST_CASE("run_corpus isolates a corrupted spec") {
  std::vector<CorpusSpec> specs;
  specs.push_back({"good", read_file(corpus_path("s4_a4.grp"))});
  specs.push_back({"broken", "degree: 4\ngenerators:\n(1 2\n"});
  auto reports = run_corpus(specs, 1);
  int parse_failures = 0;
  int passes = 0;
  for (const auto& r : reports) {
    if (r.check_name == "parse") {
      ++parse_failures;
      CHECK(r.subject == "broken");
      CHECK_FALSE(r.passed);
    } else if (r.passed) {
      ++passes;
    }
  }
  CHECK(parse_failures == 1);
  CHECK(passes >= 6);  // five group checks plus the n=1 spectrum
}

TEST_CASE("run_corpus covers spectra, prime powers, and tensor splits") {
  auto reports = run_corpus({}, 12);
  int spectra = 0, kernels = 0, tensors = 0;
  for (const auto& r : reports) {
    CHECK(r.passed);
    if (r.check_name == "transfer_spectrum") ++spectra;
    if (r.check_name == "prime_power_kernel") ++kernels;
    if (r.check_name == "tensor_factorization") ++tensors;
  }
  CHECK(spectra == 12);
  CHECK(kernels == 8);  // 2, 3, 4, 5, 7, 8, 9, 11
  CHECK(tensors == 3);  // 6, 10, 12
}
