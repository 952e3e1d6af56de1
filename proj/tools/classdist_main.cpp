#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "classdist/arith.hpp"
#include "classdist/classes.hpp"
#include "classdist/errors.hpp"
#include "classdist/matrices.hpp"
#include "classdist/theorems.hpp"

namespace {

using namespace classdist;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;

constexpr long long kMaxMatrixParameter = 500;

struct Options {
  std::string group_file;
  long long n = 0;
  long long n_max = 0;
  std::string output = "text";
  std::size_t order_cap = kDefaultOrderCap;
  std::string inject_fault;
  std::string dump_lhs;
  std::string dump_rhs;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

CosetStructure load_structure(const Options& opt) {
  auto [g, h] = parse_group_spec(read_file(opt.group_file), opt.order_cap);
  CosetStructure cs = build_coset_structure(g, h);
  cs.label = stem_of(opt.group_file);
  return cs;
}

void print_reports_text(const std::vector<VerificationReport>& reports, std::ostream& out,
                        bool show_all_details = false) {
  for (const auto& r : reports) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.check_name << "  [" << r.subject << "]  ("
        << r.details.size() << " assertions)\n";
    for (const auto& d : r.details) {
      if (d.expected == d.actual) {
        if (show_all_details) out << "      " << d.label << ": " << d.actual << "\n";
      } else {
        out << "      " << d.label << ": expected " << d.expected << ", got " << d.actual << "\n";
      }
    }
    if (!r.passed)
      for (const auto& w : r.witnesses)
        out << "      witness: " << w.name << " = " << w.value << "\n";
  }
}

void emit_reports(const std::vector<VerificationReport>& reports, const Options& opt,
                  bool show_all_details = false) {
  if (opt.output == "json")
    std::cout << reports_to_json(reports).dump(2) << "\n";
  else
    print_reports_text(reports, std::cout, show_all_details);
}

nlohmann::json table_to_json(const ClassTable& table) {
  const CosetStructure& cs = table.cs;
  nlohmann::json j;
  j["group"] = {{"order", cs.group.order()},
                {"subgroup_order", cs.subgroup.order()},
                {"n", cs.n},
                {"label", cs.label}};
  j["classes"] = nlohmann::json::array();
  for (const auto& cls : table.classes)
    j["classes"].push_back({{"representative", cls.representative.to_cycles()},
                            {"size", cls.size()},
                            {"coset_order", cls.coset_order},
                            {"centralizing_index", cls.centralizing_index}});
  j["counts"] = nlohmann::json::array();
  for (long long c : divisor_set(cs.n).divisors)
    for (long long d : divisor_set(c).divisors)
      j["counts"].push_back({{"d", d}, {"c", c}, {"count", table.count(d, c)}});
  auto map_json = [](const std::map<long long, long long>& m) {
    nlohmann::json out = nlohmann::json::array();
    for (auto [d, v] : m) out.push_back({{"d", d}, {"count", v}});
    return out;
  };
  j["coset_totals"] = map_json(table.coset_totals);
  j["subgroup_totals"] = map_json(table.subgroup_totals);
  j["own_counts"] = map_json(table.own_counts);
  return j;
}

void print_table_text(const ClassTable& table, std::ostream& out) {
  const CosetStructure& cs = table.cs;
  out << "group " << (cs.label.empty() ? "(unnamed)" : cs.label) << ": |G|=" << cs.group.order()
      << " |H|=" << cs.subgroup.order() << " n=" << cs.n << "\n";
  out << "classes (representative, size, coset order d, centralizing index c):\n";
  for (const auto& cls : table.classes)
    out << "  " << cls.representative.to_cycles() << "  size=" << cls.size()
        << "  d=" << cls.coset_order << "  c=" << cls.centralizing_index << "\n";

  const auto divisors = divisor_set(cs.n).divisors;
  out << "class counts over the representative coset of order d (rows) by centralizing index c "
         "(columns):\n";
  out << "      ";
  for (long long c : divisors) out << "c=" << c << "\t";
  out << "\n";
  for (long long d : divisors) {
    out << "  d=" << d << " ";
    for (long long c : divisors) {
      if (c % d == 0)
        out << table.count(d, c) << "\t";
      else
        out << ".\t";
    }
    out << "\n";
  }
  out << "coset totals:";
  for (auto [d, v] : table.coset_totals) out << "  T[" << d << "]=" << v;
  out << "\nsubgroup totals:";
  for (auto [d, v] : table.subgroup_totals) out << "  S[" << d << "]=" << v;
  out << "\nown class counts:";
  for (auto [d, v] : table.own_counts) out << "  S*[" << d << "]=" << v;
  out << "\n";
}

int cmd_classes(const Options& opt) {
  ClassTable table = build_class_table(load_structure(opt));
  if (opt.output == "json")
    std::cout << table_to_json(table).dump(2) << "\n";
  else
    print_table_text(table, std::cout);
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  ClassTable table = build_class_table(load_structure(opt));
  if (!opt.inject_fault.empty()) {
    // Perturb one measured count; exercises the failure path end to end.
    auto comma = opt.inject_fault.find(',');
    if (comma == std::string::npos)
      throw DomainError("--inject-fault expects 'd,c'");
    long long d = std::stoll(opt.inject_fault.substr(0, comma));
    long long c = std::stoll(opt.inject_fault.substr(comma + 1));
    table.counts[{d, c}] += 1;
  }
  auto reports = verify_group_suite(table);
  emit_reports(reports, opt);
  return all_passed(reports) ? kExitOk : kExitVerificationFailure;
}

int cmd_matrix(const Options& opt) {
  if (opt.n < 1 || opt.n > kMaxMatrixParameter) {
    std::cerr << "error: --n must lie in [1, " << kMaxMatrixParameter << "]\n";
    return kExitUsage;
  }
  const long long n = opt.n;
  std::vector<VerificationReport> reports;

  VerificationReport det_report;
  det_report.check_name = "lhs_determinant";
  det_report.subject = "n=" + std::to_string(n);
  DivisorMatrix lhs = lhs_matrix(n);
  Rational expected_det(1);
  for (auto [i, j] : lhs.index()) expected_det *= to_rational(totient(i) * (n / j));
  det_report.expect("det = product of diagonal entries", to_string(expected_det),
                    to_string(det_exact(lhs)));
  det_report.expect("det nonzero", "true", expected_det != 0 ? "true" : "false");
  reports.push_back(det_report);

  reports.push_back(verify_spectrum(n));

  auto factors = factorize(n);
  if (factors.size() >= 2) {
    long long m = 1;
    for (int k = 0; k < factors[0].second; ++k) m *= factors[0].first;
    reports.push_back(verify_tensor_factorization(m, n / m));
  }

  if (!opt.dump_lhs.empty()) std::ofstream(opt.dump_lhs) << to_csv(lhs);
  if (!opt.dump_rhs.empty()) std::ofstream(opt.dump_rhs) << to_csv(rhs_matrix(n));

  emit_reports(reports, opt, /*show_all_details=*/true);
  return all_passed(reports) ? kExitOk : kExitVerificationFailure;
}

int cmd_corpus(const Options& opt) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(opt.group_file)) {
    std::cerr << "error: --group must name a directory of group specs\n";
    return kExitUsage;
  }
  std::vector<CorpusSpec> specs;
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(opt.group_file))
    if (entry.path().extension() == ".grp") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) specs.push_back({p.stem().string(), read_file(p.string())});

  auto reports = run_corpus(specs, opt.n_max, opt.order_cap);
  emit_reports(reports, opt);
  return all_passed(reports) ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of conjugacy-class distribution over cosets"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_group) {
    auto* group_opt =
        cmd->add_option("--group", opt.group_file, "path to a group-spec file (or directory)");
    if (needs_group) group_opt->required();
    cmd->add_option("--output", opt.output, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--order-cap", opt.order_cap, "maximum group order to enumerate");
  };

  CLI::App* classes = app.add_subcommand("classes", "print the annotated class table");
  add_common(classes, true);

  CLI::App* verify = app.add_subcommand("verify", "run all class-distribution checks on one group");
  add_common(verify, true);
  verify
      ->add_option("--inject-fault", opt.inject_fault,
                   "perturb the measured count for 'd,c' before checking (failure-path testing)")
      ->expected(1);

  CLI::App* matrix = app.add_subcommand("matrix", "determinant/spectrum checks for a parameter n");
  matrix->add_option("--n", opt.n, "quotient order")->required();
  matrix->add_option("--output", opt.output, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  matrix->add_option("--dump-lhs", opt.dump_lhs, "write the lhs matrix as CSV");
  matrix->add_option("--dump-rhs", opt.dump_rhs, "write the rhs matrix as CSV");

  CLI::App* corpus = app.add_subcommand("corpus", "verify a directory of group specs");
  add_common(corpus, true);
  corpus->add_option("--n-max", opt.n_max, "largest matrix parameter to verify")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("classes")) return cmd_classes(opt);
    if (app.got_subcommand("verify")) return cmd_verify(opt);
    if (app.got_subcommand("matrix")) return cmd_matrix(opt);
    if (app.got_subcommand("corpus")) return cmd_corpus(opt);
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
