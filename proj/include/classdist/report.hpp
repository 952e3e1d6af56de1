#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace classdist {

/// Machine-readable outcome of one verification check.  `passed` is true
/// exactly when every detail row has expected == actual; witnesses carry
/// counterexample data for failed rows.
struct VerificationReport {
  struct Detail {
    std::string label;
    std::string expected;
    std::string actual;
  };
  struct Witness {
    std::string name;
    std::string value;
  };

  std::string check_name;
  std::string subject;
  bool passed = true;
  std::vector<Detail> details;
  std::vector<Witness> witnesses;

  /// Record one assertion; flips `passed` and records a witness on mismatch.
  void expect(const std::string& label, const std::string& expected,
              const std::string& actual);
  void expect(const std::string& label, long long expected, long long actual);

  void add_witness(const std::string& name, const std::string& value);
};

nlohmann::json to_json(const VerificationReport& report);

/// Serialize a batch of reports, sorted by (check_name, subject).
nlohmann::json reports_to_json(std::vector<VerificationReport> reports);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace classdist
