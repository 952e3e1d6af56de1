#include "classdist/report.hpp"

#include <algorithm>

namespace classdist {

void VerificationReport::expect(const std::string& label, const std::string& expected,
                                const std::string& actual) {
  details.push_back({label, expected, actual});
  if (expected != actual) {
    passed = false;
    add_witness(label, "expected " + expected + ", got " + actual);
  }
}

void VerificationReport::expect(const std::string& label, long long expected,
                                long long actual) {
  expect(label, std::to_string(expected), std::to_string(actual));
}

void VerificationReport::add_witness(const std::string& name, const std::string& value) {
  witnesses.push_back({name, value});
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["check_name"] = report.check_name;
  j["subject"] = report.subject;
  j["passed"] = report.passed;
  j["details"] = nlohmann::json::array();
  for (const auto& d : report.details)
    j["details"].push_back({{"label", d.label}, {"expected", d.expected}, {"actual", d.actual}});
  if (!report.witnesses.empty()) {
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : report.witnesses)
      j["witnesses"].push_back({{"name", w.name}, {"value", w.value}});
  }
  return j;
}

nlohmann::json reports_to_json(std::vector<VerificationReport> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     if (a.check_name != b.check_name) return a.check_name < b.check_name;
                     return a.subject < b.subject;
                   });
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : reports) j.push_back(to_json(r));
  return j;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed; });
}

}  // namespace classdist
