#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "matgor/matroid.hpp"

namespace matgor {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "matgor-report/1";

struct RunOptions {
  unsigned seed = 1;
  int samples = 50;      // random weight orders for the universal basis probe
  int trials = 100;      // random points for the support-function check
  bool big = false;      // allow fans and probes on up to 7 elements
  bool timings = false;
};

/// One check: what was computed, what the literature states for the instance,
/// their comparison, and internal consistency checks.
struct CheckResult {
  nlohmann::json data = nlohmann::json::object();
  nlohmann::json expected = nlohmann::json::object();
  nlohmann::json comparisons = nlohmann::json::array();
  nlohmann::json cross_checks = nlohmann::json::array();
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
  /// Records an expected value for data[key] and compares.
  void expect(const std::string& key, const nlohmann::json& value);
  void cross_check(const std::string& name, bool holds);
  /// data fields followed by the bookkeeping keys and "verdict".
  nlohmann::json flat() const;
  /// {"computed":..., "paper-expected":..., "comparisons", "cross_checks", "verdict"}.
  nlohmann::json tagged() const;
};

/// Values known for recognized instances (projective geometries, the
/// 5-vector matroid, Boolean matroids, projective planes), keyed by check.
struct Expectations {
  std::string instance;  // empty when not recognized
  nlohmann::json by_check = nlohmann::json::object();
  const nlohmann::json& get(const std::string& check) const;
};

Expectations expectations_for(const Matroid& m, const nlohmann::json& spec);

/// Gaussian binomial coefficients [n choose i]_q, i = 0..n.
std::vector<long> q_binomials(int q, int n);

CheckResult check_axioms(const Matroid& m);
CheckResult check_algebra(const Matroid& m, const Expectations& e);
CheckResult check_ugb(const Matroid& m, const RunOptions& o, const Expectations& e);
/// method: rank, hessian or both; ideal: ann or jm (rank method only).
CheckResult check_lefschetz(const Matroid& m, const std::optional<std::string>& point, const std::string& method,
                            const std::string& ideal, const Expectations& e);
/// method: dilworth, lefschetz or both.
CheckResult check_sperner(const Matroid& m, const std::string& method, const RunOptions& o, const Expectations& e);
CheckResult check_lattice(const Matroid& m, const Expectations& e);
/// ideal: jm, ann or phi. data["fan"] holds the fan JSON.
CheckResult check_fan(const Matroid& m, const std::string& ideal, const RunOptions& o, const Expectations& e);
CheckResult check_tropical(const Matroid& m, const RunOptions& o, const Expectations& e);

/// Full suite with cross-checks between modules.
nlohmann::json report_all(const Matroid& m, const nlohmann::json& spec, const RunOptions& o, bool& pass);

}  // namespace matgor
