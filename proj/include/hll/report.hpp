#ifndef HLL_REPORT_HPP
#define HLL_REPORT_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hll {

// One line of a verification report. `value` is an error measure; the check
// passes when value <= tolerance (and value is not NaN).
struct CheckRow {
  std::string check;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// "check,value,tolerance,pass" CSV.
void write_report(std::ostream& out, const std::vector<CheckRow>& rows);

struct VerifyConfig {
  double nu = 3.5;
  std::optional<int> m;  // every valid level when empty
  int disk_n_r = 32;
  int disk_n_theta = 64;
  double disk_r_max = 1.0;
  int quad_order = 128;
  std::map<std::string, double> tolerances;  // per-check overrides
};

inline constexpr std::string_view kSuites[] = {"specfun", "eigenspace", "coherent", "transform", "all"};

// Runs one suite. Throws std::invalid_argument for an unknown suite name,
// inadmissible parameters or a tolerance override naming no check.
std::vector<CheckRow> run_suite(std::string_view suite, const VerifyConfig& config);

}  // namespace hll

#endif  // HLL_REPORT_HPP
