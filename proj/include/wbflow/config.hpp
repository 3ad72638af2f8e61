#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "wbflow/diagnostics.hpp"
#include "wbflow/problems.hpp"

namespace wbflow {

/// Flat key-value configuration: one `key = value` pair per line, `#` starts
/// a comment. Keys are consumed as they are read so typos can be reported.
class KeyValues {
 public:
  static KeyValues parse(std::istream& in);
  static KeyValues parse_file(const std::string& path);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback);
  double get_double(const std::string& key, double fallback);
  int get_int(const std::string& key, int fallback);
  bool get_bool(const std::string& key, bool fallback);
  std::vector<double> get_double_list(const std::string& key);
  std::vector<int> get_int_list(const std::string& key);

  std::vector<std::string> unconsumed() const;

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> consumed_;
};

struct RunSetup {
  std::variant<Problem1D, Problem2D> problem;
  std::string output_path = ".";
  std::vector<double> output_times;
};

// Builds a runnable experiment from a preset name plus overrides.
RunSetup build_run(KeyValues& kv);

struct SuiteSetup {
  ProblemFactory factory;
  std::string problem_name;
  ConvergenceOptions convergence;
  std::string output_path = ".";
};

SuiteSetup build_suite(KeyValues& kv);

}  // namespace wbflow
