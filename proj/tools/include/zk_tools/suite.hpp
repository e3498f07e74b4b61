#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zk_tools/report.hpp"

namespace zk::suite {

struct Options {
  bool quick = false;           // reduced sweep sizes
  std::uint64_t seed = 20240601;
  std::ostream* progress = nullptr;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // first few only
  std::vector<std::string> notes;
  double seconds = 0;
  report::json details = report::json::object();

  std::string line() const;  // "criterion N  PASS  title  (cases, time)"
  report::json to_json() const;
};

// Shared state between criteria (integral Kostant reports are reused).
class Context {
 public:
  Context();
  ~Context();
  struct Impl;
  Impl& impl() { return *impl_; }

 private:
  std::unique_ptr<Impl> impl_;
};

std::vector<int> all_criteria();
CriterionResult run_criterion(int id, const Options& opts, Context& ctx);
std::vector<CriterionResult> run_all(const Options& opts, const std::vector<int>& ids = all_criteria());

}  // namespace zk::suite
