// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance [--quick] [--seed N] [--json FILE] [criterion ...]

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "zk_tools/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  zk::suite::Options opts;
  std::vector<int> ids;
  std::string json_out;
  bool verbose = false;
  app.add_flag("--quick", opts.quick, "reduced sizes");
  app.add_option("--seed", opts.seed);
  app.add_option("--json", json_out);
  app.add_flag("-v,--verbose", verbose, "progress on stderr");
  app.add_option("criteria", ids);
  CLI11_PARSE(app, argc, argv);
  if (verbose) opts.progress = &std::cerr;

  zk::suite::Context ctx;
  bool ok = true;
  zk::report::json all = zk::report::json::array();
  for (int id : ids.empty() ? zk::suite::all_criteria() : ids) {
    const auto r = zk::suite::run_criterion(id, opts, ctx);
    std::cout << r.line() << std::endl;
    for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
    all.push_back(r.to_json());
    ok = ok && r.passed;
  }
  if (!json_out.empty()) std::ofstream(json_out) << all.dump(2) << "\n";
  return ok ? 0 : 1;
}
