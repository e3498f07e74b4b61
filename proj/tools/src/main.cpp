// zkostant command-line front end.
//
// Exit codes: 0 consistent, 1 discrepancy under the hypotheses, 2 hypothesis
// not met (results are informational), 64 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "zk/character.hpp"
#include "zk/error.hpp"
#include "zk/grouphom.hpp"
#include "zk/liehomology.hpp"
#include "zk/parallel.hpp"
#include "zk/weylmod.hpp"
#include "zk/young.hpp"
#include "zk_tools/report.hpp"
#include "zk_tools/suite.hpp"

namespace {

using zk::report::json;

constexpr int kConsistent = 0;
constexpr int kDiscrepancy = 1;
constexpr int kHypothesis = 2;
constexpr int kBadInput = 64;

struct Job {
  std::string group = "gl:2";
  std::string levi = "[]";
  std::string lambda;
  std::uint64_t p = 0;
  std::string json_out;
  std::uint64_t seed = 20240601;
  bool rational = false;
  bool quick = false;
  int degree = -1;
  std::vector<int> criteria;
};

struct Setup {
  std::shared_ptr<zk::RootDatum> rd;
  std::shared_ptr<zk::LieAlgebraZ> g;
  zk::Weight lambda;
};

Setup setup(const Job& job, bool need_dominant = true) {
  Setup s;
  s.rd = std::make_shared<zk::RootDatum>(zk::RootDatum::parse(job.group));
  s.lambda = zk::report::parse_weight(job.lambda);
  s.rd->check_weight(s.lambda);
  if (need_dominant && !s.rd->is_dominant(s.lambda))
    throw zk::InvalidInput("weight " + s.lambda.str() + " is not dominant for " + s.rd->name());
  return s;
}

void build_algebra(Setup& s) { s.g = std::make_shared<zk::LieAlgebraZ>(zk::build_algebra(*s.rd)); }

void require_prime(const Job& job) {
  if (job.p < 2 || !zk::is_prime(job.p)) throw zk::InvalidInput("--p must be a prime, got " + std::to_string(job.p));
}

void emit(const Job& job, const json& j) {
  std::cout << j.dump(2) << "\n";
  if (!job.json_out.empty()) {
    std::ofstream out(job.json_out);
    if (!out) throw zk::InvalidInput("cannot write " + job.json_out);
    out << j.dump(2) << "\n";
  }
}

int run_alcove(const Job& job) {
  require_prime(job);
  const Setup s = setup(job, false);
  const auto red = zk::alcove_reduce(s.lambda, job.p, *s.rd);
  json j = {{"group", s.rd->name()}, {"lambda", zk::report::to_json(s.lambda)}, {"prime", job.p}};
  const bool dominant = s.rd->is_dominant(s.lambda);
  j["dominant"] = dominant;
  if (dominant) {
    j["p_small"] = zk::is_p_small(s.lambda, job.p, *s.rd);
    j["p_small_bound"] = zk::p_small_bound(s.lambda, *s.rd);
  }
  j["alcove_representative"] = zk::report::to_json(red.rep);
  json word = json::array();
  for (const auto& r : red.word)
    word.push_back({{"root", zk::report::to_json(s.rd->root(r.root))}, {"level", r.level}});
  j["reflections"] = word;
  emit(job, j);
  return kConsistent;
}

int run_kostant(const Job& job, bool cohomology) {
  Setup s = setup(job);
  std::optional<std::uint64_t> p;
  if (!job.rational) {
    require_prime(job);
    p = job.p;
  }
  build_algebra(s);
  const zk::ParabolicData pd = zk::ParabolicData::parse(*s.rd, job.levi);
  const zk::KostantReport r = cohomology ? zk::cohomology_check(*s.g, pd, s.lambda, p)
                                         : zk::kostant_check(*s.g, pd, s.lambda, p);
  emit(job, zk::report::to_json(r));
  // characters over Q are predicted for every dominant weight
  if (!r.characters_match()) return kDiscrepancy;
  if (job.rational) return kConsistent;
  if (!r.p_small) return kHypothesis;
  return r.torsion_free() ? kConsistent : kDiscrepancy;
}

int run_bgg(const Job& job) {
  require_prime(job);
  Setup s = setup(job);
  if (!zk::is_p_small(s.lambda, job.p, *s.rd)) {
    emit(job, {{"group", s.rd->name()},
               {"lambda", zk::report::to_json(s.lambda)},
               {"prime", job.p},
               {"p_small", false},
               {"note", "weight is not p-small; BGG terms are only predicted for p-small weights"}});
    return kHypothesis;
  }
  build_algebra(s);
  const zk::ParabolicData pd = zk::ParabolicData::parse(*s.rd, job.levi);
  const zk::BGGReport r = zk::bgg_terms(*s.g, pd, s.lambda, job.p);
  emit(job, zk::report::to_json(r));
  return r.verdict() ? kConsistent : kDiscrepancy;
}

int run_group_homology(const Job& job) {
  require_prime(job);
  Setup s = setup(job);
  build_algebra(s);
  const zk::ParabolicData pd = zk::ParabolicData::parse(*s.rd, job.levi);
  const zk::DegenerationReport r = zk::degeneration_check(*s.g, pd, s.lambda, job.p);
  json j = zk::report::to_json(r);
  if (job.degree >= 0) {
    json keep = json::array();
    for (const auto& d : j["degrees"])
      if (d["degree"] == job.degree) keep.push_back(d);
    if (keep.empty()) throw zk::InvalidInput("--degree " + std::to_string(job.degree) + " is out of range");
    j["degrees"] = keep;
  }
  emit(job, j);
  if (!r.p_small) return kHypothesis;
  return r.verdict() ? kConsistent : kDiscrepancy;
}

int run_lattices(const Job& job) {
  require_prime(job);
  Setup s = setup(job);
  build_algebra(s);
  const bool small = zk::is_p_small(s.lambda, job.p, *s.rd);
  json j = {{"group", s.rd->name()}, {"lambda", zk::report::to_json(s.lambda)}, {"prime", job.p}, {"p_small", small}};

  std::vector<zk::Int> max_min, max_young;
  bool young_exact = false, have_young = false;
  std::size_t dim = 0;
  if (s.rd->family() == zk::Family::GSp) {
    const zk::YoungData y = zk::young_lattice(*s.g, s.lambda);
    dim = y.min.dim();
    max_min = zk::max_over_min(y.form);
    have_young = true;
    young_exact = y.young_in_min.has_value();
    max_young = zk::lattice_indices(young_exact ? *y.young_in_min : y.top_in_min, y.form).under_max;
    j["tensor_degree"] = y.tensor_degree;
  } else {
    const zk::WeylLattice min = zk::minimal_lattice(*s.g, s.lambda);
    dim = min.dim();
    max_min = zk::max_over_min(zk::contravariant_gram(min.module, s.lambda));
  }
  auto divides = [&](const std::vector<zk::Int>& ds) {
    for (const auto& d : ds)
      if (d % static_cast<unsigned long>(job.p) == 0) return true;
    return false;
  };
  j["dimension"] = dim;
  j["max_over_min"] = zk::report::to_json(max_min);
  const bool mm = divides(max_min);
  bool equal = !mm;
  if (have_young) {
    j["young"] = {{"exact", young_exact},
                  {"max_over_young", zk::report::to_json(max_young)},
                  {"note", young_exact ? "Young lattice computed exactly"
                                       : "divisors bound max/Young through the top sublattice"}};
    if (young_exact) equal = equal && !divides(max_young);
  }
  // min = max over Z_(p) forces all three to agree
  j["lattices_equal_at_p"] = equal;
  emit(job, j);
  if (!small) return kHypothesis;
  return mm ? kDiscrepancy : kConsistent;
}

int run_suite(const Job& job) {
  zk::suite::Options opts;
  opts.quick = job.quick;
  opts.seed = job.seed;
  opts.progress = &std::cerr;
  const auto results = zk::suite::run_all(opts, job.criteria.empty() ? zk::suite::all_criteria() : job.criteria);
  json all = json::array();
  bool ok = true;
  for (const auto& r : results) {
    std::cout << r.line() << "\n";
    all.push_back(r.to_json());
    ok = ok && r.passed;
  }
  if (!job.json_out.empty()) {
    std::ofstream out(job.json_out);
    out << json{{"quick", job.quick}, {"seed", job.seed}, {"criteria", all}}.dump(2) << "\n";
  }
  return ok ? kConsistent : kDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zkostant: integral Kostant homology and related checks for GL(n) and GSp(2g)"};
  app.require_subcommand(1);
  Job job;

  auto common = [&](CLI::App* c, bool levi, bool prime) {
    c->add_option("--group", job.group, "gl:n or gsp:2g")->required();
    c->add_option("--lambda", job.lambda, "weight, e.g. 2,1,0 or 2,1;1 (gsp similitude after ';')")->required();
    if (levi) c->add_option("--levi", job.levi, "Levi simple roots, 1-based, e.g. [1] or [1,3]; [] is the Borel");
    if (prime) c->add_option("--p", job.p, "prime");
    c->add_option("--json", job.json_out, "also write the report to this file");
  };

  auto* alcove = app.add_subcommand("alcove", "p-smallness and the alcove representative of a weight");
  common(alcove, false, true);
  auto* kostant = app.add_subcommand("kostant", "homology of u_P^- with Weyl module coefficients");
  common(kostant, true, true);
  kostant->add_flag("--rational", job.rational, "compare characters over Q only");
  auto* cohom = app.add_subcommand("cohomology", "cohomology of u_P with dual Weyl module coefficients");
  common(cohom, true, true);
  cohom->add_flag("--rational", job.rational, "compare characters over Q only");
  auto* bgg = app.add_subcommand("bgg-terms", "linkage-filtered terms of the parabolic BGG complex");
  common(bgg, true, true);
  auto* gh = app.add_subcommand("group-homology", "homology of U_P^-(Z) against the Levi prediction");
  common(gh, true, true);
  gh->add_option("--degree", job.degree, "report only this degree");
  auto* lat = app.add_subcommand("lattices", "minimal, maximal and Young lattices at a prime");
  common(lat, false, true);
  auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
  suite->add_flag("--quick", job.quick, "reduced sizes");
  suite->add_option("--criterion", job.criteria, "run only these criteria (1-8)");
  suite->add_option("--json", job.json_out, "write results to this file");

  for (auto* c : {alcove, kostant, cohom, bgg, gh, lat, suite})
    c->add_option("--seed", job.seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kBadInput;
  }

  try {
    if (*alcove) return run_alcove(job);
    if (*kostant) return run_kostant(job, false);
    if (*cohom) return run_kostant(job, true);
    if (*bgg) return run_bgg(job);
    if (*gh) return run_group_homology(job);
    if (*lat) return run_lattices(job);
    if (*suite) return run_suite(job);
  } catch (const zk::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const zk::Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kHypothesis;
  } catch (const zk::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kDiscrepancy;
  }
  return kBadInput;
}
