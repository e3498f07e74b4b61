#include "zk_tools/report.hpp"

#include <sstream>

#include "zk/error.hpp"

namespace zk::report {

json to_json(const Weight& w) {
  json a = json::array();
  for (auto x : w.coords()) a.push_back(x);
  return a;
}

json to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json to_json(const std::vector<Int>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

json to_json(const Character& c) {
  json a = json::array();
  for (const auto& [w, m] : c)
    if (m != 0) a.push_back({{"weight", to_json(w)}, {"mult", m}});
  return a;
}

json to_json(const HomologyGroup& h) {
  return {{"free_rank", h.free_rank}, {"torsion", to_json(h.torsion)}};
}

json to_json(const HomologyResult& h) {
  json j = {{"degree", h.degree}, {"free_rank", h.total.free_rank}, {"torsion", to_json(h.total.torsion)}};
  if (h.prime) j["localized_at"] = *h.prime;
  json by = json::object();
  for (const auto& [w, g] : h.by_weight) by[w.str()] = to_json(g);
  j["by_weight"] = by;
  return j;
}

json to_json(const KostantReport& r) {
  json j = {{"group", r.group}, {"parabolic", r.parabolic}, {"lambda", to_json(r.lambda)},
            {"prime", r.prime ? json(*r.prime) : json()}, {"p_small", r.p_small},
            {"kind", r.cohomology ? "cohomology" : "homology"}};
  json degs = json::array();
  for (const auto& d : r.degrees) {
    degs.push_back({{"degree", d.degree},
                    {"homology", to_json(d.homology)},
                    {"computed", to_json(d.computed)},
                    {"predicted", to_json(d.predicted)},
                    {"character_match", d.character_match},
                    {"torsion_primes", d.torsion_primes},
                    {"p_torsion_free", d.p_torsion_free}});
  }
  j["degrees"] = degs;
  j["characters_match"] = r.characters_match();
  j["torsion_free"] = r.torsion_free();
  j["verdict"] = r.verdict();
  return j;
}

json to_json(const BGGReport& r) {
  json j = {{"group", r.group}, {"parabolic", r.parabolic}, {"lambda", to_json(r.lambda)}, {"prime", r.prime}};
  json degs = json::array();
  for (const auto& d : r.degrees) {
    auto list = [](const std::vector<Weight>& ws) {
      json a = json::array();
      for (const auto& w : ws) a.push_back(to_json(w));
      return a;
    };
    json e = {{"degree", d.degree},         {"omega", list(d.omega)},
              {"survivors", list(d.survivors)}, {"expected", list(d.expected)},
              {"multiplicity_one", d.multiplicity_one}, {"match", d.match}};
    if (d.splitting) {
      json tops = json::array();
      for (const auto& t : d.splitting->tops) tops.push_back(to_json(t));
      e["splitting"] = {{"tops", tops},
                        {"highest_lines_ok", d.splitting->highest_lines_ok},
                        {"ranks_ok", d.splitting->ranks_ok},
                        {"index", to_json(d.splitting->index)},
                        {"unit_at_p", d.splitting_ok}};
    }
    degs.push_back(e);
  }
  j["degrees"] = degs;
  j["verdict"] = r.verdict();
  return j;
}

json to_json(const DegenerationReport& r) {
  json j = {{"group", r.group},
            {"parabolic", r.parabolic},
            {"lambda", to_json(r.lambda)},
            {"prime", r.prime},
            {"p_small", r.p_small},
            {"gamma_rank", r.gamma_rank},
            {"abelian", r.abelian},
            {"path", r.koszul ? "koszul" : "resolution"},
            {"filtration_property", r.star_ok}};
  if (r.certificate)
    j["resolution_certificate"] = {{"dd_zero", r.certificate->dd_zero},
                                   {"homotopy", r.certificate->homotopy_ok},
                                   {"cells_checked", r.certificate->checked}};
  if (r.koszul && r.certificate) j["koszul_matches_resolution"] = r.cross_checked;
  json degs = json::array();
  for (const auto& d : r.degrees)
    degs.push_back({{"degree", d.degree},
                    {"predicted_rank", d.predicted},
                    {"lie_algebra_rank", d.lie_rank},
                    {"group_rank", d.group_rank},
                    {"p_torsion_summands", d.p_torsion_count},
                    {"fp_dimension", d.fp_dim},
                    {"rank_ok", d.rank_ok},
                    {"p_torsion_free", d.p_torsion_free}});
  j["degrees"] = degs;
  j["note"] = "ranks and p-torsion only; the Levi-module filtration on homology is not constructed";
  j["verdict"] = r.verdict();
  return j;
}

Weight parse_weight(const std::string& s) {
  std::vector<std::int64_t> v;
  std::string tok;
  std::size_t semis = 0;
  auto flush = [&](std::size_t pos) {
    if (tok.empty()) throw InvalidInput("weight '" + s + "': empty entry before column " + std::to_string(pos + 1));
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw InvalidInput("weight '" + s + "': '" + tok + "' at column " + std::to_string(pos + 1 - tok.size()) +
                         " is not an integer");
    v.push_back(x);
    tok.clear();
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == ' ' || ch == '(' || ch == ')' || ch == '[' || ch == ']') continue;
    if (ch == ',' || ch == ';') {
      if (ch == ';' && ++semis > 1) throw InvalidInput("weight '" + s + "': more than one ';'");
      flush(i);
    } else {
      tok += ch;
    }
  }
  flush(s.size());
  return Weight(v);
}

std::string weight_list(const std::vector<Weight>& ws) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ws.size(); ++i) os << (i ? " " : "") << ws[i];
  return os.str();
}

}  // namespace zk::report
