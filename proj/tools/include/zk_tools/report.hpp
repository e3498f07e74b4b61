#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "zk/grouphom.hpp"
#include "zk/liehomology.hpp"

namespace zk::report {

using json = nlohmann::ordered_json;

json to_json(const Weight& w);
json to_json(const Int& x);  // number when it fits in 64 bits, else a decimal string
json to_json(const std::vector<Int>& xs);
json to_json(const Character& c);
json to_json(const HomologyGroup& h);
json to_json(const HomologyResult& h);
json to_json(const KostantReport& r);
json to_json(const BGGReport& r);
json to_json(const DegenerationReport& r);

// "2,1,1" or "2,1;1" (the similitude coordinate after ';')
Weight parse_weight(const std::string& s);
std::string weight_list(const std::vector<Weight>& ws);

}  // namespace zk::report
