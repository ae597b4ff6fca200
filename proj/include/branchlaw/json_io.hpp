#pragma once

#include <json.hpp>

#include "branchlaw/oracle.hpp"
#include "branchlaw/text.hpp"

namespace branchlaw {

using json = nlohmann::json;

json to_json(const Segment& d);
json to_json(const Multisegment& m);  // array of segments in text form
json to_json(const IrrRep& pi);       // {"rep", "rank", "level"}
json to_json(const EtaVector& v, Side side);
json to_json(const RelevanceResult& r);
json to_json(const CommTriple& t);
json to_json(const PieriTable& t);
json to_json(const std::vector<Quotient>& row);
json to_json(const Report& r);

}  // namespace branchlaw
