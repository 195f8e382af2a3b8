#ifndef NESTO_JSON_IO_HPP
#define NESTO_JSON_IO_HPP

#include "json.hpp"

#include "nesto/linear.hpp"
#include "nesto/shuffle.hpp"

namespace nesto {

using Json = nlohmann::json;

Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

Json construct_to_json(const Construct& c);
Construct construct_from_json(const Json& j);

Json qpoly_to_json(const QPoly& p);      // exponent-keyed coefficient object
QPoly qpoly_from_json(const Json& j);

Json linear_to_json(const LinearConstruct& v);  // array of term objects
LinearConstruct linear_from_json(const Json& j);

/// {"universe":tag,"parts":[construct...],"whole":[int...],"mode":...};
/// participant carriers are the part supports, resolved via the universe.
Delegation delegation_from_json(const Json& j);

/// "1..5", "1,3,4" or "a,b,c" (letters map to 1..26)
VSet parse_carrier(const std::string& spec);

}  // namespace nesto

#endif
