#pragma once
// JSON wire format.  Every number that can grow is written as a string
// ("p/q" or an integer), small structural indices stay plain integers.

#include <json.hpp>
#include <string>

#include "wpl/k0.hpp"
#include "wpl/tilting.hpp"

namespace wpl {

using json = nlohmann::json;

// "2,3,7" or "2,2,2,3;2" (lambdas for the arms from the third on, default 1,2,...)
WeightDescriptor parse_type(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);

json to_json(const WeightDescriptor& d);
// accepts {"weights":[...],"lambdas":["1","2"]} or a type string
WeightDescriptor descriptor_from_json(const json& j);

json to_json(const WeightDescriptor& d, const LVector& v);
json to_json(const K0Class& c);
K0Class class_from_json(const json& j);
json to_json(const IntPoly& p);

std::string fraction(const Numerics& n);  // "deg/rk"
json to_json(const Numerics& n);

json to_json(const K0& k0, const TiltingDatum& t);
TiltingDatum datum_from_json(const json& j);

json to_json(const Quiver& q, const Representation& r);
Representation representation_from_json(const json& j);

json to_json(const StepReport& s);
json to_json(const Attempt& a);

// full state: summands with numerics and polarity, quiver, relations
json state_json(const ConcreteTilting& t);

}  // namespace wpl
