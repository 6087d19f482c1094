#pragma once

#include <json.hpp>

#include <string>

#include "bergman/balancing.hpp"
#include "bergman/weighted.hpp"

namespace bergman {

using Json = nlohmann::ordered_json;

// Matroid files: { "ground": [...], "kind": "bases"|"uniform"|"graphic",
// then the fields of that kind }.  "ground" is required for "bases",
// optional for "uniform" (labels for 0..n-1) and "graphic" (labels for the
// edges, default "e0","e1",...).  Unknown fields are rejected.
struct MatroidInput {
  Matroid matroid;
  Json echo;  // canonical serialization; parsing the echo reproduces it
};
MatroidInput parse_matroid(const Json& j);

Json fan_to_json(const BergmanFan& fan, const Json& matroid_echo);
Json balance_report_to_json(const BergmanFan& fan, const BalancingReport& report,
                            const Json& matroid_echo);
Json relation_to_json(const Matroid& m, const BalancingRelation& rel);

// flats of a flag as arrays of labels, ["","a","ab..."] style nested arrays
Json flag_to_json(const GroundSet& ground, const FlagOfFlats& flag);
std::string render_flag(const GroundSet& ground, const FlagOfFlats& flag);

// Weight files: { "k": int, "weights": [ { "flats": [...], "value": "p/q" } ] }.
// Every cell of the skeleton must appear exactly once.
WeightFunction parse_weights(const Json& j, const Skeleton& s);
Json weights_to_json(const Skeleton& s, const WeightFunction& w);
Json weight_basis_to_json(const Skeleton& s, const WeightBasis& b);

// "2,1,0,0" or "1/2,0,0,0"
RationalVector parse_point(const std::string& text, int n);

// Rank-stratified flat listing with cover edges, top rank first.
std::string render_lattice(const Matroid& m);

}  // namespace bergman
