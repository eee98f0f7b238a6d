#pragma once

#include <string>

#include <json.hpp>

#include "ebs/continuity.hpp"
#include "ebs/element.hpp"
#include "ebs/sequence.hpp"
#include "ebs/topology.hpp"

/// JSON encodings of the public data types. Elements are [a,b] or 0.
///   SequencePair   {"x": {"prefix": [2], "step": 2}, "y": {"prefix": [3], "step": 2}}
///   TopologySpec   {"kind":"lcshift","seqs":{...}} | {"kind":"min_sh"} | {"kind":"min_i"}
///                  | {"kind":"discrete"}
///   NbhdDescriptor {"apexes":[[1,1],[0,3]]} | {"a":-1,"b":2} | {} (discrete)
/// Decoding errors throw ParseError; constraint violations throw DomainError.
namespace ebs::json_io {

using nlohmann::json;

json to_json(const Element& x);
Element element_from_json(const json& j);

json to_json(const Pair& p);
Pair pair_from_json(const json& j);

json to_json(const SequencePair& s);
SequencePair sequence_pair_from_json(const json& j);

json to_json(const TopologySpec& t);
TopologySpec topology_from_json(const json& j);

/// Payload only; the topology is carried separately.
json to_json(const NbhdDescriptor& u);
NbhdDescriptor nbhd_from_json(const TopologySpec& spec, const json& j);

json to_json(const SolutionSet& s);
SolutionSet solution_set_from_json(const json& j);

json to_json(const ShiftWitness& w);
ShiftWitness witness_from_json(const TopologySpec& spec, const json& j);

json to_json(const ComparisonVerdict& v);
ComparisonVerdict verdict_from_json(const TopologySpec& fine, const json& j);

json to_json(const FiniteOrInfinite& s);

/// Parses text, mapping nlohmann errors to ParseError.
json parse(const std::string& text);
/// Reads a file, DomainError-free: missing files are ParseErrors too.
json read_file(const std::string& path);

}  // namespace ebs::json_io
