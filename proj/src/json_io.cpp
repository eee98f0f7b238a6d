#include "ebs/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace ebs::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\" in " + j.dump());
  }
  return j.at(key);
}

Int integer(const json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > std::uint64_t(INT64_MAX)) {
    throw ParseError("integer out of range: " + j.dump());
  }
  return j.get<Int>();
}

std::string text(const json& j) {
  if (!j.is_string()) throw ParseError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

Sequence sequence_from_json(const json& j) {
  Sequence s;
  const json& prefix = field(j, "prefix");
  if (!prefix.is_array()) throw ParseError("prefix must be an array, got " + prefix.dump());
  for (const json& v : prefix) s.prefix.push_back(integer(v));
  s.step = integer(field(j, "step"));
  return s;
}

json to_json(const Sequence& s) { return json{{"prefix", s.prefix}, {"step", s.step}}; }

}  // namespace

json to_json(const Pair& p) { return json::array({p.a, p.b}); }

Pair pair_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [a,b], got " + j.dump());
  return Pair{integer(j[0]), integer(j[1])};
}

json to_json(const Element& x) { return x.is_zero() ? json(0) : to_json(x.pair()); }

Element element_from_json(const json& j) {
  if (j.is_number_integer() && j.get<Int>() == 0) return Element::zero();
  return pair_from_json(j);
}

json to_json(const SequencePair& s) { return json{{"x", to_json(s.x())}, {"y", to_json(s.y())}}; }

SequencePair sequence_pair_from_json(const json& j) {
  return SequencePair(sequence_from_json(field(j, "x")), sequence_from_json(field(j, "y")));
}

json to_json(const TopologySpec& t) {
  json j{{"kind", std::string(to_string(t.kind()))}};
  if (t.kind() == TopologyKind::LCShift) j["seqs"] = to_json(t.seqs());
  return j;
}

TopologySpec topology_from_json(const json& j) {
  switch (parse_topology_kind(text(field(j, "kind")))) {
    case TopologyKind::Discrete: return TopologySpec::discrete();
    case TopologyKind::MinShift: return TopologySpec::min_shift();
    case TopologyKind::MinInverse: return TopologySpec::min_inverse();
    case TopologyKind::LCShift: return TopologySpec::lcshift(sequence_pair_from_json(field(j, "seqs")));
  }
  throw ParseError("unreachable topology kind");
}

json to_json(const NbhdDescriptor& u) {
  switch (u.kind()) {
    case TopologyKind::Discrete: return json::object();
    case TopologyKind::MinInverse: return json{{"a", u.threshold_a()}, {"b", u.threshold_b()}};
    default: break;
  }
  json apexes = json::array();
  for (const Pair& p : u.apexes()) apexes.push_back(to_json(p));
  return json{{"apexes", apexes}};
}

NbhdDescriptor nbhd_from_json(const TopologySpec& spec, const json& j) {
  switch (spec.kind()) {
    case TopologyKind::Discrete: return NbhdDescriptor::discrete();
    case TopologyKind::MinInverse:
      return NbhdDescriptor::min_inverse(integer(field(j, "a")), integer(field(j, "b")));
    default: break;
  }
  const json& arr = field(j, "apexes");
  if (!arr.is_array()) throw ParseError("apexes must be an array, got " + arr.dump());
  std::vector<Pair> apexes;
  for (const json& p : arr) apexes.push_back(pair_from_json(p));
  return NbhdDescriptor::with_apexes(spec, std::move(apexes));
}

json to_json(const SolutionSet& s) {
  switch (s.kind()) {
    case SolutionSet::Kind::Empty: return json{{"kind", "empty"}};
    case SolutionSet::Kind::Singleton: return json{{"kind", "singleton"}, {"element", to_json(*s.minimal())}};
    case SolutionSet::Kind::UpSetAll: return json{{"kind", "upset"}, {"apex", to_json(*s.minimal())}};
  }
  return {};
}

SolutionSet solution_set_from_json(const json& j) {
  const std::string kind = text(field(j, "kind"));
  if (kind == "empty") return SolutionSet::empty();
  if (kind == "singleton") return SolutionSet::singleton(pair_from_json(field(j, "element")));
  if (kind == "upset") return SolutionSet::upset(pair_from_json(field(j, "apex")));
  throw ParseError("unknown solution set kind '" + kind + "'");
}

json to_json(const ShiftWitness& w) {
  json trace = json::array();
  for (const Pair& p : w.trace) trace.push_back(to_json(p));
  return json{{"element", to_json(w.element)},
              {"side", std::string(to_string(w.side))},
              {"U", to_json(w.U)},
              {"V", to_json(w.V)},
              {"trace", trace},
              {"verified_window", w.verified_window ? json(*w.verified_window) : json(nullptr)}};
}

ShiftWitness witness_from_json(const TopologySpec& spec, const json& j) {
  ShiftWitness w{pair_from_json(field(j, "element")),
                 parse_side(text(field(j, "side"))),
                 nbhd_from_json(spec, field(j, "U")),
                 nbhd_from_json(spec, field(j, "V")),
                 {},
                 std::nullopt};
  const json& trace = field(j, "trace");
  if (!trace.is_array()) throw ParseError("trace must be an array, got " + trace.dump());
  for (const json& p : trace) w.trace.push_back(pair_from_json(p));
  const json& vw = field(j, "verified_window");
  if (!vw.is_null()) w.verified_window = integer(vw);
  return w;
}

json to_json(const ComparisonVerdict& v) {
  if (const auto* c = std::get_if<ContainsWitness>(&v)) {
    return json{{"relation", "contains"},
                {"inner_kind", std::string(to_string(c->inner.kind()))},
                {"inner", to_json(c->inner)}};
  }
  if (const auto* s = std::get_if<SeparatedBy>(&v)) {
    return json{{"relation", "separated"}, {"point", to_json(s->point)}, {"window", s->window}};
  }
  return json{{"relation", "inconclusive"}, {"window", std::get<InconclusiveAtWindow>(v).window}};
}

ComparisonVerdict verdict_from_json(const TopologySpec& fine, const json& j) {
  const std::string rel = text(field(j, "relation"));
  if (rel == "contains") {
    const bool discrete = text(field(j, "inner_kind")) == "discrete";
    return ContainsWitness{discrete ? NbhdDescriptor::discrete()
                                    : nbhd_from_json(fine, field(j, "inner"))};
  }
  if (rel == "separated") {
    return SeparatedBy{element_from_json(field(j, "point")), integer(field(j, "window"))};
  }
  if (rel == "inconclusive") return InconclusiveAtWindow{integer(field(j, "window"))};
  throw ParseError("unknown relation '" + rel + "'");
}

json to_json(const FiniteOrInfinite& s) {
  if (const auto* ray = std::get_if<InfiniteRay>(&s)) {
    return json{{"finite", false},
                {"ray", {{"start", to_json(ray->start)}, {"step", to_json(ray->step)}}}};
  }
  json pts = json::array();
  for (const Element& p : std::get<std::vector<Element>>(s)) pts.push_back(to_json(p));
  return json{{"finite", true}, {"points", pts}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace ebs::json_io
