// Command-line front end. Exit codes: 0 success, 1 domain error, 2 parse error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ebs/continuity.hpp"
#include "ebs/errors.hpp"
#include "ebs/json_io.hpp"
#include "ebs/oracle.hpp"
#include "ebs/semigroup.hpp"
#include "ebs/set_algebra.hpp"
#include "ebs/topology.hpp"
#include "ebs/verify.hpp"

using namespace ebs;
using json_io::json;

namespace {

enum class Format { Text, Json };

struct Options {
  Format format = Format::Text;
  std::string topology;
  std::string nbhd_file;
  std::string apexes;
  std::optional<Int> a;
  std::optional<Int> b;
  std::optional<Int> window;
};

void emit(const Options& o, const std::string& text, const json& j) {
  if (o.format == Format::Json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

std::string join(const std::vector<Element>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + to_string(xs[i]);
  return s + "}";
}

json elements_json(const std::vector<Element>& xs) {
  json j = json::array();
  for (const Element& x : xs) j.push_back(json_io::to_json(x));
  return j;
}

std::string pairs_text(const std::vector<Pair>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + to_string(ps[i]);
  return s;
}

/// Inline JSON when the argument starts with '{', a file path otherwise.
json load_json(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return json_io::parse(arg);
  return json_io::read_file(arg);
}

TopologySpec load_topology(const std::string& arg) {
  if (arg.empty()) throw DomainError("--topology is required");
  return json_io::topology_from_json(load_json(arg));
}

/// A descriptor file wins over --apexes / --a --b.
NbhdDescriptor load_nbhd(const TopologySpec& spec, const Options& o) {
  if (!o.nbhd_file.empty()) return json_io::nbhd_from_json(spec, load_json(o.nbhd_file));
  switch (spec.kind()) {
    case TopologyKind::Discrete: return NbhdDescriptor::discrete();
    case TopologyKind::MinInverse:
      if (!o.a || !o.b) throw DomainError("min_i neighbourhoods need --a and --b");
      return NbhdDescriptor::min_inverse(*o.a, *o.b);
    default:
      if (o.apexes.empty()) throw DomainError("neighbourhood needs --apexes or --nbhd");
      return NbhdDescriptor::with_apexes(spec, parse_pair_list(o.apexes));
  }
}

Pair parse_pair(const std::string& s) {
  const Element e = parse_element(s);
  if (e.is_zero()) throw DomainError("expected a pair, got 0");
  return e.pair();
}

json report_json(const std::vector<CheckResult>& rs) {
  json j = json::array();
  for (const auto& r : rs) j.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  return j;
}

std::string verdict_text(const ComparisonVerdict& v) {
  if (const auto* c = std::get_if<ContainsWitness>(&v)) return "contains " + describe(c->inner);
  if (const auto* s = std::get_if<SeparatedBy>(&v)) {
    return "separated by " + to_string(s->point) + " at window " + std::to_string(s->window);
  }
  return "inconclusive at window " + std::to_string(std::get<InconclusiveAtWindow>(v).window);
}

std::string set_text(const FiniteOrInfinite& s) {
  if (const auto* ray = std::get_if<InfiniteRay>(&s)) {
    return "infinite: " + to_string(ray->start) + " + k*" + to_string(ray->step);
  }
  return join(std::get<std::vector<Element>>(s));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended bicyclic semigroup with adjoined zero: arithmetic, neighbourhoods of zero, "
               "continuity witnesses"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto add_topology = [&](CLI::App* sub) {
    sub->add_option("--topology", o.topology, "Topology JSON file or inline JSON");
  };
  auto add_nbhd = [&](CLI::App* sub) {
    add_topology(sub);
    sub->add_option("--apexes", o.apexes, "Comma-separated apex literals, e.g. \"(1,1),(0,3)\"");
    sub->add_option("--a", o.a, "min_i threshold a");
    sub->add_option("--b", o.b, "min_i threshold b");
    sub->add_option("--nbhd", o.nbhd_file, "Neighbourhood JSON file or inline JSON; wins over inline flags");
  };

  std::string x_arg, y_arg;
  std::function<void()> action;

  auto* mul = app.add_subcommand("mul", "Product of two elements");
  mul->add_option("x", x_arg)->required();
  mul->add_option("y", y_arg)->required();
  mul->callback([&] {
    action = [&] {
      const Element r = parse_element(x_arg) * parse_element(y_arg);
      emit(o, to_string(r), json_io::to_json(r));
    };
  });

  auto* inv = app.add_subcommand("inv", "Inverse of an element");
  inv->add_option("x", x_arg)->required();
  inv->callback([&] {
    action = [&] {
      const Element r = invert(parse_element(x_arg));
      emit(o, to_string(r), json_io::to_json(r));
    };
  });

  auto* leq_cmd = app.add_subcommand("leq", "Natural partial order x <= y");
  leq_cmd->add_option("x", x_arg)->required();
  leq_cmd->add_option("y", y_arg)->required();
  leq_cmd->callback([&] {
    action = [&] {
      const bool r = leq(parse_element(x_arg), parse_element(y_arg));
      emit(o, r ? "true" : "false", json(r));
    };
  });

  auto* upset = app.add_subcommand("upset", "Points of up(a,b) outside D (finite)");
  add_topology(upset);
  upset->add_option("apex", x_arg)->required();
  upset->callback([&] {
    action = [&] {
      const TopologySpec spec = load_topology(o.topology);
      const auto r = upset_minus_d(spec.d_set(), UpSet{parse_pair(x_arg)});
      emit(o, join(r), elements_json(r));
    };
  });

  auto* dmember = app.add_subcommand("dmember", "Membership in D");
  add_topology(dmember);
  dmember->add_option("x", x_arg)->required();
  dmember->callback([&] {
    action = [&] {
      const bool r = d_member(load_topology(o.topology).d_set(), parse_element(x_arg));
      emit(o, r ? "true" : "false", json(r));
    };
  });

  std::string extra;
  auto* nbhd = app.add_subcommand("nbhd", "Membership in a basic neighbourhood of zero, or U \\ V");
  add_nbhd(nbhd);
  nbhd->add_option("x", x_arg, "Element to test");
  nbhd->add_option("--minus", extra, "Extra apexes of a nested V; prints U \\ V");
  nbhd->callback([&] {
    action = [&] {
      const TopologySpec spec = load_topology(o.topology);
      const NbhdDescriptor u = load_nbhd(spec, o);
      if (!extra.empty()) {
        auto apexes = std::vector<Pair>(u.apexes().begin(), u.apexes().end());
        for (const Pair& p : parse_pair_list(extra)) apexes.push_back(p);
        const auto r = nbhd_difference(u, NbhdDescriptor::with_apexes(spec, std::move(apexes)));
        emit(o, join(r), elements_json(r));
        return;
      }
      if (x_arg.empty()) throw DomainError("nbhd needs an element or --minus");
      const bool r = nbhd_member(u, parse_element(x_arg));
      emit(o, r ? "true" : "false", json(r));
    };
  });

  std::string elem_arg;
  std::string side_arg = "left";
  auto* witness = app.add_subcommand("witness", "Continuity witness for a shift at zero");
  add_nbhd(witness);
  witness->add_option("--elem", elem_arg, "Shifting element")->required();
  witness->add_option("--side", side_arg, "left: x -> e*x, right: x -> x*e")
      ->check(CLI::IsMember({"left", "right"}));
  witness->add_option("--window", o.window, "Verify the inclusion exhaustively on this window");
  witness->callback([&] {
    action = [&] {
      const TopologySpec spec = load_topology(o.topology);
      ShiftWitness w = shift_witness(spec, parse_pair(elem_arg), parse_side(side_arg), load_nbhd(spec, o));
      if (o.window) {
        if (auto bad = oracle::witness_counterexample(w, oracle::Window{*o.window})) {
          throw DomainError("witness fails at " + to_string(*bad));
        }
        w.verified_window = *o.window;
      }
      std::string text = "trace " + pairs_text(w.trace) + "\nV " + describe(w.V);
      if (w.verified_window) text += "\nverified on window " + std::to_string(*w.verified_window);
      emit(o, text, json_io::to_json(w));
    };
  });

  std::string coarse_arg, fine_arg;
  auto* compare = app.add_subcommand("compare", "Look for a fine basic set inside a coarse probe");
  compare->add_option("--coarse", coarse_arg, "Coarse topology JSON")->required();
  compare->add_option("--fine", fine_arg, "Fine topology JSON")->required();
  compare->add_option("--apexes", o.apexes, "Probe apexes");
  compare->add_option("--a", o.a, "Probe threshold a");
  compare->add_option("--b", o.b, "Probe threshold b");
  compare->add_option("--nbhd", o.nbhd_file, "Probe JSON; wins over inline flags");
  compare->add_option("--window", o.window, "Search bound (default 3)");
  compare->callback([&] {
    action = [&] {
      const TopologySpec coarse = load_topology(coarse_arg);
      const TopologySpec fine = load_topology(fine_arg);
      const auto v = compare_at_zero(coarse, fine, load_nbhd(coarse, o), o.window.value_or(3));
      emit(o, verdict_text(v), json_io::to_json(v));
    };
  });

  std::string seqs1, seqs2;
  auto* distinct = app.add_subcommand("distinct", "A point where two D sets differ");
  distinct->add_option("--seqs1", seqs1, "Sequence pair JSON")->required();
  distinct->add_option("--seqs2", seqs2, "Sequence pair JSON")->required();
  distinct->add_option("--window", o.window, "Search window (default 10)");
  distinct->callback([&] {
    action = [&] {
      const auto s1 = json_io::sequence_pair_from_json(load_json(seqs1));
      const auto s2 = json_io::sequence_pair_from_json(load_json(seqs2));
      const Int w = o.window.value_or(10);
      const auto p = distinctness_certificate(s1, s2, w);
      if (p) {
        emit(o, to_string(*p), json{{"found", true}, {"point", json_io::to_json(*p)}});
      } else {
        emit(o, "not found in window " + std::to_string(w), json{{"found", false}, {"window", w}});
      }
    };
  });

  Int corner_n = 0;
  bool complement = false;
  auto* corner = app.add_subcommand("corner", "U \\ C[n], or C[n] \\ U with --complement");
  add_nbhd(corner);
  corner->add_option("--n", corner_n, "Corner index")->required();
  corner->add_flag("--complement", complement, "Report C[n] \\ U instead");
  corner->callback([&] {
    action = [&] {
      const TopologySpec spec = load_topology(o.topology);
      const NbhdDescriptor u = load_nbhd(spec, o);
      const auto r = complement ? corner_complement(u, corner_n) : corner_tail(u, corner_n);
      emit(o, set_text(r), json_io::to_json(r));
    };
  });

  Int modulus = 0;
  auto* quotient = app.add_subcommand("quotient", "Image in Z (no --m) or Z/mZ");
  quotient->add_option("x", x_arg)->required();
  quotient->add_option("--m", modulus, "Modulus");
  quotient->callback([&] {
    action = [&] {
      const Element x = parse_element(x_arg);
      const Int r = modulus == 0 ? difference_hom(x) : quotient_mod(modulus, x);
      emit(o, std::to_string(r), json(r));
    };
  });

  auto* verify = app.add_subcommand("verify", "Oracle/symbolic agreement report");
  add_topology(verify);
  verify->add_option("--window", o.window, "Window (default 4)");
  verify->callback([&] {
    action = [&] {
      std::optional<TopologySpec> spec;
      if (!o.topology.empty()) spec = load_topology(o.topology);
      const auto rs = run_verification(o.window.value_or(4), spec);
      std::string text;
      bool all = true;
      for (const auto& r : rs) {
        all = all && r.passed;
        text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + (r.detail.empty() ? "" : ": " + r.detail) + "\n";
      }
      text += all ? "all checks passed" : "some checks failed";
      emit(o, text, json{{"passed", all}, {"checks", report_json(rs)}});
      if (!all) throw DomainError("verification failed");
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  o.format = format == "json" ? Format::Json : Format::Text;
  try {
    action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
