#pragma once

// JSON and DOT documents emitted by the command-line front end. JSON objects
// always have sorted keys; integers that do not fit in 64 bits are written as
// decimal strings.

#include "singlat/brieskorn.hpp"
#include "singlat/graph_lattice.hpp"
#include "singlat/ideal_oracle.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace singlat::report {

using Json = nlohmann::json;

Json int_json(const Int& x);
Json int_list_json(const std::vector<Int>& xs);
// Parses an integer written either as a JSON number or a decimal string.
Int int_from_json(const Json& j);

// {"vertices":[{"genus":g,"self_int":e}],"edges":[[i,j]]}
Json dual_graph_json(const lattice::DualGraph& g);
lattice::DualGraph dual_graph_from_json(const Json& j);
// Vertex labels "g=<genus>, e=<self_int>".
std::string dual_graph_dot(const lattice::DualGraph& g);
// Center labelled "E0 [g=..] (-c0)", chain vertices "E_{w,nu,xi} (-c)".
std::string star_graph_dot(const brieskorn::StarGraph& g);
// Human-readable description of the star: center and one line per family.
std::string star_graph_text(const brieskorn::StarGraph& g);

// Coefficients of a cycle on a star graph, one line: "E0=.. | w=2 x3: [..]".
// Chain coefficients are read from the first copy of each family.
std::string star_cycle_text(const brieskorn::StarGraph& g, const lattice::QCycle& z);

struct InvariantReport {
  ExponentTuple a;
  brieskorn::BCIInvariants invariants;
  Int center_genus;
  Int c0;
  Int pf;
  Int pg;
  Int nr;
  bool elliptic = false;
  std::vector<std::string> flags;  // sorted
};

// Builds the star graph; p_f is the closed form verified against the Laufer
// cycle (ConsistencyError on disagreement).
InvariantReport make_invariant_report(const ExponentTuple& a);
Json to_json(const InvariantReport& r);
std::string to_text(const InvariantReport& r);

// {"a":[..],"p":[..],"nr":n}
Json quotient_table_json(const ExponentTuple& a, const oracle::QuotientTable& t);

// {"d":..,"g":..,"gon":..,"nr":..,"bound":..,"q":[..]}
Json cone_report_json(std::int64_t d);

Json tuple_json(const ExponentTuple& a);
Json monomials_json(const std::vector<oracle::Monomial>& ms);

// Serialized with sorted keys and no trailing newline.
std::string dump(const Json& j);

}  // namespace singlat::report
