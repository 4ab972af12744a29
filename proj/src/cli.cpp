#include "singlat/cli.hpp"

#include "singlat/brieskorn.hpp"
#include "singlat/consistency.hpp"
#include "singlat/ideal_oracle.hpp"
#include "singlat/report.hpp"
#include "singlat/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>

namespace singlat::cli {

namespace {

struct Options {
  std::vector<std::int64_t> a;
  bool json = false;
  bool dot = false;
  bool use_oracle = false;
  std::int64_t n = 0;
  std::int64_t max_exp = 12;
  std::int64_t max_codim = 3;
  std::int64_t degree = 0;
};

CLI::Option* add_tuple(CLI::App* sub, Options& o) {
  return sub->add_option("a", o.a, "exponents a_1 .. a_m (m >= 3)")->required()->check(CLI::PositiveNumber);
}

ExponentTuple tuple_of(const Options& o) { return ExponentTuple::sorted(o.a); }

int cmd_invariants(const Options& o, std::ostream& out) {
  const auto r = report::make_invariant_report(tuple_of(o));
  if (o.json)
    out << report::dump(report::to_json(r)) << "\n";
  else
    out << report::to_text(r);
  return 0;
}

int cmd_graph(const Options& o, std::ostream& out) {
  const brieskorn::StarGraph g(tuple_of(o));
  if (o.json)
    out << report::dump(report::dual_graph_json(g.graph())) << "\n";
  else if (o.dot)
    out << report::star_graph_dot(g);
  else
    out << report::star_graph_text(g);
  return 0;
}

int cmd_cycles(const Options& o, std::ostream& out) {
  const auto a = tuple_of(o);
  const brieskorn::StarGraph g(a);
  const auto& graph = g.graph();
  std::vector<std::pair<std::string, lattice::QCycle>> rows;
  for (std::size_t i = 1; i <= a.m(); ++i) rows.emplace_back("Z^(" + std::to_string(i) + ")", brieskorn::divisor_cycle(g, i));
  rows.emplace_back("Z_0", brieskorn::central_multiple_cycle(g));
  rows.emplace_back("Z_K", brieskorn::canonical_cycle_formula(g));
  const auto zf = lattice::fundamental_cycle(graph);
  rows.emplace_back("Z_f", zf);
  rows.emplace_back("M_X", brieskorn::maximal_ideal_cycle(g));

  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [name, z] : rows) out << std::left << std::setw(static_cast<int>(width)) << name << "  " << report::star_cycle_text(g, z) << "\n";
  const auto pf = brieskorn::fundamental_genus_checked(g);
  out << "Z_f^2=" << lattice::intersection_number(graph, zf, zf) << " p_f=" << pf.value << "\n";
  return 0;
}

int cmd_nr(const Options& o, std::ostream& out, std::ostream& err) {
  const auto a = tuple_of(o);
  const Int nr = brieskorn::normal_reduction_number(a);
  out << "nr=" << nr;
  if (!o.use_oracle) {
    out << "\n";
    return 0;
  }
  const auto by_oracle = oracle::nr_by_oracle(a, oracle::Execution::parallel);
  const bool agree = nr == by_oracle;
  out << " oracle=" << by_oracle << (agree ? " agree" : " disagree") << "\n";
  if (!agree) {
    err << "consistency failure on " << a.str() << ": closed form " << nr << ", oracle " << by_oracle << "\n";
    return 3;
  }
  return 0;
}

int cmd_qseq(const Options& o, std::ostream& out) {
  const auto a = tuple_of(o);
  const auto s = brieskorn::q_sequence(a, static_cast<std::size_t>(o.n));
  const Int nr = brieskorn::normal_reduction_number(a);
  if (o.json) {
    const report::Json j = {{"a", report::tuple_json(a)}, {"nr", report::int_json(nr)}, {"p", report::int_list_json(s.p)},
                            {"q", report::int_list_json(s.q)}};
    out << report::dump(j) << "\n";
    return 0;
  }
  out << "a=" << a.str() << " nr=" << nr << "\n";
  out << "n\tq(n)\tp(n+1)\n";
  for (std::size_t n = 0; n < s.q.size(); ++n) out << n << "\t" << s.q[n] << "\t" << s.p[n] << "\n";
  return 0;
}

int cmd_elliptic(const Options& o, std::ostream& out) {
  const auto m_max = static_cast<std::size_t>(o.max_codim + 2);
  const auto tuples = sweep::classify_elliptic(m_max, o.max_exp);
  if (o.json) {
    report::Json j = report::Json::array();
    for (const auto& a : tuples) j.push_back(report::tuple_json(a));
    out << report::dump(j) << "\n";
    return 0;
  }
  for (const auto& a : tuples) out << a.str() << "\n";
  return 0;
}

int cmd_cone(const Options& o, std::ostream& out) {
  out << report::dump(report::cone_report_json(o.degree)) << "\n";
  return 0;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const auto a = tuple_of(o);
  const auto results = consistency::run_checks(a);
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << r.detail
        << "\n";
    passed += r.passed;
  }
  out << passed << "/" << results.size() << " checks passed for " << a.str() << "\n";
  if (passed != results.size()) {
    err << "consistency failure on " << a.str() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolution graphs, cycles, genera and normal reduction numbers of Brieskorn complete intersections",
               "singlat"};
  app.require_subcommand(1);
  Options o;

  auto* invariants = app.add_subcommand("invariants", "numeric invariants, p_f, p_g and nr");
  add_tuple(invariants, o);
  invariants->add_flag("--json", o.json, "emit JSON");

  auto* graph = app.add_subcommand("graph", "star-shaped dual graph of the resolution");
  add_tuple(graph, o);
  auto* graph_json = graph->add_flag("--json", o.json, "emit JSON");
  graph->add_flag("--dot", o.dot, "emit Graphviz DOT")->excludes(graph_json);

  auto* cycles = app.add_subcommand("cycles", "Z^(i), Z_0, Z_K, Z_f and M_X");
  add_tuple(cycles, o);

  auto* nr = app.add_subcommand("nr", "normal reduction number of the maximal ideal");
  add_tuple(nr, o);
  nr->add_flag("--oracle", o.use_oracle, "also count monomials and compare");

  auto* qseq = app.add_subcommand("qseq", "q(0..N) and the quotient dimensions p");
  add_tuple(qseq, o);
  qseq->add_option("-N", o.n, "last index")->required()->check(CLI::NonNegativeNumber);
  qseq->add_flag("--json", o.json, "emit JSON");

  auto* elliptic = app.add_subcommand("elliptic", "elliptic tuples in a box");
  elliptic->add_option("--max-exp", o.max_exp, "largest exponent a_m")->check(CLI::Range(std::int64_t{2}, std::int64_t{1000}));
  elliptic->add_option("--max-codim", o.max_codim, "largest codimension m - 2")->check(CLI::Range(std::int64_t{1}, std::int64_t{8}));
  elliptic->add_flag("--json", o.json, "emit JSON");

  auto* cone = app.add_subcommand("cone", "cone over a smooth plane curve");
  cone->add_option("--degree", o.degree, "degree d >= 3")->required()->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "run every cross-check for one tuple");
  add_tuple(check, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(o, out);
    if (graph->parsed()) return cmd_graph(o, out);
    if (cycles->parsed()) return cmd_cycles(o, out);
    if (nr->parsed()) return cmd_nr(o, out, err);
    if (qseq->parsed()) return cmd_qseq(o, out);
    if (elliptic->parsed()) return cmd_elliptic(o, out);
    if (cone->parsed()) return cmd_cone(o, out);
    if (check->parsed()) return cmd_check(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 1;
}

}  // namespace singlat::cli
