// Front end for single-table checks: axioms, order structure, classifiers,
// state-space enumeration, state checks, decomposition, the six-way
// classification, and the corpus suite. One report line per fact; exit 0 on a
// clean report, 1 when any PROP line fails, 2 on parse or usage errors.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ea/report.hpp"
#include "ea/represent.hpp"
#include "ea/suite.hpp"
#include "common.hpp"

namespace {

using namespace ea;

std::string tuple_name(const Table& t, const std::vector<Elem>& xs) {
  std::string out = "(";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += t.name(xs[i]);
  }
  return out + ")";
}

// Verified algebra or a failing report: classifiers require the axioms, so a
// table that breaks them yields `PROP axioms FAIL` and exit 1, not a crash.
Algebra require_algebra(const Table& t, Report& rep) {
  AxiomReport ax = verify_axioms(t);
  if (!ax.passed) {
    const Violation& v = ax.violations.front();
    rep.prop("axioms", false, std::string("axiom(") + axiom_id(v.axiom) + ")@" + tuple_name(t, v.witness));
    throw cli::CliError{cli::finish(rep), ""};
  }
  return Algebra(t, Algebra::Trusted{});
}

int cmd_check(const std::string& file) {
  Table t = cli::load_table(file);
  Report rep;
  rep.value("elements", std::to_string(t.size()));
  AxiomReport ax = verify_axioms(t);
  if (ax.passed) {
    rep.prop("axioms", true);
  } else {
    const Violation& v = ax.violations.front();
    rep.prop("axioms", false, std::string("axiom(") + axiom_id(v.axiom) + ")@" + tuple_name(t, v.witness));
    for (const Violation& w : ax.violations)
      rep.info(std::string("axiom ") + axiom_id(w.axiom) + " at " + tuple_name(t, w.witness) +
               ": " + w.message);
    if (ax.total_violations > ax.violations.size())
      rep.info(std::to_string(ax.total_violations - ax.violations.size()) + " further violations");
  }
  return cli::finish(rep);
}

int cmd_order(const std::string& file) {
  Table t = cli::load_table(file);
  Report rep;
  Algebra alg = require_algebra(t, rep);
  for (Elem e = 0; e < t.size(); ++e) {
    std::vector<std::string> lows;
    alg.below(e).for_each([&](int z) { lows.push_back(t.name(z)); });
    rep.value("below(" + t.name(e) + ")", cli::brace_list(lows));
  }
  for (Elem e = 0; e < t.size(); ++e)
    rep.value("ortho(" + t.name(e) + ")", t.name(alg.orthosupplement(e)));
  return cli::finish(rep);
}

int cmd_rdp(const std::string& file) {
  Table t = cli::load_table(file);
  Report rep;
  Algebra alg = require_algebra(t, rep);
  RefinementReport r = check_rdp(alg);
  rep.prop("rdp", r.holds,
           r.holds ? "" : tuple_name(t, {r.witness.begin(), r.witness.end()}));
  rep.value("interpolation", check_interpolation(alg).holds ? "yes" : "no");
  return cli::finish(rep);
}

int cmd_lattice(const std::string& file) {
  Table t = cli::load_table(file);
  Report rep;
  Algebra alg = require_algebra(t, rep);
  LatticeReport r = check_lattice(alg);
  rep.prop("lattice", r.holds, r.holds ? "" : tuple_name(t, {r.x, r.y}));
  if (!r.holds) rep.info(std::string("no ") + r.missing + " for " + tuple_name(t, {r.x, r.y}));
  return cli::finish(rep);
}

int cmd_mv(const std::string& file) {
  Table t = cli::load_table(file);
  Report rep;
  Algebra alg = require_algebra(t, rep);
  MvResult r = mv_construct(alg);
  rep.prop("mv", r.ok);
  if (!r.ok) rep.info(r.reason);
  return cli::finish(rep);
}

int cmd_center(const std::string& file) {
  Table t = cli::load_table(file);
  Report rep;
  Algebra alg = require_algebra(t, rep);
  CenterReport r = center(alg);
  std::vector<std::string> names;
  for (Elem e : r.elements) names.push_back(t.name(e));
  rep.value("center_size", std::to_string(r.elements.size()));
  rep.value("center", cli::brace_list(names));
  rep.prop("center_boolean", r.boolean_verified);
  if (!r.boolean_verified) rep.info(r.detail);
  return cli::finish(rep);
}

int cmd_gencomp(const std::string& file) {
  Table t = cli::load_table(file);
  Report rep;
  Algebra alg = require_algebra(t, rep);
  ComparabilityReport r = check_general_comparability(alg);
  rep.prop("gencomp", r.holds, r.holds ? "" : tuple_name(t, {r.x, r.y}));
  return cli::finish(rep);
}

int cmd_divisible(const std::string& file, int nmax) {
  Table t = cli::load_table(file);
  Report rep;
  Algebra alg = require_algebra(t, rep);
  DivisibilityReport r = check_divisible(alg, nmax);
  rep.value("nmax", std::to_string(nmax));
  rep.prop("divisible", r.divisible,
           r.divisible ? "" : "(" + t.name(r.fail_x) + "," + std::to_string(r.fail_n) + ")");
  return cli::finish(rep);
}

int cmd_states(const std::string& file) {
  Table t = cli::load_table(file);
  Report rep;
  Algebra alg = require_algebra(t, rep);
  StateSpace ss = state_space(alg);
  rep.value("vertex_count", std::to_string(ss.vertices.size()));
  rep.value("affine_dim", std::to_string(ss.affine_dim));
  for (size_t i = 0; i < ss.vertices.size(); ++i) {
    std::string row = "vertex " + std::to_string(i) + ":";
    for (Elem e = 0; e < t.size(); ++e)
      row += " " + t.name(e) + "=" + format_rat(ss.vertices[i][size_t(e)]);
    rep.raw(row);
  }
  return cli::finish(rep);
}

// Shared head of every STATEFILE subcommand: a failing state short-circuits.
RatVec require_state(const Algebra& alg, const std::string& statefile, Report& rep) {
  RatVec s = cli::load_state(statefile, alg.table());
  StateCheck chk = is_state(alg, s);
  rep.prop("state", chk.ok);
  if (!chk.ok) {
    rep.info(chk.reason);
    throw cli::CliError{cli::finish(rep), ""};
  }
  return s;
}

int cmd_state_check(const std::string& file, const std::string& statefile) {
  Table t = cli::load_table(file);
  Report rep;
  Algebra alg = require_algebra(t, rep);
  RatVec s = require_state(alg, statefile, rep);
  StateSpace ss = state_space(alg);
  rep.value("extremal", is_extremal(ss, s) ? "yes" : "no");
  return cli::finish(rep);
}

int cmd_crit32(const std::string& file, const std::string& statefile) {
  Table t = cli::load_table(file);
  Report rep;
  Algebra alg = require_algebra(t, rep);
  RatVec s = require_state(alg, statefile, rep);
  PairCheck r = criterion32(alg, s);
  rep.prop("crit32", r.holds, r.holds ? "" : tuple_name(t, {r.x, r.y}));
  return cli::finish(rep);
}

int cmd_jp(const std::string& file, const std::string& statefile) {
  Table t = cli::load_table(file);
  Report rep;
  Algebra alg = require_algebra(t, rep);
  RatVec s = require_state(alg, statefile, rep);
  PairCheck r = is_jauch_piron(alg, s);
  rep.prop("jp", r.holds, r.holds ? "" : tuple_name(t, {r.x, r.y}));
  return cli::finish(rep);
}

int cmd_decompose(const std::string& file, const std::string& statefile) {
  Table t = cli::load_table(file);
  Report rep;
  Algebra alg = require_algebra(t, rep);
  RatVec s = require_state(alg, statefile, rep);
  StateSpace ss = state_space(alg);
  DiscreteMeasure m = decompose(alg, ss, s);
  for (size_t i = 0; i < m.support.size(); ++i)
    rep.raw("mu: vertex_" + std::to_string(m.support[i]) + " = " + format_rat(m.weights[i]));
  rep.value("support_size", std::to_string(m.support.size()));
  rep.prop("reconstruct", measure_combination(ss, m) == s);
  return cli::finish(rep);
}

int cmd_classify(const std::string& file) {
  Table t = cli::load_table(file);
  Report rep;
  Algebra alg = require_algebra(t, rep);
  Theorem51Report r = theorem51_report(alg);
  rep.value("rdp", r.precondition_rdp ? "yes" : "no");
  if (!r.precondition_rdp) {
    rep.info("classification skipped (no refinement, witness " +
             tuple_name(t, {r.rdp.witness.begin(), r.rdp.witness.end()}) + ")");
    return cli::finish(rep);
  }
  rep.value("unique_extension", r.unique_extension ? "yes" : "no");
  rep.value("simplex", r.simplex ? "yes" : "no");
  rep.value("lattice", r.lattice ? "yes" : "no");
  rep.value("gencomp", r.gencomp ? "yes" : "no");
  rep.value("theta_bijective", r.theta_bijective ? "yes" : "no");
  rep.value("mv", r.mv_ok ? "yes" : "no");
  rep.prop("theorem51", r.agree, r.agree ? "" : "six conditions split");
  return cli::finish(rep);
}

int cmd_suite(const std::string& corpus_name) {
  std::vector<Table> tables;
  if (corpus_name == "standard") {
    tables = standard_corpus();
  } else if (corpus_name != "none") {
    try {
      tables = corpus_list(corpus_name);
    } catch (const std::invalid_argument& e) {
      throw cli::CliError{2, std::string("error: ") + e.what()};
    }
  }
  Report rep;
  SuiteOutcome out = run_suite(tables, rep);
  rep.value("algebras", std::to_string(out.algebras));
  rep.value("rdp_members", std::to_string(out.rdp_members));
  return cli::finish(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for finite effect algebras"};
  app.require_subcommand(1);

  std::string file, statefile, corpus_name = "standard";
  int nmax = 2;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "table file")->required();
    return sub;
  };
  auto with_state = [&](CLI::App* sub) {
    with_file(sub)->add_option("statefile", statefile, "state assignment file")->required();
    return sub;
  };

  CLI::App* check = with_file(app.add_subcommand("check", "verify the axioms"));
  CLI::App* order = with_file(app.add_subcommand("order", "derived order and orthosupplements"));
  CLI::App* rdp = with_file(app.add_subcommand("rdp", "refinement property"));
  CLI::App* lattice = with_file(app.add_subcommand("lattice", "meets and joins"));
  CLI::App* mv = with_file(app.add_subcommand("mv", "totalize to an MV algebra"));
  CLI::App* ctr = with_file(app.add_subcommand("center", "central elements"));
  CLI::App* gencomp = with_file(app.add_subcommand("gencomp", "general comparability"));
  CLI::App* divisible = with_file(app.add_subcommand("divisible", "n-divisibility"));
  divisible->add_option("--nmax", nmax, "largest divisor to test")->check(CLI::PositiveNumber);
  CLI::App* states = with_file(app.add_subcommand("states", "extremal states"));
  CLI::App* state_check = with_state(app.add_subcommand("state-check", "verify a state file"));
  CLI::App* crit32 = with_state(app.add_subcommand("crit32", "maximal-lower-bound criterion"));
  CLI::App* jp = with_state(app.add_subcommand("jp", "Jauch-Piron check"));
  CLI::App* decompose = with_state(app.add_subcommand("decompose", "barycentric weights"));
  CLI::App* classify = with_file(app.add_subcommand("classify", "six-way classification"));
  CLI::App* suite = app.add_subcommand("suite", "batch corpus verification");
  suite->add_option("--corpus", corpus_name, "standard, none, or a corpus expression");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  return cli::run_guarded([&]() -> int {
    if (check->parsed()) return cmd_check(file);
    if (order->parsed()) return cmd_order(file);
    if (rdp->parsed()) return cmd_rdp(file);
    if (lattice->parsed()) return cmd_lattice(file);
    if (mv->parsed()) return cmd_mv(file);
    if (ctr->parsed()) return cmd_center(file);
    if (gencomp->parsed()) return cmd_gencomp(file);
    if (divisible->parsed()) return cmd_divisible(file, nmax);
    if (states->parsed()) return cmd_states(file);
    if (state_check->parsed()) return cmd_state_check(file, statefile);
    if (crit32->parsed()) return cmd_crit32(file, statefile);
    if (jp->parsed()) return cmd_jp(file, statefile);
    if (decompose->parsed()) return cmd_decompose(file, statefile);
    if (classify->parsed()) return cmd_classify(file);
    if (suite->parsed()) return cmd_suite(corpus_name);
    return 2;
  });
}
