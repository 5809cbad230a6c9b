#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "ea/clans.hpp"
#include "ea/suite.hpp"

// The acceptance gate: one test case and one printed verdict line per
// criterion. Every check is exact rational arithmetic; the timed criteria
// assert their wall-clock budget on top of correctness.

using ea::Algebra;
using ea::Rat;
using ea::RationalPair;
using ea::RatVec;
using ea::StateSpace;
using ea::Table;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void verdict(int n, const std::string& name, bool pass) {
  std::cout << "ACCEPT " << n << " " << name << " " << (pass ? "PASS" : "FAIL") << "\n";
}

// Criteria 3 through 6 all read off one corpus run.
struct SuiteRun {
  ea::Report rep;
  ea::SuiteOutcome out;
  double seconds = 0;
};

const SuiteRun& corpus_suite() {
  static const SuiteRun run = [] {
    SuiteRun r;
    Stopwatch watch;
    r.out = ea::run_suite(ea::standard_corpus(), r.rep);
    r.seconds = watch.seconds();
    return r;
  }();
  return run;
}

// The Bold family of all denominator-4 grid functions on four points,
// generated from the four indicators and the constant 1/4.
const ea::FunctionFamily& grid_bold_family() {
  static const ea::FunctionFamily fam = [] {
    std::vector<std::string> points{"w", "x", "y", "z"};
    std::vector<RatVec> gens;
    for (size_t i = 0; i < points.size(); ++i) {
      RatVec g(points.size(), Rat(0));
      g[i] = 1;
      gens.push_back(std::move(g));
    }
    gens.push_back(RatVec(points.size(), Rat(1, 4)));
    return ea::bold_closure(points, gens, 1000);
  }();
  return fam;
}

}  // namespace

TEST_CASE("criterion 1: strict-pair sum gap") {
  Stopwatch watch;
  RationalPair a{Rat(3, 10), Rat(3, 10)}, b{Rat(7, 10), Rat(2, 5)};
  ea::SpClanReport w = ea::sp_clan_witness(a, b);
  bool exact = w.hat_leq && w.total == RationalPair{Rat(1), Rat(7, 10)} && !w.member &&
               !ea::sp_sum(a, b) && ea::sp_member(a) && ea::sp_member(b);
  double secs = watch.seconds();
  verdict(1, "strict-pair-sum-gap", exact && secs < 1.0);
  CHECK(exact);
  CHECK(secs < 1.0);
}

TEST_CASE("criterion 2: parity-clan pathologies") {
  Stopwatch watch;
  ea::FunctionFamily fam = ea::parity_family(6);
  Table t = ea::as_effect_algebra(fam, "parity(6)");
  Algebra alg(t);

  bool rdp_fails = !ea::check_rdp(alg).holds;
  std::string chi = "\xCF\x87";
  auto ca = t.index(chi + "{1,2,3,4}");
  auto cb = t.index(chi + "{1,2,3,5}");
  bool canonical_pair_meetless =
      ca.has_value() && cb.has_value() && !alg.meet(*ca, *cb) && !ea::check_lattice(alg).holds;
  ea::CenterReport ctr = ea::center(alg);
  bool center_trivial =
      ctr.elements == std::vector<ea::Elem>{alg.zero(), alg.one()} && ctr.boolean_verified;

  double secs = watch.seconds();
  bool pass = rdp_fails && canonical_pair_meetless && center_trivial && secs < 10.0;
  verdict(2, "parity-clan-pathologies", pass);
  CHECK(rdp_fails);
  CHECK(canonical_pair_meetless);
  CHECK(center_trivial);
  CHECK(secs < 10.0);
}

TEST_CASE("criterion 3: six-way agreement on the corpus") {
  const SuiteRun& run = corpus_suite();
  bool pass = run.out.theorem51_all && run.out.rdp_members == 24 && run.seconds < 300.0;
  verdict(3, "six-way-agreement", pass);
  CHECK(run.out.theorem51_all);
  CHECK(run.out.rdp_members == 24);
  CHECK(run.seconds < 300.0);
}

TEST_CASE("criterion 4: vertex extremality criterion") {
  const SuiteRun& run = corpus_suite();
  verdict(4, "vertex-extremality-criterion", run.out.crit32_all);
  CHECK(run.out.crit32_all);
}

TEST_CASE("criterion 5: sampled mixtures stay Jauch-Piron") {
  const SuiteRun& run = corpus_suite();
  verdict(5, "mixture-jauch-piron", run.out.jp_all);
  CHECK(run.out.jp_all);
}

TEST_CASE("criterion 6: decomposition round-trips") {
  const SuiteRun& run = corpus_suite();
  verdict(6, "decomposition-round-trip", run.out.decompose_all);
  CHECK(run.out.decompose_all);
}

TEST_CASE("criterion 7: integral representation on the grid Bold family") {
  Stopwatch watch;
  const ea::FunctionFamily& fam = grid_bold_family();
  bool family_complete = fam.members.size() == 625;

  Table t = ea::as_effect_algebra(fam);
  Algebra alg(t);
  ea::SetAlgebra b0 = ea::b0_algebra(fam, alg);
  bool b0_full = b0.members.size() == 16 && b0.atoms.size() == 4;

  StateSpace ss = ea::state_space(alg);
  bool four_vertices = ss.vertices.size() == 4;

  bool integrals_exact = true;
  for (const RatVec& v : ss.vertices) {
    ea::BkReport bk = ea::bk_verify(fam, alg, b0, v);
    integrals_exact &= bk.verdict && bk.all_measurable;
  }
  ea::MixtureSampler sampler(5);
  for (int i = 0; i < 20 && integrals_exact; ++i) {
    RatVec s = ea::sigma_convex(ss.vertices, sampler.weights(ss.vertices.size()));
    ea::BkReport bk = ea::bk_verify(fam, alg, b0, s);
    integrals_exact &= bk.verdict && bk.all_measurable;
  }

  double secs = watch.seconds();
  bool pass = family_complete && b0_full && four_vertices && integrals_exact && secs < 60.0;
  verdict(7, "grid-bold-integral", pass);
  CHECK(family_complete);
  CHECK(b0_full);
  CHECK(four_vertices);
  CHECK(integrals_exact);
  CHECK(secs < 60.0);
}

TEST_CASE("criterion 8: distinct measures, identical integrals") {
  ea::MidpointReport r = ea::midpoint_demo(4);
  bool pass = r.closure_ok && r.b0_trivial && r.nonmeasurable_member >= 0 &&
              r.integrals_identical && r.induced_is_state && r.dirac_states_distinct;
  verdict(8, "midpoint-identical-integrals", pass);
  CHECK(r.closure_ok);
  CHECK(r.b0_trivial);
  CHECK(r.nonmeasurable_member >= 0);
  CHECK(r.integrals_identical);
  CHECK(r.induced_is_state);
  CHECK(r.dirac_states_distinct);
}

TEST_CASE("criterion 9: Boolean tables have exactly the Dirac vertices") {
  bool pass = true;
  for (int n = 1; n <= 4; ++n) {
    Table t = ea::boolean_table(n);
    Algebra alg(t);
    StateSpace ss = ea::state_space(alg);

    // The evaluation at an atom: 1 exactly on the elements above it.
    std::vector<RatVec> dirac;
    for (ea::Elem e = 0; e < alg.size(); ++e) {
      if (alg.below(e).count() != 2) continue;  // atoms sit directly over 0
      RatVec s(size_t(alg.size()), Rat(0));
      for (ea::Elem x = 0; x < alg.size(); ++x) s[size_t(x)] = alg.leq(e, x) ? 1 : 0;
      dirac.push_back(std::move(s));
    }
    std::sort(dirac.begin(), dirac.end());

    pass &= int(dirac.size()) == n && ss.vertices == dirac && ss.affine_dim == n - 1;
  }
  verdict(9, "boolean-dirac-vertices", pass);
  CHECK(pass);
}

TEST_CASE("criterion 10: affine evaluation decomposes barycentrically") {
  ea::DiscreteMeasure m = ea::aff_decompose(Rat(1, 3));
  bool weights_exact =
      m.support == std::vector<int>{0, 1} && m.weights == RatVec{Rat(2, 3), Rat(1, 3)};

  bool reconstructs = true;
  RatVec endpoints{Rat(0), Rat(1)};
  for (int f0 = 0; f0 <= 6 && reconstructs; ++f0)
    for (int f1 = 0; f1 <= 6 && reconstructs; ++f1) {
      RationalPair f{Rat(f0, 6), Rat(f1, 6)};
      Rat mixed(0);
      for (size_t i = 0; i < m.support.size(); ++i)
        mixed += m.weights[i] * ea::aff_state(endpoints[size_t(m.support[i])], f);
      reconstructs = mixed == ea::aff_state(Rat(1, 3), f);
    }

  RationalPair id{Rat(0), Rat(1)}, coid{Rat(1), Rat(0)};
  ea::AffMinReport mr = ea::aff_min_membership(id, coid);
  bool min_leaves = !mr.affine && mr.crossing == Rat(1, 2);
  RationalPair meet = ea::aff_meet(id, coid);
  bool meet_exists = meet == RationalPair{Rat(0), Rat(0)} && ea::aff_member(meet) &&
                     ea::aff_leq(meet, id) && ea::aff_leq(meet, coid);

  bool pass = weights_exact && reconstructs && min_leaves && meet_exists;
  verdict(10, "affine-barycentric", pass);
  CHECK(weights_exact);
  CHECK(reconstructs);
  CHECK(min_leaves);
  CHECK(meet_exists);
}
