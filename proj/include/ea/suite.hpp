#pragma once

// Batch verification over a corpus of tables.  For every algebra with the
// refinement property: the six-way classification must agree, the
// maximal-lower-bound criterion must hold at every extremal state, and
// sampled mixtures must stay Jauch-Piron.  For every algebra with states:
// sampled mixtures must decompose and reconstruct exactly, with both pivot
// orders agreeing whenever the state space is a simplex.  Non-refinement
// members are skipped with INFO lines rather than silently dropped.

#include <cstdint>
#include <string>
#include <vector>

#include "ea/report.hpp"
#include "ea/represent.hpp"

namespace ea {

struct SuiteOptions {
  int mixtures = 50;
  uint64_t jp_seed = 101;
  uint64_t decompose_seed = 202;
};

struct SuiteOutcome {
  int algebras = 0;
  int rdp_members = 0;
  bool theorem51_all = true;
  bool crit32_all = true;
  bool jp_all = true;
  bool decompose_all = true;
  bool all_pass() const {
    return theorem51_all && crit32_all && jp_all && decompose_all;
  }
};

inline SuiteOutcome run_suite(const std::vector<Table>& tables, Report& rep,
                              const SuiteOptions& opt = {}) {
  SuiteOutcome out;
  if (tables.empty()) {
    rep.info("no algebras");
    return out;
  }
  for (const Table& t : tables) {
    Algebra alg(t);
    ++out.algebras;
    const std::string& label = t.label;
    auto pair_name = [&](Elem a, Elem b) {
      return "(" + t.name(a) + "," + t.name(b) + ")";
    };

    RefinementReport rdp = check_rdp(alg);
    if (check_interpolation(alg).holds != rdp.holds)
      rep.info("interpolation/" + label + " diverges from refinement");
    StateSpace ss = state_space(alg);

    if (rdp.holds) {
      ++out.rdp_members;

      Theorem51Report thm = theorem51_report(alg);
      out.theorem51_all &= thm.agree;
      rep.prop("theorem51/" + label, thm.agree,
               thm.agree ? "" : "six conditions split");

      bool c32 = true;
      std::string c32_witness;
      for (const RatVec& v : ss.vertices) {
        PairCheck pc = criterion32(alg, v);
        if (!pc.holds) {
          c32 = false;
          c32_witness = pair_name(pc.x, pc.y);
          break;
        }
      }
      out.crit32_all &= c32;
      rep.prop("crit32/" + label, c32, c32_witness);

      bool jp = true;
      std::string jp_witness;
      MixtureSampler jp_sampler(opt.jp_seed);
      for (int i = 0; i < opt.mixtures && jp && !ss.vertices.empty(); ++i) {
        RatVec s = sigma_convex(ss.vertices, jp_sampler.weights(ss.vertices.size()));
        PairCheck pc = is_jauch_piron(alg, s);
        if (!pc.holds) {
          jp = false;
          jp_witness = pair_name(pc.x, pc.y);
        }
      }
      out.jp_all &= jp;
      rep.prop("jp/" + label, jp, jp_witness);
    } else {
      std::string w = "(" + t.name(rdp.witness[0]) + "," + t.name(rdp.witness[1]) + "," +
                      t.name(rdp.witness[2]) + "," + t.name(rdp.witness[3]) + ")";
      rep.info("theorem51/" + label + " skipped (no refinement, witness " + w + ")");
      rep.info("crit32/" + label + " skipped (no refinement)");
      rep.info("jp/" + label + " skipped (no refinement)");
    }

    if (ss.vertices.empty()) {
      rep.info("decompose/" + label + " skipped (no states)");
      continue;
    }
    bool dec = true;
    std::string dec_witness;
    bool simplex = classify_simplex(ss) == SimplexClass::Simplex;
    MixtureSampler dec_sampler(opt.decompose_seed);
    for (int i = 0; i < opt.mixtures && dec; ++i) {
      RatVec s = sigma_convex(ss.vertices, dec_sampler.weights(ss.vertices.size()));
      try {
        DiscreteMeasure fwd = decompose(alg, ss, s, PivotOrder::Forward);
        if (measure_combination(ss, fwd) != s) {
          dec = false;
          dec_witness = "mixture " + std::to_string(i) + " not reconstructed";
        } else if (simplex) {
          DiscreteMeasure rev = decompose(alg, ss, s, PivotOrder::Reverse);
          if (fwd.support != rev.support || fwd.weights != rev.weights) {
            dec = false;
            dec_witness = "pivot orders disagree on a simplex at mixture " +
                          std::to_string(i);
          }
        }
      } catch (const std::exception& ex) {
        dec = false;
        dec_witness = std::string("mixture ") + std::to_string(i) + ": " + ex.what();
      }
    }
    out.decompose_all &= dec;
    rep.prop("decompose/" + label, dec, dec_witness);
  }
  return out;
}

// Comma-separated corpus expressions at paren depth zero, so product(...) can
// keep its internal comma.
inline std::vector<Table> corpus_list(const std::string& spec) {
  std::vector<Table> out;
  int depth = 0;
  size_t start = 0;
  auto flush = [&](size_t end) {
    std::string piece = spec.substr(start, end - start);
    size_t a = piece.find_first_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty corpus expression");
    for (Table& t : corpus(piece)) out.push_back(std::move(t));
  };
  for (size_t i = 0; i < spec.size(); ++i) {
    if (spec[i] == '(') ++depth;
    if (spec[i] == ')') --depth;
    if (spec[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(spec.size());
  return out;
}

}  // namespace ea
