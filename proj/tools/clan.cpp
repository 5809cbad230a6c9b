// Front end for function families: closure verification of a listed family,
// the central set algebra of its induced table, and the finite integral
// representation of a state given by values on the declared functions.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ea/clans.hpp"
#include "ea/report.hpp"
#include "common.hpp"

namespace {

using namespace ea;

struct LoadedFamily {
  FunctionFamily fam;                // members in listing order, kind still Raw
  std::vector<std::string> names;    // declared function names, aligned with members
};

LoadedFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cli::CliError{2, "error: cannot open '" + path + "'"};
  FamilyFile file;
  try {
    file = parse_family(in);
  } catch (const std::invalid_argument& e) {
    throw cli::CliError{2, "parse error in '" + path + "': " + e.what()};
  }
  for (size_t i = 0; i < file.names.size(); ++i)
    for (size_t j = i + 1; j < file.names.size(); ++j)
      if (file.names[i] == file.names[j])
        throw cli::CliError{2, "parse error in '" + path + "': duplicate function name '" +
                                   file.names[i] + "'"};
  LoadedFamily out;
  out.fam.points = file.points;
  out.fam.members = file.funcs;
  out.names = file.names;
  return out;
}

std::string mask_name(const std::vector<std::string>& universe, uint32_t mask) {
  std::vector<std::string> pts;
  for (size_t i = 0; i < universe.size(); ++i)
    if (mask & (uint32_t(1) << i)) pts.push_back(universe[i]);
  return cli::brace_list(pts);
}

// Closure verification shared by every subcommand: a family that is not a
// clan has no induced table, so the failing report short-circuits.
void require_clan(LoadedFamily& loaded, Report& rep, int cap) {
  ClosureCheck clan = verify_closure(loaded.fam, ClosureKind::Clan);
  rep.prop("clan_closed", clan.ok);
  if (!clan.ok) {
    rep.info(clan.reason);
    // Show how far the listed members are from a closed family, when the cap
    // allows the completion to finish.
    try {
      FunctionFamily full = clan_closure(loaded.fam.points, loaded.fam.members, cap);
      rep.value("closure_size", std::to_string(full.members.size()));
    } catch (const CapExceeded&) {
      rep.info("closure exceeds " + std::to_string(cap) + " members");
    }
    throw cli::CliError{cli::finish(rep), ""};
  }
  loaded.fam.kind = ClosureKind::Clan;
  rep.value("bold_closed", verify_closure(loaded.fam, ClosureKind::Bold).ok ? "yes" : "no");
}

int cmd_check(const std::string& file, int cap) {
  LoadedFamily loaded = load_family(file);
  Report rep;
  rep.value("points", std::to_string(loaded.fam.points.size()));
  rep.value("members", std::to_string(loaded.fam.members.size()));
  require_clan(loaded, rep, cap);
  Table t = as_effect_algebra(loaded.fam);
  AxiomReport ax = verify_axioms(t);
  rep.prop("axioms", ax.passed);
  return cli::finish(rep);
}

int cmd_b0(const std::string& file, int cap) {
  LoadedFamily loaded = load_family(file);
  Report rep;
  require_clan(loaded, rep, cap);
  Table t = as_effect_algebra(loaded.fam);
  Algebra alg(t);
  SetAlgebra b0 = b0_algebra(loaded.fam, alg);
  std::vector<uint32_t> s0 = s0_family(loaded.fam);
  rep.value("b0_size", std::to_string(b0.members.size()));
  rep.value("s0_size", std::to_string(s0.size()));
  for (uint32_t mask : b0.members) rep.raw("subset " + mask_name(b0.universe, mask));
  for (uint32_t mask : b0.atoms) rep.raw("atom " + mask_name(b0.universe, mask));
  return cli::finish(rep);
}

int cmd_integrate(const std::string& file, const std::string& statefile, int cap) {
  LoadedFamily loaded = load_family(file);
  Report rep;
  require_clan(loaded, rep, cap);
  Table t = as_effect_algebra(loaded.fam);
  Algebra alg(t);

  RatVec s(loaded.fam.members.size(), Rat(0));
  std::vector<bool> assigned(loaded.fam.members.size(), false);
  for (const auto& [name, value] : cli::load_assignments(statefile)) {
    auto it = std::find(loaded.names.begin(), loaded.names.end(), name);
    if (it == loaded.names.end())
      throw cli::CliError{2, "parse error in '" + statefile + "': unknown function '" + name + "'"};
    size_t i = size_t(it - loaded.names.begin());
    s[i] = value;
    assigned[i] = true;
  }
  for (size_t i = 0; i < assigned.size(); ++i)
    if (!assigned[i])
      throw cli::CliError{2, "parse error in '" + statefile + "': missing value for '" +
                                 loaded.names[i] + "'"};
  StateCheck chk = is_state(alg, s);
  rep.prop("state", chk.ok);
  if (!chk.ok) {
    rep.info(chk.reason);
    return cli::finish(rep);
  }

  SetAlgebra b0 = b0_algebra(loaded.fam, alg);
  BkReport bk = bk_verify(loaded.fam, alg, b0, s);
  for (size_t i = 0; i < b0.members.size(); ++i)
    rep.raw("mu " + mask_name(b0.universe, b0.members[i]) + " = " + format_rat(bk.mu.values[i]));
  for (const BkLine& line : bk.lines) {
    std::string row = "bk " + loaded.names[size_t(line.member)] + ": state=" +
                      format_rat(line.state_value);
    if (line.measurable)
      row += " integral=" + format_rat(line.integral);
    else
      row += " nonmeasurable";
    rep.raw(row);
  }
  rep.value("measurable_count", std::to_string(bk.measurable_members.size()));
  rep.prop("bk_integral", bk.verdict);
  return cli::finish(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"effect-clan checks for listed function families"};
  app.require_subcommand(1);

  std::string file, statefile;
  int cap = 4096;
  app.add_option("--cap", cap, "closure size guard")->check(CLI::PositiveNumber);

  CLI::App* check = app.add_subcommand("check", "closure and axioms of the induced table");
  check->add_option("file", file, "family file")->required();
  CLI::App* b0 = app.add_subcommand("b0", "central set algebra and atoms");
  b0->add_option("file", file, "family file")->required();
  CLI::App* integrate = app.add_subcommand("integrate", "finite integral against the induced measure");
  integrate->add_option("file", file, "family file")->required();
  integrate->add_option("statefile", statefile, "state values per declared function")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  return cli::run_guarded([&]() -> int {
    if (check->parsed()) return cmd_check(file, cap);
    if (b0->parsed()) return cmd_b0(file, cap);
    if (integrate->parsed()) return cmd_integrate(file, statefile, cap);
    return 2;
  });
}
