#pragma once

// Shared plumbing for the command-line front ends: uniform file loading and
// parse-error reporting, the state-file reader, and report finishing.
// Diagnostics go to stderr; report lines go to stdout and stay byte-stable.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "ea/core.hpp"
#include "ea/rational.hpp"
#include "ea/report.hpp"

namespace cli {

struct CliError {
  int code;
  std::string message;
};

inline ea::Table load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{2, "error: cannot open '" + path + "'"};
  try {
    return ea::parse_table(in, std::filesystem::path(path).stem().string());
  } catch (const ea::ParseError& e) {
    throw CliError{2, "parse error in '" + path + "': " + e.what()};
  }
}

// Lines of the form `NAME = p/q`, hash comments allowed. Duplicates are
// rejected here; name resolution is the caller's business.
inline std::vector<std::pair<std::string, ea::Rat>> load_assignments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{2, "error: cannot open '" + path + "'"};
  std::vector<std::pair<std::string, ea::Rat>> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto fail = [&](const std::string& why) -> CliError {
      return {2, "parse error in '" + path + "': line " + std::to_string(lineno) + ": " + why};
    };
    auto hash = raw.find('#');
    std::string body = (hash == std::string::npos) ? raw : raw.substr(0, hash);
    std::istringstream ls(body);
    std::string name, eq, value, extra;
    if (!(ls >> name)) continue;
    if (!(ls >> eq >> value) || eq != "=" || (ls >> extra))
      throw fail("expected 'NAME = p/q'");
    auto r = ea::parse_rat(value);
    if (!r) throw fail("bad rational '" + value + "'");
    for (const auto& [seen, ignored] : out)
      if (seen == name) throw fail("duplicate value for '" + name + "'");
    out.emplace_back(name, *r);
  }
  return out;
}

// A full state vector over the table's elements. 0 and 1 carry their forced
// values and may be omitted; every other element must be assigned.
inline ea::RatVec load_state(const std::string& path, const ea::Table& t) {
  ea::RatVec s(size_t(t.size()), ea::Rat(0));
  s[size_t(t.one())] = 1;
  std::vector<bool> assigned(size_t(t.size()), false);
  for (const auto& [name, value] : load_assignments(path)) {
    auto idx = t.index(name);
    if (!idx) throw CliError{2, "parse error in '" + path + "': unknown element '" + name + "'"};
    s[size_t(*idx)] = value;
    assigned[size_t(*idx)] = true;
  }
  for (ea::Elem e = 0; e < t.size(); ++e)
    if (!assigned[size_t(e)] && e != t.zero() && e != t.one())
      throw CliError{2, "parse error in '" + path + "': missing value for '" + t.name(e) + "'"};
  return s;
}

inline std::string brace_list(const std::vector<std::string>& items) {
  std::string out = "{";
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out + "}";
}

inline int finish(const ea::Report& rep) {
  rep.print(std::cout);
  return rep.exit_code();
}

template <class F>
int run_guarded(F body) {
  try {
    return body();
  } catch (const CliError& e) {
    if (!e.message.empty()) std::cerr << e.message << "\n";
    return e.code;  // an empty message means the report was already printed
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cli
