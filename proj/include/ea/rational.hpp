#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <sstream>
#include <string>

namespace ea {

// Exact rational scalar. cpp_rational keeps lowest terms with positive
// denominator, which is the storage invariant everything here relies on.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Canonical text form: "p/q" in lowest terms, integers without "/1".
inline std::string format_rat(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

inline std::optional<Rat> parse_rat(const std::string& s) {
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!digits(s)) return std::nullopt;
      return Rat(Int(s));
    }
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!digits(p) || !digits(q)) return std::nullopt;
    Int den(q);
    if (den == 0) return std::nullopt;
    return Rat(Int(p), den);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace ea
