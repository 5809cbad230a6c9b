#pragma once

// Machine-readable report lines shared by the command-line tools and the
// acceptance gate.  PROP lines carry a PASS or FAIL verdict and drive the
// exit code; VALUE, WITNESS, and INFO lines are data.  Identical inputs must
// produce byte-identical reports, so everything funnels through here.

#include <ostream>
#include <string>
#include <vector>

namespace ea {

struct ReportLine {
  enum class Kind { Prop, Value, Witness, Info };
  Kind kind = Kind::Info;
  std::string key;
  std::string payload;
  bool pass = true;  // meaningful for Prop lines only
};

class Report {
 public:
  void prop(const std::string& key, bool pass, const std::string& witness = {}) {
    lines_.push_back({ReportLine::Kind::Prop, key, witness, pass});
  }
  void value(const std::string& key, const std::string& payload) {
    lines_.push_back({ReportLine::Kind::Value, key, payload, true});
  }
  void witness(const std::string& key, const std::string& payload) {
    lines_.push_back({ReportLine::Kind::Witness, key, payload, true});
  }
  void info(const std::string& text) {
    lines_.push_back({ReportLine::Kind::Info, {}, text, true});
  }
  void raw(const std::string& line) {  // preformatted rows, e.g. vertex listings
    lines_.push_back({ReportLine::Kind::Value, {}, line, true});
  }

  bool any_fail() const {
    for (const ReportLine& l : lines_)
      if (l.kind == ReportLine::Kind::Prop && !l.pass) return true;
    return false;
  }
  int exit_code() const { return any_fail() ? 1 : 0; }
  const std::vector<ReportLine>& lines() const { return lines_; }

  void print(std::ostream& out) const {
    for (const ReportLine& l : lines_) {
      switch (l.kind) {
        case ReportLine::Kind::Prop:
          out << "PROP " << l.key << (l.pass ? " PASS" : " FAIL");
          if (!l.payload.empty()) out << " witness=" << l.payload;
          out << "\n";
          break;
        case ReportLine::Kind::Value:
          if (l.key.empty())
            out << l.payload << "\n";
          else
            out << "VALUE " << l.key << " " << l.payload << "\n";
          break;
        case ReportLine::Kind::Witness:
          out << "WITNESS " << l.key << " " << l.payload << "\n";
          break;
        case ReportLine::Kind::Info:
          out << "INFO " << l.payload << "\n";
          break;
      }
    }
  }

 private:
  std::vector<ReportLine> lines_;
};

}  // namespace ea
