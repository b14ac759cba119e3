#pragma once
// Instance checks for the structural results and the transcribed figure data.

#include <optional>
#include <string>
#include <vector>

#include "wpl/json_io.hpp"
#include "wpl/tilting.hpp"

namespace wpl {

enum class Verdict { Pass, Fail, KnownDiscrepancy };
std::string to_string(Verdict v);

struct Claim {
  std::string id;
  std::string anchor;
  std::string computed, expected;
  Verdict verdict = Verdict::Fail;
  std::string note;
};

struct CheckReport {
  std::string suite;
  std::vector<Claim> claims;
  bool pass() const;  // no claim failed; known discrepancies do not count
  void add(std::string id, std::string anchor, std::string computed, std::string expected, std::string note = {});
  void add_bool(std::string id, std::string anchor, bool ok, std::string note = {});
  void add_soft(std::string id, std::string anchor, std::string computed, std::string expected, std::string note);
};

struct SuiteError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input shapes: {"type": "2,3,7"} optionally with "datum" (summands with classes) or
// "standard": canonical|squid|coxeter-dynkin; {"figure": "<id>"}; null for the built-in defaults.
CheckReport run_suite(const std::string& name, const json& input = nullptr);
const std::vector<std::string>& suite_names();

json to_json(const CheckReport& r);
std::string to_table(const CheckReport& r);

// golden data, read from $WPL_DATA_DIR/golden/figures.json (build-time default otherwise)
const json& golden();
std::string data_dir();

// ---- pieces shared with the acceptance driver ----

struct Fraction {
  Integer degree, rank;
  bool operator==(const Fraction&) const = default;
  auto operator<=>(const Fraction& o) const {
    if (auto c = cmp(degree, o.degree); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = cmp(rank, o.rank); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};
Fraction parse_fraction(const std::string& s);
std::string to_string(const Fraction& f);

struct FigureComparison {
  std::string id;
  bool reproduced = false;           // multiset equal under one degree shift
  std::vector<long> shifts;          // every shift that works
  bool labels_match = false;         // the shifted fraction agrees vertex by vertex
  std::optional<bool> quiver_match;  // up to a fraction-preserving relabelling; nullopt when no arrows transcribed
  std::vector<std::pair<int, int>> relabelling;  // (computed label, figure label)
  std::vector<Fraction> computed;    // by label, unshifted
  struct Mark {
    int a, b, expected;
    std::optional<int> computed;  // relation count between the matched vertices, either direction
  };
  std::vector<Mark> marks;
  int central_simples = -1;
  std::string error;
};
FigureComparison compare_figure(const json& entry);
const json& figure_entry(const std::string& id);

}  // namespace wpl
