#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyface/face_census.hpp"
#include "polyface/geometry_oracle.hpp"
#include "polyface/poset.hpp"
#include "polyface/square_bijection.hpp"

namespace polyface {

using nlohmann::json;

/// Malformed input document; the CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest poset accepted from a JSON document.
constexpr int kMaxInputSize = 16;

json set_to_json(ElementSet s);
/// {"n": n, "covers": [[lower, upper], ...]}
json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);
/// Parses text and then the poset; every failure becomes InputError.
Poset parse_poset(const std::string& text);

json census_report(const Poset& p, Polytope kind);
/// Same layout as census_report, plus "source": "oracle".
json oracle_report(const Poset& p, Polytope kind);
json bijection_report(const Poset& p, const BijectionReport& r);

/// Hasse diagram, arcs drawn from lower to upper element.
std::string to_dot(const Poset& p, const std::string& name = "P");

struct VerifyOptions {
  int min_n = 1;
  int max_n = 7;
  int oracle_max_n = 5;
  int facet_max_n = 6;
  int jobs = 1;
  /// Recursion instances are checked exhaustively up to this size and
  /// sampled above it.
  int recursion_exhaustive_n = 5;
  int recursion_samples = 4;
  std::uint64_t seed = 1;
  /// Replaces f_vector2 in the sweep; used to check that faults are caught.
  std::function<FVector2(const Poset&, Polytope)> census;
};

struct PropertyTally {
  std::string property;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
};

struct Counterexample {
  Poset poset;
  std::string property;
  std::string details;
};

struct VerificationReport {
  int min_n = 0;
  int max_n = 0;
  std::int64_t posets_checked = 0;
  std::vector<std::int64_t> posets_per_n;  // index n - min_n
  std::vector<PropertyTally> tallies;
  std::vector<Counterexample> counterexamples;

  bool clean() const { return counterexamples.empty(); }
};

/// Property names in report order.
const std::vector<std::string>& verified_properties();

/// Checks every property on one poset; appends failures to out.
void verify_poset(const Poset& p, const VerifyOptions& opt, std::vector<PropertyTally>& tallies,
                  std::vector<Counterexample>& out);

VerificationReport run_verification(const VerifyOptions& opt);
json verification_to_json(const VerificationReport& r);

}  // namespace polyface
