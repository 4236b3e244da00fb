#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "prodquot/classify.hpp"
#include "prodquot/fixtures.hpp"
#include "prodquot/homology.hpp"
#include "prodquot/sgs.hpp"

namespace prodquot {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

enum class ExitCode : int { ok = 0, verification_failed = 1, usage = 2 };

/// Output of one CLI command. `result` is the machine payload; `markdown`
/// is the human rendering of the same data.
struct Report {
  std::string command;
  Json input;
  Json result;
  std::string markdown;
  ExitCode exit_code = ExitCode::ok;
  /// Wall time, emitted only when requested so that reports stay byte-stable.
  std::optional<double> seconds;

  Json to_json() const;
};

// --- (de)serialization of domain objects

Json to_json(const Signature& s);
Json to_json(const SphericalSystem& sys);
/// {"schema": 1, "group": spec, "systems": [sys, sys]}
Json to_json(const UnmixedStructure& st);
Json to_json(const FiniteAbelianStructure& a);
Json to_json(const SurfaceInvariants& inv);

/// Reads {"group": spec, "tuple": [labels...]} against an already parsed group.
SphericalSystem system_from_json(const Json& j, const GroupPtr& g);
/// Reads the structure schema written by to_json(UnmixedStructure). Throws
/// MalformedInput on schema violations.
UnmixedStructure structure_from_json(const Json& j);

// --- commands

struct ClassifyRequest {
  std::size_t max_order = 60;
  std::size_t cap = kDefaultMaxOrder;
  std::size_t jobs = 1;
  /// Also identify (A, A') with (A', A) when the signatures agree.
  bool swap_factors = false;
  /// When set, classify this single group (abelian or not) instead of the sweep.
  std::optional<std::string> group_spec;
};

Report cmd_classify(const ClassifyRequest& req);
/// All five fixtures when id is empty.
Report cmd_verify_examples(std::optional<int> id);
Report cmd_homology(const Json& structure);
Report cmd_signatures(const std::string& group_spec);

/// H1 of every member of the class, which must all agree. Returns nullopt
/// for non-abelian groups.
std::optional<FiniteAbelianStructure> class_homology(const EquivClass& cls);

}  // namespace prodquot
