#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prodquot/homology.hpp"
#include "prodquot/sgs.hpp"
#include "prodquot/signatures.hpp"

namespace prodquot {

/// A hand-written non-abelian structure to be checked end to end.
///
/// Tuple entries are either cycle notation on points 1..n ("(12534)",
/// "(1 2)(3 4)") or words in named generators ("y*x^2*z", "e").
struct ExampleFixture {
  int id = 0;
  std::string title;
  std::string group_spec;
  std::map<std::string, std::string> named_generators;
  Signature signature_first;
  Signature signature_second;
  std::vector<std::string> tuple_first;
  std::vector<std::string> tuple_second;
  /// The second tuple has trivial product only when read right to left.
  bool second_reversed = false;
  std::pair<int, int> expected_genera;
  std::string note;
};

const std::vector<ExampleFixture>& example_fixtures();
const ExampleFixture& example_fixture(int id);

/// Resolves one tuple entry to an element of g.
Elem resolve_entry(const FiniteGroup& g, const std::map<std::string, std::string>& named,
                   const std::string& entry);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationResult {
  int id = 0;
  std::vector<CheckResult> checks;
  std::optional<std::pair<int, int>> genera;
  std::optional<SurfaceInvariants> invariants;

  bool passed() const;
  /// Name of the first failing check, empty if all passed.
  std::string first_failure() const;
};

/// Checks, in order: element orders, products, generation, freeness, genus
/// pair (unordered), and K^2 = 8, chi = 1.
VerificationResult verify_example(const ExampleFixture& fixture);
VerificationResult verify_example(int id);

}  // namespace prodquot
