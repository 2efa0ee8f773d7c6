#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqfree/complex.hpp"
#include "sqfree/depth.hpp"
#include "sqfree/grafting.hpp"
#include "sqfree/ideal.hpp"
#include "sqfree/json_io.hpp"

namespace sqfree {

enum class Provenance { kPaper, kTrivial, kDerived };
std::string_view provenance_tag(Provenance p);

/// One expected property of a fixture. `evaluate` recomputes the value from
/// the library, so a fact can never pass by construction.
struct FixtureFact {
  std::string property;
  std::string expected;
  Provenance provenance;
  std::function<std::string(const EngineOptions&)> evaluate;
};

struct Fixture {
  std::string name;
  SimplicialComplex complex;  ///< facet complex; for ideal fixtures, the support complex
  MonomialIdeal ideal;        ///< facet ideal of `complex`
  std::vector<FixtureFact> facts;
};

/// delta1, delta2, g1, g2, fakhari<n> or fakhari(<n>) with n >= 5.
Fixture load_fixture(std::string_view name);
bool is_fixture_name(std::string_view name);
std::vector<std::string> fixture_names();

/// Space separated canonical list of sets, or "none".
std::string format_sets(const LabelTable& labels, std::span<const VertexSet> sets);

enum class WhiskerMode { kAllVertices, kBlock };

struct GeneratorParams {
  std::uint64_t seed = 1;
  std::size_t base_facet_count = 3;
  std::size_t max_facet_size = 3;
  /// Total vertex budget of the grafted complex.
  std::size_t vertex_budget = 14;
  WhiskerMode whisker_mode = WhiskerMode::kAllVertices;
  std::size_t max_attempts = 200;
};

struct GeneratedForest {
  SimplicialComplex complex;
  GraftingCertificate certificate;
  std::size_t rejections = 0;
};

/// Seeded random Cohen-Macaulay forest: a random forest grown by good-leaf
/// attachment, then grafted with whiskers or vertex blocks. Block-mode
/// proposals are checked with is_cm_forest and rejected on failure; running
/// out of attempts throws BudgetExceeded.
GeneratedForest random_grafted_forest(const GeneratorParams& params);

struct CheckResult {
  std::string name;
  std::string instance;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0.0;
  /// Replayable instance, filled in on failure.
  Json replay;
};

struct VerificationReport {
  std::string target;
  std::vector<CheckResult> checks;
  bool passed() const;
  std::size_t failures() const;
  std::size_t skipped() const;
  /// Deterministic machine report (no timings).
  Json to_json() const;
  /// Human summary with timings.
  std::string summary() const;
};

struct VerifyOptions {
  EngineOptions engine;
  /// Inclusive k range; nullopt means 1..ν.
  std::optional<std::pair<std::size_t, std::size_t>> k_range;
};

/// Full theorem battery on a CM forest; fixture facts on fixtures.
VerificationReport verify_all(const std::string& target, const SimplicialComplex& complex,
                              const VerifyOptions& options = {});
VerificationReport verify_fixture(const Fixture& fixture, const VerifyOptions& options = {});

}  // namespace sqfree
