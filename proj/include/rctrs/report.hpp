#pragma once

// Full analysis of one code and the golden reproduction harness.

#include <ostream>
#include <string>
#include <vector>

#include "rctrs/constructions.hpp"
#include "rctrs/mds.hpp"
#include "rctrs/schur.hpp"

namespace rctrs {

struct AnalysisOptions {
  MdsCheck mds = MdsCheck::Both;
  std::uint64_t budget = kDefaultDistanceBudget;
  bool distance = true;
};

struct AnalysisReport {
  CodeSpec spec;
  Eigen::Index length = 0;
  Eigen::Index k = 0;
  DistanceResult distance;
  MdsReport mds;
  SchurReport schur;
  std::vector<std::string> provenance;
  std::vector<std::string> warnings;
};

AnalysisReport analyze(const GeneratorMatrix& g, const AnalysisOptions& opts = {});
/// For a bare matrix: minors only, no spec.
AnalysisReport analyze(const Matrix& g, const Field& f, const AnalysisOptions& opts = {});
AnalysisReport analyze(const Construction& c, const AnalysisOptions& opts = {});

/// "[N,k,d]" or "[N,k]" when d is unknown.
std::string parameters(const AnalysisReport& r);

/// key=value lines; verbose adds the failing witness and the generator matrix.
void render(std::ostream& os, const AnalysisReport& r, const GeneratorMatrix* g = nullptr, bool verbose = false);

// --- Golden examples ---------------------------------------------------------

struct GoldenExpectation {
  std::string label;
  CodeSpec spec;
  std::size_t length = 0, k = 0, d = 0;
  DistanceMethod d_method = DistanceMethod::SingletonMinors;
  std::optional<Eigen::Index> schur_dim;
  std::optional<Tristate> non_rs;
  std::optional<Tristate> ctrs_incompatible;
  /// Expected evaluation points as a set (indices), empty to skip.
  std::vector<std::uint64_t> point_set;
};

/// Names accepted by golden_cases: "7_4", "23_2", "17", "29_2".
const std::vector<std::string>& golden_names();

/// Expectations for one example; throws InvalidArgument for an unknown name.
std::vector<GoldenExpectation> golden_cases(const std::string& name);

struct GoldenResult {
  GoldenExpectation expected;
  AnalysisReport report;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

GoldenResult run_golden(const GoldenExpectation& e, std::uint64_t budget = kDefaultDistanceBudget);

/// Runs one example ("all" for every one), writing reports; true iff all pass.
bool reproduce(const std::string& name, std::ostream& os, bool verbose = false,
               std::uint64_t budget = kDefaultDistanceBudget);

}  // namespace rctrs
