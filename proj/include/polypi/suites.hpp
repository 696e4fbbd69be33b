#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polypi/chord_laws.hpp"
#include "polypi/interval.hpp"

namespace polypi {

enum class Execution { Serial, Parallel };

struct SuiteConfig {
  /// 0 picks the suite's default (1000 arcs, 100 circuits per mesh cap).
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  Execution execution = Execution::Parallel;
  /// Thread bound for Parallel; 0 means the OpenMP default.
  int jobs = 0;
  /// Working precision of the fixed-precision suites.
  int precision = 256;
  Ladder ladder{};
  /// Largest m of the regular-polygon grid.
  int max_depth = 25;
  /// Mesh caps 2^-1 .. 2^-mesh_levels for the circuit suites.
  int mesh_levels = 8;
  /// Circuit sizes are drawn from [3, max_points].
  int max_points = 16;
};

enum class RowStatus { Pass, Violated, Inconclusive, Error };
std::string_view to_string(RowStatus s);

/// One certified comparison. Strict checks expect CertainlyLess; identity
/// checks expect Overlap.
struct SuiteRow {
  std::string check;
  std::uint64_t sample_seed = 0;
  std::optional<Interval> arc_chord;
  int m = 0;
  int n = 0;
  Interval lhs;
  Interval rhs;
  Verdict verdict = Verdict::Overlap;
  Verdict expected = Verdict::CertainlyLess;
  int precision_used = 0;
  RowStatus status = RowStatus::Error;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteRow> rows;

  std::size_t count(RowStatus s) const;
  /// Worst status over all rows: Error and Violated beat Inconclusive.
  RowStatus overall() const;
};

const std::vector<std::string_view>& suite_names();
bool is_suite(std::string_view name);
std::size_t default_samples(std::string_view suite);

/// Rows come back ordered by sample index whatever the execution mode, and
/// are bitwise identical between Serial and Parallel.
SuiteReport run_suite(std::string_view suite, const SuiteConfig& config = {});

/// Random arc for sample `seed`: chord k / 2^20 inside (0.1, 1.99).
struct ArcSample {
  long chord_units = 0;  ///< chord = chord_units * 2^-20
  int m = 1;
  int n = 2;
};
ArcSample draw_arc(std::uint64_t seed, int max_n);
ArcRecipe arc_recipe(const ArcSample& s);

}  // namespace polypi
