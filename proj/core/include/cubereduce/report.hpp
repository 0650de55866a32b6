#pragma once

#include <string>
#include <vector>

#include "cubereduce/metric.hpp"
#include "cubereduce/oracle.hpp"

namespace cubereduce {

/// Min/max fitness per retained-dimension count, with witness masks. On
/// ties the lexicographically smallest mask string is the witness.
struct CurvePoint {
  int k = 0;
  double min_fitness = 0.0;
  double max_fitness = 0.0;
  ReductionMask argmin_mask;
  ReductionMask argmax_mask;
};

/// Per-k minimum. A point is dominated when some smaller k already achieves
/// a fitness <= this one.
struct ParetoPoint {
  int k = 0;
  ReductionMask mask;
  double fitness = 0.0;
  bool dominated = false;
};

/// Groups entries by popcount; one point per k present, ks ascending.
std::vector<CurvePoint> build_curve(const std::vector<EvaluationResult>& entries);

std::vector<ParetoPoint> pareto_front(const std::vector<EvaluationResult>& entries);

enum class ReportFormat { StructuredText, DelimitedTable };

ReportFormat parse_report_format(const std::string& text);

/// Per-fact distance tables for a list of evaluated masks. The delimited
/// table renders distances rounded half-away-from-zero to 3 decimals; the
/// structured (JSON) document carries both full-precision values and the
/// rendered strings. Fact indices are 1-based in both outputs.
/// Throws DataError("nothing to report") on an empty list.
std::string emit_report(const std::vector<EvaluationResult>& entries, ReportFormat format);

/// Re-renders the delimited table from a structured document produced by
/// emit_report. Round trip: identical to emitting the table directly.
std::string delimited_from_structured(const std::string& structured);

/// Sweep export: one record per mask (mask, popcount, fitness, argmin fact
/// indices joined by '|', 1-based), in sweep entry order.
std::string emit_sweep_table(const SweepResult& sweep);

std::string emit_curve_csv(const std::vector<CurvePoint>& curve);
std::string emit_pareto_csv(const std::vector<ParetoPoint>& front);

/// Fixed 3-decimal rendering, rounding half away from zero (1.0005 -> "1.001",
/// -1.0005 -> "-1.001").
std::string format_fixed3(double value);

/// Shortest round-trip decimal representation, locale-independent.
std::string format_double(double value);

}  // namespace cubereduce
