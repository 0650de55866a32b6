#include "cubereduce/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace cubereduce {

using ordered_json = nlohmann::ordered_json;

std::string format_fixed3(double value) {
  const long long scaled = std::llround(value * 1000.0);  // ties away from zero
  const long long whole = scaled / 1000;
  const long long frac = std::llabs(scaled % 1000);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%lld.%03lld", (scaled < 0 && whole == 0) ? "-" : "", whole,
                frac);
  return buf;
}

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::vector<CurvePoint> build_curve(const std::vector<EvaluationResult>& entries) {
  if (entries.empty()) throw DataError("nothing to report: no entries");
  std::map<int, CurvePoint> by_k;
  for (const auto& entry : entries) {
    const int k = entry.mask.popcount();
    auto [it, inserted] = by_k.try_emplace(k);
    CurvePoint& point = it->second;
    if (inserted) {
      point.k = k;
      point.min_fitness = point.max_fitness = entry.fitness;
      point.argmin_mask = point.argmax_mask = entry.mask;
      continue;
    }
    const std::string bits = entry.mask.to_string();
    if (entry.fitness < point.min_fitness ||
        (entry.fitness == point.min_fitness && bits < point.argmin_mask.to_string())) {
      point.min_fitness = entry.fitness;
      point.argmin_mask = entry.mask;
    }
    if (entry.fitness > point.max_fitness ||
        (entry.fitness == point.max_fitness && bits < point.argmax_mask.to_string())) {
      point.max_fitness = entry.fitness;
      point.argmax_mask = entry.mask;
    }
  }
  std::vector<CurvePoint> curve;
  curve.reserve(by_k.size());
  for (auto& [k, point] : by_k) curve.push_back(std::move(point));
  return curve;
}

std::vector<ParetoPoint> pareto_front(const std::vector<EvaluationResult>& entries) {
  std::vector<CurvePoint> curve = build_curve(entries);
  std::vector<ParetoPoint> front;
  front.reserve(curve.size());
  double best_below = std::numeric_limits<double>::infinity();
  for (const auto& point : curve) {  // ks ascending
    ParetoPoint pareto;
    pareto.k = point.k;
    pareto.mask = point.argmin_mask;
    pareto.fitness = point.min_fitness;
    pareto.dominated = best_below <= point.min_fitness;
    best_below = std::min(best_below, point.min_fitness);
    front.push_back(std::move(pareto));
  }
  return front;
}

ReportFormat parse_report_format(const std::string& text) {
  if (text == "structured-text" || text == "json") return ReportFormat::StructuredText;
  if (text == "delimited-table" || text == "csv") return ReportFormat::DelimitedTable;
  throw UsageError("unknown report format \"" + text +
                   "\" (expected structured-text or delimited-table)");
}

namespace {

std::string delimited_table(const std::vector<EvaluationResult>& entries) {
  std::ostringstream out;
  out << "mask,fact,distance\n";
  for (const auto& entry : entries) {
    const std::string mask = entry.mask.to_string();
    for (std::size_t i = 0; i < entry.distances.size(); ++i) {
      out << mask << ',' << (i + 1) << ',' << format_fixed3(entry.distances[i]) << '\n';
    }
  }
  return out.str();
}

}  // namespace

std::string emit_report(const std::vector<EvaluationResult>& entries, ReportFormat format) {
  if (entries.empty()) throw DataError("nothing to report: empty mask list");
  if (format == ReportFormat::DelimitedTable) return delimited_table(entries);

  ordered_json doc = ordered_json::array();
  for (const auto& entry : entries) {
    ordered_json rendered = ordered_json::array();
    for (double d : entry.distances) rendered.push_back(format_fixed3(d));
    ordered_json argmin = ordered_json::array();
    for (int i : entry.argmin_facts) argmin.push_back(i + 1);
    doc.push_back({{"mask", entry.mask.to_string()},
                   {"fitness", entry.fitness},
                   {"distances", entry.distances},
                   {"rendered", std::move(rendered)},
                   {"argmin_facts", std::move(argmin)}});
  }
  return doc.dump(2) + "\n";
}

std::string delimited_from_structured(const std::string& structured) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(structured);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed structured report: ") + e.what());
  }
  std::ostringstream out;
  out << "mask,fact,distance\n";
  for (const auto& entry : doc) {
    const auto mask = entry.at("mask").get<std::string>();
    const auto rendered = entry.at("rendered").get<std::vector<std::string>>();
    for (std::size_t i = 0; i < rendered.size(); ++i) {
      out << mask << ',' << (i + 1) << ',' << rendered[i] << '\n';
    }
  }
  return out.str();
}

std::string emit_sweep_table(const SweepResult& sweep) {
  if (sweep.entries.empty()) throw DataError("nothing to report: empty sweep");
  std::ostringstream out;
  out << "mask,popcount,fitness,argmin_facts\n";
  for (const auto& entry : sweep.entries) {
    out << entry.mask.to_string() << ',' << entry.mask.popcount() << ','
        << format_double(entry.fitness) << ',';
    for (std::size_t i = 0; i < entry.argmin_facts.size(); ++i) {
      if (i) out << '|';
      out << entry.argmin_facts[i] + 1;
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_curve_csv(const std::vector<CurvePoint>& curve) {
  std::ostringstream out;
  out << "k,min_fitness,max_fitness,argmin_mask,argmax_mask\n";
  for (const auto& point : curve) {
    out << point.k << ',' << format_double(point.min_fitness) << ','
        << format_double(point.max_fitness) << ',' << point.argmin_mask.to_string() << ','
        << point.argmax_mask.to_string() << '\n';
  }
  return out.str();
}

std::string emit_pareto_csv(const std::vector<ParetoPoint>& front) {
  std::ostringstream out;
  out << "k,mask,fitness,dominated\n";
  for (const auto& point : front) {
    out << point.k << ',' << point.mask.to_string() << ',' << format_double(point.fitness) << ','
        << (point.dominated ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace cubereduce
