#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqd/annotate/annotation.hpp"

namespace pqd::eval {

// One (trajectory, prompt) pair with a human and/or judge score.
struct AlignmentRecord {
  annotate::AnnotationTrack annotation;
  std::string prompt;
  std::optional<double> human_score;  // mean of raters, snapped
  std::optional<double> judge_score;  // snapped
  std::optional<double> judge_raw;
  std::string transcript_ref;

  nlohmann::json to_json() const;
  static AlignmentRecord from_json(const nlohmann::json& j);
  bool operator==(const AlignmentRecord&) const = default;
};

std::vector<AlignmentRecord> read_alignment_dataset(const std::filesystem::path& path);
void write_alignment_dataset(const std::filesystem::path& path, const std::vector<AlignmentRecord>& records);

// Correlations are undefined (nullopt) when either series is constant.
struct MetricReport {
  std::size_t n{0};
  double mse{0.0};
  double mae{0.0};
  double cond_exp_error{0.0};
  std::optional<double> kendall_tau;
  std::optional<double> pearson;
  std::optional<double> spearman;

  double f0() const { return -mse; }
  double f1() const { return -mae; }
  double f2() const { return -cond_exp_error; }
  // (c + 1) / 2
  static std::optional<double> normalized(std::optional<double> c);

  nlohmann::json to_json() const;
};

// Kendall tau-a: (concordant - discordant) / (n (n - 1) / 2); ties count as neither.
std::optional<double> kendall_tau_a(const std::vector<double>& x, const std::vector<double>& y);
std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y);
// Ranks starting at 1; tied values share their average rank.
std::vector<double> average_ranks(const std::vector<double>& x);
std::optional<double> spearman(const std::vector<double>& x, const std::vector<double>& y);

// For every judge-score grid value present, the mean of the paired human
// scores. Keys are tenths (0..10) so grid values compare exactly.
std::map<int, double> conditional_expectation(const std::vector<double>& human, const std::vector<double>& judge);
// Mean over occupied bins v of |E[human | judge = v] - v|.
double conditional_expectation_error(const std::vector<double>& human, const std::vector<double>& judge);

// DomainError with fewer than two paired values or mismatched lengths.
MetricReport metric_suite(const std::vector<double>& human, const std::vector<double>& judge);
// Uses records that carry both scores.
MetricReport metric_suite(const std::vector<AlignmentRecord>& records);

}  // namespace pqd::eval
