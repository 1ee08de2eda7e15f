#pragma once

#include "trialg/decompose.hpp"
#include "trialg/io.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace trialg {

// Line-oriented key=value report. The header line carries run metadata
// (timestamps, timings); the body is a pure function of the inputs.
class Report {
public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void header(const std::string &key, nlohmann::ordered_json value) { header_[key] = std::move(value); }
  void set(const std::string &key, nlohmann::ordered_json value) { body_[key] = std::move(value); }

  const nlohmann::ordered_json &body() const { return body_; }

  // "# trialg <command> k=v ..." then one "key=value" line per body entry.
  std::string text() const;
  std::string body_text() const;
  // {"command": ..., "header": {...}, "body": {...}}
  std::string json_text() const;

private:
  std::string command_;
  nlohmann::ordered_json header_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json body_ = nlohmann::ordered_json::object();
};

std::string timestamp_utc();

std::string join_labels(const std::vector<std::string> &parts, const std::string &sep = ",");
std::string coords_text(const Vector &v);

void add_hypotheses(Report &r, const HypothesisReport &h);
Report hypotheses_report(const TriangularAlgebra &t);
Report center_report(const AlgebraFile &file);
Report decomposition_report(const TriangularAlgebra &t, const BilinearMap &phi, const Decomposition &d);
Report decomposition_failure_report(const TriangularAlgebra &t, const DecompositionError &err);

struct VerifyOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0x7472696c;
  std::size_t exhaustive_limit = 5000;
};

struct VerifyOutcome {
  Report report{"verify"};
  bool hypotheses_met = false;
  bool passed = false;  // every applicable check passed
};

VerifyOutcome verify_report(const TriangularAlgebra &t, const VerifyOptions &opts = {});

} // namespace trialg
