#pragma once

#include "trialg/bilinear.hpp"
#include "trialg/triangular.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>

namespace trialg {

inline constexpr int kSchemaVersion = 1;

// In-memory form of an algebra file. `e` is present when the file carries a
// triangular split.
struct AlgebraFile {
  std::shared_ptr<const FiniteAlgebra> algebra;
  std::optional<Element> e;

  // Throws Error{BadInput} if there is no idempotent.
  TriangularAlgebra triangular() const;
};

// FNV-1a 64 over labels, structure constants and unit, rendered as 16 hex digits.
std::string fingerprint(const FiniteAlgebra &alg);

nlohmann::json rational_pair(const Rational &r);
// Accepts integers or decimal integer strings for each half.
Rational parse_rational_pair(const nlohmann::json &num, const nlohmann::json &den);

nlohmann::ordered_json algebra_to_json(const FiniteAlgebra &alg, const std::optional<Element> &e);
// Re-runs associativity, unit and (when e is present) triangularity checks.
AlgebraFile algebra_from_json(const nlohmann::json &j);

nlohmann::ordered_json map_to_json(const FiniteAlgebra &alg, const BilinearMap &phi);
// Throws Error{FingerprintMismatch} when the map was made for another algebra.
BilinearMap map_from_json(const FiniteAlgebra &alg, const nlohmann::json &j);

// {"size": n, "covers": [[x, y], ...]} with 1-based elements, x covered by y.
Poset poset_from_json(const nlohmann::json &j);

// One top-level key per line, rows of nested arrays one per line.
std::string file_text(const nlohmann::ordered_json &j);

nlohmann::json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

AlgebraFile load_algebra(const std::string &path);
void save_algebra(const std::string &path, const FiniteAlgebra &alg, const std::optional<Element> &e);
BilinearMap load_map(const FiniteAlgebra &alg, const std::string &path);
void save_map(const std::string &path, const FiniteAlgebra &alg, const BilinearMap &phi);

} // namespace trialg
