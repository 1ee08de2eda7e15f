#pragma once

#include "trialg/bilinear.hpp"
#include "trialg/triangular.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trialg {

// phi(x, y) = lambda0 [x, y] + [x, [y, r]] + mu(x, y), with lambda0 central,
// r = phi(e, e) and mu central-valued.
struct Decomposition {
  Element lambda0;
  Element r;
  BilinearMap mu;
};

// Failure of decompose(), carrying the basis tuple where it was detected.
class DecompositionError : public Error {
public:
  DecompositionError(ErrorKind kind, const std::string &what, std::vector<std::string> tuple, Element residual)
      : Error(kind, what), tuple_(std::move(tuple)), residual_(std::move(residual)) {}

  const std::vector<std::string> &tuple() const { return tuple_; }
  const Element &residual() const { return residual_; }

private:
  std::vector<std::string> tuple_;
  Element residual_;
};

// Throws DecompositionError{NotLieBider | NoCentralLambda | ResidualNotCentral}.
Decomposition decompose(const TriangularAlgebra &t, const BilinearMap &phi);

// lambda0 central, every mu(b_i, b_j) central, and exact reconstruction on
// every basis pair.
bool verify_decomposition(const TriangularAlgebra &t, const BilinearMap &phi, const Decomposition &d);

// mu([b_i, b_j], b_k) = 0 and mu(b_i, [b_j, b_k]) = 0 for all basis triples.
bool mu_is_admissible(const TriangularAlgebra &t, const BilinearMap &mu);

// lambda0 [x, y] + [x, [y, r]] + mu(x, y) as a map.
BilinearMap assemble(const TriangularAlgebra &t, const Decomposition &d);

struct LemmaWitness {
  std::vector<std::string> tuple;  // e.g. {"a=E11", "m=E13"}
  Element residual;
};

// Outcome of a check evaluated under both sign readings.
struct SignOutcome {
  char stated = '+';
  bool plus_holds = false;
  bool minus_holds = false;
};

struct LemmaCheck {
  std::string id;
  std::string statement;
  bool passed = true;
  std::size_t checked = 0;
  std::optional<LemmaWitness> witness;
  std::string note;
  std::optional<SignOutcome> signs;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  std::optional<Element> alpha0;

  bool all_passed() const;
  const LemmaCheck *find(const std::string &id) const;
};

// Component identities of a Lie biderivation on a triangular algebra, each
// checked over basis tuples of the Peirce corners. Identities whose sign is
// ambiguous are evaluated under both readings; the check passes if one of
// them holds on every tuple and `signs` records which.
LemmaReport lemma_suite(const TriangularAlgebra &t, const BilinearMap &phi);

} // namespace trialg
