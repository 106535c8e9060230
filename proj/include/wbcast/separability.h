#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wbcast/tensor.h"

namespace wbcast {

enum class Separability { kSeparable, kEntangled };

std::string ToString(Separability s);  // "SEPARABLE" / "ENTANGLED"

// Determinants of the leading 3x3 and 4x4 principal minors of the partial
// transpose taken on the second label (in canonical order).
struct WDeterminants {
  double w3 = 0.0;
  double w4 = 0.0;
};

struct PairVerdict {
  QubitLabel first;
  QubitLabel second;
  std::vector<double> pt_spectrum;  // ascending
  double min_pt_eigenvalue = 0.0;
  double w3 = 0.0;
  double w4 = 0.0;
  double negativity = 0.0;
  Separability classification = Separability::kSeparable;
  std::optional<Separability> paper_claim;
  std::optional<bool> agrees_with_paper;

  // "15", "86": the pair as named by the caller, not canonical order.
  std::string PairName() const;
};

// Peres-Horodecki test for a two-qubit state. The partial-transpose minimum
// eigenvalue decides: below -kPsdTol is ENTANGLED. The reported pair keeps the
// label order of `rho`.
PairVerdict PptVerdict(const DensityMatrix& rho);

WDeterminants ComputeWDeterminants(const DensityMatrix& rho);

// Sum of |lambda| over negative eigenvalues of the partial transpose.
double Negativity(const DensityMatrix& rho);

// Copy of `verdict` with the claim recorded and agreement computed.
PairVerdict WithPaperClaim(PairVerdict verdict, Separability claim);

}  // namespace wbcast
