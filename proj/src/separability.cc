#include "wbcast/separability.h"

#include <algorithm>
#include <cmath>

#include "wbcast/errors.h"

namespace wbcast {

namespace {

void RequireTwoQubits(const DensityMatrix& rho) {
  if (rho.num_qubits() != 2) {
    throw InvalidInput("separability tests need a two-qubit state, got " + ToString(rho.labels()));
  }
}

// Partial transpose on the canonically-second qubit, expressed in canonical
// order.
CMatrix CanonicalPartialTranspose(const DensityMatrix& rho) {
  const DensityMatrix canon = rho.Canonical();
  return PartialTranspose(canon, canon.labels()[1]);
}

double RealDeterminant(const CMatrix& m, const char* what) {
  const Complex d = m.determinant();
  if (std::abs(d.imag()) > kPsdTol) {
    throw InvariantViolation(std::string(what) + " has imaginary part " + std::to_string(d.imag()));
  }
  return d.real();
}

double NegativityOf(const std::vector<double>& spectrum) {
  double n = 0.0;
  for (double l : spectrum) n += std::max(0.0, -l);
  return n;
}

}  // namespace

std::string ToString(Separability s) { return s == Separability::kEntangled ? "ENTANGLED" : "SEPARABLE"; }

std::string PairVerdict::PairName() const { return first.ToString() + second.ToString(); }

WDeterminants ComputeWDeterminants(const DensityMatrix& rho) {
  RequireTwoQubits(rho);
  const CMatrix pt = CanonicalPartialTranspose(rho);
  return {RealDeterminant(pt.topLeftCorner(3, 3), "W3"), RealDeterminant(pt, "W4")};
}

double Negativity(const DensityMatrix& rho) {
  RequireTwoQubits(rho);
  return NegativityOf(HermitianSpectrum(CanonicalPartialTranspose(rho)));
}

PairVerdict PptVerdict(const DensityMatrix& rho) {
  RequireTwoQubits(rho);
  PairVerdict v{rho.labels()[0], rho.labels()[1], {}, 0.0, 0.0, 0.0, 0.0, Separability::kSeparable, {}, {}};
  v.pt_spectrum = HermitianSpectrum(CanonicalPartialTranspose(rho));
  v.min_pt_eigenvalue = v.pt_spectrum.front();
  const auto w = ComputeWDeterminants(rho);
  v.w3 = w.w3;
  v.w4 = w.w4;
  // Eigenvalues in (-kPsdTol, 0) are numerical noise and count as zero.
  v.negativity = v.min_pt_eigenvalue < -kPsdTol ? NegativityOf(v.pt_spectrum) : 0.0;
  v.classification = v.min_pt_eigenvalue < -kPsdTol ? Separability::kEntangled : Separability::kSeparable;
  return v;
}

PairVerdict WithPaperClaim(PairVerdict verdict, Separability claim) {
  verdict.paper_claim = claim;
  verdict.agrees_with_paper = verdict.classification == claim;
  return verdict;
}

}  // namespace wbcast
