#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "wbcast/qubit_label.h"

namespace wbcast {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Algebraic identities (norms, traces, isometry checks).
inline constexpr double kAlgebraicTol = 1e-12;
// Zero / PSD classification of eigenvalues.
inline constexpr double kPsdTol = 1e-10;
inline constexpr int kMaxQubits = 16;

// Pure state over a labeled register. The basis index reads the first listed
// label as the most significant bit, so the ket string "0101" in label order
// (1,4,2,5) is index 5.
class StateVector {
 public:
  StateVector(Labels labels, CVector amps);

  // |bits> over `labels`; bits[0] belongs to labels[0].
  static StateVector Basis(Labels labels, std::string_view bits);
  // The zero-qubit register with amplitude 1.
  static StateVector Empty();

  const Labels& labels() const { return labels_; }
  const CVector& amps() const { return amps_; }
  int num_qubits() const { return static_cast<int>(labels_.size()); }
  bool contains(const QubitLabel& label) const;

  // Amplitude of a ket written in the current label order.
  Complex amplitude(std::string_view bits) const;
  // Amplitude of a ket written in an arbitrary order of the same labels.
  Complex amplitude(const Labels& order, std::string_view bits) const;

  double norm_squared() const { return amps_.squaredNorm(); }
  StateVector Normalized() const;

  // Same state, amplitudes rearranged so that `order` is the label order.
  StateVector Reordered(const Labels& order) const;
  // Same state with labels in ascending (storage) order.
  StateVector Canonical() const;

 private:
  Labels labels_;
  CVector amps_;
};

// Linear map from `in_qubits` target qubits to `out_qubits` qubits. The first
// `in_qubits` output qubits stay bound to the targets; any extra output
// qubits are bound to fresh labels at application time.
struct Operator {
  std::string name;
  int in_qubits = 0;
  int out_qubits = 0;
  CMatrix matrix;

  static Operator Square(std::string name, CMatrix matrix);
  static Operator Isometry(std::string name, int in_qubits, int out_qubits, CMatrix matrix);

  bool IsIsometry(double tol = kAlgebraicTol) const;
  bool IsUnitary(double tol = kAlgebraicTol) const;
};

Operator PauliX();
Operator PauliY();
Operator PauliZ();
Operator IdentityOp(int qubits);

// Mixed state over a labeled register, same bit convention as StateVector.
class DensityMatrix {
 public:
  DensityMatrix(Labels labels, CMatrix rho);

  static DensityMatrix Pure(const StateVector& state);

  const Labels& labels() const { return labels_; }
  const CMatrix& rho() const { return rho_; }
  int num_qubits() const { return static_cast<int>(labels_.size()); }
  bool contains(const QubitLabel& label) const;

  // <row_bits| rho |col_bits>, bits in the current label order.
  Complex element(std::string_view row_bits, std::string_view col_bits) const;

  double trace() const { return rho_.trace().real(); }
  double purity() const { return (rho_ * rho_).trace().real(); }
  std::vector<double> Spectrum() const;

  DensityMatrix Reordered(const Labels& order) const;
  DensityMatrix Canonical() const;

  // Throws InvariantViolation unless Hermitian (kAlgebraicTol), unit trace
  // (kAlgebraicTol) and positive semidefinite (eigenvalues >= -kPsdTol).
  void Validate() const;

 private:
  Labels labels_;
  CMatrix rho_;
};

// Kronecker product; the result lists a's labels then b's.
StateVector TensorProduct(const StateVector& a, const StateVector& b);

// Applies `op` to `targets` (identity elsewhere). For an isometry with
// out_qubits > in_qubits, `fresh` supplies the labels of the new qubits. The
// result is in canonical label order.
StateVector ApplyToTargets(const StateVector& state, const Operator& op, const Labels& targets,
                           const Labels& fresh = {});

// Reduced state on `keep`, in canonical label order.
DensityMatrix PartialTrace(const StateVector& state, const Labels& keep);
DensityMatrix PartialTrace(const DensityMatrix& rho, const Labels& keep);

// Transposes the indices of `subsystem` in a two-qubit density matrix. The
// returned matrix uses rho's label order.
CMatrix PartialTranspose(const DensityMatrix& rho, const QubitLabel& subsystem);

// Ascending eigenvalues of a Hermitian matrix. Rejects inputs whose
// anti-Hermitian residual exceeds kPsdTol.
std::vector<double> HermitianSpectrum(const CMatrix& m);

// Largest |m_ij - conj(m_ji)|.
double HermitianResidual(const CMatrix& m);

}  // namespace wbcast
