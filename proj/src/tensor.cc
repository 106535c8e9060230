#include "wbcast/tensor.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include <Eigen/Eigenvalues>

#include "wbcast/errors.h"

namespace wbcast {

namespace {

using Index = std::uint64_t;

void CheckUniqueLabels(const Labels& labels) {
  std::set<QubitLabel> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InvalidInput("duplicate qubit label " + l.ToString());
  }
}

void CheckRegisterSize(size_t n) {
  if (n > static_cast<size_t>(kMaxQubits)) {
    throw InvalidInput("register of " + std::to_string(n) + " qubits exceeds the limit of " +
                       std::to_string(kMaxQubits));
  }
}

Index ParseBits(std::string_view bits, size_t expected) {
  if (bits.size() != expected) {
    throw InvalidInput("ket '" + std::string(bits) + "' has " + std::to_string(bits.size()) +
                       " bits, register has " + std::to_string(expected));
  }
  Index idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidInput("ket '" + std::string(bits) + "' is not binary");
    idx = (idx << 1) | static_cast<Index>(c - '0');
  }
  return idx;
}

long Position(const Labels& labels, const QubitLabel& l) {
  auto it = std::find(labels.begin(), labels.end(), l);
  return it == labels.end() ? -1 : static_cast<long>(it - labels.begin());
}

// For each index of the register in `to` order, the index of the same basis
// state in `from` order. `to` must be a permutation of `from`.
std::vector<Index> PermutationMap(const Labels& from, const Labels& to) {
  if (from.size() != to.size()) {
    throw InvalidInput("reordering " + ToString(from) + " as " + ToString(to) +
                       ": label sets differ");
  }
  const size_t n = from.size();
  std::vector<size_t> shift(n);
  for (size_t k = 0; k < n; ++k) {
    long p = Position(from, to[k]);
    if (p < 0) throw InvalidInput("label " + to[k].ToString() + " not in register " + ToString(from));
    shift[k] = n - 1 - static_cast<size_t>(p);
  }
  const Index dim = Index{1} << n;
  std::vector<Index> map(dim);
  for (Index j = 0; j < dim; ++j) {
    Index old = 0;
    for (size_t k = 0; k < n; ++k) {
      old |= ((j >> (n - 1 - k)) & 1u) << shift[k];
    }
    map[j] = old;
  }
  return map;
}

Labels SortedCopy(Labels labels) {
  std::sort(labels.begin(), labels.end());
  return labels;
}

// keep (sorted) followed by every other label of `all` (sorted).
Labels KeepFirst(const Labels& all, const Labels& keep) {
  if (keep.empty()) throw InvalidInput("partial trace needs a nonempty keep set");
  CheckUniqueLabels(keep);
  for (const auto& l : keep) {
    if (Position(all, l) < 0) throw InvalidInput("label " + l.ToString() + " not in register " + ToString(all));
  }
  Labels order = SortedCopy(keep);
  Labels rest;
  for (const auto& l : all) {
    if (Position(keep, l) < 0) rest.push_back(l);
  }
  std::sort(rest.begin(), rest.end());
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

}  // namespace

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(Labels labels, CVector amps) : labels_(std::move(labels)), amps_(std::move(amps)) {
  CheckRegisterSize(labels_.size());
  CheckUniqueLabels(labels_);
  const Index dim = Index{1} << labels_.size();
  if (static_cast<Index>(amps_.size()) != dim) {
    throw InvalidInput("register " + ToString(labels_) + " needs " + std::to_string(dim) + " amplitudes, got " +
                       std::to_string(amps_.size()));
  }
}

StateVector StateVector::Basis(Labels labels, std::string_view bits) {
  const Index idx = ParseBits(bits, labels.size());
  CVector amps = CVector::Zero(Eigen::Index{1} << labels.size());
  amps(static_cast<Eigen::Index>(idx)) = 1.0;
  return StateVector(std::move(labels), std::move(amps));
}

StateVector StateVector::Empty() { return StateVector({}, CVector::Ones(1)); }

bool StateVector::contains(const QubitLabel& label) const { return Position(labels_, label) >= 0; }

Complex StateVector::amplitude(std::string_view bits) const {
  return amps_(static_cast<Eigen::Index>(ParseBits(bits, labels_.size())));
}

Complex StateVector::amplitude(const Labels& order, std::string_view bits) const {
  const Index j = ParseBits(bits, order.size());
  return amps_(static_cast<Eigen::Index>(PermutationMap(labels_, order)[j]));
}

StateVector StateVector::Normalized() const {
  const double n2 = norm_squared();
  if (!(n2 > 0.0)) throw InvalidInput("cannot normalize a zero state");
  return StateVector(labels_, amps_ / std::sqrt(n2));
}

StateVector StateVector::Reordered(const Labels& order) const {
  CheckUniqueLabels(order);
  const auto map = PermutationMap(labels_, order);
  CVector out(amps_.size());
  for (size_t j = 0; j < map.size(); ++j) out(static_cast<Eigen::Index>(j)) = amps_(static_cast<Eigen::Index>(map[j]));
  return StateVector(order, std::move(out));
}

StateVector StateVector::Canonical() const { return Reordered(SortedCopy(labels_)); }

// ---------------------------------------------------------------------------
// Operator

Operator Operator::Square(std::string name, CMatrix matrix) {
  const auto dim = matrix.rows();
  int qubits = 0;
  while ((Eigen::Index{1} << qubits) < dim) ++qubits;
  if (matrix.cols() != dim || (Eigen::Index{1} << qubits) != dim) {
    throw InvalidInput("operator " + name + " must be square with a power-of-two dimension");
  }
  return Operator{std::move(name), qubits, qubits, std::move(matrix)};
}

Operator Operator::Isometry(std::string name, int in_qubits, int out_qubits, CMatrix matrix) {
  if (in_qubits < 0 || out_qubits < in_qubits) throw InvalidInput("operator " + name + ": bad arity");
  if (matrix.rows() != (Eigen::Index{1} << out_qubits) || matrix.cols() != (Eigen::Index{1} << in_qubits)) {
    throw InvalidInput("operator " + name + ": matrix shape does not match arity");
  }
  return Operator{std::move(name), in_qubits, out_qubits, std::move(matrix)};
}

bool Operator::IsIsometry(double tol) const {
  const CMatrix g = matrix.adjoint() * matrix;
  return (g - CMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::IsUnitary(double tol) const {
  if (matrix.rows() != matrix.cols()) return false;
  const CMatrix g = matrix * matrix.adjoint();
  return IsIsometry(tol) && (g - CMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <= tol;
}

Operator PauliX() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return Operator::Square("X", m);
}

Operator PauliY() {
  CMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return Operator::Square("Y", m);
}

Operator PauliZ() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return Operator::Square("Z", m);
}

Operator IdentityOp(int qubits) {
  return Operator::Square("I", CMatrix::Identity(Eigen::Index{1} << qubits, Eigen::Index{1} << qubits));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Labels labels, CMatrix rho) : labels_(std::move(labels)), rho_(std::move(rho)) {
  CheckRegisterSize(labels_.size());
  CheckUniqueLabels(labels_);
  const auto dim = Eigen::Index{1} << labels_.size();
  if (rho_.rows() != dim || rho_.cols() != dim) {
    throw InvalidInput("density matrix over " + ToString(labels_) + " must be " + std::to_string(dim) + "x" +
                       std::to_string(dim));
  }
}

DensityMatrix DensityMatrix::Pure(const StateVector& state) {
  return DensityMatrix(state.labels(), state.amps() * state.amps().adjoint());
}

bool DensityMatrix::contains(const QubitLabel& label) const { return Position(labels_, label) >= 0; }

Complex DensityMatrix::element(std::string_view row_bits, std::string_view col_bits) const {
  return rho_(static_cast<Eigen::Index>(ParseBits(row_bits, labels_.size())),
              static_cast<Eigen::Index>(ParseBits(col_bits, labels_.size())));
}

std::vector<double> DensityMatrix::Spectrum() const { return HermitianSpectrum(rho_); }

DensityMatrix DensityMatrix::Reordered(const Labels& order) const {
  CheckUniqueLabels(order);
  const auto map = PermutationMap(labels_, order);
  const auto dim = static_cast<Eigen::Index>(map.size());
  CMatrix out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      out(i, j) = rho_(static_cast<Eigen::Index>(map[i]), static_cast<Eigen::Index>(map[j]));
    }
  }
  return DensityMatrix(order, std::move(out));
}

DensityMatrix DensityMatrix::Canonical() const { return Reordered(SortedCopy(labels_)); }

void DensityMatrix::Validate() const {
  const std::string where = "density matrix over " + ToString(labels_);
  const double herm = HermitianResidual(rho_);
  if (herm > kAlgebraicTol) {
    throw InvariantViolation(where + " is not Hermitian (residual " + std::to_string(herm) + ")");
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kAlgebraicTol) {
    throw InvariantViolation(where + " has trace " + std::to_string(tr.real()));
  }
  const auto spectrum = HermitianSpectrum(rho_);
  if (spectrum.front() < -kPsdTol) {
    throw InvariantViolation(where + " has negative eigenvalue " + std::to_string(spectrum.front()));
  }
}

// ---------------------------------------------------------------------------
// Free functions

StateVector TensorProduct(const StateVector& a, const StateVector& b) {
  for (const auto& l : b.labels()) {
    if (a.contains(l)) throw InvalidInput("tensor product: label " + l.ToString() + " appears in both factors");
  }
  Labels labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  CheckRegisterSize(labels.size());
  CVector amps(a.amps().size() * b.amps().size());
  for (Eigen::Index i = 0; i < a.amps().size(); ++i) {
    amps.segment(i * b.amps().size(), b.amps().size()) = a.amps()(i) * b.amps();
  }
  return StateVector(std::move(labels), std::move(amps));
}

StateVector ApplyToTargets(const StateVector& state, const Operator& op, const Labels& targets,
                           const Labels& fresh) {
  if (static_cast<int>(targets.size()) != op.in_qubits) {
    throw InvalidInput("operator " + op.name + " acts on " + std::to_string(op.in_qubits) + " qubits, got " +
                       std::to_string(targets.size()) + " targets");
  }
  if (static_cast<int>(fresh.size()) != op.out_qubits - op.in_qubits) {
    throw InvalidInput("operator " + op.name + " needs " + std::to_string(op.out_qubits - op.in_qubits) +
                       " fresh labels, got " + std::to_string(fresh.size()));
  }
  CheckUniqueLabels(targets);
  for (const auto& t : targets) {
    if (!state.contains(t)) throw InvalidInput("target " + t.ToString() + " not in register " + ToString(state.labels()));
  }
  for (const auto& f : fresh) {
    if (state.contains(f)) throw InvalidInput("fresh label " + f.ToString() + " already in register");
  }
  CheckUniqueLabels(fresh);

  Labels order = targets;
  Labels rest;
  for (const auto& l : state.labels()) {
    if (Position(targets, l) < 0) rest.push_back(l);
  }
  order.insert(order.end(), rest.begin(), rest.end());
  const StateVector arranged = state.Reordered(order);

  const Eigen::Index rest_dim = Eigen::Index{1} << rest.size();
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajor> in(arranged.amps().data(), op.matrix.cols(), rest_dim);
  RowMajor out = op.matrix * in;

  Labels out_labels = targets;
  out_labels.insert(out_labels.end(), fresh.begin(), fresh.end());
  out_labels.insert(out_labels.end(), rest.begin(), rest.end());
  CVector amps = Eigen::Map<const CVector>(out.data(), out.size());
  return StateVector(std::move(out_labels), std::move(amps)).Canonical();
}

DensityMatrix PartialTrace(const StateVector& state, const Labels& keep) {
  const Labels order = KeepFirst(state.labels(), keep);
  const StateVector arranged = state.Reordered(order);
  const Eigen::Index keep_dim = Eigen::Index{1} << keep.size();
  const Eigen::Index rest_dim = arranged.amps().size() / keep_dim;
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajor> a(arranged.amps().data(), keep_dim, rest_dim);
  CMatrix rho = a * a.adjoint();
  return DensityMatrix(Labels(order.begin(), order.begin() + static_cast<long>(keep.size())), std::move(rho));
}

DensityMatrix PartialTrace(const DensityMatrix& rho, const Labels& keep) {
  const Labels order = KeepFirst(rho.labels(), keep);
  const DensityMatrix arranged = rho.Reordered(order);
  const Eigen::Index keep_dim = Eigen::Index{1} << keep.size();
  const Eigen::Index rest_dim = arranged.rho().rows() / keep_dim;
  CMatrix out = CMatrix::Zero(keep_dim, keep_dim);
  for (Eigen::Index r = 0; r < rest_dim; ++r) {
    for (Eigen::Index i = 0; i < keep_dim; ++i) {
      for (Eigen::Index j = 0; j < keep_dim; ++j) {
        out(i, j) += arranged.rho()(i * rest_dim + r, j * rest_dim + r);
      }
    }
  }
  return DensityMatrix(Labels(order.begin(), order.begin() + static_cast<long>(keep.size())), std::move(out));
}

CMatrix PartialTranspose(const DensityMatrix& rho, const QubitLabel& subsystem) {
  if (rho.num_qubits() != 2) {
    throw InvalidInput("partial transpose needs a two-qubit density matrix, got " + ToString(rho.labels()));
  }
  const long pos = Position(rho.labels(), subsystem);
  if (pos < 0) throw InvalidInput("label " + subsystem.ToString() + " not in " + ToString(rho.labels()));
  // Bit of the transposed qubit inside a two-bit index.
  const int mask = pos == 0 ? 0b10 : 0b01;
  CMatrix out(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int ti = (i & ~mask) | (j & mask);
      const int tj = (j & ~mask) | (i & mask);
      out(i, j) = rho.rho()(ti, tj);
    }
  }
  return out;
}

double HermitianResidual(const CMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("matrix is not square");
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::vector<double> HermitianSpectrum(const CMatrix& m) {
  const double residual = HermitianResidual(m);
  if (residual > kPsdTol) {
    throw InvalidInput("matrix is not Hermitian (residual " + std::to_string(residual) + ")");
  }
  const CMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InvariantViolation("eigensolver did not converge");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wbcast
