#include "wbcast/tensor.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include "test_util.h"
#include "wbcast/errors.h"

namespace wbcast {
namespace {

using testing::MaxAbsDiff;
using testing::RandomState;
using testing::RandomUnitary;

const QubitLabel q1 = QubitLabel::Data(1);
const QubitLabel q2 = QubitLabel::Data(2);
const QubitLabel q3 = QubitLabel::Data(3);

StateVector Bell() {
  CVector amps = CVector::Zero(4);
  amps(0) = amps(3) = 1.0 / std::sqrt(2.0);
  return StateVector({q1, q2}, amps);
}

TEST(QubitLabel, CanonicalOrderPutsDataBeforeMachines) {
  EXPECT_LT(QubitLabel::Data(1), QubitLabel::Data(9));
  EXPECT_LT(QubitLabel::Data(9), QubitLabel::Machine(Party::kAlice, 1));
  EXPECT_LT(QubitLabel::Machine(Party::kCharlie, 1), QubitLabel::Machine(Party::kAlice, 2));
  EXPECT_EQ(QubitLabel::Machine(Party::kBob, 2).ToString(), "M_B2");
  EXPECT_THROW(QubitLabel::Data(0), InvalidInput);
  EXPECT_THROW(QubitLabel::Data(3).party(), InvalidInput);
}

TEST(StateVector, RejectsBadShapesAndDuplicates) {
  EXPECT_THROW(StateVector({q1, q2}, CVector::Zero(3)), InvalidInput);
  EXPECT_THROW(StateVector({q1, q1}, CVector::Zero(4)), InvalidInput);
  EXPECT_THROW(StateVector::Basis({q1}, "01"), InvalidInput);
  EXPECT_THROW(StateVector::Basis({q1}, "x"), InvalidInput);
}

TEST(TensorProduct, BasisProduct) {
  const auto s = TensorProduct(StateVector::Basis({q1}, "0"), StateVector::Basis({q2}, "1"));
  EXPECT_EQ(s.labels(), (Labels{q1, q2}));
  EXPECT_EQ(s.amplitude("01"), Complex(1.0));
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(TensorProduct, EmptyRegisterIsIdentity) {
  std::mt19937_64 rng(7);
  const auto psi = RandomState(rng, {q1, q2});
  const auto s = TensorProduct(psi, StateVector::Empty());
  EXPECT_EQ(s.labels(), psi.labels());
  EXPECT_EQ(s.amps(), psi.amps());
}

TEST(TensorProduct, Linearity) {
  CVector a(2);
  a << 0.6, Complex(0.0, 0.8);
  const auto s = TensorProduct(StateVector({q1}, a), StateVector::Basis({q2}, "0"));
  EXPECT_EQ(s.amplitude("00"), Complex(0.6));
  EXPECT_EQ(s.amplitude("10"), Complex(0.0, 0.8));
  EXPECT_EQ(s.amplitude("01"), Complex(0.0));
  EXPECT_EQ(s.amplitude("11"), Complex(0.0));
}

TEST(TensorProduct, DuplicateLabelNamed) {
  try {
    TensorProduct(StateVector::Basis({q1, q2}, "00"), StateVector::Basis({q2}, "0"));
    FAIL() << "expected rejection";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("label 2"), std::string::npos) << e.what();
  }
}

TEST(ApplyToTargets, SigmaYOnZero) {
  const auto s = ApplyToTargets(StateVector::Basis({q1}, "0"), PauliY(), {q1});
  EXPECT_EQ(s.amplitude("1"), Complex(0.0, 1.0));
  EXPECT_EQ(s.amplitude("0"), Complex(0.0));
}

TEST(ApplyToTargets, IdentityLeavesStateUnchanged) {
  std::mt19937_64 rng(11);
  const auto psi = RandomState(rng, {q1, q2, q3});
  EXPECT_EQ(ApplyToTargets(psi, IdentityOp(1), {q2}).amps(), psi.amps());
  EXPECT_EQ(ApplyToTargets(psi, IdentityOp(2), {q3, q1}).amps(), psi.amps());
}

TEST(ApplyToTargets, SigmaZOnSecondQubitOfBell) {
  const auto s = ApplyToTargets(Bell(), PauliZ(), {q2});
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(s.amplitude("00") - Complex(h)), 0.0, kAlgebraicTol);
  EXPECT_NEAR(std::abs(s.amplitude("11") - Complex(-h)), 0.0, kAlgebraicTol);
}

TEST(ApplyToTargets, TwoQubitTargetOrderMatters) {
  // CNOT with control = first target.
  CMatrix cnot = CMatrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  const auto op = Operator::Square("CNOT", cnot);
  const auto s = StateVector::Basis({q1, q2}, "10");
  EXPECT_EQ(ApplyToTargets(s, op, {q1, q2}).amplitude("11"), Complex(1.0));
  EXPECT_EQ(ApplyToTargets(s, op, {q2, q1}).amplitude("10"), Complex(1.0));
}

TEST(ApplyToTargets, IsometryGrowsRegisterInCanonicalOrder) {
  // |x> -> |x>|x> copy map on basis states.
  CMatrix copy = CMatrix::Zero(4, 2);
  copy(0, 0) = copy(3, 1) = 1.0;
  const auto op = Operator::Isometry("copy", 1, 2, copy);
  ASSERT_TRUE(op.IsIsometry());
  EXPECT_FALSE(op.IsUnitary());
  const auto s = ApplyToTargets(StateVector::Basis({q3, q1}, "10"), op, {q3}, {q2});
  EXPECT_EQ(s.labels(), (Labels{q1, q2, q3}));
  EXPECT_EQ(s.amplitude("011"), Complex(1.0));
}

TEST(ApplyToTargets, Errors) {
  const auto s = StateVector::Basis({q1, q2}, "00");
  EXPECT_THROW(ApplyToTargets(s, PauliX(), {q3}), InvalidInput);
  EXPECT_THROW(ApplyToTargets(s, PauliX(), {q1, q2}), InvalidInput);
  CMatrix copy = CMatrix::Zero(4, 2);
  copy(0, 0) = copy(3, 1) = 1.0;
  const auto op = Operator::Isometry("copy", 1, 2, copy);
  EXPECT_THROW(ApplyToTargets(s, op, {q1}), InvalidInput);        // no fresh label
  EXPECT_THROW(ApplyToTargets(s, op, {q1}, {q2}), InvalidInput);  // not fresh
}

TEST(ApplyToTargets, IsometryPreservesNorm) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix u = RandomUnitary(rng, 4);
    const auto op = Operator::Isometry("iso", 1, 2, u.leftCols(2));
    const auto psi = RandomState(rng, {q1, q2});
    const auto out = ApplyToTargets(psi, op, {q2}, {q3});
    EXPECT_NEAR(out.norm_squared(), 1.0, kAlgebraicTol);
  }
}

TEST(PartialTrace, KeepEverythingGivesProjector) {
  std::mt19937_64 rng(5);
  const auto psi = RandomState(rng, {q1, q2});
  const auto rho = PartialTrace(psi, {q2, q1});
  EXPECT_EQ(rho.labels(), (Labels{q1, q2}));
  EXPECT_LT(MaxAbsDiff(rho.rho(), psi.amps() * psi.amps().adjoint()), kAlgebraicTol);
  EXPECT_NEAR(rho.purity(), 1.0, kAlgebraicTol);
}

TEST(PartialTrace, BellMarginalIsMaximallyMixed) {
  const auto rho = PartialTrace(Bell(), {q1});
  EXPECT_LT(MaxAbsDiff(rho.rho(), CMatrix::Identity(2, 2) / 2.0), kAlgebraicTol);
}

TEST(PartialTrace, Errors) {
  EXPECT_THROW(PartialTrace(Bell(), {}), InvalidInput);
  EXPECT_THROW(PartialTrace(Bell(), {q3}), InvalidInput);
}

TEST(PartialTrace, DensityMatrixRouteMatchesStateRoute) {
  std::mt19937_64 rng(9);
  const auto psi = RandomState(rng, {q1, q2, q3});
  const auto direct = PartialTrace(psi, {q3, q1});
  const auto via_rho = PartialTrace(DensityMatrix::Pure(psi), {q1, q3});
  EXPECT_EQ(direct.labels(), via_rho.labels());
  EXPECT_LT(MaxAbsDiff(direct.rho(), via_rho.rho()), kAlgebraicTol);
}

TEST(PartialTrace, OutputIsValidDensityMatrix) {
  std::mt19937_64 rng(13);
  const Labels all = DataLabels({1, 2, 3, 4, 5});
  for (int trial = 0; trial < 50; ++trial) {
    const auto psi = RandomState(rng, all);
    for (const Labels& keep : {DataLabels({2}), DataLabels({1, 4}), DataLabels({5, 3, 1})}) {
      EXPECT_NO_THROW(PartialTrace(psi, keep).Validate());
    }
  }
}

TEST(PartialTrace, InvariantUnderUnitaryOutsideKeep) {
  std::mt19937_64 rng(17);
  const Labels all = DataLabels({1, 2, 3, 4});
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = RandomState(rng, all);
    const auto u = Operator::Square("U", RandomUnitary(rng, 4));
    const auto moved = ApplyToTargets(psi, u, DataLabels({4, 2}));
    const auto before = PartialTrace(psi, DataLabels({1, 3}));
    const auto after = PartialTrace(moved, DataLabels({1, 3}));
    EXPECT_LT(MaxAbsDiff(before.rho(), after.rho()), kAlgebraicTol);
  }
}

TEST(Reordered, RoundTripIsBitExact) {
  std::mt19937_64 rng(19);
  const Labels all = DataLabels({1, 2, 3, 4, 5, 6});
  std::vector<int> perm = {1, 2, 3, 4, 5, 6};
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = RandomState(rng, all);
    std::shuffle(perm.begin(), perm.end(), rng);
    Labels order;
    for (int id : perm) order.push_back(QubitLabel::Data(id));
    const auto back = psi.Reordered(order).Reordered(all);
    EXPECT_EQ(back.amps(), psi.amps());
    EXPECT_EQ(back.labels(), psi.labels());
  }
}

TEST(Reordered, AmplitudeViewFollowsOrder) {
  const auto s = StateVector::Basis(DataLabels({1, 2, 3}), "001");
  EXPECT_EQ(s.Reordered(DataLabels({3, 1, 2})).amplitude("100"), Complex(1.0));
  EXPECT_EQ(s.amplitude(DataLabels({3, 2, 1}), "100"), Complex(1.0));
}

TEST(PartialTranspose, ProductStateStaysPositive) {
  std::mt19937_64 rng(23);
  const auto a = RandomState(rng, {q1});
  const auto b = RandomState(rng, {q2});
  const auto rho = DensityMatrix::Pure(TensorProduct(a, b));
  const CMatrix pt = PartialTranspose(rho, q2);
  const CMatrix expected = Eigen::kroneckerProduct(a.amps() * a.amps().adjoint(),
                                                   (b.amps() * b.amps().adjoint()).transpose())
                               .eval();
  EXPECT_LT(MaxAbsDiff(pt, expected), kAlgebraicTol);
  EXPECT_GE(HermitianSpectrum(pt).front(), -kPsdTol);
}

TEST(PartialTranspose, BellSpectrum) {
  const CMatrix pt = PartialTranspose(DensityMatrix::Pure(Bell()), q2);
  const auto spec = HermitianSpectrum(pt);
  ASSERT_EQ(spec.size(), 4u);
  EXPECT_NEAR(spec[0], -0.5, kAlgebraicTol);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(spec[static_cast<size_t>(i)], 0.5, kAlgebraicTol);
  EXPECT_NEAR(pt.trace().real(), 1.0, kAlgebraicTol);
  EXPECT_LT(HermitianResidual(pt), kAlgebraicTol);
}

TEST(PartialTranspose, DiagonalUnchanged) {
  CMatrix d = CMatrix::Zero(4, 4);
  d.diagonal() << 0.1, 0.2, 0.3, 0.4;
  const DensityMatrix rho({q1, q2}, d);
  EXPECT_EQ(PartialTranspose(rho, q1), d);
  EXPECT_EQ(PartialTranspose(rho, q2), d);
}

TEST(PartialTranspose, Errors) {
  const auto rho3 = DensityMatrix::Pure(StateVector::Basis({q1, q2, q3}, "000"));
  EXPECT_THROW(PartialTranspose(rho3, q1), InvalidInput);
  EXPECT_THROW(PartialTranspose(DensityMatrix::Pure(Bell()), q3), InvalidInput);
}

TEST(HermitianSpectrum, Examples) {
  EXPECT_EQ(HermitianSpectrum(CMatrix::Identity(2, 2)), (std::vector<double>{1.0, 1.0}));
  const auto z = HermitianSpectrum(PauliZ().matrix);
  EXPECT_NEAR(z[0], -1.0, kAlgebraicTol);
  EXPECT_NEAR(z[1], 1.0, kAlgebraicTol);
}

TEST(HermitianSpectrum, SumEqualsTrace) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix m = testing::RandomMixed(rng, 8, 3) - 0.2 * CMatrix::Identity(8, 8);
    const auto spec = HermitianSpectrum(m);
    double sum = 0.0;
    for (double l : spec) sum += l;
    EXPECT_NEAR(sum, m.trace().real(), 1e-10);
    EXPECT_TRUE(std::is_sorted(spec.begin(), spec.end()));
  }
}

TEST(HermitianSpectrum, RejectsNonHermitian) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(HermitianSpectrum(m), InvalidInput);
  m(1, 0) = 1.0 + 1e-12;  // residual within tolerance is symmetrized
  EXPECT_NO_THROW(HermitianSpectrum(m));
}

TEST(DensityMatrix, ValidateCatchesBrokenInvariants) {
  CMatrix bad = CMatrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix({q1}, bad).Validate(), InvariantViolation);  // trace 2
  bad << 1.5, 0.0, 0.0, -0.5;
  EXPECT_THROW(DensityMatrix({q1}, bad).Validate(), InvariantViolation);  // negative
  bad << 0.5, 0.1, 0.0, 0.5;
  EXPECT_THROW(DensityMatrix({q1}, bad).Validate(), InvariantViolation);  // not Hermitian
  EXPECT_NO_THROW(DensityMatrix({q1}, CMatrix::Identity(2, 2) / 2.0).Validate());
}

}  // namespace
}  // namespace wbcast
