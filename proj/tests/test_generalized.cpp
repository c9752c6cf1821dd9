#include <gtest/gtest.h>

#include <functional>

#include "genform/error.hpp"
#include "support.hpp"

using namespace genform;
using genform::testing::Plane;

namespace {

GeneralizedForm gf(int p, const OrdinaryForm& a, const OrdinaryForm& b) { return GeneralizedForm(p, a, b); }

TEST(GeneralizedForm, Invariants) {
  Plane P;
  const auto one = P.c(1);
  const auto a = gf(1, P.dy(P.x()), P.dxdy(one));
  EXPECT_EQ(a.degree(), 1);
  EXPECT_EQ(a.ordinary().degree(), 1);
  EXPECT_EQ(a.companion().degree(), 2);
  // Zero parts are re-tagged.
  const auto z = gf(-1, P.zero(0), P.scalar(P.x()));
  EXPECT_EQ(z.ordinary().degree(), -1);
  EXPECT_EQ(gf(2, P.dxdy(one), P.zero(0)).companion().degree(), 3);
  EXPECT_THROW(gf(0, P.dx(one), P.zero(1)), Error);
  EXPECT_THROW(gf(-1, P.scalar(one), P.zero(0)), Error);
  EXPECT_THROW(gf(1, P.dx(one), P.dx(one)), Error);
  Plane other(1);
  EXPECT_THROW(gf(0, P.scalar(one), OrdinaryForm::basis(other.c(1), {0})), Error);
}

TEST(GeneralizedWedge, Examples) {
  Plane P;
  const auto one = P.c(1);
  const auto a = gf(0, P.scalar(P.x()), P.dy(one));
  const auto b = gf(1, P.dx(P.y()), P.zero(2));
  EXPECT_EQ(wedge(a, b), gf(1, P.dx(P.x() * P.y()), P.dxdy(P.y())));
  EXPECT_EQ(wedge(GeneralizedForm::one(P.chart), b), b);
  EXPECT_EQ(wedge(GeneralizedForm::one(P.chart), a), a);
  const auto r = wedge(gf(-1, P.zero(-1), P.scalar(P.x())), gf(1, P.dy(one), P.zero(2)));
  EXPECT_EQ(r.degree(), 0);
  EXPECT_EQ(r, gf(0, P.zero(0), P.dy(-P.x())));
}

TEST(GeneralizedDerivative, Examples) {
  Plane P(1);
  const auto one = P.c(1);
  EXPECT_EQ(d(gf(0, P.scalar(P.x()), P.dx(P.y()))), gf(1, P.dx(one - P.y()), P.dxdy(-one)));
  for (const Rational& k : {Rational(0), Rational(1), Rational(-7, 3)}) {
    Plane Q(k);
    const auto alpha = Q.dx(Q.x() * Q.y()) + Q.dy(Q.y());
    EXPECT_EQ(d(embed(alpha)), embed(d(alpha)));
    EXPECT_EQ(d(gf(-1, Q.zero(-1), Q.scalar(Q.x()))), gf(0, Q.scalar(k * Q.x()), Q.dx(Q.c(1))));
  }
}

TEST(GeneralizedScale, Examples) {
  Plane P;
  const auto one = P.c(1), zero = P.c(0);
  const auto ey = VectorField::basis(P.chart, 1);
  const GeneralizedVector V(ey, one);
  EXPECT_EQ(scale(gf(0, P.scalar(P.x()), P.dy(one)), V), GeneralizedVector(P.x() * ey, P.x() + one));
  const GeneralizedVector W(P.vec(P.x(), P.y() * P.y()), P.x() * P.y());
  EXPECT_EQ(scale(GeneralizedForm::one(P.chart), W), W);
  EXPECT_EQ(scale(gf(0, P.zero(0), P.dx(one)), GeneralizedVector(P.vec(P.y(), zero), zero)),
            GeneralizedVector(VectorField::zero(P.chart), P.y()));
}

TEST(GeneralizedScale, Errors) {
  Plane P, Q(1);
  const GeneralizedVector V(VectorField::basis(P.chart, 0), P.c(1));
  try {
    scale(gf(1, P.dx(P.c(1)), P.zero(2)), V);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::degree_mismatch);
  }
  try {
    scale(GeneralizedForm::one(Q.chart), V);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::chart_mismatch);
  }
}

TEST(GeneralizedContract, Examples) {
  Plane P;
  const auto one = P.c(1), zero = P.c(0);
  const GeneralizedVector V(P.vec(P.y(), zero), P.x());
  const auto a = gf(1, P.dy(P.x()), P.dxdy(one));
  EXPECT_EQ(contract(V, a), gf(0, P.zero(0), P.dy(P.y() + P.x() * P.x())));
  EXPECT_TRUE(contract(GeneralizedVector::zero(P.chart), a).is_zero());
  const auto f = P.x() * P.y() + one, g = P.y() * P.y();
  for (const auto& v0 : {zero, one, P.x() * P.y()}) {
    const GeneralizedVector U(VectorField::basis(P.chart, 0), v0);
    EXPECT_EQ(contract(U, gf(0, P.scalar(f), P.dx(g))), gf(-1, P.zero(-1), P.scalar(g)));
  }
}

TEST(GeneralizedAddScaled, Examples) {
  Plane P;
  const auto one = P.c(1), zero = P.c(0);
  const GeneralizedVector V(P.vec(P.y(), P.x()), P.x() * P.y());
  const GeneralizedVector W(P.vec(one, P.y()), P.x());
  EXPECT_EQ(add_scaled(V, zero, W), V);
  const GeneralizedVector ex(VectorField::basis(P.chart, 0), zero), ey1(VectorField::basis(P.chart, 1), one);
  EXPECT_EQ(add_scaled(ex, P.x(), ey1), GeneralizedVector(P.vec(one, P.x()), P.x()));
  EXPECT_TRUE(add_scaled(V, one, Rational(-1) * V).is_zero());
}

TEST(GeneralizedLieCartan, Examples) {
  for (const Rational& k : {Rational(0), Rational(2)}) {
    Plane P(k);
    const auto v1 = P.vec(P.y(), P.x() * P.x());
    const auto alpha = P.dx(P.x() * P.y());
    EXPECT_EQ(lie_cartan(embed(v1), embed(alpha)), embed(lie(v1, alpha)));
  }
  Plane P(1);
  const auto zero = P.c(0);
  const GeneralizedVector V(VectorField::basis(P.chart, 0), P.x());
  const auto a = gf(1, P.dx(P.y()), P.zero(2));
  // Second component: 1*(+1)*dx^(y dx) + (-1)*x*d(y dx) = x dx^dy.
  const auto expected = gf(1, P.dx(-(P.x() * P.y())), P.dxdy(P.x()));
  EXPECT_EQ(lie_cartan(V, a), expected);
  EXPECT_EQ(lie_cartan_expanded(V, a), expected);
  EXPECT_TRUE(lie_cartan(GeneralizedVector(VectorField::zero(P.chart), zero), a).is_zero());
}

TEST(GeneralizedLie, Examples) {
  Plane P(1);
  const GeneralizedVector V(VectorField::basis(P.chart, 0), P.x());
  EXPECT_EQ(lie(V, gf(1, P.dx(P.y()), P.zero(2))), gf(1, P.dx(-(P.x() * P.y())), P.zero(2)));
  EXPECT_EQ(lie_from_cartan(V, gf(1, P.dx(P.y()), P.zero(2))), gf(1, P.dx(-(P.x() * P.y())), P.zero(2)));

  Plane Q(2);
  const GeneralizedVector V2(VectorField::basis(Q.chart, 0), Q.x());
  EXPECT_TRUE(lie(V2, gf(0, Q.scalar(Q.y()), Q.zero(1))).is_zero());

  for (const Rational& k : {Rational(0), Rational(5, 2)}) {
    Plane R(k);
    const auto v1 = R.vec(R.y(), R.x());
    const auto a = gf(1, R.dx(R.x() * R.y()), R.dxdy(R.y()));
    EXPECT_EQ(lie(embed(v1), a), gf(1, lie(v1, a.ordinary()), lie(v1, a.companion())));
  }
}

TEST(GeneralizedLieVector, Examples) {
  for (const Rational& k : {Rational(0), Rational(1), Rational(-3, 4)}) {
    Plane P(k);
    const auto zero = P.c(0);
    const auto ey = VectorField::basis(P.chart, 1);
    const GeneralizedVector V(VectorField::basis(P.chart, 0), P.x());
    const GeneralizedVector W(P.x() * ey, P.y());
    EXPECT_EQ(lie(V, W), GeneralizedVector((P.c(1) + k * P.x() * P.x()) * ey, zero));

    const auto v1 = P.vec(P.y(), P.x() * P.x()), w1 = P.vec(P.c(1), P.x() * P.y());
    EXPECT_EQ(lie(embed(v1), embed(w1)), embed(bracket(v1, w1)));

    const GeneralizedVector U(v1, P.x() + P.y() * P.y());
    EXPECT_EQ(lie(U, U), GeneralizedVector((k * U.scalar()) * v1, apply(v1, U.scalar())));
  }
}

TEST(GeneralizedLieVector, SelfLieOnOneDimensionalChart) {
  // V = (d/dx, x): the field part is k x d/dx and the scalar part is d/dx(x) = 1.
  const auto chart = make_chart({"x"}, 1);
  const auto x = ScalarField::coordinate(chart, 0);
  const GeneralizedVector V(VectorField::basis(chart, 0), x);
  EXPECT_EQ(lie(V, V), GeneralizedVector(x * VectorField::basis(chart, 0), ScalarField::constant(chart, 1)));
}

TEST(GeneralizedCommutator, Examples) {
  for (const Rational& k : {Rational(0), Rational(3)}) {
    Plane P(k);
    const auto zero = P.c(0);
    const auto ex = VectorField::basis(P.chart, 0), ey = VectorField::basis(P.chart, 1);
    const GeneralizedVector V(ex, P.x());
    const GeneralizedVector W(P.x() * ey, P.y());
    EXPECT_EQ(commutator(V, W), GeneralizedVector(ey, zero));
    EXPECT_TRUE(commutator(V, V).is_zero());
    const auto f = P.x() * P.x() * P.y();
    EXPECT_EQ(commutator(GeneralizedVector(ex, zero), GeneralizedVector(VectorField::zero(P.chart), f)),
              GeneralizedVector(VectorField::zero(P.chart), diff(f, 0)));
    // Distinct from the Lie derivative of a vector by (k v0 w1, w1(v0)).
    EXPECT_EQ(lie(V, W) - commutator(V, W), GeneralizedVector(k * P.x() * W.field(), apply(W.field(), V.scalar())));
  }
}

TEST(GeneralizedResidual, Examples) {
  Plane P(1);
  const auto zero = P.c(0), one = P.c(1);
  const auto a = gf(1, P.dy(P.x() * P.y()), P.dxdy(P.x()));
  const GeneralizedVector V0(P.vec(P.y(), P.x()), zero);
  const GeneralizedVector W(P.vec(one, P.x() * P.y()), P.y());
  EXPECT_TRUE(lie_residual(V0, W, a).is_zero());

  const GeneralizedVector Vc(P.vec(P.y(), P.x()), P.c(2));
  const GeneralizedVector Wc(P.vec(P.c(3), P.c(-1)), P.x());
  EXPECT_TRUE(lie_residual(Vc, Wc, gf(1, P.dx(P.c(4)) + P.dy(P.c(1)), P.dxdy(P.x()))).is_zero());

  const GeneralizedVector V(VectorField::basis(P.chart, 0), P.x());
  const GeneralizedVector Wy(P.vec(P.y(), zero), zero);
  EXPECT_TRUE(lie_residual(V, Wy, gf(1, P.dy(one), P.zero(2))).is_zero());
}

TEST(GeneralizedResidual, NonzeroWitness) {
  // V = (0, x), W = (d/dx, 0), a = (x dy, 0): v0 w1 = x d/dx and L_{x d/dx}(x dy) = x dy.
  for (const Rational& k : {Rational(0), Rational(1)}) {
    Plane P(k);
    const auto zero = P.c(0);
    const GeneralizedVector V(VectorField::zero(P.chart), P.x());
    const GeneralizedVector W(VectorField::basis(P.chart, 0), zero);
    const auto r = lie_residual(V, W, gf(1, P.dy(P.x()), P.zero(2)));
    EXPECT_EQ(r.degree(), 0);
    EXPECT_EQ(r, gf(0, P.zero(0), P.dy(P.x())));
  }
}

TEST(Generalized, ChartMismatch) {
  Plane P, Q(1);
  const auto a = GeneralizedForm::one(P.chart), b = GeneralizedForm::one(Q.chart);
  const GeneralizedVector V(VectorField::basis(Q.chart, 0), Q.c(1));
  for (const auto& op : std::vector<std::function<void()>>{
           [&] { wedge(a, b); }, [&] { contract(V, a); }, [&] { lie(V, a); }, [&] { lie_cartan(V, a); },
           [&] { lie(V, GeneralizedVector::zero(P.chart)); }, [&] { commutator(V, GeneralizedVector::zero(P.chart)); },
           [&] { lie_residual(V, V, a); }}) {
    try {
      op();
      FAIL();
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::chart_mismatch);
    }
  }
}

}  // namespace
