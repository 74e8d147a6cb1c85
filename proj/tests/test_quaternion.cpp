#include <doctest.h>

#include <cmath>

#include "gq/error.hpp"
#include "gq/quaternion.hpp"
#include "helpers.hpp"

using namespace gq;
using gqt::qt;
using gqt::sc;

TEST_CASE("hamilton table") {
    GenQuaternion i = GenQuaternion::unit_i(), j = GenQuaternion::unit_j(),
                  k = GenQuaternion::unit_k();
    GenQuaternion minus_one = GenQuaternion::from_scalar(-GenScalar::one());
    CHECK((i * i).equals(minus_one));
    CHECK((j * j).equals(minus_one));
    CHECK((k * k).equals(minus_one));
    CHECK((i * j).equals(k));
    CHECK((j * i).equals(-k));
    CHECK((j * k).equals(i));
    CHECK((k * j).equals(-i));
    CHECK((k * i).equals(j));
    CHECK((i * k).equals(-j));
    CHECK(qt("(1 + i) * (1 - i)").equals(qt("2")));
    CHECK(qt("i*j - j*i").equals(qt("2k")));
}

TEST_CASE("conjugation is an anti-automorphism") {
    ElementGen gen(61);
    for (int t = 0; t < 150; ++t) {
        GenQuaternion x = gen.quaternion(), y = gen.quaternion();
        CHECK((x * y).conj().equals(y.conj() * x.conj()));
        CHECK((x + y).conj().equals(x.conj() + y.conj()));
        CHECK(x.conj().conj().equals(x));
    }
}

TEST_CASE("normsq and norm") {
    CHECK(qt("1 + i + j + k").normsq().equals(sc("4")));
    CHECK(qt("3 + 4i").norm(Rat(8)).equals(sc("5")));
    CHECK(qt("e^1 * i").normsq().equals(sc("e^2")));
    // normsq(x) = x * conj(x) identically.
    ElementGen gen(67);
    for (int t = 0; t < 150; ++t) {
        GenQuaternion x = gen.quaternion();
        GenQuaternion prod = x * x.conj();
        CHECK(prod.x0().equals(x.normsq()));
        CHECK(prod.x1().is_exact_zero());
        CHECK(prod.x2().is_exact_zero());
        CHECK(prod.x3().is_exact_zero());
        CHECK(x.normsq().is_qpositive());
    }
}

TEST_CASE("norm multiplicativity") {
    ElementGen gen(71);
    for (int t = 0; t < 150; ++t) {
        GenQuaternion x = gen.quaternion(), y = gen.quaternion();
        CHECK((x * y).normsq().equals(x.normsq() * y.normsq()));
    }
}

TEST_CASE("units and inverses") {
    CHECK(qt("i").is_unit());
    CHECK((qt("i").invert(Rat(8))).equals(-qt("i")));
    // A component that is a unit makes the element a unit.
    CHECK(qt("e^1 + i").is_unit());
    CHECK(qt("e^1 + i").normsq().equals(sc("1 + e^2")));
    // chi_A(1+i) is not a unit: normsq = 2 chi_A vanishes on the complement.
    GenQuaternion x = qt("chi(pre=;per=10) * (1 + i)");
    CHECK_FALSE(x.is_unit());
    CHECK(x.normsq().equals(sc("2 * chi(pre=;per=10)")));
    ElementGen gen(73);
    for (int t = 0; t < 100; ++t) {
        GenQuaternion u = gen.unit_quaternion();
        GenQuaternion residual = u * u.invert(Rat(8)) - qt("1");
        CHECK(gqt::higher_order_than(residual, Rat(8)));
        GenQuaternion left = u.invert(Rat(8)) * u - qt("1");
        CHECK(gqt::higher_order_than(left, Rat(8)));
    }
}

TEST_CASE("zero divisor witness") {
    CHECK(qt("chi(pre=;per=10) * i").zero_divisor_witness().set() == gqt::odds);
    CHECK(qt("chi(pre=;per=10) * (j + k)").zero_divisor_witness().set() == gqt::odds);
    CHECK(gqt::error_kind([] { qt("1").zero_divisor_witness(); }) == ErrKind::IsUnit);
    CHECK(gqt::error_kind([] { GenQuaternion().zero_divisor_witness(); }) == ErrKind::ZeroInput);
    ElementGen gen(79);
    for (int t = 0; t < 150; ++t) {
        GenQuaternion x = gen.nonzero_quaternion();
        if (x.is_unit()) continue;
        IdempotentScalar e = x.zero_divisor_witness();
        CHECK_FALSE(e.is_zero());
        GenQuaternion es = GenQuaternion::from_scalar(e.to_scalar());
        CHECK((x * es).is_exact_zero());
        CHECK((es * x).is_exact_zero());
    }
}

TEST_CASE("valuation and metrics") {
    CHECK(*qt("e^2 + e^1 * i").valuation() == Rat(1));  // min over components
    CHECK(qt("1 + e^1 * i").metric_d(qt("1")) == std::exp(-1.0));
    ElementGen gen(83);
    for (int t = 0; t < 500; ++t) {
        GenQuaternion x = gen.quaternion(), y = gen.quaternion();
        CHECK(x.metric_d(y) == x.metric_dpi(y));  // exact equality of doubles
    }
}

TEST_CASE("polar decomposition") {
    auto [theta, n] = qt("3 + 4i").polar(Rat(8));
    CHECK(n.equals(sc("5")));
    CHECK(theta.equals(qt("3/5 + (4/5)i")));
    auto [ti, ni] = qt("e^1 * i").polar(Rat(8));
    CHECK(ni.equals(sc("e^1")));
    CHECK(ti.equals(qt("i")));
    // Unit quaternions decompose as themselves.
    auto [tu, nu] = qt("i").polar(Rat(8));
    CHECK(nu.equals(sc("1")));
    CHECK(tu.equals(qt("i")));
    CHECK(gqt::error_kind([] { qt("chi(pre=;per=10)").polar(Rat(8)); }) == ErrKind::NotInvertible);
}

TEST_CASE("polar round trip with approx norms") {
    ElementGen gen(89);
    const double eps = std::ldexp(1.0, -20);
    for (int t = 0; t < 60; ++t) {
        GenQuaternion x = gen.unit_quaternion();
        auto [theta, n] = x.polar(Rat(8));
        GenQuaternion recomposed = theta * GenQuaternion::from_scalar(n);
        GenQuaternion residual = recomposed - x;
        GenScalar unitsq = theta.normsq() - GenScalar::one();
        if (!theta.has_approx() && !n.has_approx()) {
            CHECK(gqt::higher_order_than(residual, Rat(8)));
            CHECK(gqt::higher_order_than(unitsq, Rat(8)));
        } else {
            double scale = std::max(1.0, x.eval_abs(eps));
            CHECK(residual.eval_abs(eps) <= 1e-9 * scale);
            CHECK(std::abs(unitsq.eval(eps)) <= 1e-9);
        }
        // theta^{-1} = conj(theta) up to the working order.
        GenQuaternion tt = theta * theta.conj() - qt("1");
        if (!theta.has_approx())
            CHECK(gqt::higher_order_than(tt, Rat(8)));
        else
            CHECK(tt.eval_abs(eps) <= 1e-9);
    }
}

TEST_CASE("association and shadows") {
    CHECK(*qt("2 + e^1 * i").shadow() == std::array<Rat, 4>{Rat(2), Rat(0), Rat(0), Rat(0)});
    CHECK(qt("e^1").associates(qt("e^2")));
    CHECK_FALSE(qt("invert(alpha(1))").shadow().has_value());
    CHECK(qt("e^(1/2) + e^1 * j").associates_zero());
    auto s = qt("1 + 2i + 3j + 4k").shadow();
    REQUIRE(s.has_value());
    CHECK((*s)[3] == Rat(4));
}

TEST_CASE("exchange idempotent makes a unit") {
    CHECK(GenQuaternion().exchange_idempotent().is_one());
    CHECK(qt("chi(pre=;per=10) * k").exchange_idempotent().set() == gqt::odds);
    CHECK(qt("i").exchange_idempotent().is_zero());
    ElementGen gen(97);
    for (int t = 0; t < 200; ++t) {
        GenQuaternion x = gen.quaternion();
        IdempotentScalar e = x.exchange_idempotent();
        GenScalar es = e.to_scalar();
        CHECK((es * es).equals(es));
        CHECK((x + GenQuaternion::from_scalar(es)).is_unit());
    }
}

TEST_CASE("quaternion idempotents are the scalar chis") {
    CHECK(*qt("chi(pre=;per=10)").as_idempotent() == gqt::evens);
    CHECK(qt("0").as_idempotent()->is_empty());
    CHECK(qt("1").as_idempotent()->is_full());
    CHECK_FALSE(qt("(1 + i) / 2").as_idempotent().has_value());
    CHECK_FALSE(qt("chi(pre=;per=10) + e^5").as_idempotent().has_value());
    CHECK_FALSE(qt("chi(pre=;per=10) + e^3 * i").as_idempotent().has_value());
    // Accepted idempotents are central.
    ElementGen gen(101);
    GenQuaternion e = qt("chi(pre=;per=10)");
    for (int t = 0; t < 100; ++t) {
        GenQuaternion q = gen.quaternion();
        CHECK((e * q).equals(q * e));
    }
}

TEST_CASE("quaternion text form") {
    CHECK(qt("i*j - j*i").to_string() == "2k");
    CHECK(qt("1 + i").to_string() == "1 + i");
    CHECK(qt("0 - i").to_string() == "-i");
    CHECK(qt("3/5 + (4/5)i").to_string() == "3/5 + (4/5)i");
    CHECK(GenQuaternion().to_string() == "0");
    CHECK(qt("(1 + e^1)j").to_string() == "(1 + e^1)j");
}
