#include "g2calib/identities.hpp"
#include "g2calib/kform.hpp"
#include "g2calib/octonion.hpp"
#include "g2calib/rng.hpp"
#include "g2calib/vec7.hpp"

#include <doctest.h>

using namespace g2calib;

namespace {

Vec7 e(int i) { return Vec7::basis(i - 1); } // 1-based like the frame labels

bool close(const Vec7& a, const Vec7& b, double tol = 1e-12) { return norm(a - b) <= tol; }

// slot labels of the octonion basis
enum Slot { one = 0, i = 1, j = 2, k = 3, ee = 4, ei = 5, ej = 6, ek = 7 };

} // namespace

TEST_CASE("octonion multiplication: quaternion subalgebra and unit law") {
    CHECK(oct_mul(Octonion::basis(i), Octonion::basis(j))[k] == doctest::Approx(1.0));
    CHECK(oct_mul(Octonion::basis(j), Octonion::basis(i))[k] == doctest::Approx(-1.0));
    Octonion q;
    for (int s = 0; s < 8; ++s) q[s] = 0.5 * s - 1;
    Octonion lhs = oct_mul(Octonion::unit(), q);
    for (int s = 0; s < 8; ++s) CHECK(lhs[s] == doctest::Approx(q[s]));
}

TEST_CASE("octonion multiplication: e times i is the e*i basis unit") {
    Octonion p = oct_mul(Octonion::basis(ee), Octonion::basis(i));
    CHECK(p[ei] == doctest::Approx(1.0));
    for (int s = 0; s < 8; ++s)
        if (s != ei) CHECK(p[s] == doctest::Approx(0.0));
    // and the sign convention makes e1 x e4 = e5 hold
    CHECK(close(cross(e(1), e(4)), e(5)));
}

TEST_CASE("octonion norm is multiplicative; conjugation flips the imaginaries") {
    GaussianRng rng(7);
    for (int t = 0; t < 500; ++t) {
        Octonion p, q;
        for (int s = 0; s < 8; ++s) {
            p[s] = rng.gaussian();
            q[s] = rng.gaussian();
        }
        CHECK(oct_norm(oct_mul(p, q)) == doctest::Approx(oct_norm(p) * oct_norm(q)).epsilon(1e-9));
        Octonion c = oct_conj(p);
        CHECK(c[0] == p[0]);
        for (int s = 1; s < 8; ++s) CHECK(c[s] == -p[s]);
    }
}

TEST_CASE("cross product on the frame") {
    CHECK(close(cross(e(1), e(2)), e(3)));
    CHECK(close(cross(e(1), e(4)), e(5)));
    GaussianRng rng(11);
    Vec7 u = rng.vec7();
    CHECK(norm(cross(u, u)) < 1e-12);
    Vec7 v = rng.vec7();
    CHECK(close(cross(u, v), -cross(v, u)));
    CHECK(std::abs(dot(cross(u, v), u)) < 1e-9);
    CHECK(std::abs(dot(cross(u, v), v)) < 1e-9);
}

TEST_CASE("cross norm identity |u x v|^2 + <u,v>^2 = |u|^2 |v|^2") {
    GaussianRng rng(13);
    for (int t = 0; t < 100000; ++t) {
        Vec7 u = rng.vec7(), v = rng.vec7();
        double lhs = dot(cross(u, v), cross(u, v)) + dot(u, v) * dot(u, v);
        CHECK(lhs == doctest::Approx(dot(u, u) * dot(v, v)).epsilon(1e-9));
    }
}

TEST_CASE("phi0 on frame triples matches the standard expression") {
    CHECK(phi0_eval(e(1), e(2), e(3)) == doctest::Approx(1.0));
    CHECK(phi0_eval(e(1), e(2), e(4)) == doctest::Approx(0.0));
    CHECK(phi0_eval(e(3), e(4), e(7)) == doctest::Approx(-1.0));
    // all 35 increasing triples against the constant form
    auto phi = phi0_form<double>();
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            for (int c = b + 1; c <= 7; ++c)
                CHECK(phi0_eval(e(a), e(b), e(c)) == doctest::Approx(phi.coefficient({a, b, c})));
}

TEST_CASE("associator vanishes on associative triples and is antisymmetric") {
    CHECK(norm(associator(e(1), e(2), e(3))) < 1e-12);
    GaussianRng rng(17);
    Vec7 u = rng.vec7(), w = rng.vec7();
    CHECK(norm(associator(u, u, w)) < 1e-9);
    Vec7 v = rng.vec7();
    CHECK(close(associator(u, v, w), -associator(v, u, w), 1e-9));
    CHECK(close(associator(e(1), e(4), e(6)), chi_eval(e(1), e(4), e(6))));
}

TEST_CASE("chi rule equals the associator and contracts double crosses") {
    CHECK(norm(chi_eval(e(1), e(2), e(3))) < 1e-12);
    GaussianRng rng(19);
    for (int t = 0; t < 2000; ++t) {
        Vec7 u = rng.vec7(), v = rng.vec7(), w = rng.vec7();
        CHECK(norm(chi_eval(u, v, w) - associator(u, v, w)) < 1e-9);
    }
    // u x (u x a) = -|u|^2 a for a orthogonal to u
    for (int t = 0; t < 100; ++t) {
        Vec7 u = rng.vec7();
        Vec7 a = rng.vec7();
        a = a - (dot(a, u) / dot(u, u)) * u;
        CHECK(norm(cross(u, cross(u, a)) + dot(u, u) * a) < 1e-9);
    }
    // the closed form with u = v: the double-cross term cancels the inner
    // products exactly, u x (u x w) = <u,w>u - |u|^2 w
    Vec7 u = rng.vec7(), w = rng.vec7();
    CHECK(close(cross(u, cross(u, w)), dot(u, w) * u - dot(u, u) * w, 1e-9));
    CHECK(norm(chi_eval(u, u, w)) < 1e-9);
}

TEST_CASE("psi0 on frame quadruples and against the associator pairing") {
    CHECK(psi0_eval(e(4), e(5), e(6), e(7)) == doctest::Approx(1.0));
    CHECK(psi0_eval(e(2), e(3), e(4), e(5)) == doctest::Approx(1.0));
    CHECK(psi0_eval(e(1), e(2), e(3), e(4)) == doctest::Approx(0.0));
    auto psi = psi0_form<double>();
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            for (int c = b + 1; c <= 7; ++c)
                for (int d = c + 1; d <= 7; ++d)
                    CHECK(psi0_eval(e(a), e(b), e(c), e(d)) ==
                          doctest::Approx(psi.coefficient({a, b, c, d})));
    GaussianRng rng(23);
    for (int t = 0; t < 2000; ++t) {
        Vec7 u = rng.vec7(), v = rng.vec7(), w = rng.vec7(), x = rng.vec7();
        CHECK(psi0_eval(u, v, w, x) == doctest::Approx(dot(associator(u, v, w), x)).epsilon(1e-9));
        // antisymmetry spot check
        CHECK(psi0_eval(v, u, w, x) == doctest::Approx(-psi0_eval(u, v, w, x)));
    }
}

TEST_CASE("wedge product basics") {
    KForm<Rational> e1(1), e2(1);
    e1.add_term({1}, Rational(1));
    e2.add_term({2}, Rational(1));
    auto w = wedge(e1, e2);
    CHECK(w.coefficient({1, 2}) == Rational(1));
    CHECK(w.coefficient({2, 1}) == Rational(-1));
    CHECK(wedge(e1, e1).coefficient({1, 2}) == Rational(0));

    auto phi = phi0_form<Rational>();
    auto psi = psi0_form<Rational>();
    auto top = wedge(phi, psi);
    CHECK(top.coefficient({1, 2, 3, 4, 5, 6, 7}) == Rational(7));
    // graded commutativity: 3*4 = 12 even
    CHECK(wedge(psi, phi).coefficient({1, 2, 3, 4, 5, 6, 7}) == Rational(7));
    CHECK_THROWS_AS(wedge(top, e1), PreconditionError);

    // associativity on random double forms
    GaussianRng rng(29);
    KForm<double> a(1), b(2), c(3);
    for (auto& x : a.coeff) x = rng.gaussian();
    for (auto& x : b.coeff) x = rng.gaussian();
    for (auto& x : c.coeff) x = rng.gaussian();
    auto lhs = wedge(wedge(a, b), c);
    auto rhs = wedge(a, wedge(b, c));
    for (std::size_t t = 0; t < lhs.coeff.size(); ++t)
        CHECK(lhs.coeff[t] == doctest::Approx(rhs.coeff[t]));
    // graded commutativity for odd degrees: a ^ c = -(c ^ a) has sign (-1)^{1*3}
    auto ac = wedge(a, c), ca = wedge(c, a);
    for (std::size_t t = 0; t < ac.coeff.size(); ++t)
        CHECK(ac.coeff[t] == doctest::Approx(-ca.coeff[t]));
}

TEST_CASE("interior product") {
    auto phi = phi0_form<double>();
    auto c = interior(e(1), phi);
    KForm<double> want(2);
    want.add_term({2, 3}, 1.0);
    want.add_term({4, 5}, 1.0);
    want.add_term({6, 7}, 1.0);
    for (std::size_t t = 0; t < c.coeff.size(); ++t)
        CHECK(c.coeff[t] == doctest::Approx(want.coeff[t]));

    KForm<double> e12(2);
    e12.add_term({1, 2}, 1.0);
    CHECK(interior(e(1), e12).coefficient({2}) == doctest::Approx(1.0));
    CHECK(interior(e(3), e12).coefficient({1}) == doctest::Approx(0.0));
    CHECK(interior(e(3), e12).coefficient({2}) == doctest::Approx(0.0));
    KForm<double> scalar(0);
    CHECK_THROWS_AS(interior(e(1), scalar), PreconditionError);

    // antiderivation: u.(a^b) = (u.a)^b + (-1)^deg a a^(u.b)
    GaussianRng rng(31);
    KForm<double> a(2), b(3);
    for (auto& x : a.coeff) x = rng.gaussian();
    for (auto& x : b.coeff) x = rng.gaussian();
    Vec7 u = rng.vec7();
    auto lhs = interior(u, wedge(a, b));
    auto rhs = wedge(interior(u, a), b) + wedge(a, interior(u, b));
    for (std::size_t t = 0; t < lhs.coeff.size(); ++t)
        CHECK(lhs.coeff[t] == doctest::Approx(rhs.coeff[t]));
}

TEST_CASE("evaluation is multilinear and antisymmetric") {
    auto phi = phi0_form<double>();
    GaussianRng rng(37);
    Vec7 u = rng.vec7(), v = rng.vec7(), w = rng.vec7();
    std::array<Vec7, 3> uvw{u, v, w}, vuw{v, u, w};
    CHECK(eval(phi, uvw) == doctest::Approx(-eval(phi, vuw)));
    CHECK(eval(phi, uvw) == doctest::Approx(phi0_eval(u, v, w)).epsilon(1e-9));
    std::array<Vec7, 3> scaled{2.5 * u, v, w};
    CHECK(eval(phi, scaled) == doctest::Approx(2.5 * eval(phi, uvw)));
}

TEST_CASE("metric from the standard form is exact") {
    auto m = metric_from_three_form_exact(phi0_form<Rational>());
    CHECK(m.vol == Rational(1));
    CHECK(m.orientation == 1);
    CHECK(m.gram == mat7_identity<Rational>());

    auto md = metric_from_three_form(phi0_form<double>());
    CHECK(md.vol == doctest::Approx(1.0).epsilon(1e-12));
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
            CHECK(md.gram[a][b] == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
}

TEST_CASE("metric scaling law under x -> lambda x") {
    // pulling back under x -> 2x scales a 3-form by 8; metric picks up 4 = lambda^2
    auto phi = Rational(8) * phi0_form<Rational>();
    auto m = metric_from_three_form_exact(phi);
    CHECK(m.vol == Rational(128));
    CHECK(m.gram[0][0] == Rational(4));
    auto phid = 8.0 * phi0_form<double>();
    auto md = metric_from_three_form(phid);
    CHECK(md.vol == doctest::Approx(128.0).epsilon(1e-9));
    for (int a = 0; a < 7; ++a) CHECK(md.gram[a][a] == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("metric is invariant under a sign-flipped frame") {
    // re-express phi0 in the frame with e4 negated: terms containing 4 flip
    KForm<Rational> phi(3);
    phi.add_term({1, 2, 3}, Rational(1));
    phi.add_term({1, 4, 5}, Rational(-1));
    phi.add_term({1, 6, 7}, Rational(1));
    phi.add_term({2, 4, 6}, Rational(-1));
    phi.add_term({2, 5, 7}, Rational(-1));
    phi.add_term({3, 4, 7}, Rational(1));
    phi.add_term({3, 5, 6}, Rational(-1));
    auto m = metric_from_three_form_exact(phi);
    CHECK(m.gram == mat7_identity<Rational>());
    CHECK(m.vol == Rational(1));
    CHECK(m.orientation == -1); // the flipped frame is negatively oriented
}

TEST_CASE("degenerate and indefinite forms are rejected") {
    KForm<double> degenerate(3);
    degenerate.add_term({1, 2, 3}, 1.0);
    CHECK_THROWS_AS(metric_from_three_form(degenerate), PreconditionError);
    KForm<Rational> degq(3);
    degq.add_term({1, 2, 3}, Rational(1));
    CHECK_THROWS_AS(metric_from_three_form_exact(degq), PreconditionError);
}

TEST_CASE("hodge star") {
    auto id = mat7_identity<Rational>();
    KForm<Rational> e123(3);
    e123.add_term({1, 2, 3}, Rational(1));
    auto s = hodge_star(e123, id, Rational(1));
    CHECK(s.coefficient({4, 5, 6, 7}) == Rational(1));

    CHECK(hodge_star(phi0_form<Rational>(), id, Rational(1)) == psi0_form<Rational>());
    CHECK(hodge_star(psi0_form<Rational>(), id, Rational(1)) == phi0_form<Rational>());

    KForm<Rational> scalar(0);
    scalar.coeff[0] = Rational(3);
    auto vol = hodge_star(scalar, id, Rational(2));
    CHECK(vol.coefficient({1, 2, 3, 4, 5, 6, 7}) == Rational(6));

    // ** = (-1)^{k(7-k)} on random forms, euclidean metric
    GaussianRng rng(41);
    auto idd = mat7_identity<double>();
    for (int k = 0; k <= 7; ++k) {
        KForm<double> a(k);
        for (auto& x : a.coeff) x = rng.gaussian();
        auto ss = hodge_star(hodge_star(a, idd, 1.0), idd, 1.0);
        double sign = (k * (7 - k)) % 2 == 0 ? 1.0 : -1.0;
        for (std::size_t t = 0; t < a.coeff.size(); ++t)
            CHECK(ss.coeff[t] == doctest::Approx(sign * a.coeff[t]).epsilon(1e-9));
    }
}

TEST_CASE("identity suite passes with the honest table and fails with a corrupted one") {
    auto ok = run_identity_suite(1, 500);
    CHECK(ok.all_pass);
    KForm<double> bad = phi0_form<double>();
    bad.add_term({1, 2, 3}, 1e-3);
    auto broken = run_identity_suite(1, 500, &bad);
    CHECK_FALSE(broken.all_pass);
}
