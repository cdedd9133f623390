#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"
#include "valcalc/intrinsic.hpp"
#include "valcalc/suite.hpp"
#include "valcalc/valuation.hpp"

using namespace valcalc;
using vtest::Q;
using vtest::vec;

namespace {
ValuationExpr body_term(int n, Polytope b) {
    return make_valuation(n, {ValuationTerm{Scalar(1), unit_weight(n), {std::move(b)}}});
}
} // namespace

TEST_CASE("evaluate basics") {
    CHECK(evaluate(volume_valuation(2), standard_simplex(2)) == Q(1, 2));

    // chi evaluates to 1 on any nonempty convex body
    for (int n = 1; n <= 3; ++n) {
        auto chi = euler_valuation(n);
        Rng rng(101 + n);
        CHECK(evaluate(chi, unit_box(n)) == Q(1));
        CHECK(evaluate(chi, standard_simplex(n)) == Q(1));
        CHECK(evaluate(chi, point_polytope(Vec(n, Q(1, 3)))) == Q(1));
        for (int i = 0; i < 2; ++i) CHECK(evaluate(chi, random_body(rng, n)) == Q(1));
    }

    // phi_Q with Q = K = unit square: d/dl (1+l)^2 at 0 = 2
    auto phi_q = body_term(2, unit_box(2));
    CHECK(evaluate(phi_q, unit_box(2)) == Q(2));
}

TEST_CASE("terms with too many bodies are rejected") {
    auto seg = axis_segment(2, 0);
    CHECK_THROWS_AS(
        make_valuation(2, {ValuationTerm{Q(1), unit_weight(2), {seg, seg, seg}}}),
        validation_error);
}

TEST_CASE("pairing with closed indicators telescopes to evaluation") {
    Rng rng(0xA15E5CE1ULL);
    for (int trial = 0; trial < 6; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 2));
        auto v = random_valuation(rng, n);
        auto p = random_body(rng, n);
        CHECK(evaluate_constructible(v, indicator(p)) == evaluate(v, p));
    }
}

TEST_CASE("pairing with the open interval against chi") {
    auto cx = complex_of_polytope(segment({Q(0)}, {Q(1)}));
    ConstructibleFunction open_int;
    open_int.complex = cx;
    open_int.coeffs.emplace(cx.cell_index(segment({Q(0)}, {Q(1)})), Q(1));
    CHECK(evaluate_constructible(euler_valuation(1), open_int) == Q(-1));
}

TEST_CASE("pairing against chi is the Euler integral") {
    Rng rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 2));
        auto f = random_constructible(rng, n);
        CHECK(evaluate_constructible(euler_valuation(n), f) == euler_integral(f));
    }
}

TEST_CASE("product unit law") {
    Rng rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 2));
        auto v = random_valuation(rng, n);
        auto k = random_body(rng, n);
        CHECK(product_eval({euler_valuation(n), v}, k) == evaluate(v, k));
        CHECK(product_eval({v, euler_valuation(n)}, k) == evaluate(v, k));
    }
}

TEST_CASE("vol times vol vanishes in degree above n") {
    Rng rng(11);
    auto vol2 = volume_valuation(2);
    for (int i = 0; i < 5; ++i) {
        auto k = random_body(rng, 2);
        CHECK(product_eval({vol2, vol2}, k) == Q(0));
    }
}

TEST_CASE("segment products against the zonotope determinant identity") {
    // For unit axis segments in the plane the product of the two body terms
    // is exactly the volume, and any segment term squares to zero; both
    // follow from expanding the diagonal sum as a zonotope.
    auto phi_e1 = body_term(2, axis_segment(2, 0));
    auto phi_e2 = body_term(2, axis_segment(2, 1));
    auto phi_diag = body_term(2, segment(vec({0, 0}), vec({1, 1})));
    for (const auto& k : suite_bodies(2)) {
        CHECK(product_eval({phi_e1, phi_e2}, k) == volume(k));
        CHECK(product_eval({phi_e1, phi_e1}, k) == Q(0));
        CHECK(product_eval({phi_diag, phi_diag}, k) == Q(0));
    }
}

TEST_CASE("product commutativity and bilinearity") {
    Rng rng(13);
    for (int trial = 0; trial < 4; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 2));
        auto a = random_valuation(rng, n);
        auto b = random_valuation(rng, n);
        auto c = random_valuation(rng, n);
        auto k = random_body(rng, n);
        CHECK(product_eval({a, b}, k) == product_eval({b, a}, k));
        Scalar s = rng.rational(3, 2);
        auto combo = add_valuations(scale_valuation(s, a), c);
        CHECK(product_eval({combo, b}, k) ==
              s * product_eval({a, b}, k) + product_eval({c, b}, k));
    }
}

TEST_CASE("product dimension cap") {
    auto v3 = volume_valuation(3);
    CHECK_THROWS_AS(product_eval({v3, v3, v3}, unit_box(3)), cap_error);
}

TEST_CASE("homogeneous components") {
    auto vol2 = volume_valuation(2);
    auto k = standard_simplex(2);
    CHECK(component_eval(homogeneous_component(vol2, 2), k) == Q(1, 2));
    CHECK(component_eval(homogeneous_component(vol2, 0), k) == Q(0));
    CHECK(component_eval(homogeneous_component(vol2, 1), k) == Q(0));

    auto chi = euler_valuation(2);
    Rng rng(5);
    for (int i = 0; i < 3; ++i) {
        auto body = random_body(rng, 2);
        CHECK(component_eval(homogeneous_component(chi, 0), body) == Q(1));
        CHECK(component_eval(homogeneous_component(chi, 1), body) == Q(0));
        CHECK(component_eval(homogeneous_component(chi, 2), body) == Q(0));
    }

    // a single-body constant-weight term in the plane is purely degree 1
    auto phi_q = body_term(2, unit_box(2));
    for (int i = 0; i < 3; ++i) {
        auto body = random_body(rng, 2);
        CHECK(component_eval(homogeneous_component(phi_q, 1), body) == evaluate(phi_q, body));
    }

    CHECK_THROWS_AS(homogeneous_component(vol2, 3), validation_error);
}

TEST_CASE("dilation consistency out of sample, including weighted terms") {
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 2));
        auto v = random_valuation(rng, n, 1);
        auto k = random_body(rng, n);
        Scalar lhs(0);
        Scalar m4(1);
        const int top = n + v.max_weight_degree();
        for (int deg = 0; deg <= top; ++deg) {
            auto coeffs = valcalc::detail::dilation_polynomial(
                [&](const Polytope& q) { return evaluate(v, q); }, k, top);
            Scalar pw(1);
            for (int t = 0; t < deg; ++t) pw *= 4;
            lhs += coeffs[deg] * pw;
        }
        (void)m4;
        CHECK(lhs == evaluate(v, dilate(k, Q(4))));
    }
}

TEST_CASE("min degree") {
    auto bodies = suite_bodies(2);
    CHECK(min_degree(volume_valuation(2), bodies) == 2);
    CHECK(min_degree(euler_valuation(2), bodies) == 0);
    CHECK(min_degree(body_term(2, unit_box(2)), bodies) == 1);
    ValuationExpr zero{2, {}};
    CHECK(min_degree(zero, bodies) == 3);
}

TEST_CASE("sigma in closed form") {
    for (int n = 1; n <= 2; ++n) {
        auto vol = volume_valuation(n);
        auto svol = sigma_reflect(vol);
        Rng rng(23 + n);
        for (int i = 0; i < 3; ++i) {
            auto k = random_body(rng, n);
            Scalar expect = (n % 2 == 0) ? evaluate(vol, k) : -evaluate(vol, k);
            CHECK(evaluate(svol, k) == expect);
        }
        auto chi = euler_valuation(n);
        auto schi = sigma_reflect(chi);
        for (int i = 0; i < 3; ++i) CHECK(evaluate(schi, random_body(rng, n)) == Q(1));
    }
}

TEST_CASE("sigma is an involution") {
    Rng rng(29);
    for (int trial = 0; trial < 5; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 2));
        auto v = random_valuation(rng, n);
        auto vv = sigma_reflect(sigma_reflect(v));
        auto k = random_body(rng, n);
        CHECK(evaluate(vv, k) == evaluate(v, k));
    }
}

TEST_CASE("two-route sigma agreement") {
    Rng rng(0xA15E5CE1ULL);
    for (int n = 1; n <= 3; ++n) {
        int trials = n == 3 ? 3 : 6;
        for (int trial = 0; trial < trials; ++trial) {
            auto v = random_valuation(rng, n, n == 3 ? 0 : 1);
            auto p = random_body(rng, n);
            CHECK(sigma_boundary_eval(v, p) == evaluate(sigma_reflect(v), p));
        }
    }
    // chi and vol as named subcases
    for (int n = 1; n <= 3; ++n) {
        auto p = unit_box(n);
        CHECK(sigma_boundary_eval(euler_valuation(n), p) == Q(1));
        Scalar v = volume(p);
        CHECK(sigma_boundary_eval(volume_valuation(n), p) == (n % 2 == 0 ? v : -v));
    }
}

TEST_CASE("sigma boundary route works on lower-dimensional bodies") {
    auto chi = euler_valuation(2);
    auto seg = segment(vec({0, 0}), vec({2, 1}));
    CHECK(sigma_boundary_eval(chi, seg) == Q(1));
    auto pt = point_polytope(vec({1, 1}));
    CHECK(sigma_boundary_eval(chi, pt) == Q(1));
}

TEST_CASE("poincare pairing") {
    auto bodies = suite_bodies(2);
    CHECK(poincare_pair(euler_valuation(2), volume_valuation(2), bodies) == Q(1));
    CHECK(poincare_pair(volume_valuation(2), volume_valuation(2), bodies) == Q(0));
    auto phi_e1 = body_term(2, axis_segment(2, 0));
    auto phi_e2 = body_term(2, axis_segment(2, 1));
    CHECK(poincare_pair(phi_e1, phi_e2, bodies) ==
          poincare_pair(phi_e2, phi_e1, bodies));
    CHECK(poincare_pair(phi_e1, phi_e2, bodies) == Q(1));
}

TEST_CASE("integration functional on constructible functions") {
    CHECK(integrate_constructible(indicator(unit_box(2))) == Q(1));
    auto p = indicator(unit_box(2));
    auto q = indicator(standard_simplex(2));
    CHECK(integrate_constructible(combine({p, q}, {Q(2), Q(-3)})) == Q(-1));
    CHECK(integrate_constructible(boundary_indicator(unit_box(3))) == Q(2));
}

TEST_CASE("intrinsic volumes of boxes") {
    auto binom = [](int n, int k) {
        double r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    for (int n = 1; n <= 3; ++n) {
        for (double a : {1.0, 1.5}) {
            std::vector<Scalar> sides(n, a == 1.0 ? Q(1) : Q(3, 2));
            auto cube = box(sides);
            for (int k = 0; k <= n; ++k) {
                double expect = binom(n, k) * std::pow(a, k);
                CHECK(std::abs(intrinsic_volume(cube, k) - expect) < 1e-9);
            }
        }
    }
}

TEST_CASE("intrinsic volumes: top equals exact volume, bottom equals one") {
    Rng rng(31);
    for (int n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            auto p = random_body(rng, n);
            CHECK(std::abs(intrinsic_volume(p, n) - valcalc::detail::to_double(volume(p))) <
                  1e-12);
            CHECK(std::abs(intrinsic_volume(p, 0) - 1.0) < 1e-9);
        }
    }
    // lower-dimensional body: length of a segment in the plane
    auto seg = segment(vec({0, 0}), vec({3, 4}));
    CHECK(std::abs(intrinsic_volume(seg, 1) - 5.0) < 1e-9);
    CHECK(std::abs(intrinsic_volume(seg, 0) - 1.0) < 1e-9);
    CHECK(std::abs(intrinsic_volume(seg, 2) - 0.0) < 1e-12);
}

TEST_CASE("pairing matrix") {
    std::vector<ValuationExpr> rows{euler_valuation(2), volume_valuation(2)};
    std::vector<ConstructibleFunction> cols{indicator(point_polytope(vec({0, 0}))),
                                            indicator(unit_box(2))};
    auto m = evaluation_pairing_matrix(rows, cols, {"chi", "vol"}, {"pt", "box"});
    CHECK(m.entries == Mat{Vec{Q(1), Q(1)}, Vec{Q(0), Q(1)}});
    CHECK(m.rank == 2);

    ValuationExpr zero{2, {}};
    auto mz = evaluation_pairing_matrix({zero}, cols);
    CHECK(mz.entries == Mat{Vec{Q(0), Q(0)}});
    CHECK(mz.rank == 0);
}
