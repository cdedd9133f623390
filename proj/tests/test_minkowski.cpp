#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"
#include "valcalc/minkowski.hpp"

using namespace valcalc;
using vtest::Q;
using vtest::vec;

namespace {

Polytope random_body(vtest::Rng& rng, int n, int max_pts = 5) {
    std::vector<Vec> pts;
    int k = static_cast<int>(rng.uniform(2, max_pts));
    for (int i = 0; i < k; ++i) pts.push_back(rng.point(n, 4, 2));
    return hull(pts, n);
}

MultiPoly random_weight(vtest::Rng& rng, int n, int maxdeg) {
    MultiPoly w{coordinate_vars("x", n), {}};
    int terms = static_cast<int>(rng.uniform(1, 3));
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(n, 0);
        int deg = static_cast<int>(rng.uniform(0, maxdeg));
        for (int d = 0; d < deg; ++d) ++e[rng.uniform(0, n - 1)];
        w.add_term(e, rng.rational(3, 2));
    }
    if (w.is_zero()) w.add_term(std::vector<int>(n, 0), Scalar(1));
    return w;
}

} // namespace

TEST_CASE("weighted volume basics") {
    auto sq = unit_box(2);
    CHECK(weighted_volume({sq}, {Q(2)}, unit_weight(2)) == Q(4));

    auto diag = segment(vec({0, 0}), vec({1, 1}));
    CHECK(weighted_volume({sq, diag}, {Q(1), Q(1)}, unit_weight(2)) == Q(3));

    MultiPoly x1{coordinate_vars("x", 2), {}};
    x1.add_term({1, 0}, Q(1));
    CHECK(weighted_volume({sq}, {Q(1)}, x1) == Q(1, 2));

    MultiPoly too_deep{coordinate_vars("x", 2), {}};
    too_deep.add_term({5, 0}, Q(1));
    CHECK_THROWS_AS(weighted_volume({sq}, {Q(1)}, too_deep), cap_error);
}

TEST_CASE("minkowski polynomial of a dilated square") {
    auto sq = unit_box(2);
    MultiPoly p = minkowski_polynomial({sq, sq}, unit_weight(2));
    // (l1 + l2)^2
    CHECK(p.coefficient({2, 0}) == Q(1));
    CHECK(p.coefficient({1, 1}) == Q(2));
    CHECK(p.coefficient({0, 2}) == Q(1));
    CHECK(p.coefficient({0, 0}) == Q(0));
    CHECK(p.coefficient({1, 0}) == Q(0));
}

TEST_CASE("minkowski polynomial of square and diagonal segment") {
    auto sq = unit_box(2);
    auto diag = segment(vec({0, 0}), vec({1, 1}));
    MultiPoly p = minkowski_polynomial({sq, diag}, unit_weight(2));
    CHECK(p.coefficient({2, 0}) == Q(1));
    CHECK(p.coefficient({1, 1}) == Q(2));
    CHECK(p.coefficient({0, 2}) == Q(0));
    // out-of-sample against the direct weighted volume
    CHECK(p.evaluate({Q(3), Q(2)}) == weighted_volume({sq, diag}, {Q(3), Q(2)}, unit_weight(2)));
}

TEST_CASE("minkowski polynomial of a point is zero") {
    auto pt = point_polytope(vec({1, 2}));
    MultiPoly p = minkowski_polynomial({pt}, unit_weight(2));
    CHECK(p.is_zero());
}

TEST_CASE("fitted polynomials reproduce weighted volumes out of sample") {
    vtest::Rng rng(0xA15E5CE1ULL);
    int done = 0;
    while (done < 20) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int s = static_cast<int>(rng.uniform(1, 3));
        std::vector<Polytope> bodies;
        for (int i = 0; i < s; ++i) bodies.push_back(random_body(rng, n));
        MultiPoly w = random_weight(rng, n, 2);
        MultiPoly p = minkowski_polynomial(bodies, w);
        for (int probe = 0; probe < 5; ++probe) {
            std::vector<Scalar> lam(s);
            for (auto& l : lam)
                l = Scalar(rng.uniform(1, 40), rng.uniform(2, 7)) + Scalar(7);  // off-grid
            CHECK(p.evaluate(lam) == weighted_volume(bodies, lam, w));
        }
        ++done;
    }
}

TEST_CASE("mixed derivative extraction") {
    MultiPoly p{coordinate_vars("l", 2), {}};
    p.add_term({2, 0}, Q(1));
    p.add_term({1, 1}, Q(2));
    p.add_term({0, 2}, Q(1));  // (l1+l2)^2
    CHECK(mixed_derivative_at_zero(p, {0, 1}) == Q(2));

    MultiPoly q{coordinate_vars("l", 1), {}};
    q.add_term({2}, Q(1));
    CHECK(mixed_derivative_at_zero(q, {0}) == Q(0));
    CHECK_THROWS_AS(mixed_derivative_at_zero(q, {0, 0}), validation_error);
}

TEST_CASE("mixed derivative matches symmetric finite differences") {
    // Segment bodies with linear weights keep every per-axis degree at most
    // two, where the symmetric difference is exact.
    vtest::Rng rng(0x5EED);
    for (int trial = 0; trial < 10; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 2));
        int s = static_cast<int>(rng.uniform(1, 2));
        std::vector<Polytope> bodies;
        for (int i = 0; i < s; ++i) {
            Vec a = rng.point(n, 3, 2), b = rng.point(n, 3, 2);
            if (a == b) b[0] += 1;
            bodies.push_back(segment(a, b));
        }
        MultiPoly w = random_weight(rng, n, 1);
        MultiPoly p = minkowski_polynomial(bodies, w);
        std::vector<int> vars(s);
        for (int i = 0; i < s; ++i) vars[i] = i;

        const Scalar h(1, 16);
        Scalar acc(0);
        for (int mask = 0; mask < (1 << s); ++mask) {
            std::vector<Scalar> lam(s);
            int sign = 1;
            for (int i = 0; i < s; ++i) {
                bool neg = (mask >> i) & 1;
                lam[i] = neg ? -h : h;
                if (neg) sign = -sign;
            }
            acc += Scalar(sign) * p.evaluate(lam);
        }
        Scalar denom(1);
        for (int i = 0; i < s; ++i) denom *= 2 * h;
        CHECK(mixed_derivative_at_zero(p, vars) == acc / denom);
    }
}

TEST_CASE("mixed volume values") {
    auto sq = unit_box(2);
    CHECK(mixed_volume({sq, sq}) == Q(1));
    auto s1 = segment(vec({0, 0}), vec({1, 0}));
    auto s2 = segment(vec({0, 0}), vec({0, 1}));
    CHECK(mixed_volume({s1, s2}) == Q(1, 2));
    CHECK(mixed_volume({s1, s1}) == Q(0));
}

TEST_CASE("mixed volume symmetry and diagonal normalization") {
    vtest::Rng rng(8);
    for (int trial = 0; trial < 6; ++trial) {
        int n = static_cast<int>(rng.uniform(2, 3));
        std::vector<Polytope> bodies;
        for (int i = 0; i < n; ++i) bodies.push_back(random_body(rng, n, 4));
        Scalar v = mixed_volume(bodies);
        // permute arguments
        std::vector<Polytope> perm = bodies;
        std::swap(perm[0], perm[n - 1]);
        CHECK(mixed_volume(perm) == v);
        // diagonal
        std::vector<Polytope> diag(n, bodies[0]);
        CHECK(mixed_volume(diag) == volume(bodies[0]));
    }
}

TEST_CASE("degree bound violations are hard errors") {
    // verify_fits guards the fit; a healthy run never trips it
    auto sq = unit_box(2);
    CHECK_NOTHROW(minkowski_polynomial({sq, sq, sq}, unit_weight(2)));
    CHECK_THROWS_AS(
        minkowski_polynomial({sq, sq, sq, sq, sq}, unit_weight(2)),
        cap_error);  // max_bodies
}
