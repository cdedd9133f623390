#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"
#include "valcalc/constructible.hpp"
#include "valcalc/volume.hpp"

using namespace valcalc;
using vtest::Q;
using vtest::vec;

namespace {

ConstructibleFunction open_cell_fn(const PolyComplex& cx, int cell, Scalar c = Scalar(1)) {
    ConstructibleFunction f;
    f.complex = cx;
    f.coeffs.emplace(cell, std::move(c));
    return f;
}

Polytope interval(long a, long b) { return segment({Scalar(a)}, {Scalar(b)}); }

// Deterministic random constructible function on the refinement of a couple
// of random polytopes.
ConstructibleFunction random_function(vtest::Rng& rng, int n) {
    std::vector<PolyComplex> cxs;
    int bodies = static_cast<int>(rng.uniform(1, 2));
    for (int b = 0; b < bodies; ++b) {
        std::vector<Vec> pts;
        for (int i = 0; i < n + 2; ++i) pts.push_back(rng.point(n, 3, 2));
        cxs.push_back(complex_of_polytope(hull(pts, n)));
    }
    PolyComplex cx = cxs.size() == 1 ? cxs[0] : refine_common(cxs);
    ConstructibleFunction f;
    f.complex = cx;
    for (std::size_t i = 0; i < cx.cells.size(); ++i) {
        if (rng.uniform(0, 2) == 0) continue;
        Scalar c = rng.rational(3, 2);
        if (c != 0) f.coeffs.emplace(static_cast<int>(i), c);
    }
    return f;
}

} // namespace

TEST_CASE("refine_common on overlapping intervals") {
    auto cx = refine_common({complex_of_polytope(interval(0, 2)),
                             complex_of_polytope(interval(1, 3))});
    REQUIRE(cx.cells.size() == 7);  // 3 segments + 4 vertices
    std::vector<Polytope> segs;
    for (std::size_t i = 0; i < cx.cells.size(); ++i)
        if (cx.cell_dims[i] == 1) segs.push_back(cx.cells[i]);
    CHECK(segs == std::vector<Polytope>{interval(0, 1), interval(1, 2), interval(2, 3)});
}

TEST_CASE("refine_common is idempotent on arrangement complexes") {
    auto tri = standard_simplex(2);
    auto cx = complex_of_polytope(tri);
    CHECK(refine_common({cx, cx}) == cx);
    auto once = refine_common({cx, complex_of_polytope(unit_box(2))});
    CHECK(refine_common({once, once}) == once);
}

TEST_CASE("refine_common covers each input cell") {
    auto t1 = standard_simplex(2);
    auto t2 = hull({vec({1, 1}), vec({-1, 0}), vec({0, -1})}, 2)
        ;
    auto cx = refine_common({complex_of_polytope(t1), complex_of_polytope(t2)});
    for (const auto& input : {t1, t2}) {
        // volumes of the full-dimensional pieces inside the input add up
        Scalar total(0);
        for (std::size_t i = 0; i < cx.cells.size(); ++i) {
            if (cx.cell_dims[i] != 2) continue;
            Vec bary = zero_vec(2);
            for (const auto& v : cx.cells[i].vertices) bary = add(bary, v);
            bary = scale(Scalar(1, static_cast<long>(cx.cells[i].vertices.size())), bary);
            if (minimal_face_containing(input, bary).has_value()) total += volume(cx.cells[i]);
        }
        CHECK(total == volume(input));
        // point-membership sampling: barycenters of input cells are covered
        for (const auto& v : input.vertices) {
            bool found = false;
            for (const auto& cell : cx.cells) found = found || relint_contains(cell, v);
            CHECK(found);
        }
    }
}

TEST_CASE("indicator expands on the open-cell basis") {
    auto f = indicator(interval(0, 1));
    CHECK(f.coeffs.size() == 3);
    CHECK(evaluate_at(f, {Q(0)}) == Q(1));
    CHECK(evaluate_at(f, {Q(1, 2)}) == Q(1));
    CHECK(evaluate_at(f, {Q(2)}) == Q(0));

    auto sq = indicator(unit_box(2));
    CHECK(sq.coeffs.size() == 9);
    CHECK(evaluate_at(sq, {Q(1, 2), Q(1, 2)}) == Q(1));
    CHECK(evaluate_at(sq, {Q(0), Q(1, 2)}) == Q(1));
    CHECK(evaluate_at(sq, {Q(2), Q(0)}) == Q(0));
}

TEST_CASE("combine basics") {
    auto seg = interval(0, 1);
    auto f = combine({indicator(seg), indicator(point_polytope({Q(0)})),
                      indicator(point_polytope({Q(1)}))},
                     {Q(1), Q(-1), Q(-1)});
    // 1_{(0,1)}: support is the open interval
    CHECK(evaluate_at(f, {Q(0)}) == Q(0));
    CHECK(evaluate_at(f, {Q(1)}) == Q(0));
    CHECK(evaluate_at(f, {Q(1, 2)}) == Q(1));
    CHECK(f.coeffs.size() == 1);

    auto g = indicator(unit_box(2));
    CHECK(combine({g, g}, {Q(1), Q(-1)}).is_zero());

    auto two = combine({indicator(interval(0, 2)), indicator(interval(1, 3))}, {Q(1), Q(1)});
    CHECK(evaluate_at(two, {Q(3, 2)}) == Q(2));
    CHECK(evaluate_at(two, {Q(1, 2)}) == Q(1));
}

TEST_CASE("multiply basics") {
    auto p = indicator(interval(0, 2));
    auto q = indicator(interval(1, 3));
    auto prod = multiply(p, q);
    CHECK(cf_equal(prod, indicator(interval(1, 2))));

    ConstructibleFunction zero;
    zero.complex = p.complex;
    CHECK(multiply(p, zero).is_zero());

    auto s = combine({p, q}, {Q(1), Q(1)});
    auto sq = multiply(s, s);
    CHECK(evaluate_at(sq, {Q(3, 2)}) == Q(4));
    CHECK(evaluate_at(sq, {Q(1, 2)}) == Q(1));

    // 1_P 1_Q = 1_{P cap Q} for overlapping triangles
    auto t1 = standard_simplex(2);
    auto t2 = hull({vec({1, 1}), vec({-1, 0}), vec({0, -1})}, 2);
    auto inter = intersect(t1, t2);
    REQUIRE(inter.has_value());
    CHECK(cf_equal(multiply(indicator(t1), indicator(t2)), indicator(*inter)));
}

TEST_CASE("multiply is associative and commutative on random triples") {
    vtest::Rng rng(321);
    for (int trial = 0; trial < 5; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 2));
        auto f = random_function(rng, n);
        auto g = random_function(rng, n);
        auto h = random_function(rng, n);
        CHECK(cf_equal(multiply(f, g), multiply(g, f)));
        CHECK(cf_equal(multiply(multiply(f, g), h), multiply(f, multiply(g, h))));
    }
}

TEST_CASE("boundary indicators") {
    auto b = boundary_indicator(interval(0, 1));
    CHECK(evaluate_at(b, {Q(0)}) == Q(1));
    CHECK(evaluate_at(b, {Q(1)}) == Q(1));
    CHECK(evaluate_at(b, {Q(1, 2)}) == Q(0));

    CHECK(boundary_indicator(point_polytope({Q(2), Q(2)})).is_zero());

    auto bs = boundary_indicator(unit_box(2));
    CHECK(bs.coeffs.size() == 8);  // 4 vertices + 4 open edges
    CHECK(evaluate_at(bs, {Q(1, 2), Q(0)}) == Q(1));
    CHECK(evaluate_at(bs, {Q(1, 2), Q(1, 2)}) == Q(0));
}

TEST_CASE("euler integral") {
    CHECK(euler_integral(indicator(unit_box(2))) == Q(1));
    CHECK(euler_integral(boundary_indicator(unit_box(2))) == Q(0));  // circle
    CHECK(euler_integral(boundary_indicator(unit_box(3))) == Q(2));  // 2-sphere
    CHECK(euler_integral(indicator(point_polytope({Q(5)}))) == Q(1));

    // linearity and chi of compact convex bodies
    vtest::Rng rng(55);
    for (int trial = 0; trial < 8; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 3));
        std::vector<Vec> pts;
        for (int i = 0; i < 6; ++i) pts.push_back(rng.point(n, 4, 2));
        CHECK(euler_integral(indicator(hull(pts, n))) == Q(1));
    }
}

TEST_CASE("verdier duality basis rule") {
    auto pt = indicator(point_polytope({Q(1)}));
    CHECK(cf_equal(verdier_dual(pt), pt));

    auto seg = interval(0, 1);
    auto d = verdier_dual(indicator(seg));
    // D 1_{[0,1]} = -1_{(0,1)}
    CHECK(evaluate_at(d, {Q(0)}) == Q(0));
    CHECK(evaluate_at(d, {Q(1, 2)}) == Q(-1));

    auto sq = unit_box(2);
    auto dsq = verdier_dual(indicator(sq));
    CHECK(evaluate_at(dsq, {Q(1, 2), Q(1, 2)}) == Q(1));
    CHECK(evaluate_at(dsq, {Q(0), Q(0)}) == Q(0));
    CHECK(evaluate_at(dsq, {Q(1, 2), Q(0)}) == Q(0));
}

TEST_CASE("verdier duality is an involution on random functions") {
    vtest::Rng rng(0xA15E5CE1ULL);
    for (int trial = 0; trial < 50; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 2));
        auto f = random_function(rng, n);
        CHECK(cf_equal(verdier_dual(verdier_dual(f)), f));
    }
}

TEST_CASE("inclusion-exclusion for convex bodies") {
    auto t1 = standard_simplex(2);
    auto t2 = hull({vec({1, 1}), vec({-1, 0}), vec({0, -1})}, 2);
    auto inter = intersect(t1, t2);
    REQUIRE(inter.has_value());
    // 1_{P u Q} = 1_P + 1_Q - 1_{P cap Q}, checked pointwise on a sample grid
    auto u = combine({indicator(t1), indicator(t2), indicator(*inter)}, {Q(1), Q(1), Q(-1)});
    for (long i = -4; i <= 4; ++i) {
        for (long j = -4; j <= 4; ++j) {
            Vec x{Q(i, 3), Q(j, 3)};
            bool in1 = minimal_face_containing(t1, x).has_value();
            bool in2 = minimal_face_containing(t2, x).has_value();
            CHECK(evaluate_at(u, x) == Q((in1 || in2) ? 1 : 0));
        }
    }
}

TEST_CASE("support codimension") {
    CHECK(support_codim(indicator(segment(vec({0, 0}), vec({1, 1})))) == 1);
    CHECK(support_codim(indicator(unit_box(2))) == 0);
    CHECK(support_codim(indicator(point_polytope(vec({1, 2, 3})))) == 3);
    ConstructibleFunction zero;
    zero.complex = complex_of_polytope(unit_box(2));
    CHECK_THROWS_AS(support_codim(zero), validation_error);
}

TEST_CASE("complex validation rejects improper overlaps") {
    auto a = interval(0, 2);
    auto b = interval(1, 3);
    CHECK_THROWS_AS(make_complex(1, {a, b}, true), validation_error);
    CHECK_NOTHROW(make_complex(1, {interval(0, 1), interval(1, 2)}, true));
}
