#ifndef VALCALC_SUITE_HPP
#define VALCALC_SUITE_HPP

#include <string>
#include <vector>

#include "rng.hpp"
#include "valuation.hpp"

namespace valcalc {

// The versioned desk-scale test suite ("ts-v1"): fixed bodies, fixed
// valuations, fixed constructible functions per dimension. Everything here
// is deterministic given the suite version; randomized draws are made from
// an explicit Rng by the callers.

inline Polytope box(const std::vector<Scalar>& sides) {
    const int n = static_cast<int>(sides.size());
    std::vector<Vec> pts;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = ((mask >> i) & 1) ? sides[i] : Scalar(0);
        pts.push_back(std::move(v));
    }
    return hull(pts, n);
}

inline Polytope axis_segment(int n, int axis, const Scalar& len = Scalar(1)) {
    Vec e = zero_vec(n);
    e[axis] = len;
    return segment(zero_vec(n), e);
}

// Ten full-dimensional bodies per dimension: axis boxes, simplices, and
// their Minkowski sums with two fixed segments, plus translates.
inline std::vector<Polytope> suite_bodies(int n) {
    if (config().testset_version != "ts-v1")
        throw validation_error("unknown testset version " + config().testset_version);
    std::vector<Polytope> out;
    Polytope ubox = unit_box(n);
    Polytope simplex = standard_simplex(n);
    Vec diag1(n, Scalar(1));
    Vec diag2(n, Scalar(1));
    diag2[0] = Scalar(-1);
    Polytope seg1 = segment(zero_vec(n), diag1);
    Polytope seg2 = n >= 2 ? segment(zero_vec(n), diag2) : segment(zero_vec(n), scale(Scalar(1, 2), diag1));

    out.push_back(ubox);
    {
        std::vector<Scalar> sides(n, Scalar(1));
        sides[0] = Scalar(2);
        out.push_back(box(sides));
    }
    out.push_back(simplex);
    out.push_back(dilate(simplex, Scalar(2)));
    out.push_back(dilate(ubox, Scalar(3, 2)));
    out.push_back(minkowski_sum({ubox, seg1}, {Scalar(1), Scalar(1)}));
    out.push_back(minkowski_sum({ubox, seg2}, {Scalar(1), Scalar(1)}));
    out.push_back(minkowski_sum({simplex, seg1}, {Scalar(1), Scalar(1)}));
    out.push_back(minkowski_sum({simplex, seg1, seg2}, {Scalar(1), Scalar(1), Scalar(1)}));
    {
        Vec t(n, Scalar(1, 3));
        if (n >= 2) t[1] = Scalar(2, 5);
        out.push_back(translate(ubox, t));
    }
    return out;  // 10 bodies
}

// Held-out bodies for rank oracles: deterministic pseudo-random hulls.
inline std::vector<Polytope> held_out_bodies(int n, int count, std::uint64_t seed) {
    Rng rng(seed ^ 0xB0D1E5ULL);
    std::vector<Polytope> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<Vec> pts;
        for (int i = 0; i < n + 4; ++i) pts.push_back(rng.point(n, 8, 4));
        Polytope p = hull(pts, n);
        if (intrinsic_dim(p) == n) out.push_back(std::move(p));
    }
    return out;
}

// A named valuation for report output.
struct SuiteValuation {
    std::string name;
    ValuationExpr val;
};

// Fixed valuation suite: chi, volume, segment terms in several directions,
// and a full-dimensional body term. Six entries for n >= 2.
inline std::vector<SuiteValuation> suite_valuations(int n) {
    std::vector<SuiteValuation> out;
    out.push_back({"chi", euler_valuation(n)});
    out.push_back({"vol", volume_valuation(n)});
    auto body_term = [&](std::string name, Polytope b) {
        out.push_back({std::move(name),
                       make_valuation(n, {ValuationTerm{Scalar(1), unit_weight(n), {std::move(b)}}})});
    };
    body_term("seg_e1", axis_segment(n, 0));
    if (n >= 2) {
        body_term("seg_e2", axis_segment(n, 1));
        Vec d(n, Scalar(0));
        d[0] = Scalar(1);
        d[1] = Scalar(1);
        body_term("seg_diag", segment(zero_vec(n), d));
        body_term("simplex_term", standard_simplex(n));
    } else {
        body_term("seg_half", segment(zero_vec(n), Vec{Scalar(1, 2)}));
        body_term("box_term", unit_box(n));
    }
    return out;
}

// Random degree-one valuation: one body term with constant weight.
inline ValuationExpr random_degree_one(Rng& rng, int n) {
    Vec a = rng.point(n, 3, 2);
    Vec b = rng.point(n, 3, 2);
    if (a == b) b[0] += 1;
    Scalar c = rng.rational(3, 2);
    if (c == 0) c = Scalar(1);
    return make_valuation(
        n, {ValuationTerm{c, unit_weight(n), {segment(std::move(a), std::move(b))}}});
}

// Shape of the random valuations a check draws; product checks keep bodies
// one-dimensional so the fit grids stay small.
struct ValuationShape {
    int max_terms = 2;
    int max_bodies = 2;
    int max_weight_deg = 1;
    bool segment_bodies = false;
};

inline ValuationExpr random_valuation(Rng& rng, int n, ValuationShape shape = {}) {
    std::vector<ValuationTerm> terms;
    int nterms = static_cast<int>(rng.uniform(1, shape.max_terms));
    for (int t = 0; t < nterms; ++t) {
        ValuationTerm term;
        term.coeff = rng.rational(3, 2);
        if (term.coeff == 0) term.coeff = Scalar(1);
        MultiPoly w{coordinate_vars("x", n), {}};
        w.add_term(std::vector<int>(n, 0), Scalar(1));
        if (shape.max_weight_deg >= 1 && rng.uniform(0, 1) == 1) {
            std::vector<int> e(n, 0);
            e[rng.uniform(0, n - 1)] = 1;
            w.add_term(e, rng.rational(2, 2));
        }
        term.weight = std::move(w);
        int nbodies =
            static_cast<int>(rng.uniform(0, std::min<long>(shape.max_bodies, n)));
        for (int b = 0; b < nbodies; ++b) {
            if (shape.segment_bodies) {
                Vec a = rng.point(n, 2, 2), bb = rng.point(n, 2, 2);
                if (a == bb) bb[0] += 1;
                term.bodies.push_back(segment(a, bb));
            } else {
                std::vector<Vec> pts;
                for (int i = 0; i < n + 1; ++i) pts.push_back(rng.point(n, 2, 2));
                term.bodies.push_back(hull(pts, n));
            }
        }
        terms.push_back(std::move(term));
    }
    return make_valuation(n, std::move(terms));
}

inline ValuationExpr random_valuation(Rng& rng, int n, int max_weight_deg) {
    ValuationShape shape;
    shape.max_weight_deg = max_weight_deg;
    return random_valuation(rng, n, shape);
}

// Random full-dimensional body with small rational vertices.
inline Polytope random_body(Rng& rng, int n) {
    for (;;) {
        std::vector<Vec> pts;
        for (int i = 0; i < n + 3; ++i) pts.push_back(rng.point(n, 4, 2));
        Polytope p = hull(pts, n);
        if (intrinsic_dim(p) == n) return p;
    }
}

// Random constructible function over the refinement of one or two random
// polytope complexes.
inline ConstructibleFunction random_constructible(Rng& rng, int n) {
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

// Fixed constructible suite for the pairing matrix: indicators of bodies of
// every support dimension plus a boundary loop.
struct SuiteFunction {
    std::string name;
    ConstructibleFunction fn;
};

inline std::vector<SuiteFunction> suite_functions(int n) {
    std::vector<SuiteFunction> out;
    out.push_back({"ind_box", indicator(unit_box(n))});
    {
        // asymmetric box so that coordinate-swapped valuations pair apart
        std::vector<Scalar> sides(n, Scalar(1));
        sides[0] = Scalar(2);
        out.push_back({"ind_rect", indicator(box(sides))});
    }
    out.push_back({"ind_simplex", indicator(standard_simplex(n))});
    out.push_back({"ind_segment_e1", indicator(axis_segment(n, 0))});
    out.push_back({"ind_point", indicator(point_polytope(Vec(n, Scalar(1, 4))))});
    out.push_back({"boundary_box", boundary_indicator(unit_box(n))});
    return out;
}

} // namespace valcalc

#endif
