#ifndef VALCALC_CONE_HPP
#define VALCALC_CONE_HPP

#include <algorithm>
#include <vector>

#include "face_lattice.hpp"
#include "lp.hpp"

namespace valcalc {

// Closed convex polyhedral cone through the origin. Canonical form:
// lineality stored as the RREF basis of the lineality space, rays as the
// primitive-integer extreme rays of the pointed quotient, written in the
// canonical complement (pivot coordinates zero) and lex-sorted.
struct Cone {
    int dim = 0;     // ambient dimension
    Mat rays;
    Mat lineality;

    bool operator==(const Cone& o) const {
        return dim == o.dim && rays == o.rays && lineality == o.lineality;
    }
    bool operator<(const Cone& o) const {
        if (dim != o.dim) return dim < o.dim;
        auto cmp = [](const Mat& a, const Mat& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
        };
        if (rays != o.rays) return cmp(rays, o.rays);
        return cmp(lineality, o.lineality);
    }
};

inline Cone zero_cone(int n) { return Cone{n, {}, {}}; }

inline Cone make_cone(int n, Mat rays, Mat lineality) {
    for (const auto& r : rays) VALCALC_CHECK(static_cast<int>(r.size()) == n, "make_cone: ray size");
    for (const auto& l : lineality)
        VALCALC_CHECK(static_cast<int>(l.size()) == n, "make_cone: lineality size");

    // Grow the lineality space until the ray cone is pointed: any generator
    // whose negative stays in the cone belongs to the lineality.
    Mat lin = std::move(lineality);
    rays.erase(std::remove_if(rays.begin(), rays.end(), [](const Vec& v) { return is_zero(v); }),
               rays.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (in_cone_span(rays, lin, negate(rays[i]))) {
                lin.push_back(rays[i]);
                rays.erase(rays.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    auto pivots = rref(lin);

    // Reduce rays modulo the lineality: zero out pivot coordinates.
    Mat reduced;
    for (const auto& r : rays) {
        Vec v = r;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            Scalar f = v[pivots[k]];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) v[j] -= f * lin[k][j];
        }
        if (is_zero(v)) continue;
        reduced.push_back(primitive_ray(v));
    }
    std::sort(reduced.begin(), reduced.end(), lex_less);
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

    // Keep only extreme rays of the (now pointed) quotient cone.
    Mat extreme;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        Mat others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        if (!in_cone_span(others, {}, reduced[i])) extreme.push_back(reduced[i]);
    }
    return Cone{n, std::move(extreme), std::move(lin)};
}

inline int cone_dim(const Cone& c) {
    Mat all = c.rays;
    all.insert(all.end(), c.lineality.begin(), c.lineality.end());
    return static_cast<int>(rank(std::move(all)));
}

inline bool cone_contains(const Cone& c, const Vec& v) {
    return in_cone_span(c.rays, c.lineality, v);
}

// Fiberwise antipode -C. Extreme rays negate; the lineality is unchanged.
inline Cone negate_cone(const Cone& c) {
    Cone out{c.dim, {}, c.lineality};
    for (const auto& r : c.rays) out.rays.push_back(negate(r));
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    return make_cone(c.dim, out.rays, out.lineality);
}

inline void require_face(const Polytope& p, const Face& f, const char* op) {
    if (!is_face_of(p, f)) throw validation_error(std::string(op) + ": not a face of the polytope");
}

// Tangent cone T_x P for x in the relative interior of the face F: the
// closure of the directions entering P at x.
inline Cone tangent_cone(const Polytope& p, const Face& f) {
    require_face(p, f, "tangent_cone");
    Vec x = face_barycenter(p, f);
    Mat rays;
    for (const auto& v : p.vertices) {
        Vec d = sub(v, x);
        if (!is_zero(d)) rays.push_back(std::move(d));
    }
    return make_cone(p.dim, std::move(rays), {});
}

// Normal cone in the dual-cone sense: covectors nonnegative on the tangent
// cone. Generated by the inward facet normals of the facets containing F,
// plus the annihilator of the affine hull of P.
inline Cone normal_cone(const Polytope& p, const Face& f) {
    require_face(p, f, "normal_cone");
    PolyFaces pf = facets_of(p);
    Mat rays;
    for (const auto& facet : pf.facets) {
        if (std::includes(facet.vertex_ids.begin(), facet.vertex_ids.end(), f.vertex_ids.begin(),
                          f.vertex_ids.end()))
            rays.push_back(negate(facet.normal));
    }
    Mat lin;
    if (pf.frame.basis.empty()) {  // P is a point: the annihilator is everything
        lin.assign(p.dim, zero_vec(p.dim));
        for (int i = 0; i < p.dim; ++i) lin[i][i] = 1;
    } else {
        lin = nullspace(pf.frame.basis);
    }
    return make_cone(p.dim, std::move(rays), std::move(lin));
}

} // namespace valcalc

#endif
