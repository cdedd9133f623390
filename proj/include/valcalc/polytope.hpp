#ifndef VALCALC_POLYTOPE_HPP
#define VALCALC_POLYTOPE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "config.hpp"
#include "linalg.hpp"

namespace valcalc {

// Compact convex rational polytope, stored by its extreme points.
// Canonical form: vertices lex-sorted, every stored point extreme.
struct Polytope {
    int dim = 0;                // ambient dimension
    std::vector<Vec> vertices;  // nonempty, lex-sorted extreme points

    bool operator==(const Polytope& o) const { return dim == o.dim && vertices == o.vertices; }
    bool operator<(const Polytope& o) const {
        if (dim != o.dim) return dim < o.dim;
        return std::lexicographical_compare(vertices.begin(), vertices.end(), o.vertices.begin(),
                                            o.vertices.end(), lex_less);
    }
};

inline Polytope point_polytope(const Vec& p) {
    return Polytope{static_cast<int>(p.size()), {p}};
}

inline Polytope segment(const Vec& a, const Vec& b) {
    VALCALC_CHECK(a.size() == b.size(), "segment: dim mismatch");
    if (a == b) return point_polytope(a);
    Polytope p{static_cast<int>(a.size()), {a, b}};
    if (lex_less(b, a)) std::swap(p.vertices[0], p.vertices[1]);
    return p;
}

// Affine chart of the affine hull of a point set: points are x0 + B^T t
// with B the canonical (RREF) basis of the direction space.
struct AffineFrame {
    Vec base;      // x0
    Mat basis;     // d rows of length n
    int intrinsic_dim() const { return static_cast<int>(basis.size()); }

    Vec to_intrinsic(const Vec& p) const {
        if (basis.empty()) {
            VALCALC_CHECK(p == base, "to_intrinsic: point outside affine hull");
            return {};
        }
        Mat bt = transpose(basis);
        auto t = solve(bt, sub(p, base));
        VALCALC_CHECK(t.has_value(), "to_intrinsic: point outside affine hull");
        return *t;
    }
    Vec from_intrinsic(const Vec& t) const {
        Vec p = base;
        for (std::size_t k = 0; k < basis.size(); ++k) p = add(p, scale(t[k], basis[k]));
        return p;
    }
    bool contains(const Vec& p) const {
        if (basis.empty()) return p == base;
        Mat bt = transpose(basis);
        return solve(bt, sub(p, base)).has_value();
    }
};

inline AffineFrame affine_frame(const std::vector<Vec>& points) {
    VALCALC_CHECK(!points.empty(), "affine_frame: empty");
    AffineFrame f;
    f.base = points[0];
    Mat diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], f.base));
    rref(diffs);
    f.basis = std::move(diffs);
    return f;
}

namespace detail {

// One facet of a full-dimensional hull in intrinsic coordinates:
// normal . x <= offset on the polytope, with equality on `on` points.
struct HullPlane {
    Vec normal;
    Scalar offset;
    std::vector<int> on;
};

struct SimplicialFacet {
    std::vector<int> vs;  // d sorted point indices
    Vec normal;           // oriented: normal . x <= offset inside
    Scalar offset;
};

// Hyperplane through d affinely independent points of R^d.
inline std::pair<Vec, Scalar> plane_through(const std::vector<Vec>& pts,
                                            const std::vector<int>& idx) {
    Mat diffs;
    for (std::size_t i = 1; i < idx.size(); ++i)
        diffs.push_back(sub(pts[idx[i]], pts[idx[0]]));
    if (diffs.empty()) diffs.push_back(zero_vec(pts[idx[0]].size()));
    Mat ns = nullspace(diffs);
    VALCALC_CHECK(ns.size() == 1, "plane_through: points not affinely independent");
    return {ns[0], dot(ns[0], pts[idx[0]])};
}

struct HullBoundary {
    std::vector<HullPlane> planes;          // deduplicated facet hyperplanes
    std::vector<SimplicialFacet> simplices; // simplicial boundary complex
};

// Incremental beneath-beyond over a lex-sorted set of distinct points that
// affinely span R^d (d >= 1).
inline HullBoundary hull_boundary_full_dim(const std::vector<Vec>& pts, int d) {
    const int np = static_cast<int>(pts.size());
    VALCALC_CHECK(np >= d + 1, "hull: too few points for claimed dimension");

    // Greedy affinely independent seed simplex, in insertion order.
    std::vector<int> simplex{0};
    Mat span;
    for (int i = 1; i < np && static_cast<int>(simplex.size()) < d + 1; ++i) {
        Mat trial = span;
        trial.push_back(sub(pts[i], pts[0]));
        if (rank(trial) > span.size()) {
            span = std::move(trial);
            rref(span);
            simplex.push_back(i);
        }
    }
    VALCALC_CHECK(static_cast<int>(simplex.size()) == d + 1, "hull: rank deficient input");

    // Strict interior reference point: the seed simplex barycenter.
    Vec ref = zero_vec(d);
    for (int i : simplex) ref = add(ref, pts[i]);
    ref = scale(Scalar(1, d + 1), ref);

    std::vector<SimplicialFacet> facets;
    auto make_facet = [&](std::vector<int> vs) {
        std::sort(vs.begin(), vs.end());
        auto [normal, offset] = plane_through(pts, vs);
        Scalar side = dot(normal, ref) - offset;
        VALCALC_CHECK(side != 0, "hull: reference point on facet plane");
        if (side > 0) {
            normal = negate(normal);
            offset = -offset;
        }
        facets.push_back(SimplicialFacet{std::move(vs), std::move(normal), std::move(offset)});
    };
    for (int skip = 0; skip <= d; ++skip) {
        std::vector<int> vs;
        for (int j = 0; j <= d; ++j)
            if (j != skip) vs.push_back(simplex[j]);
        make_facet(std::move(vs));
    }

    std::set<int> in_simplex(simplex.begin(), simplex.end());
    for (int ip = 0; ip < np; ++ip) {
        if (in_simplex.count(ip)) continue;
        const Vec& p = pts[ip];
        std::vector<char> visible(facets.size(), 0);
        bool any = false;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (dot(facets[f].normal, p) > facets[f].offset) {
                visible[f] = 1;
                any = true;
            }
        }
        if (!any) continue;  // inside or on the boundary: not a new vertex

        // Ridges of the simplicial boundary complex and their incident facets.
        std::map<std::vector<int>, std::vector<std::size_t>> ridges;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            for (int skip = 0; skip < d; ++skip) {
                std::vector<int> r;
                for (int j = 0; j < d; ++j)
                    if (j != skip) r.push_back(facets[f].vs[j]);
                ridges[r].push_back(f);
            }
        }
        std::vector<SimplicialFacet> next;
        for (std::size_t f = 0; f < facets.size(); ++f)
            if (!visible[f]) next.push_back(facets[f]);
        std::vector<SimplicialFacet> keep;
        std::swap(facets, keep);
        facets = std::move(next);
        for (const auto& [r, fs] : ridges) {
            VALCALC_CHECK(fs.size() == 2, "hull: non-manifold ridge");
            bool v0 = visible[fs[0]], v1 = visible[fs[1]];
            if (v0 == v1) continue;
            std::vector<int> vs = r;
            vs.push_back(ip);
            make_facet(std::move(vs));
        }
    }

    // Merge coplanar simplicial facets into true facet hyperplanes.
    std::map<std::pair<std::vector<std::string>, std::string>, HullPlane> planes;
    for (const auto& f : facets) {
        Vec n = f.normal;
        Scalar c = f.offset;
        // Joint primitive-integer scaling, orientation preserved.
        Vec ext = n;
        ext.push_back(c);
        ext = primitive_ray(ext);
        c = ext.back();
        ext.pop_back();
        n = std::move(ext);
        std::vector<std::string> key;
        for (const auto& x : n) key.push_back(scalar_to_string(x));
        auto [it, fresh] = planes.try_emplace({key, scalar_to_string(c)},
                                              HullPlane{n, c, {}});
        if (fresh) {
            for (int i = 0; i < np; ++i)
                if (dot(n, pts[i]) == c) it->second.on.push_back(i);
        }
    }
    HullBoundary out;
    out.planes.reserve(planes.size());
    for (auto& [k, v] : planes) out.planes.push_back(std::move(v));
    out.simplices = std::move(facets);
    return out;
}

inline std::vector<HullPlane> hull_planes_full_dim(const std::vector<Vec>& pts, int d) {
    return hull_boundary_full_dim(pts, d).planes;
}

} // namespace detail

// Facet description of a polytope: ambient covectors y with y . x <= c on P
// and equality exactly on the facet. For lower-dimensional P the facets are
// the facets within its affine hull.
struct FacetInfo {
    Vec normal;                    // ambient covector, canonical lift
    Scalar offset;
    std::vector<int> vertex_ids;   // indices into P.vertices
};

struct PolyFaces {
    AffineFrame frame;
    std::vector<FacetInfo> facets;
    int intrinsic_dim() const { return frame.intrinsic_dim(); }
};

inline Polytope hull(const std::vector<Vec>& points, int n) {
    if (points.empty()) throw validation_error("hull: empty point set");
    if (n < 1) throw validation_error("hull: ambient dimension must be positive");
    if (n > config().max_dim)
        throw cap_error("max_dim", config().max_dim, "hull in ambient dimension " + std::to_string(n));
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != n)
            throw validation_error("hull: mixed point dimensions");

    std::vector<Vec> pts(points);
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    AffineFrame frame = affine_frame(pts);
    const int d = frame.intrinsic_dim();
    if (d == 0) return Polytope{n, {pts[0]}};

    std::vector<Vec> loc;
    loc.reserve(pts.size());
    for (const auto& p : pts) loc.push_back(frame.to_intrinsic(p));
    auto planes = detail::hull_planes_full_dim(loc, d);

    // A point of a full-dimensional polytope is extreme iff its active facet
    // normals span the space.
    Polytope out{n, {}};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Mat active;
        for (const auto& pl : planes)
            if (std::binary_search(pl.on.begin(), pl.on.end(), static_cast<int>(i)))
                active.push_back(pl.normal);
        if (static_cast<int>(rank(std::move(active))) == d) out.vertices.push_back(pts[i]);
    }
    VALCALC_CHECK(!out.vertices.empty(), "hull: no extreme points found");
    return out;
}

// Facets of an already-canonical polytope.
inline PolyFaces facets_of(const Polytope& p) {
    PolyFaces out;
    out.frame = affine_frame(p.vertices);
    const int d = out.frame.intrinsic_dim();
    if (d == 0) return out;

    std::vector<Vec> loc;
    loc.reserve(p.vertices.size());
    for (const auto& v : p.vertices) loc.push_back(out.frame.to_intrinsic(v));
    auto planes = detail::hull_planes_full_dim(loc, d);

    for (const auto& pl : planes) {
        // Canonical ambient lift y of the intrinsic normal: B y = normal.
        auto y = solve(out.frame.basis, pl.normal);
        VALCALC_CHECK(y.has_value(), "facets_of: normal lift failed");
        FacetInfo fi;
        fi.normal = *y;
        fi.offset = dot(*y, out.frame.base) + pl.offset;
        fi.vertex_ids = pl.on;
        out.facets.push_back(std::move(fi));
    }
    return out;
}

inline int intrinsic_dim(const Polytope& p) {
    return affine_frame(p.vertices).intrinsic_dim();
}

// Supporting functional value h_P(y) = max over vertices.
inline Scalar support_value(const Polytope& p, const Vec& y) {
    if (static_cast<int>(y.size()) != p.dim)
        throw validation_error("support_value: covector dimension mismatch");
    Scalar best = dot(y, p.vertices[0]);
    for (std::size_t i = 1; i < p.vertices.size(); ++i)
        best = std::max(best, dot(y, p.vertices[i]));
    return best;
}

inline Polytope minkowski_sum(const std::vector<Polytope>& bodies,
                              const std::vector<Scalar>& coeffs) {
    if (bodies.empty()) throw validation_error("minkowski_sum: no bodies");
    VALCALC_CHECK(bodies.size() == coeffs.size(), "minkowski_sum: size mismatch");
    const int n = bodies[0].dim;
    for (const auto& b : bodies)
        if (b.dim != n) throw validation_error("minkowski_sum: ambient dimension mismatch");
    for (const auto& c : coeffs)
        if (c < 0) throw validation_error("minkowski_sum: negative coefficient");

    std::vector<Vec> sums{zero_vec(n)};
    for (std::size_t k = 0; k < bodies.size(); ++k) {
        if (coeffs[k] == 0) continue;  // 0 * K = {0}
        std::vector<Vec> next;
        next.reserve(sums.size() * bodies[k].vertices.size());
        for (const auto& s : sums)
            for (const auto& v : bodies[k].vertices) next.push_back(add(s, scale(coeffs[k], v)));
        std::sort(next.begin(), next.end(), lex_less);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        sums = std::move(next);
    }
    return hull(sums, n);
}

// Image {A v + b}. Injective maps preserve extremeness, so the hull step is
// only needed when A drops rank.
inline Polytope affine_image(const Polytope& p, const Mat& a, const Vec& b) {
    const int m = static_cast<int>(a.size());
    if (m < 1) throw validation_error("affine_image: empty matrix");
    if (m > config().max_dim)
        throw cap_error("max_dim", config().max_dim, "affine_image target dimension " + std::to_string(m));
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != p.dim)
            throw validation_error("affine_image: matrix width != polytope dimension");
    if (static_cast<int>(b.size()) != m) throw validation_error("affine_image: offset size mismatch");

    std::vector<Vec> imgs;
    imgs.reserve(p.vertices.size());
    for (const auto& v : p.vertices) imgs.push_back(add(mat_vec(a, v), b));
    if (static_cast<int>(rank(a)) == p.dim) {
        std::sort(imgs.begin(), imgs.end(), lex_less);
        imgs.erase(std::unique(imgs.begin(), imgs.end()), imgs.end());
        return Polytope{m, std::move(imgs)};
    }
    return hull(imgs, m);
}

inline Polytope reflect(const Polytope& p) {
    Mat a(p.dim, zero_vec(p.dim));
    for (int i = 0; i < p.dim; ++i) a[i][i] = -1;
    return affine_image(p, a, zero_vec(p.dim));
}

inline Polytope translate(const Polytope& p, const Vec& t) {
    Polytope out{p.dim, {}};
    out.vertices.reserve(p.vertices.size());
    for (const auto& v : p.vertices) out.vertices.push_back(add(v, t));
    return out;  // translation preserves lex order and extremeness
}

inline Polytope dilate(const Polytope& p, const Scalar& m) {
    if (m == 0) return point_polytope(zero_vec(p.dim));
    Mat a(p.dim, zero_vec(p.dim));
    for (int i = 0; i < p.dim; ++i) a[i][i] = m;
    return affine_image(p, a, zero_vec(p.dim));
}

// P placed m-fold on the diagonal of R^{m n}: v -> (v, v, ..., v).
inline Polytope diagonal_embed(const Polytope& p, int copies) {
    const int n = p.dim;
    Mat a(copies * n, zero_vec(n));
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < n; ++i) a[c * n + i][i] = 1;
    return affine_image(p, a, zero_vec(copies * n));
}

// P placed in block `slot` (0-based) of R^{m n}, zero elsewhere.
inline Polytope block_embed(const Polytope& p, int slot, int blocks) {
    const int n = p.dim;
    VALCALC_CHECK(slot >= 0 && slot < blocks, "block_embed: slot out of range");
    Mat a(blocks * n, zero_vec(n));
    for (int i = 0; i < n; ++i) a[slot * n + i][i] = 1;
    return affine_image(p, a, zero_vec(blocks * n));
}

inline Polytope unit_box(int n) {
    std::vector<Vec> pts;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = Scalar((mask >> i) & 1);
        pts.push_back(std::move(v));
    }
    return hull(pts, n);
}

inline Polytope standard_simplex(int n) {
    std::vector<Vec> pts{zero_vec(n)};
    for (int i = 0; i < n; ++i) {
        Vec v = zero_vec(n);
        v[i] = 1;
        pts.push_back(std::move(v));
    }
    return hull(pts, n);
}

} // namespace valcalc

#endif
