#ifndef VALCALC_INTRINSIC_HPP
#define VALCALC_INTRINSIC_HPP

#include <cmath>
#include <vector>

#include "cone.hpp"
#include "volume.hpp"

namespace valcalc {

// Intrinsic volumes mu_k via face volumes weighted by external angles.
// External angles are irrational, so this is the one floating-point surface
// of the library; everything else stays rational. Target accuracy 1e-9.

namespace detail {

inline double to_double(const Scalar& x) {
    return numerator(x).convert_to<double>() / denominator(x).convert_to<double>();
}

// k-volume of a k-dimensional face from the exact triangulation, with Gram
// determinants evaluated in doubles.
inline double face_volume_k(const Polytope& face) {
    const int k = intrinsic_dim(face);
    if (k == 0) return 1.0;
    double total = 0.0;
    for (const auto& s : triangulate(face)) {
        const std::size_t m = s.size() - 1;
        std::vector<std::vector<double>> e(m, std::vector<double>(s[0].size()));
        for (std::size_t i = 1; i <= m; ++i)
            for (std::size_t j = 0; j < s[0].size(); ++j)
                e[i - 1][j] = to_double(s[i][j]) - to_double(s[0][j]);
        std::vector<std::vector<double>> g(m, std::vector<double>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                double acc = 0;
                for (std::size_t t = 0; t < e[i].size(); ++t) acc += e[i][t] * e[j][t];
                g[i][j] = acc;
            }
        // det of the Gram matrix by Gaussian elimination
        double det = 1.0;
        for (std::size_t c = 0; c < m; ++c) {
            std::size_t sel = c;
            for (std::size_t r = c + 1; r < m; ++r)
                if (std::fabs(g[r][c]) > std::fabs(g[sel][c])) sel = r;
            if (g[sel][c] == 0.0) {
                det = 0.0;
                break;
            }
            if (sel != c) std::swap(g[sel], g[c]);
            det *= g[c][c];
            for (std::size_t r = c + 1; r < m; ++r) {
                double f = g[r][c] / g[c][c];
                for (std::size_t t = c; t < m; ++t) g[r][t] -= f * g[c][t];
            }
        }
        double fact = 1.0;
        for (int i = 2; i <= k; ++i) fact *= i;
        total += std::sqrt(std::fabs(det)) / fact;
    }
    return total;
}

inline double norm(const std::vector<double>& v) {
    double acc = 0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

inline double ddot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline std::vector<double> dvec(const Vec& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_double(v[i]);
    return r;
}

// Angle fraction of a pointed cone of dimension c within its span, for
// c <= 3: planar angle over 2 pi, or the spherical excess over 4 pi.
inline double angle_fraction(const Cone& cone) {
    const int c = cone_dim(cone);
    VALCALC_CHECK(cone.lineality.empty(), "angle_fraction: cone not pointed");
    if (c == 0) return 1.0;
    if (c == 1) return 0.5;
    if (c == 2) {
        VALCALC_CHECK(cone.rays.size() == 2, "angle_fraction: planar cone needs two rays");
        auto a = dvec(cone.rays[0]), b = dvec(cone.rays[1]);
        double cosang = ddot(a, b) / (norm(a) * norm(b));
        cosang = std::max(-1.0, std::min(1.0, cosang));
        return std::acos(cosang) / (2.0 * std::acos(-1.0));
    }
    VALCALC_CHECK(c == 3, "angle_fraction: dimension above three");
    // Spherical polygon of the unit extreme rays; its facets pair up rays.
    const std::size_t f = cone.rays.size();
    std::vector<std::vector<std::size_t>> nbr(f);
    for (std::size_t i = 0; i < f; ++i) {
        for (std::size_t j = i + 1; j < f; ++j) {
            Mat span{cone.rays[i], cone.rays[j]};
            Mat ns = nullspace(span);
            if (ns.size() != cone.rays[i].size() - 2) continue;
            // pick the normal within the cone's span: orthogonal complement
            // of the two rays inside span(rays)
            bool facet = false;
            for (const auto& nrm : ns) {
                int pos = 0, neg = 0, zero = 0;
                for (std::size_t t = 0; t < f; ++t) {
                    int s = signum(dot(nrm, cone.rays[t]));
                    if (s > 0) ++pos;
                    else if (s < 0) ++neg;
                    else ++zero;
                }
                if (zero == 2 && (pos == 0 || neg == 0) && pos + neg == static_cast<int>(f) - 2)
                    facet = true;
            }
            if (facet) {
                nbr[i].push_back(j);
                nbr[j].push_back(i);
            }
        }
    }
    double angle_sum = 0.0;
    const double pi = std::acos(-1.0);
    for (std::size_t i = 0; i < f; ++i) {
        VALCALC_CHECK(nbr[i].size() == 2, "angle_fraction: ray adjacency broken");
        auto r = dvec(cone.rays[i]);
        auto p = dvec(cone.rays[nbr[i][0]]);
        auto q = dvec(cone.rays[nbr[i][1]]);
        double rr = ddot(r, r);
        std::vector<double> pp(p.size()), qq(q.size());
        for (std::size_t t = 0; t < p.size(); ++t) {
            pp[t] = p[t] - ddot(p, r) / rr * r[t];
            qq[t] = q[t] - ddot(q, r) / rr * r[t];
        }
        double cosang = ddot(pp, qq) / (norm(pp) * norm(qq));
        cosang = std::max(-1.0, std::min(1.0, cosang));
        angle_sum += std::acos(cosang);
    }
    double excess = angle_sum - (static_cast<double>(f) - 2.0) * pi;
    return excess / (4.0 * pi);
}

} // namespace detail

// External angle of the face F of P: the normalized solid angle of the
// outer normal cone of F inside the direction space of P.
inline double external_angle(const Polytope& p, const Face& f) {
    PolyFaces pf = facets_of(p);
    const int d = pf.intrinsic_dim();
    if (f.dim == d) return 1.0;
    // Outer facet normals projected onto the direction space of P; the
    // projection is rational: B^T (B B^T)^{-1} B a.
    const Mat& b = pf.frame.basis;
    Mat bbt(b.size(), zero_vec(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) bbt[i][j] = dot(b[i], b[j]);
    Mat gens;
    for (const auto& facet : pf.facets) {
        if (!std::includes(facet.vertex_ids.begin(), facet.vertex_ids.end(),
                           f.vertex_ids.begin(), f.vertex_ids.end()))
            continue;
        auto y = solve(bbt, mat_vec(b, facet.normal));
        VALCALC_CHECK(y.has_value(), "external_angle: projection failed");
        Vec proj = zero_vec(p.dim);
        for (std::size_t i = 0; i < b.size(); ++i) proj = add(proj, scale((*y)[i], b[i]));
        gens.push_back(std::move(proj));
    }
    Cone nc = make_cone(p.dim, std::move(gens), {});
    return detail::angle_fraction(nc);
}

// mu_k(P): sum over k-faces of the k-volume times the external angle.
inline double intrinsic_volume(const Polytope& p, int k) {
    if (p.dim > 3) throw cap_error("max_dim", 3, "intrinsic volumes in dimension " +
                                                     std::to_string(p.dim));
    if (k < 0 || k > p.dim) throw validation_error("intrinsic_volume: k out of range");
    auto lat = face_lattice(p);
    if (k > lat.top_dim()) return 0.0;
    double acc = 0.0;
    for (const auto& f : lat.by_dim[k])
        acc += detail::face_volume_k(face_polytope(p, f)) * external_angle(p, f);
    return acc;
}

} // namespace valcalc

#endif
