#ifndef VALCALC_VOLUME_HPP
#define VALCALC_VOLUME_HPP

#include <vector>

#include "polytope.hpp"

namespace valcalc {

enum class TriangulationAnchor { LexMin, LexMax };

namespace detail {

inline Scalar simplex_det(const std::vector<Vec>& s) {
    const std::size_t n = s.size() - 1;
    Mat m;
    m.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) m.push_back(sub(s[i], s[0]));
    return det(std::move(m));
}

inline Integer factorial(int k) {
    Integer f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Integral of x^alpha over an n-simplex via barycentric expansion:
// substitute x = sum_j t_j v_j and use the Dirichlet integral
// int_T prod t_j^{g_j} dt = (prod g_j!) / (n + |g|)!.
inline Scalar monomial_over_simplex(const std::vector<Vec>& s, const std::vector<int>& alpha) {
    const int n = static_cast<int>(s.size()) - 1;
    Scalar absdet = abs_scalar(simplex_det(s));
    if (absdet == 0) return Scalar(0);

    int total = 0;
    for (int a : alpha) total += a;

    Scalar acc(0);
    std::vector<int> gamma(n + 1, 0);
    // Recurse over coordinates, expanding (sum_j t_j v_{j,i})^{alpha_i}.
    auto rec = [&](auto&& self, int coord, const Scalar& coeff) -> void {
        if (coord == n) {  // all coordinates of x consumed
            Scalar dirichlet(1);
            for (int j = 0; j <= n; ++j) dirichlet *= Scalar(factorial(gamma[j]), 1);
            dirichlet /= Scalar(factorial(n + total), 1);
            acc += coeff * dirichlet;
            return;
        }
        const int a = alpha[coord];
        std::vector<int> beta(n + 1, 0);
        auto comp = [&](auto&& inner, int j, int rem, const Scalar& c) -> void {
            if (j == n) {
                beta[n] = rem;
                Scalar c2 = c;
                if (rem > 0) {
                    if (s[n][coord] == 0) return;
                    Scalar pw(1);
                    for (int t = 0; t < rem; ++t) pw *= s[n][coord];
                    c2 *= pw;
                }
                // multinomial(a; beta)
                Scalar multi(factorial(a), 1);
                for (int t = 0; t <= n; ++t) multi /= Scalar(factorial(beta[t]), 1);
                for (int t = 0; t <= n; ++t) gamma[t] += beta[t];
                self(self, coord + 1, c2 * multi);
                for (int t = 0; t <= n; ++t) gamma[t] -= beta[t];
                return;
            }
            for (int take = 0; take <= rem; ++take) {
                if (take > 0 && s[j][coord] == 0) break;
                Scalar c2 = c;
                beta[j] = take;
                for (int t = 0; t < take; ++t) c2 *= s[j][coord];
                inner(inner, j + 1, rem - take, c2);
            }
            beta[j] = 0;
        };
        comp(comp, 0, a, coeff);
    };
    rec(rec, 0, Scalar(1));
    return absdet * acc;
}

} // namespace detail

// Star triangulation from an anchor vertex over the simplicial boundary
// complex maintained by the incremental hull: one hull pass, no recursive
// facet enumeration. Boundary simplices coplanar with the anchor degenerate
// to zero volume and are dropped.
inline std::vector<std::vector<Vec>> triangulate(
    const Polytope& p, TriangulationAnchor anchor = TriangulationAnchor::LexMin) {
    const int d = intrinsic_dim(p);
    if (d == 0) return {{p.vertices[0]}};
    AffineFrame frame = affine_frame(p.vertices);
    std::vector<Vec> loc;
    loc.reserve(p.vertices.size());
    for (const auto& v : p.vertices) loc.push_back(frame.to_intrinsic(v));
    auto boundary = detail::hull_boundary_full_dim(loc, d);

    const Vec& v0 =
        anchor == TriangulationAnchor::LexMin ? p.vertices.front() : p.vertices.back();
    const Vec& v0_loc = anchor == TriangulationAnchor::LexMin ? loc.front() : loc.back();
    std::vector<std::vector<Vec>> out;
    for (const auto& sf : boundary.simplices) {
        if (dot(sf.normal, v0_loc) == sf.offset) continue;  // flat cone
        std::vector<Vec> simplex;
        simplex.reserve(d + 1);
        for (int id : sf.vs) simplex.push_back(p.vertices[id]);
        simplex.push_back(v0);
        out.push_back(std::move(simplex));
    }
    return out;
}

// n-dimensional volume; zero for lower-dimensional bodies. Exact.
inline Scalar volume(const Polytope& p,
                     TriangulationAnchor anchor = TriangulationAnchor::LexMin) {
    if (p.dim > config().max_dim)
        throw cap_error("max_dim", config().max_dim, "volume in dimension " + std::to_string(p.dim));
    if (intrinsic_dim(p) < p.dim) return Scalar(0);
    Scalar v(0);
    for (const auto& s : triangulate(p, anchor)) v += abs_scalar(detail::simplex_det(s));
    return v / Scalar(detail::factorial(p.dim), 1);
}

// Exact integral of x^alpha over P.
inline Scalar integrate_monomial(const Polytope& p, const std::vector<int>& alpha) {
    if (p.dim > config().max_dim)
        throw cap_error("max_dim", config().max_dim,
                        "integration in dimension " + std::to_string(p.dim));
    if (static_cast<int>(alpha.size()) != p.dim)
        throw validation_error("integrate_monomial: exponent size mismatch");
    int total = 0;
    for (int a : alpha) {
        if (a < 0) throw validation_error("integrate_monomial: negative exponent");
        total += a;
    }
    if (total > config().monomial_degree_cap)
        throw cap_error("monomial_degree_cap", config().monomial_degree_cap,
                        "monomial of degree " + std::to_string(total));
    if (intrinsic_dim(p) < p.dim) return Scalar(0);
    Scalar acc(0);
    for (const auto& s : triangulate(p)) acc += detail::monomial_over_simplex(s, alpha);
    return acc;
}

} // namespace valcalc

#endif
