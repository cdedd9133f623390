#ifndef VALCALC_MINKOWSKI_HPP
#define VALCALC_MINKOWSKI_HPP

#include <string>
#include <vector>

#include "multipoly.hpp"
#include "volume.hpp"

namespace valcalc {

// Polynomial density on R^m with the configured degree cap.
inline void check_weight(const MultiPoly& w, int m) {
    if (static_cast<int>(w.vars.size()) != m)
        throw validation_error("weight: arity does not match ambient dimension");
    if (w.total_degree() > config().weight_degree_cap)
        throw cap_error("weight_degree_cap", config().weight_degree_cap,
                        "weight of degree " + std::to_string(w.total_degree()));
}

inline MultiPoly unit_weight(int m) {
    return poly_constant(coordinate_vars("x", m), Scalar(1));
}

// Exact integral of a polynomial density over a polytope.
inline Scalar integrate_poly(const Polytope& p, const MultiPoly& w) {
    Scalar acc(0);
    for (const auto& [expo, c] : w.terms) acc += c * integrate_monomial(p, expo);
    return acc;
}

// Weighted volume of a nonnegative Minkowski combination.
inline Scalar weighted_volume(const std::vector<Polytope>& bodies, const std::vector<Scalar>& lam,
                              const MultiPoly& w) {
    if (bodies.empty()) throw validation_error("weighted_volume: no bodies");
    check_weight(w, bodies[0].dim);
    return integrate_poly(minkowski_sum(bodies, lam), w);
}

namespace detail {

// Coefficients of the degree-d univariate interpolating polynomial through
// the values at the nodes 1, 2, ..., d+1 (exact Newton form).
inline std::vector<Scalar> interpolate_at_positive_integers(const std::vector<Scalar>& values) {
    const std::size_t k = values.size();
    // divided differences
    std::vector<Scalar> dd(values);
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Scalar(static_cast<long>(level));
    // expand the Newton form over nodes 1..k
    std::vector<Scalar> coeff(k, Scalar(0));
    std::vector<Scalar> basis{Scalar(1)};  // product (x-1)...(x-i)
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) coeff[j] += dd[i] * basis[j];
        if (i + 1 < k) {
            basis.push_back(Scalar(0));
            for (std::size_t j = basis.size() - 1; j > 0; --j)
                basis[j] = basis[j - 1] - Scalar(static_cast<long>(i + 1)) * basis[j];
            basis[0] *= Scalar(-static_cast<long>(i + 1));
        }
    }
    return coeff;
}

} // namespace detail

// Per-axis degree bound for the weighted volume of K + sum lambda_i K_i as
// a polynomial in lambda_i: the i-th body can occupy at most dim(K_i)
// determinant columns, and the weight adds at most its degree.
inline int axis_degree_bound(const Polytope& body, int m, int weight_degree) {
    return std::min(m + weight_degree, intrinsic_dim(body) + weight_degree);
}

// The unique polynomial p with p(lambda) = weighted_volume(bodies, lambda, w)
// for all lambda >= 0, fitted exactly on the tensor grid of positive
// integers (one axis per body, sized by the axis degree bound). Optionally
// `pinned` bodies are added with coefficient fixed to 1 and get no variable.
inline MultiPoly minkowski_polynomial_pinned(const std::vector<Polytope>& pinned,
                                             const std::vector<Polytope>& bodies,
                                             const MultiPoly& w) {
    const int s = static_cast<int>(bodies.size());
    VALCALC_CHECK(s > 0 || !pinned.empty(), "minkowski_polynomial: no bodies");
    const int m = (s > 0 ? bodies[0] : pinned[0]).dim;
    check_weight(w, m);
    if (s > config().max_bodies)
        throw cap_error("max_bodies", config().max_bodies,
                        std::to_string(s) + " variable bodies in one fit");
    for (const auto& b : bodies)
        if (b.dim != m) throw validation_error("minkowski_polynomial: dimension mismatch");
    for (const auto& b : pinned)
        if (b.dim != m) throw validation_error("minkowski_polynomial: dimension mismatch");

    const int degw = w.total_degree();
    const int dtotal = m + degw;
    std::vector<int> axis_deg(s);
    for (int i = 0; i < s; ++i) axis_deg[i] = axis_degree_bound(bodies[i], m, degw);

    std::vector<Polytope> all = pinned;
    all.insert(all.end(), bodies.begin(), bodies.end());
    auto eval_at = [&](const std::vector<Scalar>& lam) {
        std::vector<Scalar> coeffs(pinned.size(), Scalar(1));
        coeffs.insert(coeffs.end(), lam.begin(), lam.end());
        return integrate_poly(minkowski_sum(all, coeffs), w);
    };

    // Tensor grid of values, reduced axis by axis to coefficients by exact
    // univariate interpolation at the nodes 1..deg+1.
    std::vector<int> sizes(s);
    for (int i = 0; i < s; ++i) sizes[i] = axis_deg[i] + 1;
    long total = 1;
    for (int i = 0; i < s; ++i) total *= sizes[i];
    std::vector<Scalar> table(total);
    std::vector<Scalar> lam(s);
    for (long idx = 0; idx < total; ++idx) {
        long rest = idx;
        for (int i = 0; i < s; ++i) {
            lam[i] = Scalar(rest % sizes[i] + 1);
            rest /= sizes[i];
        }
        table[idx] = eval_at(lam);
    }
    for (int axis = 0; axis < s; ++axis) {
        long stride = 1;
        for (int i = 0; i < axis; ++i) stride *= sizes[i];
        long block = stride * sizes[axis];
        for (long base = 0; base < total; base += block) {
            for (long off = 0; off < stride; ++off) {
                std::vector<Scalar> line(sizes[axis]);
                for (int k = 0; k < sizes[axis]; ++k) line[k] = table[base + off + k * stride];
                auto cs = detail::interpolate_at_positive_integers(line);
                for (int k = 0; k < sizes[axis]; ++k) table[base + off + k * stride] = cs[k];
            }
        }
    }

    MultiPoly poly{coordinate_vars("l", s), {}};
    std::vector<int> expo(s);
    for (long idx = 0; idx < total; ++idx) {
        if (table[idx] == 0) continue;
        long rest = idx;
        int deg = 0;
        for (int i = 0; i < s; ++i) {
            expo[i] = static_cast<int>(rest % sizes[i]);
            deg += expo[i];
            rest /= sizes[i];
        }
        if (deg > dtotal)
            throw internal_error("minkowski_polynomial: fitted degree exceeds " +
                                 std::to_string(dtotal) + ", input is not polynomial as claimed");
        poly.terms.emplace(expo, table[idx]);
    }

    if (config().verify_fits && s > 0) {
        // Out-of-sample consistency check at a point off the grid.
        std::vector<Scalar> probe(s);
        for (int i = 0; i < s; ++i) probe[i] = Scalar(2 * axis_deg[i] + 3, 2);
        if (poly.evaluate(probe) != eval_at(probe))
            throw internal_error("minkowski_polynomial: out-of-sample verification failed");
    }
    return poly;
}

inline MultiPoly minkowski_polynomial(const std::vector<Polytope>& bodies, const MultiPoly& w) {
    return minkowski_polynomial_pinned({}, bodies, w);
}

// d^k p / d lambda_{i_1} ... d lambda_{i_k} at 0: the coefficient of the
// product of the listed variables to the first power.
inline Scalar mixed_derivative_at_zero(const MultiPoly& p, const std::vector<int>& vars) {
    std::vector<int> expo(p.vars.size(), 0);
    for (int v : vars) {
        if (v < 0 || v >= static_cast<int>(p.vars.size()))
            throw validation_error("mixed_derivative_at_zero: variable out of range");
        if (expo[v] != 0) throw validation_error("mixed_derivative_at_zero: repeated variable");
        expo[v] = 1;
    }
    return p.coefficient(expo);
}

// Mixed volume V(K_1, ..., K_n), normalized so V(K, ..., K) = vol(K).
inline Scalar mixed_volume(const std::vector<Polytope>& bodies) {
    if (bodies.empty()) throw validation_error("mixed_volume: no bodies");
    const int n = bodies[0].dim;
    if (n > 3) throw cap_error("max_dim", 3, "mixed volume in dimension " + std::to_string(n));
    if (static_cast<int>(bodies.size()) != n)
        throw validation_error("mixed_volume: needs exactly n bodies in dimension n");
    MultiPoly p = minkowski_polynomial(bodies, unit_weight(n));
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    Scalar c = mixed_derivative_at_zero(p, all);
    return c / Scalar(detail::factorial(n), 1);
}

} // namespace valcalc

#endif
