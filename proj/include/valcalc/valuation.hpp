#ifndef VALCALC_VALUATION_HPP
#define VALCALC_VALUATION_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "char_cycle.hpp"
#include "minkowski.hpp"

namespace valcalc {

// One term of a valuation: coeff * d^k/dl_1..dl_k|_0 of the weighted volume
// of K + sum l_i A_i. The weight is a polynomial density on R^n.
struct ValuationTerm {
    Scalar coeff;
    MultiPoly weight;
    std::vector<Polytope> bodies;
};

struct ValuationExpr {
    int dim = 0;
    std::vector<ValuationTerm> terms;

    int max_weight_degree() const {
        int d = 0;
        for (const auto& t : terms) d = std::max(d, t.weight.total_degree());
        return d;
    }
};

namespace detail {

inline bool term_less(const ValuationTerm& a, const ValuationTerm& b) {
    if (a.bodies.size() != b.bodies.size()) return a.bodies.size() < b.bodies.size();
    for (std::size_t i = 0; i < a.bodies.size(); ++i)
        if (!(a.bodies[i] == b.bodies[i])) return a.bodies[i] < b.bodies[i];
    return a.weight.terms < b.weight.terms;
}

inline bool term_same_shape(const ValuationTerm& a, const ValuationTerm& b) {
    return a.bodies == b.bodies && a.weight == b.weight;
}

} // namespace detail

// Canonical form: terms sorted, like terms merged, zero terms dropped.
// Terms with more bodies than n + deg(weight) are rejected: their mixed
// derivative vanishes identically.
inline ValuationExpr make_valuation(int n, std::vector<ValuationTerm> terms) {
    if (n < 1) throw validation_error("make_valuation: dimension must be positive");
    for (auto& t : terms) {
        check_weight(t.weight, n);
        for (const auto& b : t.bodies)
            if (b.dim != n) throw validation_error("make_valuation: body dimension mismatch");
        if (static_cast<int>(t.bodies.size()) > n + t.weight.total_degree())
            throw validation_error(
                "make_valuation: more bodies than n + weight degree; the term vanishes "
                "identically");
        std::sort(t.bodies.begin(), t.bodies.end());
    }
    std::sort(terms.begin(), terms.end(), detail::term_less);
    ValuationExpr out;
    out.dim = n;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!out.terms.empty() && detail::term_same_shape(out.terms.back(), t))
            out.terms.back().coeff += t.coeff;
        else
            out.terms.push_back(std::move(t));
    }
    std::erase_if(out.terms, [](const ValuationTerm& t) { return t.coeff == 0; });
    return out;
}

inline ValuationExpr volume_valuation(int n) {
    return make_valuation(n, {ValuationTerm{Scalar(1), unit_weight(n), {}}});
}

// The Euler characteristic as the mixed term over the axis unit segments.
inline ValuationExpr euler_valuation(int n) {
    std::vector<Polytope> segs;
    for (int i = 0; i < n; ++i) {
        Vec e = zero_vec(n);
        e[i] = 1;
        segs.push_back(segment(zero_vec(n), e));
    }
    return make_valuation(n, {ValuationTerm{Scalar(1), unit_weight(n), std::move(segs)}});
}

inline ValuationExpr scale_valuation(const Scalar& c, const ValuationExpr& v) {
    ValuationExpr out = v;
    for (auto& t : out.terms) t.coeff *= c;
    return make_valuation(v.dim, std::move(out.terms));
}

inline ValuationExpr add_valuations(const ValuationExpr& a, const ValuationExpr& b) {
    VALCALC_CHECK(a.dim == b.dim, "add_valuations: dimension mismatch");
    std::vector<ValuationTerm> terms = a.terms;
    terms.insert(terms.end(), b.terms.begin(), b.terms.end());
    return make_valuation(a.dim, std::move(terms));
}

inline Scalar evaluate_term(const ValuationTerm& t, const Polytope& k) {
    if (t.bodies.empty()) return t.coeff * integrate_poly(k, t.weight);
    MultiPoly p = minkowski_polynomial_pinned({k}, t.bodies, t.weight);
    std::vector<int> all(t.bodies.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return t.coeff * mixed_derivative_at_zero(p, all);
}

inline Scalar evaluate(const ValuationExpr& v, const Polytope& k) {
    if (k.dim != v.dim) throw validation_error("evaluate: dimension mismatch");
    Scalar acc(0);
    for (const auto& t : v.terms) acc += evaluate_term(t, k);
    return acc;
}

// Euler extension of a polytope evaluator to the relative interior of a
// cell: hat(E)(relint F) = sum over faces G of F of (-1)^{dim F - dim G}
// E(closure G).
template <typename Evaluator>
Scalar euler_extension(Evaluator&& ev, const Polytope& cell) {
    auto lat = face_lattice(cell);
    const int top = lat.top_dim();
    Scalar acc(0);
    for (const auto& f : lat.all_faces()) {
        Scalar value = ev(face_polytope(cell, f));
        acc += ((top - f.dim) % 2 == 0) ? value : -value;
    }
    return acc;
}

// The pairing of an evaluator with a constructible function through the
// open-cell expansion.
template <typename Evaluator>
Scalar pair_constructible_with(Evaluator&& ev, const ConstructibleFunction& f) {
    Scalar acc(0);
    for (const auto& [cell, c] : f.coeffs)
        acc += c * euler_extension(ev, f.complex.cells[cell]);
    return acc;
}

// Wraps an evaluator with a per-invocation memo; cell face closures visit
// the same face polytope many times.
template <typename Evaluator>
auto memoized(Evaluator&& ev) {
    return [ev = std::forward<Evaluator>(ev),
            cache = std::make_shared<std::map<Polytope, Scalar>>()](const Polytope& q) {
        auto it = cache->find(q);
        if (it != cache->end()) return it->second;
        Scalar value = ev(q);
        cache->emplace(q, value);
        return value;
    };
}

// <Xi(f), phi>: valuation-linear pairing with a constructible function.
// With f = 1_P this recovers evaluate(phi, P).
inline Scalar evaluate_constructible(const ValuationExpr& v, const ConstructibleFunction& f) {
    if (f.dim() != v.dim) throw validation_error("evaluate_constructible: dimension mismatch");
    return pair_constructible_with(memoized([&](const Polytope& q) { return evaluate(v, q); }),
                                   f);
}

// Alesker product of m valuations evaluated on K, through the m-fold
// diagonal embedding: all bodies block-embedded into R^{m n}, the weights
// multiplied in block coordinates, the diagonal of K pinned at one, and the
// mixed first derivative taken in every lambda.
inline Scalar product_eval(const std::vector<ValuationExpr>& vs, const Polytope& k) {
    VALCALC_CHECK(!vs.empty(), "product_eval: no factors");
    const int n = vs[0].dim;
    const int m = static_cast<int>(vs.size());
    for (const auto& v : vs)
        if (v.dim != n) throw validation_error("product_eval: dimension mismatch");
    if (k.dim != n) throw validation_error("product_eval: body dimension mismatch");
    if (m * n > config().max_dim)
        throw cap_error("max_dim", config().max_dim,
                        std::to_string(m) + "-fold product in dimension " + std::to_string(n));
    if (m == 1) return evaluate(vs[0], k);

    const auto big_vars = coordinate_vars("x", m * n);
    Polytope diag = diagonal_embed(k, m);

    Scalar acc(0);
    std::vector<const ValuationTerm*> tuple(m);
    auto rec = [&](auto&& self, int factor) -> void {
        if (factor == m) {
            Scalar c(1);
            MultiPoly w = poly_constant(big_vars, Scalar(1));
            std::vector<Polytope> bodies;
            for (int j = 0; j < m; ++j) {
                c *= tuple[j]->coeff;
                w = poly_mul(w, poly_block_lift(tuple[j]->weight, j, m, big_vars));
                for (const auto& a : tuple[j]->bodies) bodies.push_back(block_embed(a, j, m));
            }
            if (bodies.empty()) {
                acc += c * integrate_poly(diag, w);  // zero-dimensional diagonal: 0 anyway
                return;
            }
            MultiPoly p = minkowski_polynomial_pinned({diag}, bodies, w);
            std::vector<int> all(bodies.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            acc += c * mixed_derivative_at_zero(p, all);
            return;
        }
        for (const auto& t : vs[factor].terms) {
            tuple[factor] = &t;
            self(self, factor + 1);
        }
    };
    rec(rec, 0);
    return acc;
}

namespace detail {

// Exact Newton interpolation at the integer nodes 0, 1, ..., k-1; returns
// monomial coefficients.
inline std::vector<Scalar> interpolate_at_naturals(const std::vector<Scalar>& values) {
    const std::size_t k = values.size();
    std::vector<Scalar> dd(values);
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Scalar(static_cast<long>(level));
    std::vector<Scalar> coeff(k, Scalar(0));
    std::vector<Scalar> basis{Scalar(1)};
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) coeff[j] += dd[i] * basis[j];
        if (i + 1 < k) {
            basis.push_back(Scalar(0));
            for (std::size_t j = basis.size() - 1; j > 0; --j)
                basis[j] = basis[j - 1] - Scalar(static_cast<long>(i)) * basis[j];
            basis[0] *= Scalar(-static_cast<long>(i));
        }
    }
    return coeff;
}

// Dilation polynomial of an evaluator: coefficients of the polynomial
// m -> E(m K), sampled at m = 0..deg.
template <typename Evaluator>
std::vector<Scalar> dilation_polynomial(Evaluator&& ev, const Polytope& k, int deg) {
    std::vector<Scalar> values;
    values.reserve(deg + 1);
    for (int m = 0; m <= deg; ++m) values.push_back(ev(dilate(k, Scalar(m))));
    return interpolate_at_naturals(values);
}

} // namespace detail

// Homogeneous component of degree `degree` extracted by exact dilation
// interpolation. Polynomial weights push the dilation degree up to
// n + deg(weight), so the sample range follows the weight degree.
struct HomogeneousComponent {
    ValuationExpr parent;
    int degree = 0;
};

inline HomogeneousComponent homogeneous_component(const ValuationExpr& v, int degree) {
    if (degree < 0 || degree > v.dim)
        throw validation_error("homogeneous_component: degree out of range");
    return HomogeneousComponent{v, degree};
}

inline Scalar component_eval(const HomogeneousComponent& h, const Polytope& k) {
    const int deg_bound = h.parent.dim + h.parent.max_weight_degree();
    auto coeffs = detail::dilation_polynomial(
        [&](const Polytope& q) { return evaluate(h.parent, q); }, k, deg_bound);
    return static_cast<std::size_t>(h.degree) < coeffs.size() ? coeffs[h.degree] : Scalar(0);
}

// Smallest degree with a nonvanishing component on the test set; n+1 when
// everything vanishes there (a testset-relative reading of the filtration).
inline int min_degree(const ValuationExpr& v, const std::vector<Polytope>& testset) {
    if (testset.empty()) throw validation_error("min_degree: empty testset");
    for (int k = 0; k <= v.dim; ++k) {
        HomogeneousComponent h{v, k};
        for (const auto& body : testset)
            if (component_eval(h, body) != 0) return k;
    }
    return v.dim + 1;
}

// Euler-Verdier involution in closed form: reflect every body and twist by
// (-1)^{n-k}; the weight is unchanged.
inline ValuationExpr sigma_reflect(const ValuationExpr& v) {
    std::vector<ValuationTerm> terms;
    terms.reserve(v.terms.size());
    for (const auto& t : v.terms) {
        ValuationTerm s;
        int k = static_cast<int>(t.bodies.size());
        s.coeff = ((v.dim - k) % 2 == 0) ? t.coeff : -t.coeff;
        s.weight = t.weight;
        for (const auto& b : t.bodies) s.bodies.push_back(reflect(b));
        terms.push_back(std::move(s));
    }
    return make_valuation(v.dim, std::move(terms));
}

// Euler-Verdier involution through the boundary formula:
// (sigma phi)(P) = (-1)^{dim P} (phi(P) - phi(boundary P)).
inline Scalar sigma_boundary_eval(const ValuationExpr& v, const Polytope& p) {
    auto ev = memoized([&](const Polytope& q) { return evaluate(v, q); });
    Scalar inner = ev(p);
    Scalar bnd = pair_constructible_with(ev, boundary_indicator(p));
    Scalar diff = inner - bnd;
    return intrinsic_dim(p) % 2 == 0 ? diff : -diff;
}

// Same boundary route for a product of valuations.
inline Scalar sigma_boundary_product_eval(const std::vector<ValuationExpr>& vs,
                                          const Polytope& p) {
    auto ev = memoized([&](const Polytope& q) { return product_eval(vs, q); });
    Scalar inner = ev(p);
    Scalar bnd = pair_constructible_with(ev, boundary_indicator(p));
    Scalar diff = inner - bnd;
    return intrinsic_dim(p) % 2 == 0 ? diff : -diff;
}

// Top-degree coefficient of the product against the volume: the constant c
// with (phi . psi)_n = c vol, checked for constancy across the test set.
inline Scalar poincare_pair(const ValuationExpr& a, const ValuationExpr& b,
                            const std::vector<Polytope>& testset) {
    VALCALC_CHECK(!testset.empty(), "poincare_pair: empty testset");
    const int n = a.dim;
    const int deg_bound = 2 * n + a.max_weight_degree() + b.max_weight_degree();
    bool have = false;
    Scalar ratio(0);
    for (const auto& k : testset) {
        if (intrinsic_dim(k) < n)
            throw validation_error("poincare_pair: testset body not full-dimensional");
        auto coeffs = detail::dilation_polynomial(
            [&](const Polytope& q) { return product_eval({a, b}, q); }, k, deg_bound);
        Scalar top = static_cast<std::size_t>(n) < coeffs.size() ? coeffs[n] : Scalar(0);
        Scalar c = top / volume(k);
        if (!have) {
            ratio = c;
            have = true;
        } else if (c != ratio) {
            throw internal_error("poincare_pair: top component is not a multiple of volume");
        }
    }
    return ratio;
}

// Integration functional on the constructible image; agrees with the Euler
// integral and with the pairing against the Euler characteristic.
inline Scalar integrate_constructible(const ConstructibleFunction& f) {
    Scalar value = euler_integral(f);
#ifndef NDEBUG
    VALCALC_CHECK(value == evaluate_constructible(euler_valuation(f.dim()), f),
                  "integrate_constructible: Euler integral disagrees with the pairing");
#endif
    return value;
}

// Labeled rational pairing matrix with its exact rank.
struct PairingMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    Mat entries;
    int rank = 0;
};

inline PairingMatrix evaluation_pairing_matrix(const std::vector<ValuationExpr>& rows,
                                               const std::vector<ConstructibleFunction>& cols,
                                               std::vector<std::string> row_labels = {},
                                               std::vector<std::string> col_labels = {}) {
    PairingMatrix m;
    m.row_labels = std::move(row_labels);
    m.col_labels = std::move(col_labels);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Vec row;
        for (const auto& f : cols) row.push_back(evaluate_constructible(rows[i], f));
        m.entries.push_back(std::move(row));
    }
    m.rank = m.entries.empty() ? 0 : static_cast<int>(rank(m.entries));
    return m;
}

inline PairingMatrix poincare_pairing_matrix(const std::vector<ValuationExpr>& rows,
                                             const std::vector<ValuationExpr>& cols,
                                             const std::vector<Polytope>& testset,
                                             std::vector<std::string> row_labels = {},
                                             std::vector<std::string> col_labels = {}) {
    PairingMatrix m;
    m.row_labels = std::move(row_labels);
    m.col_labels = std::move(col_labels);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Vec row;
        for (const auto& c : cols) row.push_back(poincare_pair(rows[i], c, testset));
        m.entries.push_back(std::move(row));
    }
    m.rank = m.entries.empty() ? 0 : static_cast<int>(rank(m.entries));
    return m;
}

} // namespace valcalc

#endif
