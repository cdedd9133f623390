#ifndef VALCALC_MULTIPOLY_HPP
#define VALCALC_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace valcalc {

// Multivariate polynomial with exact rational coefficients. Terms are kept
// in lexicographic exponent order with no zero coefficients.
struct MultiPoly {
    std::vector<std::string> vars;
    std::map<std::vector<int>, Scalar> terms;

    bool operator==(const MultiPoly& o) const { return vars == o.vars && terms == o.terms; }

    bool is_zero() const { return terms.empty(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms) {
            int t = 0;
            for (int k : e) t += k;
            d = std::max(d, t);
        }
        return d;
    }

    Scalar coefficient(const std::vector<int>& expo) const {
        auto it = terms.find(expo);
        return it == terms.end() ? Scalar(0) : it->second;
    }

    void add_term(const std::vector<int>& expo, const Scalar& c) {
        VALCALC_CHECK(expo.size() == vars.size(), "MultiPoly: exponent arity mismatch");
        auto it = terms.find(expo);
        if (it == terms.end()) {
            if (c != 0) terms.emplace(expo, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Scalar evaluate(const std::vector<Scalar>& x) const {
        VALCALC_CHECK(x.size() == vars.size(), "MultiPoly: evaluation arity mismatch");
        Scalar acc(0);
        for (const auto& [e, c] : terms) {
            Scalar t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }
};

inline std::vector<std::string> coordinate_vars(const std::string& stem, int n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

inline MultiPoly poly_constant(std::vector<std::string> vars, const Scalar& c) {
    MultiPoly p{std::move(vars), {}};
    p.add_term(std::vector<int>(p.vars.size(), 0), c);
    return p;
}

inline MultiPoly poly_monomial(std::vector<std::string> vars, std::vector<int> expo,
                               const Scalar& c) {
    MultiPoly p{std::move(vars), {}};
    p.add_term(expo, c);
    return p;
}

inline MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) {
    VALCALC_CHECK(a.vars == b.vars, "poly_add: variable mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

inline MultiPoly poly_scale(const Scalar& c, const MultiPoly& a) {
    MultiPoly r{a.vars, {}};
    if (c == 0) return r;
    for (const auto& [e, k] : a.terms) r.terms.emplace(e, c * k);
    return r;
}

inline MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) {
    VALCALC_CHECK(a.vars == b.vars, "poly_mul: variable mismatch");
    MultiPoly r{a.vars, {}};
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

// Relabels a polynomial in m variables as living on variable block `slot`
// of `blocks` consecutive m-variable groups.
inline MultiPoly poly_block_lift(const MultiPoly& a, int slot, int blocks,
                                 const std::vector<std::string>& big_vars) {
    const int m = static_cast<int>(a.vars.size());
    VALCALC_CHECK(static_cast<int>(big_vars.size()) == m * blocks, "poly_block_lift: arity");
    MultiPoly r{big_vars, {}};
    for (const auto& [e, c] : a.terms) {
        std::vector<int> big(m * blocks, 0);
        for (int i = 0; i < m; ++i) big[slot * m + i] = e[i];
        r.terms.emplace(std::move(big), c);
    }
    return r;
}

} // namespace valcalc

#endif
