#ifndef VALCALC_LINALG_HPP
#define VALCALC_LINALG_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "scalar.hpp"

namespace valcalc {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

inline Scalar dot(const Vec& a, const Vec& b) {
    VALCALC_CHECK(a.size() == b.size(), "dot: size mismatch");
    Scalar s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    VALCALC_CHECK(a.size() == b.size(), "add: size mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    VALCALC_CHECK(a.size() == b.size(), "sub: size mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

inline Vec scale(const Scalar& c, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x *= c;
    return r;
}

inline Vec negate(const Vec& a) { return scale(Scalar(-1), a); }

// Strict lexicographic order on coordinate vectors.
inline bool lex_less(const Vec& a, const Vec& b) {
    VALCALC_CHECK(a.size() == b.size(), "lex_less: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// Reduced row echelon form in place; returns the pivot column of each
// produced row. Row order and scaling are canonical (pivots are 1).
inline std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Scalar inv = m[r][c];
        for (auto& x : m[r]) x /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && m[i][c] != 0) {
                Scalar f = m[i][c];
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r, zero_vec(cols));
    return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

// One solution of A x = b with free variables set to zero, or nullopt.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
    VALCALC_CHECK(a.size() == b.size(), "solve: size mismatch");
    if (a.empty()) return Vec{};
    const std::size_t cols = a[0].size();
    Mat aug(a);
    for (std::size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug);
    Vec x = zero_vec(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) return std::nullopt; // 0 = 1 row
        x[pivots[i]] = aug[i][cols];
    }
    return x;
}

// Canonical basis of {x : A x = 0}, one row per free column of the RREF.
inline Mat nullspace(Mat a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Mat basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v = zero_vec(cols);
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Scalar det(Mat m) {
    const std::size_t n = m.size();
    for (const auto& row : m) VALCALC_CHECK(row.size() == n, "det: not square");
    Scalar result(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return Scalar(0);
        if (sel != c) {
            std::swap(m[c], m[sel]);
            result = -result;
        }
        result *= m[c][c];
        Scalar inv = m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Scalar f = m[i][c] / inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return result;
}

// Scales a nonzero rational vector to coprime integer coordinates without
// changing its direction.
inline Vec primitive_ray(const Vec& v) {
    VALCALC_CHECK(!is_zero(v), "primitive_ray: zero vector");
    Integer lcm_den(1), gcd_num(0);
    for (const auto& x : v) {
        if (x == 0) continue;
        lcm_den = lcm(lcm_den, denominator(x));
    }
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Integer num = numerator(v[i]) * (lcm_den / denominator(v[i]));
        gcd_num = gcd(gcd_num, num);
        r[i] = Scalar(num, 1);
    }
    for (auto& x : r) x /= Scalar(gcd_num, 1);
    return r;
}

// Primitive integer vector with canonical sign (first nonzero positive);
// used for undirected lines and hyperplane normals.
inline Vec primitive_line(const Vec& v) {
    Vec r = primitive_ray(v);
    for (const auto& x : r) {
        if (x == 0) continue;
        if (x < 0) return negate(r);
        return r;
    }
    return r;
}

inline Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), zero_vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
    Vec r;
    r.reserve(m.size());
    for (const auto& row : m) r.push_back(dot(row, v));
    return r;
}

} // namespace valcalc

#endif
