#ifndef VALCALC_HREP_HPP
#define VALCALC_HREP_HPP

#include <optional>
#include <vector>

#include "face_lattice.hpp"
#include "polytope.hpp"

namespace valcalc {

// Halfspace description of a bounded region: a x = b rows and a x <= b rows.
struct HalfspaceSystem {
    int dim = 0;
    Mat eq_a;
    Vec eq_b;
    Mat ineq_a;
    Vec ineq_b;

    void add_eq(Vec a, Scalar b) {
        eq_a.push_back(std::move(a));
        eq_b.push_back(std::move(b));
    }
    void add_ineq(Vec a, Scalar b) {
        ineq_a.push_back(std::move(a));
        ineq_b.push_back(std::move(b));
    }
};

// Affine-hull equalities plus facet inequalities of a polytope.
inline HalfspaceSystem hrep_of(const Polytope& p) {
    HalfspaceSystem sys;
    sys.dim = p.dim;
    PolyFaces pf = facets_of(p);
    Mat ann;
    if (pf.frame.basis.empty()) {
        ann.assign(p.dim, zero_vec(p.dim));
        for (int i = 0; i < p.dim; ++i) ann[i][i] = 1;
    } else {
        ann = nullspace(pf.frame.basis);
    }
    for (const auto& row : ann) sys.add_eq(row, dot(row, pf.frame.base));
    for (const auto& f : pf.facets) sys.add_ineq(f.normal, f.offset);
    return sys;
}

// Vertex enumeration for a bounded system: every extreme point is a basic
// solution, so solve all square subsystems of tight constraints. Sized for
// the small systems produced by cell refinement (n <= 3).
inline std::optional<Polytope> vertex_enumerate(const HalfspaceSystem& sys) {
    const int n = sys.dim;
    const std::size_t m = sys.ineq_a.size();
    auto satisfies = [&](const Vec& x) {
        for (std::size_t i = 0; i < sys.eq_a.size(); ++i)
            if (dot(sys.eq_a[i], x) != sys.eq_b[i]) return false;
        for (std::size_t i = 0; i < m; ++i)
            if (dot(sys.ineq_a[i], x) > sys.ineq_b[i]) return false;
        return true;
    };

    std::vector<Vec> candidates;
    std::vector<std::size_t> pick;
    auto try_system = [&]() {
        Mat a = sys.eq_a;
        Vec b = sys.eq_b;
        for (auto i : pick) {
            a.push_back(sys.ineq_a[i]);
            b.push_back(sys.ineq_b[i]);
        }
        if (static_cast<int>(rank(a)) != n) return;
        auto x = solve(a, b);
        if (x && satisfies(*x)) candidates.push_back(*x);
    };
    auto rec = [&](auto&& self, std::size_t start, int need) -> void {
        if (need == 0) {
            try_system();
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            if (m - i < static_cast<std::size_t>(need)) break;
            pick.push_back(i);
            self(self, i + 1, need - 1);
            pick.pop_back();
        }
    };
    for (int k = 0; k <= n && k <= static_cast<int>(m); ++k) rec(rec, 0, k);

    if (candidates.empty()) return std::nullopt;
    return hull(candidates, n);
}

// P intersected with {x : a x <= b}; nullopt when empty.
inline std::optional<Polytope> clip(const Polytope& p, const Vec& a, const Scalar& b) {
    HalfspaceSystem sys = hrep_of(p);
    sys.add_ineq(a, b);
    return vertex_enumerate(sys);
}

inline std::optional<Polytope> intersect(const Polytope& p, const Polytope& q) {
    VALCALC_CHECK(p.dim == q.dim, "intersect: dimension mismatch");
    HalfspaceSystem sys = hrep_of(p);
    HalfspaceSystem sq = hrep_of(q);
    for (std::size_t i = 0; i < sq.eq_a.size(); ++i) sys.add_eq(sq.eq_a[i], sq.eq_b[i]);
    for (std::size_t i = 0; i < sq.ineq_a.size(); ++i) sys.add_ineq(sq.ineq_a[i], sq.ineq_b[i]);
    return vertex_enumerate(sys);
}

inline bool relint_contains(const Polytope& p, const Vec& x) {
    auto mf = minimal_face_containing(p, x);
    return mf.has_value() && mf->size() == p.vertices.size();
}

} // namespace valcalc
#endif
