#ifndef VALCALC_CONSTRUCTIBLE_HPP
#define VALCALC_CONSTRUCTIBLE_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hrep.hpp"

namespace valcalc {

// Finite polyhedral complex: closed bounded cells, closed under taking
// faces, any two cells meeting in a common face. Cells are kept in
// canonical order (intrinsic dimension, then vertex list).
struct PolyComplex {
    int dim = 0;
    std::vector<Polytope> cells;
    std::vector<int> cell_dims;
    std::vector<std::vector<int>> facets_of_cell;  // codim-1 subcells per cell

    bool operator==(const PolyComplex& o) const { return dim == o.dim && cells == o.cells; }

    int cell_index(const Polytope& c) const {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i] == c) return static_cast<int>(i);
        return -1;
    }
};

namespace detail {

inline bool cell_order(const std::pair<Polytope, int>& a, const std::pair<Polytope, int>& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
}

} // namespace detail

// Assembles a complex from closed cells: closes under faces, deduplicates,
// sorts, and records incidence. Optionally verifies the common-face
// property pairwise (quadratic; meant for untrusted input).
inline PolyComplex make_complex(int dim, std::vector<Polytope> cells, bool validate = false) {
    if (dim < 1 || dim > config().max_cf_dim)
        throw cap_error("max_cf_dim", config().max_cf_dim,
                        "complex in ambient dimension " + std::to_string(dim));
    for (const auto& c : cells)
        if (c.dim != dim) throw validation_error("make_complex: cell dimension mismatch");

    std::set<Polytope> closed;
    std::vector<Polytope> todo = std::move(cells);
    while (!todo.empty()) {
        Polytope c = std::move(todo.back());
        todo.pop_back();
        if (closed.count(c)) continue;
        closed.insert(c);
        auto lat = face_lattice(c);
        for (const auto& f : lat.all_faces()) {
            Polytope sub = face_polytope(c, f);
            if (!closed.count(sub)) todo.push_back(std::move(sub));
        }
    }

    std::vector<std::pair<Polytope, int>> ordered;
    ordered.reserve(closed.size());
    for (const auto& c : closed) ordered.emplace_back(c, intrinsic_dim(c));
    std::sort(ordered.begin(), ordered.end(), detail::cell_order);

    PolyComplex out;
    out.dim = dim;
    std::map<Polytope, int> index;
    for (auto& [c, d] : ordered) {
        index.emplace(c, static_cast<int>(out.cells.size()));
        out.cells.push_back(c);
        out.cell_dims.push_back(d);
    }
    out.facets_of_cell.resize(out.cells.size());
    for (std::size_t i = 0; i < out.cells.size(); ++i) {
        if (out.cell_dims[i] == 0) continue;
        auto lat = face_lattice(out.cells[i]);
        for (const auto& f : lat.by_dim[lat.top_dim() - 1]) {
            auto it = index.find(face_polytope(out.cells[i], f));
            VALCALC_CHECK(it != index.end(), "make_complex: face closure broken");
            out.facets_of_cell[i].push_back(it->second);
        }
    }

    if (validate) {
        for (std::size_t i = 0; i < out.cells.size(); ++i) {
            for (std::size_t j = i + 1; j < out.cells.size(); ++j) {
                auto common = intersect(out.cells[i], out.cells[j]);
                if (!common) continue;
                auto check_face = [&](const Polytope& host) {
                    std::vector<int> ids;
                    for (const auto& v : common->vertices) {
                        auto it = std::lower_bound(host.vertices.begin(), host.vertices.end(), v,
                                                   lex_less);
                        if (it == host.vertices.end() || *it != v)
                            throw validation_error("make_complex: cells overlap improperly");
                        ids.push_back(static_cast<int>(it - host.vertices.begin()));
                    }
                    if (!is_face_of(host, Face{ids, intrinsic_dim(*common)}))
                        throw validation_error("make_complex: cell intersection is not a face");
                };
                check_face(out.cells[i]);
                check_face(out.cells[j]);
            }
        }
    }
    return out;
}

inline PolyComplex complex_of_polytope(const Polytope& p) {
    return make_complex(p.dim, {p});
}

// All cells of the complex that are faces of cell `idx`, itself included.
inline std::vector<int> cell_face_indices(const PolyComplex& cx, int idx) {
    std::set<int> out{idx};
    std::vector<int> todo{idx};
    while (!todo.empty()) {
        int c = todo.back();
        todo.pop_back();
        for (int f : cx.facets_of_cell[c])
            if (out.insert(f).second) todo.push_back(f);
    }
    return std::vector<int>(out.begin(), out.end());
}

// Common refinement: the cells of the arrangement of every facet affine
// hull (and affine-hull hyperplane of lower-dimensional cells), clipped to
// the input cells and closed under faces.
inline PolyComplex refine_common(const std::vector<PolyComplex>& cs) {
    VALCALC_CHECK(!cs.empty(), "refine_common: no complexes");
    const int n = cs[0].dim;
    for (const auto& c : cs)
        if (c.dim != n) throw validation_error("refine_common: ambient dimension mismatch");

    // Hyperplane set, canonical joint-primitive (a, b) with sign-fixed a.
    std::set<std::pair<Vec, Scalar>> planes;
    auto add_plane = [&](Vec a, Scalar b) {
        if (is_zero(a)) return;
        Vec ext = a;
        ext.push_back(b);
        ext = primitive_ray(ext);
        for (const auto& x : a) {
            if (x == 0) continue;
            if (x < 0) ext = negate(ext);
            break;
        }
        Scalar off = ext.back();
        ext.pop_back();
        planes.emplace(std::move(ext), std::move(off));
    };
    // Only maximal cells contribute: the faces of a cell are carved by the
    // cell's own facet hyperplanes and affine hull already.
    for (const auto& cx : cs) {
        std::vector<char> is_face(cx.cells.size(), 0);
        for (std::size_t i = 0; i < cx.cells.size(); ++i)
            for (int f : cx.facets_of_cell[i]) is_face[f] = 1;
        for (std::size_t i = 0; i < cx.cells.size(); ++i) {
            if (is_face[i]) continue;
            HalfspaceSystem sys = hrep_of(cx.cells[i]);
            for (std::size_t k = 0; k < sys.eq_a.size(); ++k) add_plane(sys.eq_a[k], sys.eq_b[k]);
            for (std::size_t k = 0; k < sys.ineq_a.size(); ++k)
                add_plane(sys.ineq_a[k], sys.ineq_b[k]);
        }
    }
    if (static_cast<int>(planes.size()) > config().facet_hyperplane_cap)
        throw cap_error("facet_hyperplane_cap", config().facet_hyperplane_cap,
                        std::to_string(planes.size()) + " arrangement hyperplanes");

    std::set<Polytope> pieces;
    for (const auto& cx : cs) {
        std::vector<char> is_face(cx.cells.size(), 0);
        for (std::size_t i = 0; i < cx.cells.size(); ++i)
            for (int f : cx.facets_of_cell[i]) is_face[f] = 1;
        for (std::size_t ci = 0; ci < cx.cells.size(); ++ci) {
            if (is_face[ci]) continue;  // faces are recovered by closure below
            const Polytope& cell = cx.cells[ci];
            const int cdim = intrinsic_dim(cell);
            std::vector<Polytope> parts{cell};
            AffineFrame frame = affine_frame(cell.vertices);
            for (const auto& [a, b] : planes) {
                // Skip hyperplanes containing the whole affine hull.
                bool contains_aff = dot(a, frame.base) == b;
                for (const auto& row : frame.basis)
                    contains_aff = contains_aff && dot(a, row) == 0;
                if (contains_aff) continue;
                std::vector<Polytope> next;
                for (const auto& part : parts) {
                    auto lo = clip(part, a, b);
                    auto hi = clip(part, negate(a), -b);
                    bool split = false;
                    if (lo && intrinsic_dim(*lo) == cdim) {
                        next.push_back(std::move(*lo));
                        split = true;
                    }
                    if (hi && intrinsic_dim(*hi) == cdim) {
                        next.push_back(std::move(*hi));
                        split = true;
                    }
                    VALCALC_CHECK(split, "refine_common: piece lost while splitting");
                }
                parts = std::move(next);
            }
            for (auto& p : parts) pieces.insert(std::move(p));
        }
    }
    return make_complex(n, std::vector<Polytope>(pieces.begin(), pieces.end()));
}

// Rational function constant on the relative interior of each cell.
// Zero-coefficient entries are dropped; the zero function has no entries.
struct ConstructibleFunction {
    PolyComplex complex;
    std::map<int, Scalar> coeffs;  // cell index -> value on relint(cell)

    int dim() const { return complex.dim; }
    bool is_zero() const { return coeffs.empty(); }

    Scalar coeff(int cell) const {
        auto it = coeffs.find(cell);
        return it == coeffs.end() ? Scalar(0) : it->second;
    }
    void add_coeff(int cell, const Scalar& c) {
        auto it = coeffs.find(cell);
        if (it == coeffs.end()) {
            if (c != 0) coeffs.emplace(cell, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }
};

// Pointwise value f(x): the coefficient of the unique cell whose relative
// interior contains x.
inline Scalar evaluate_at(const ConstructibleFunction& f, const Vec& x) {
    for (const auto& [cell, c] : f.coeffs)
        if (relint_contains(f.complex.cells[cell], x)) return c;
    return Scalar(0);
}

// Closed indicator 1_P expanded on the open-cell basis: coefficient 1 on
// the relative interior of every face.
inline ConstructibleFunction indicator(const Polytope& p) {
    ConstructibleFunction f;
    f.complex = complex_of_polytope(p);
    for (std::size_t i = 0; i < f.complex.cells.size(); ++i)
        f.coeffs.emplace(static_cast<int>(i), Scalar(1));
    return f;
}

// 1_P - 1_{relint P}; identically zero for a point.
inline ConstructibleFunction boundary_indicator(const Polytope& p) {
    ConstructibleFunction f = indicator(p);
    f.coeffs.erase(static_cast<int>(f.complex.cells.size()) - 1);  // top cell is last
    return f;
}

// f re-expressed over a refinement of its complex. The value on the
// relative interior of a refined cell is read off at its barycenter.
inline ConstructibleFunction reexpress(const ConstructibleFunction& f, const PolyComplex& fine) {
    ConstructibleFunction out;
    out.complex = fine;
    if (f.is_zero()) return out;
    for (std::size_t i = 0; i < fine.cells.size(); ++i) {
        Vec bary = zero_vec(fine.dim);
        for (const auto& v : fine.cells[i].vertices) bary = add(bary, v);
        bary = scale(Scalar(1, static_cast<long>(fine.cells[i].vertices.size())), bary);
        Scalar c = evaluate_at(f, bary);
        if (c != 0) out.coeffs.emplace(static_cast<int>(i), c);
    }
    return out;
}

inline ConstructibleFunction combine(const std::vector<ConstructibleFunction>& fs,
                                     const std::vector<Scalar>& cs) {
    VALCALC_CHECK(fs.size() == cs.size() && !fs.empty(), "combine: size mismatch");
    const int n = fs[0].dim();
    for (const auto& f : fs)
        if (f.dim() != n) throw validation_error("combine: ambient dimension mismatch");

    bool same = true;
    for (const auto& f : fs) same = same && f.complex == fs[0].complex;
    PolyComplex common;
    if (same) {
        common = fs[0].complex;
    } else {
        std::vector<PolyComplex> cxs;
        cxs.reserve(fs.size());
        for (const auto& f : fs) cxs.push_back(f.complex);
        common = refine_common(cxs);
    }
    ConstructibleFunction out;
    out.complex = common;
    for (std::size_t k = 0; k < fs.size(); ++k) {
        if (cs[k] == 0) continue;
        ConstructibleFunction g = same ? fs[k] : reexpress(fs[k], common);
        for (const auto& [cell, c] : g.coeffs) out.add_coeff(cell, cs[k] * c);
    }
    return out;
}

inline ConstructibleFunction multiply(const ConstructibleFunction& f,
                                      const ConstructibleFunction& g) {
    if (f.dim() != g.dim()) throw validation_error("multiply: ambient dimension mismatch");
    if (f.complex == g.complex) {
        ConstructibleFunction out;
        out.complex = f.complex;
        for (const auto& [cell, c] : f.coeffs) {
            Scalar gc = g.coeff(cell);
            if (gc != 0) out.coeffs.emplace(cell, c * gc);
        }
        return out;
    }
    PolyComplex common = refine_common({f.complex, g.complex});
    ConstructibleFunction fr = reexpress(f, common), gr = reexpress(g, common);
    return multiply(fr, gr);
}

inline bool cf_equal(const ConstructibleFunction& f, const ConstructibleFunction& g) {
    return combine({f, g}, {Scalar(1), Scalar(-1)}).is_zero();
}

// Integral against the Euler characteristic: open cells of dimension d
// contribute (-1)^d, which agrees with chi on closed cells.
inline Scalar euler_integral(const ConstructibleFunction& f) {
    Scalar acc(0);
    for (const auto& [cell, c] : f.coeffs)
        acc += (f.complex.cell_dims[cell] % 2 == 0) ? c : -c;
    return acc;
}

// Verdier duality on the open-cell basis: 1_{relint F} -> (-1)^{dim F} 1_F.
inline ConstructibleFunction verdier_dual(const ConstructibleFunction& f) {
    ConstructibleFunction out;
    out.complex = f.complex;
    for (const auto& [cell, c] : f.coeffs) {
        Scalar s = (f.complex.cell_dims[cell] % 2 == 0) ? c : -c;
        for (int face : cell_face_indices(f.complex, cell)) out.add_coeff(face, s);
    }
    return out;
}

inline int support_codim(const ConstructibleFunction& f) {
    if (f.is_zero()) throw validation_error("support_codim: zero function");
    int maxdim = 0;
    for (const auto& [cell, c] : f.coeffs)
        maxdim = std::max(maxdim, f.complex.cell_dims[cell]);
    return f.dim() - maxdim;
}

} // namespace valcalc

#endif
