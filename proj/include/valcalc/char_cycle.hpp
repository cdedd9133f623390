#ifndef VALCALC_CHAR_CYCLE_HPP
#define VALCALC_CHAR_CYCLE_HPP

#include <map>
#include <set>
#include <vector>

#include "cone.hpp"
#include "constructible.hpp"

namespace valcalc {

// One weighted piece (relint of base cell) x (fiber cone) of a conic chain.
struct ChainPiece {
    int base_cell = -1;
    Cone cone;
    Scalar mult;
};

// Multiplicity-weighted conic Lagrangian chain in the cotangent space.
// Canonical form: per base cell the fiber cones are the full-dimensional
// cells of a common fan, pointed, with merged multiplicities; every cone is
// conormal to its base and dim(base) + dim(cone) = n.
struct ConicChain {
    int dim = 0;
    bool projectivized = false;
    PolyComplex base;
    std::vector<ChainPiece> pieces;

    bool is_zero() const { return pieces.empty(); }
};

namespace detail {

// Intrinsic chart of the conormal space of a base cell: the annihilator of
// its direction space, with canonical basis.
struct FiberChart {
    Mat basis;  // rows span the annihilator, RREF
    int fdim() const { return static_cast<int>(basis.size()); }

    Vec to_chart(const Vec& ambient) const {
        Mat bt = transpose(basis);
        auto t = solve(bt, ambient);
        VALCALC_CHECK(t.has_value(), "FiberChart: vector outside conormal space");
        return *t;
    }
    Vec to_ambient(const Vec& t) const {
        Vec p = zero_vec(basis.empty() ? 0 : basis[0].size());
        for (std::size_t k = 0; k < basis.size(); ++k) p = add(p, scale(t[k], basis[k]));
        return p;
    }
};

inline FiberChart fiber_chart(const Polytope& cell, int n) {
    FiberChart ch;
    AffineFrame fr = affine_frame(cell.vertices);
    if (fr.basis.empty()) {
        ch.basis.assign(n, zero_vec(n));
        for (int i = 0; i < n; ++i) ch.basis[i][i] = 1;
    } else {
        ch.basis = nullspace(fr.basis);
        rref(ch.basis);
    }
    return ch;
}

inline Cone cone_to_chart(const Cone& c, const FiberChart& ch) {
    Mat rays, lin;
    for (const auto& r : c.rays) rays.push_back(ch.to_chart(r));
    for (const auto& l : c.lineality) lin.push_back(ch.to_chart(l));
    return make_cone(ch.fdim(), std::move(rays), std::move(lin));
}

inline Cone cone_to_ambient(const Cone& c, const FiberChart& ch, int n) {
    Mat rays, lin;
    for (const auto& r : c.rays) rays.push_back(ch.to_ambient(r));
    for (const auto& l : c.lineality) lin.push_back(ch.to_ambient(l));
    return make_cone(n, std::move(rays), std::move(lin));
}

// Cone clipped to a halfspace {w . x >= 0} through the origin, by the
// generator form of Fourier-Motzkin.
inline Cone clip_cone(const Cone& c, const Vec& w, int n) {
    Mat gens = c.rays;
    Mat lin;
    for (const auto& l : c.lineality) {
        if (dot(w, l) == 0) {
            lin.push_back(l);
        } else {
            gens.push_back(l);
            gens.push_back(negate(l));
        }
    }
    Mat pos, neg, zero;
    for (const auto& g : gens) {
        Scalar s = dot(w, g);
        if (s > 0)
            pos.push_back(g);
        else if (s < 0)
            neg.push_back(g);
        else
            zero.push_back(g);
    }
    Mat out = pos;
    out.insert(out.end(), zero.begin(), zero.end());
    for (const auto& p : pos)
        for (const auto& q : neg) out.push_back(sub(scale(dot(w, p), q), scale(dot(w, q), p)));
    return make_cone(n, std::move(out), std::move(lin));
}

// Facet hyperplane normals of a full-dimensional cone: the facets of the
// hull of the origin and all generators (lineality taken both ways) whose
// hyperplane passes through the origin.
inline std::set<Vec> cone_walls(const Cone& c, int d) {
    std::set<Vec> walls;
    if (c.rays.empty() && c.lineality.empty()) return walls;
    std::vector<Vec> pts{zero_vec(d)};
    for (const auto& r : c.rays) pts.push_back(r);
    for (const auto& l : c.lineality) {
        pts.push_back(l);
        pts.push_back(negate(l));
    }
    if (static_cast<int>(rank(Mat(pts.begin() + 1, pts.end()))) < d) return walls;
    for (const auto& f : facets_of(hull(pts, d)).facets)
        if (f.offset == 0) walls.insert(primitive_line(f.normal));
    return walls;
}

// Common-fan subdivision of a family of full-dimensional cones with signed
// multiplicities; returns the pointed full-dimensional cells of the fan
// with merged nonzero multiplicities.
inline std::vector<std::pair<Cone, Scalar>> subdivide_group(
    const std::vector<std::pair<Cone, Scalar>>& cones, int d) {
    if (d == 0) {
        Scalar m(0);
        for (const auto& [c, mult] : cones) m += mult;
        if (m == 0) return {};
        return {{zero_cone(0), m}};
    }
    std::set<Vec> walls;
    bool any_lineality = false;
    for (const auto& [c, mult] : cones) {
        any_lineality = any_lineality || !c.lineality.empty();
        auto w = cone_walls(c, d);
        walls.insert(w.begin(), w.end());
    }
    if (any_lineality) {
        for (int i = 0; i < d; ++i) {
            Vec e = zero_vec(d);
            e[i] = 1;
            walls.insert(std::move(e));
        }
    }

    Mat full_lin(d, zero_vec(d));
    for (int i = 0; i < d; ++i) full_lin[i][i] = 1;
    std::vector<Cone> cells{make_cone(d, {}, full_lin)};
    for (const auto& w : walls) {
        std::vector<Cone> next;
        for (const auto& cell : cells) {
            Cone lo = clip_cone(cell, w, d);
            Cone hi = clip_cone(cell, negate(w), d);
            if (cone_dim(lo) == d) next.push_back(std::move(lo));
            if (cone_dim(hi) == d) next.push_back(std::move(hi));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        cells = std::move(next);
    }

    std::vector<std::pair<Cone, Scalar>> out;
    for (const auto& cell : cells) {
        // Interior representative: sum of extreme rays (plus lineality has
        // none left if walls killed it; a cell inside a cone iff all its
        // generators are).
        Scalar m(0);
        for (const auto& [c, mult] : cones) {
            bool inside = true;
            for (const auto& r : cell.rays) inside = inside && cone_contains(c, r);
            for (const auto& l : cell.lineality)
                inside = inside && cone_contains(c, l) && cone_contains(c, negate(l));
            if (inside) m += mult;
        }
        if (m != 0) {
            VALCALC_CHECK(cell.lineality.empty(), "subdivide_group: cell not pointed");
            out.emplace_back(cell, m);
        }
    }
    return out;
}

} // namespace detail

// Canonical form: per base cell, cones subdivided to the common pointed
// fan, multiplicities merged, zero pieces dropped, conormality and the
// Lagrangian dimension condition asserted.
inline ConicChain canonicalize_chain(ConicChain chain) {
    const int n = chain.dim;
    std::map<int, std::vector<std::pair<Cone, Scalar>>> groups;
    for (auto& p : chain.pieces) {
        if (p.mult == 0) continue;
        groups[p.base_cell].emplace_back(std::move(p.cone), std::move(p.mult));
    }
    chain.pieces.clear();
    for (auto& [cell_idx, cones] : groups) {
        const Polytope& cell = chain.base.cells[cell_idx];
        const int cell_dim = chain.base.cell_dims[cell_idx];
        detail::FiberChart chart = detail::fiber_chart(cell, n);
        VALCALC_CHECK(chart.fdim() == n - cell_dim, "canonicalize_chain: chart dimension");
        std::vector<std::pair<Cone, Scalar>> local;
        for (auto& [c, m] : cones) {
            VALCALC_CHECK(cone_dim(c) == n - cell_dim,
                          "canonicalize_chain: Lagrangian dimension violated");
            // conormality: to_chart throws if a generator escapes the
            // annihilator of the base directions
            local.emplace_back(detail::cone_to_chart(c, chart), std::move(m));
        }
        for (auto& [c, m] : detail::subdivide_group(local, chart.fdim())) {
            ChainPiece piece;
            piece.base_cell = cell_idx;
            piece.cone = detail::cone_to_ambient(c, chart, n);
            piece.mult = std::move(m);
            chain.pieces.push_back(std::move(piece));
        }
    }
    std::sort(chain.pieces.begin(), chain.pieces.end(),
              [](const ChainPiece& a, const ChainPiece& b) {
                  if (a.base_cell != b.base_cell) return a.base_cell < b.base_cell;
                  return a.cone < b.cone;
              });
    return chain;
}

// CC of a closed polytope: one unit piece (relint F) x (normal cone at F)
// per face F.
inline ConicChain cc_polytope(const Polytope& p) {
    ConicChain chain;
    chain.dim = p.dim;
    chain.base = complex_of_polytope(p);
    auto lat = face_lattice(p);
    for (const auto& f : lat.all_faces()) {
        ChainPiece piece;
        piece.base_cell = chain.base.cell_index(face_polytope(p, f));
        VALCALC_CHECK(piece.base_cell >= 0, "cc_polytope: face not in complex");
        piece.cone = normal_cone(p, f);
        piece.mult = Scalar(1);
        chain.pieces.push_back(std::move(piece));
    }
    return canonicalize_chain(std::move(chain));
}

// CC of a constructible function: linear extension of cc_polytope, with the
// open-cell basis resolved through the face poset of each cell.
inline ConicChain cc(const ConstructibleFunction& f) {
    ConicChain chain;
    chain.dim = f.dim();
    chain.base = f.complex;
    // cc(1_{relint F}) = sum_{G face of F} (-1)^{dim F - dim G} cc(1_G);
    // accumulate the resulting closed-cell weights first.
    std::map<int, Scalar> closed_weight;
    for (const auto& [cell, c] : f.coeffs) {
        for (int g : cell_face_indices(f.complex, cell)) {
            int diff = f.complex.cell_dims[cell] - f.complex.cell_dims[g];
            Scalar s = (diff % 2 == 0) ? c : -c;
            auto it = closed_weight.find(g);
            if (it == closed_weight.end())
                closed_weight.emplace(g, s);
            else
                it->second += s;
        }
    }
    for (const auto& [g, w] : closed_weight) {
        if (w == 0) continue;
        const Polytope& cell = f.complex.cells[g];
        auto lat = face_lattice(cell);
        for (const auto& face : lat.all_faces()) {
            ChainPiece piece;
            piece.base_cell = f.complex.cell_index(face_polytope(cell, face));
            VALCALC_CHECK(piece.base_cell >= 0, "cc: complex not closed under faces");
            piece.cone = normal_cone(cell, face);
            piece.mult = w;
            chain.pieces.push_back(std::move(piece));
        }
    }
    return canonicalize_chain(std::move(chain));
}

// Fiberwise antipode with the orientation twist: (F, C, m) becomes
// (F, -C, (-1)^{dim F} m).
inline ConicChain antipodal(const ConicChain& chain) {
    ConicChain out;
    out.dim = chain.dim;
    out.projectivized = chain.projectivized;
    out.base = chain.base;
    for (const auto& p : chain.pieces) {
        ChainPiece q;
        q.base_cell = p.base_cell;
        q.cone = negate_cone(p.cone);
        bool odd = chain.base.cell_dims[p.base_cell] % 2 != 0;
        if (config().debug_flip_antipodal) odd = false;  // test hook
        q.mult = odd ? Scalar(-p.mult) : p.mult;
        out.pieces.push_back(std::move(q));
    }
    return canonicalize_chain(std::move(out));
}

// Normal cycle: CC with the zero section removed, antipodally flipped, read
// projectively (cones modulo positive scaling, which the canonical ray form
// already is).
inline ConicChain normal_cycle(const ConstructibleFunction& f) {
    ConicChain chain = cc(f);
    ConicChain out;
    out.dim = chain.dim;
    out.base = chain.base;
    out.projectivized = true;
    for (const auto& p : chain.pieces) {
        if (cone_dim(p.cone) == 0) continue;  // zero-section piece
        ChainPiece q;
        q.base_cell = p.base_cell;
        q.cone = negate_cone(p.cone);
        bool odd = chain.base.cell_dims[p.base_cell] % 2 != 0;
        if (config().debug_flip_antipodal) odd = false;  // test hook
        q.mult = odd ? Scalar(-p.mult) : p.mult;
        out.pieces.push_back(std::move(q));
    }
    return canonicalize_chain(std::move(out));
}

inline ConicChain scale_chain(const ConicChain& chain, const Scalar& s) {
    ConicChain out = chain;
    if (s == 0) {
        out.pieces.clear();
        return out;
    }
    for (auto& p : out.pieces) p.mult *= s;
    return out;
}

// Chain re-expressed over a refinement of its base complex. Sub-cells of
// full dimension inherit the piece; lower-dimensional sub-cells carry a
// degenerate (dimension-deficient) product and contribute nothing.
inline ConicChain reexpress_chain(const ConicChain& chain, const PolyComplex& fine) {
    ConicChain out;
    out.dim = chain.dim;
    out.projectivized = chain.projectivized;
    out.base = fine;
    for (const auto& p : chain.pieces) {
        const Polytope& coarse_cell = chain.base.cells[p.base_cell];
        const int cdim = chain.base.cell_dims[p.base_cell];
        for (std::size_t i = 0; i < fine.cells.size(); ++i) {
            if (fine.cell_dims[i] != cdim) continue;
            Vec bary = zero_vec(fine.dim);
            for (const auto& v : fine.cells[i].vertices) bary = add(bary, v);
            bary = scale(Scalar(1, static_cast<long>(fine.cells[i].vertices.size())), bary);
            if (!relint_contains(coarse_cell, bary)) continue;
            ChainPiece q;
            q.base_cell = static_cast<int>(i);
            q.cone = p.cone;
            q.mult = p.mult;
            out.pieces.push_back(std::move(q));
        }
    }
    return canonicalize_chain(std::move(out));
}

inline ConicChain chain_add(const ConicChain& a, const ConicChain& b) {
    if (a.dim != b.dim) throw validation_error("chain_add: ambient dimension mismatch");
    VALCALC_CHECK(a.projectivized == b.projectivized, "chain_add: mixed projectivization");
    if (a.base == b.base) {
        ConicChain out = a;
        out.pieces.insert(out.pieces.end(), b.pieces.begin(), b.pieces.end());
        return canonicalize_chain(std::move(out));
    }
    PolyComplex common = refine_common({a.base, b.base});
    ConicChain ra = reexpress_chain(a, common);
    ConicChain rb = reexpress_chain(b, common);
    ra.pieces.insert(ra.pieces.end(), rb.pieces.begin(), rb.pieces.end());
    return canonicalize_chain(std::move(ra));
}

inline bool chain_equal(const ConicChain& a, const ConicChain& b) {
    if (a.dim != b.dim) throw validation_error("chain_equal: ambient dimension mismatch");
    return chain_add(a, scale_chain(b, Scalar(-1))).is_zero();
}

} // namespace valcalc

#endif
