#ifndef VALCALC_FACE_LATTICE_HPP
#define VALCALC_FACE_LATTICE_HPP

#include <map>
#include <queue>
#include <vector>

#include "polytope.hpp"

namespace valcalc {

// A face of a polytope, identified by the parent vertices it contains.
struct Face {
    std::vector<int> vertex_ids;  // sorted indices into the parent's vertices
    int dim = 0;

    bool operator==(const Face& o) const { return vertex_ids == o.vertex_ids; }
    bool operator<(const Face& o) const {
        if (dim != o.dim) return dim < o.dim;
        return vertex_ids < o.vertex_ids;
    }
};

// Complete graded lattice of nonempty faces, top face included.
struct FaceLattice {
    Polytope polytope;
    std::vector<std::vector<Face>> by_dim;  // by_dim[d], each level sorted
    // covers[d][i]: indices into by_dim[d-1] of the faces bounding by_dim[d][i]
    std::vector<std::vector<std::vector<int>>> covers;

    int top_dim() const { return static_cast<int>(by_dim.size()) - 1; }
    const Face& top() const { return by_dim.back().front(); }

    std::vector<Face> all_faces() const {
        std::vector<Face> out;
        for (const auto& level : by_dim) out.insert(out.end(), level.begin(), level.end());
        return out;
    }
};

inline Polytope face_polytope(const Polytope& parent, const Face& f) {
    Polytope out{parent.dim, {}};
    out.vertices.reserve(f.vertex_ids.size());
    for (int id : f.vertex_ids) out.vertices.push_back(parent.vertices[id]);
    return out;  // a face's vertices are parent vertices, already lex-sorted
}

inline Vec face_barycenter(const Polytope& parent, const Face& f) {
    Vec c = zero_vec(parent.dim);
    for (int id : f.vertex_ids) c = add(c, parent.vertices[id]);
    return scale(Scalar(1, static_cast<long>(f.vertex_ids.size())), c);
}

inline FaceLattice face_lattice(const Polytope& p) {
    if (p.dim > config().max_lattice_dim)
        throw cap_error("max_lattice_dim", config().max_lattice_dim,
                        "face lattice in ambient dimension " + std::to_string(p.dim));

    const int d = intrinsic_dim(p);
    FaceLattice lat;
    lat.polytope = p;
    lat.by_dim.assign(d + 1, {});

    std::vector<int> all_ids(p.vertices.size());
    for (std::size_t i = 0; i < all_ids.size(); ++i) all_ids[i] = static_cast<int>(i);

    // Breadth-first from the top face; children of a face are the facets of
    // the face treated as a polytope in its own right.
    std::map<std::vector<int>, int> seen;  // vertex set -> dim
    std::map<std::vector<int>, std::vector<std::vector<int>>> children;
    std::queue<std::pair<std::vector<int>, int>> todo;
    seen[all_ids] = d;
    todo.push({all_ids, d});
    while (!todo.empty()) {
        auto [ids, fdim] = todo.front();
        todo.pop();
        if (fdim == 0) continue;
        Polytope q = face_polytope(p, Face{ids, fdim});
        PolyFaces pf = facets_of(q);
        for (const auto& facet : pf.facets) {
            std::vector<int> sub;
            sub.reserve(facet.vertex_ids.size());
            for (int local : facet.vertex_ids) sub.push_back(ids[local]);
            std::sort(sub.begin(), sub.end());
            children[ids].push_back(sub);
            if (!seen.count(sub)) {
                seen[sub] = fdim - 1;
                todo.push({sub, fdim - 1});
            }
        }
    }

    for (const auto& [ids, fdim] : seen) lat.by_dim[fdim].push_back(Face{ids, fdim});
    for (auto& level : lat.by_dim) std::sort(level.begin(), level.end());

    lat.covers.assign(d + 1, {});
    std::map<std::vector<int>, int> index_in_level;
    for (int k = 0; k <= d; ++k)
        for (std::size_t i = 0; i < lat.by_dim[k].size(); ++i)
            index_in_level[lat.by_dim[k][i].vertex_ids] = static_cast<int>(i);
    for (int k = 0; k <= d; ++k) {
        lat.covers[k].resize(lat.by_dim[k].size());
        if (k == 0) continue;
        for (std::size_t i = 0; i < lat.by_dim[k].size(); ++i) {
            auto it = children.find(lat.by_dim[k][i].vertex_ids);
            VALCALC_CHECK(it != children.end(), "face_lattice: missing children");
            auto subs = it->second;
            std::sort(subs.begin(), subs.end());
            subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
            for (const auto& s : subs) lat.covers[k][i].push_back(index_in_level.at(s));
        }
    }

    // Euler-Poincare relation over all nonempty faces including the top.
    long chi = 0;
    for (int k = 0; k <= d; ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(lat.by_dim[k].size());
    VALCALC_CHECK(chi == 1, "face_lattice: Euler relation violated");
    return lat;
}

inline std::vector<long> f_vector(const FaceLattice& lat) {
    std::vector<long> f;
    for (const auto& level : lat.by_dim) f.push_back(static_cast<long>(level.size()));
    return f;
}

// The minimal face of p containing x, as a vertex id set; empty optional if
// x is not in p. Works through the facet description.
inline std::optional<std::vector<int>> minimal_face_containing(const Polytope& p, const Vec& x) {
    PolyFaces pf = facets_of(p);
    if (!pf.frame.contains(x)) return std::nullopt;
    std::vector<int> ids;
    if (pf.facets.empty()) {  // p is a point
        if (x == p.vertices[0]) return std::vector<int>{0};
        return std::nullopt;
    }
    bool any_active = false;
    std::vector<char> in_face(p.vertices.size(), 1);
    for (const auto& f : pf.facets) {
        Scalar v = dot(f.normal, x);
        if (v > f.offset) return std::nullopt;
        if (v == f.offset) {
            any_active = true;
            std::vector<char> on(p.vertices.size(), 0);
            for (int id : f.vertex_ids) on[id] = 1;
            for (std::size_t i = 0; i < in_face.size(); ++i) in_face[i] &= on[i];
        }
    }
    if (!any_active) {
        std::vector<int> all(p.vertices.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        return all;
    }
    for (std::size_t i = 0; i < in_face.size(); ++i)
        if (in_face[i]) ids.push_back(static_cast<int>(i));
    return ids;
}

inline bool is_face_of(const Polytope& p, const Face& f) {
    if (f.vertex_ids.empty()) return false;
    for (int id : f.vertex_ids)
        if (id < 0 || id >= static_cast<int>(p.vertices.size())) return false;
    auto mf = minimal_face_containing(p, face_barycenter(p, f));
    return mf.has_value() && *mf == f.vertex_ids;
}

} // namespace valcalc

#endif
