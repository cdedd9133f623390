#ifndef VALCALC_IO_HPP
#define VALCALC_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "char_cycle.hpp"
#include "suite.hpp"
#include "valuation.hpp"

namespace valcalc {

using Json = nlohmann::ordered_json;

// ---- scalars ----------------------------------------------------------

// Rationals travel as "p/q" strings; readers also accept plain integers
// (JSON numbers or undivided strings).
inline Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    throw validation_error("expected a rational \"p/q\" string or integer, got " + j.dump());
}

inline Json scalar_to_json(const Scalar& x) { return scalar_to_string(x); }

inline Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw validation_error("expected a coordinate array, got " + j.dump());
    Vec v;
    for (const auto& x : j) v.push_back(scalar_from_json(x));
    return v;
}

inline Json vec_to_json(const Vec& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(scalar_to_json(x));
    return j;
}

// ---- polytopes ---------------------------------------------------------

inline Polytope polytope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
        throw validation_error("polytope needs {\"dim\", \"vertices\"}");
    int n = j.at("dim").get<int>();
    std::vector<Vec> pts;
    for (const auto& row : j.at("vertices")) pts.push_back(vec_from_json(row));
    return hull(pts, n);  // canonicalizes and validates
}

inline Json polytope_to_json(const Polytope& p) {
    Json j;
    j["dim"] = p.dim;
    Json verts = Json::array();
    for (const auto& v : p.vertices) verts.push_back(vec_to_json(v));
    j["vertices"] = std::move(verts);
    return j;
}

// ---- constructible functions -------------------------------------------

inline ConstructibleFunction constructible_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("cells"))
        throw validation_error("constructible function needs {\"dim\", \"cells\", \"coeffs\"}");
    int n = j.at("dim").get<int>();
    std::vector<Polytope> cells;
    for (const auto& c : j.at("cells")) cells.push_back(polytope_from_json(c));
    PolyComplex cx = make_complex(n, cells, /*validate=*/true);
    ConstructibleFunction f;
    f.complex = cx;
    if (j.contains("coeffs")) {
        for (const auto& entry : j.at("coeffs")) {
            if (!entry.is_array() || entry.size() != 2)
                throw validation_error("coeff entries are [cell_index, \"p/q\"]");
            int idx = entry.at(0).get<int>();
            if (idx < 0 || idx >= static_cast<int>(cells.size()))
                throw validation_error("coeff index out of range");
            // indices refer to the cells as given; map into the canonical complex
            int canonical = cx.cell_index(cells[idx]);
            VALCALC_CHECK(canonical >= 0, "constructible_from_json: cell lookup failed");
            f.add_coeff(canonical, scalar_from_json(entry.at(1)));
        }
    }
    return f;
}

inline Json constructible_to_json(const ConstructibleFunction& f) {
    Json j;
    j["dim"] = f.dim();
    Json cells = Json::array();
    for (const auto& c : f.complex.cells) cells.push_back(polytope_to_json(c));
    j["cells"] = std::move(cells);
    Json coeffs = Json::array();
    for (const auto& [cell, c] : f.coeffs) coeffs.push_back(Json::array({cell, scalar_to_json(c)}));
    j["coeffs"] = std::move(coeffs);
    return j;
}

// ---- cones and chains ----------------------------------------------------

inline Json cone_to_json(const Cone& c) {
    Json j;
    Json rays = Json::array(), lin = Json::array();
    for (const auto& r : c.rays) rays.push_back(vec_to_json(r));
    for (const auto& l : c.lineality) lin.push_back(vec_to_json(l));
    j["rays"] = std::move(rays);
    j["lineality"] = std::move(lin);
    return j;
}

inline Json chain_to_json(const ConicChain& chain) {
    Json j;
    j["dim"] = chain.dim;
    j["projectivized"] = chain.projectivized;
    Json pieces = Json::array();
    for (const auto& p : chain.pieces) {
        Json piece;
        piece["base"] = polytope_to_json(chain.base.cells[p.base_cell]);
        piece["cone"] = cone_to_json(p.cone);
        piece["mult"] = scalar_to_json(p.mult);
        pieces.push_back(std::move(piece));
    }
    j["pieces"] = std::move(pieces);
    return j;
}

// ---- polynomials and valuations ------------------------------------------

inline MultiPoly multipoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw validation_error("polynomial needs {\"vars\", \"terms\"}");
    MultiPoly p{j.at("vars").get<std::vector<std::string>>(), {}};
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2)
            throw validation_error("polynomial terms are [[e1,...], \"p/q\"]");
        p.add_term(t.at(0).get<std::vector<int>>(), scalar_from_json(t.at(1)));
    }
    return p;
}

inline Json multipoly_to_json(const MultiPoly& p) {
    Json j;
    j["vars"] = p.vars;
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms) terms.push_back(Json::array({e, scalar_to_json(c)}));
    j["terms"] = std::move(terms);
    return j;
}

inline ValuationExpr valuation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
        throw validation_error("valuation needs {\"dim\", \"terms\"}");
    int n = j.at("dim").get<int>();
    std::vector<ValuationTerm> terms;
    for (const auto& t : j.at("terms")) {
        ValuationTerm term;
        term.coeff = scalar_from_json(t.at("coeff"));
        term.weight = t.contains("weight") ? multipoly_from_json(t.at("weight"))
                                           : unit_weight(n);
        if (t.contains("bodies"))
            for (const auto& b : t.at("bodies")) term.bodies.push_back(polytope_from_json(b));
        terms.push_back(std::move(term));
    }
    return make_valuation(n, std::move(terms));
}

inline Json valuation_to_json(const ValuationExpr& v) {
    Json j;
    j["dim"] = v.dim;
    Json terms = Json::array();
    for (const auto& t : v.terms) {
        Json term;
        term["coeff"] = scalar_to_json(t.coeff);
        term["weight"] = multipoly_to_json(t.weight);
        Json bodies = Json::array();
        for (const auto& b : t.bodies) bodies.push_back(polytope_to_json(b));
        term["bodies"] = std::move(bodies);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

// ---- pairing matrices -----------------------------------------------------

inline Json pairing_to_json(const PairingMatrix& m) {
    Json j;
    j["rows"] = m.row_labels;
    j["cols"] = m.col_labels;
    Json rows = Json::array();
    for (const auto& r : m.entries) rows.push_back(vec_to_json(r));
    j["entries"] = std::move(rows);
    j["rank"] = m.rank;
    return j;
}

inline std::string pairing_to_csv(const PairingMatrix& m) {
    std::ostringstream out;
    const std::size_t ncols = m.entries.empty() ? 0 : m.entries[0].size();
    out << "row";
    for (std::size_t c = 0; c < ncols; ++c)
        out << "," << (c < m.col_labels.size() ? m.col_labels[c] : "c" + std::to_string(c));
    out << "\n";
    for (std::size_t r = 0; r < m.entries.size(); ++r) {
        out << (r < m.row_labels.size() ? m.row_labels[r] : "r" + std::to_string(r));
        for (const auto& x : m.entries[r]) out << "," << scalar_to_string(x);
        out << "\n";
    }
    out << "rank," << m.rank << "\n";
    return out.str();
}

// ---- parsing with positions -----------------------------------------------

// Parses text, translating parse errors into validation errors that carry
// line and column.
inline Json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t pos = e.byte > 0 ? e.byte - 1 : 0;
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw validation_error(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                               ": malformed JSON: " + e.what());
    }
}

// ---- config files -----------------------------------------------------------

// key = value lines, # comments. Unknown keys are rejected so typos are
// loud.
inline void load_config_text(const std::string& text, Config& cfg) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw validation_error("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        auto as_int = [&]() { return std::stoi(value); };
        if (key == "max_dim") cfg.max_dim = as_int();
        else if (key == "max_lattice_dim") cfg.max_lattice_dim = as_int();
        else if (key == "max_cf_dim") cfg.max_cf_dim = as_int();
        else if (key == "facet_hyperplane_cap") cfg.facet_hyperplane_cap = as_int();
        else if (key == "weight_degree_cap") cfg.weight_degree_cap = as_int();
        else if (key == "monomial_degree_cap") cfg.monomial_degree_cap = as_int();
        else if (key == "max_bodies") cfg.max_bodies = as_int();
        else if (key == "seed") cfg.seed = std::stoull(value, nullptr, 0);
        else if (key == "testset_version") cfg.testset_version = value;
        else if (key == "verify_fits") cfg.verify_fits = (value == "true" || value == "1");
        else throw validation_error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace valcalc

#endif
