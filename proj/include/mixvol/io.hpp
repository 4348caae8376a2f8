#pragma once

// JSON encodings.  Rationals travel as canonical strings "p" or "p/q";
// integer JSON numbers are also accepted on input.

#include <json.hpp>

#include <string>
#include <vector>

#include "mixvol/bodies.hpp"
#include "mixvol/errors.hpp"
#include "mixvol/inequalities.hpp"
#include "mixvol/matrix.hpp"
#include "mixvol/mixed.hpp"
#include "mixvol/multi_index.hpp"
#include "mixvol/rational.hpp"
#include "mixvol/search.hpp"

namespace mixvol::io {

using nlohmann::json;

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational string, got " + j.dump());
}

inline const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    return j.at(name);
}

inline const json& array_field(const json& j, const char* name) {
    const json& a = field(j, name);
    if (!a.is_array()) throw ParseError(std::string("field '") + name + "' must be an array");
    return a;
}

inline Point point_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
    Point p;
    for (const auto& e : j) p.push_back(rational_from_json(e));
    return p;
}

inline json to_json(const Point& p) {
    json a = json::array();
    for (const auto& c : p) a.push_back(to_json(c));
    return a;
}

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (const auto& e : m.row(i)) r.push_back(to_json(e));
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Row-major array of rows; all rows must have the same length.
inline Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    const std::size_t rows = j.size();
    std::vector<Rational> entries;
    std::size_t cols = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        const Point r = point_from_json(j[i]);
        if (i == 0) cols = r.size();
        else if (r.size() != cols) throw ParseError("matrix rows have different lengths");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(rows, cols, std::move(entries));
}

inline json to_json(const Body& b) {
    if (const auto* box = std::get_if<AxisBox>(&b)) {
        json iv = json::array();
        for (const auto& s : box->sides) iv.push_back({to_json(s.lo), to_json(s.hi)});
        return {{"type", "box"}, {"intervals", iv}};
    }
    if (const auto* z = std::get_if<Zonotope>(&b)) {
        json g = json::array();
        for (const auto& v : z->generators) g.push_back(to_json(v));
        return {{"type", "zonotope"}, {"dimension", z->dim}, {"generators", g}};
    }
    const auto& p = std::get<VPolytope>(b);
    json v = json::array();
    for (const auto& x : p.vertices) v.push_back(to_json(x));
    return {{"type", "vpolytope"}, {"vertices", v}};
}

inline Body body_from_json(const json& j) {
    const std::string type = field(j, "type").get<std::string>();
    if (type == "box") {
        std::vector<Interval> sides;
        for (const auto& iv : array_field(j, "intervals")) {
            if (!iv.is_array() || iv.size() != 2) throw ParseError("box interval must be [lo, hi]");
            sides.emplace_back(rational_from_json(iv[0]), rational_from_json(iv[1]));
        }
        return AxisBox(std::move(sides));
    }
    if (type == "zonotope") {
        std::vector<Point> gens;
        for (const auto& g : array_field(j, "generators")) gens.push_back(point_from_json(g));
        std::size_t dim = j.contains("dimension") ? j.at("dimension").get<std::size_t>() : 0;
        if (dim == 0) {
            if (gens.empty()) throw ParseError("zonotope without generators needs a 'dimension'");
            dim = gens.front().size();
        }
        return Zonotope(dim, std::move(gens));
    }
    if (type == "vpolytope") {
        std::vector<Point> verts;
        for (const auto& v : array_field(j, "vertices")) verts.push_back(point_from_json(v));
        if (verts.empty()) throw ParseError("vpolytope needs at least one vertex");
        const std::size_t dim = verts.front().size();
        return VPolytope(dim, std::move(verts));
    }
    throw ParseError("unknown body type '" + type + "'");
}

/// {"dimension": n, "bodies": [...]}
inline BodyTuple tuple_from_json(const json& j) {
    std::vector<Body> bodies;
    for (const auto& b : array_field(j, "bodies")) bodies.push_back(body_from_json(b));
    BodyTuple t(std::move(bodies));
    if (j.contains("dimension") && j.at("dimension").get<std::size_t>() != t.dim())
        throw DimensionError("'dimension' does not match the bodies' ambient dimension");
    return t;
}

inline json to_json(const BodyTuple& t) {
    json b = json::array();
    for (const auto& x : t.bodies()) b.push_back(to_json(x));
    return {{"dimension", t.dim()}, {"bodies", b}};
}

/// {"matrices": [matrix, ...]}
inline MatrixTuple matrices_from_json(const json& j) {
    std::vector<SymMatrix> ms;
    for (const auto& m : array_field(j, "matrices")) ms.emplace_back(matrix_from_json(m));
    return MatrixTuple(std::move(ms));
}

inline json to_json(const MultiIndex& i) { return i.entries; }

inline MultiIndex index_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("index must be an array of nonnegative integers");
    MultiIndex i;
    for (const auto& e : j) {
        if (!e.is_number_unsigned()) throw ParseError("index entries must be nonnegative integers");
        i.entries.push_back(e.get<unsigned>());
    }
    return i;
}

/// [{"index": [...], "value": "p/q"}, ...] in ascending lexicographic order.
inline json to_json(const VolumePolynomial& vp) {
    json a = json::array();
    for (const auto& [idx, v] : vp.coefficients()) a.push_back({{"index", to_json(idx)}, {"value", to_json(v)}});
    return a;
}

inline VolumePolynomial polynomial_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("polynomial must be a nonempty array of {index, value}");
    const MultiIndex first = index_from_json(field(j[0], "index"));
    VolumePolynomial vp(first.size(), first.total());
    for (const auto& e : j) vp.set(index_from_json(field(e, "index")), rational_from_json(field(e, "value")));
    return vp;
}

inline json to_json(const Certificate& c) {
    json support = json::array();
    for (const auto& s : c.support) support.push_back({{"index", to_json(s.point)}, {"weight", to_json(s.weight)}});
    return {{"center", to_json(c.center)},
            {"support", support},
            {"lhs", to_json(c.lhs)},
            {"rhs", to_json(c.rhs)},
            {"comparison", c.comparison}};
}

inline Certificate certificate_from_json(const json& j) {
    Certificate c;
    c.center = index_from_json(field(j, "center"));
    for (const auto& s : array_field(j, "support"))
        c.support.push_back({index_from_json(field(s, "index")), rational_from_json(field(s, "weight"))});
    c.lhs = rational_from_json(field(j, "lhs"));
    c.rhs = rational_from_json(field(j, "rhs"));
    c.comparison = field(j, "comparison").get<std::string>();
    return c;
}

inline json to_json(const Report& r) {
    json certs = json::array();
    for (const auto& c : r.certificates) certs.push_back(to_json(c));
    json values = json::object();
    for (const auto& [k, v] : r.values) values[k] = to_json(v);
    json out = {{"verdict", to_string(r.verdict)},
                {"checked_count", r.checked_count},
                {"certificates", certs},
                {"values", values}};
    if (!r.diagnostics.empty()) out["diagnostics"] = r.diagnostics;
    return out;
}

inline const char* to_string(SearchTarget t) {
    return t == SearchTarget::triple ? "triple-inequality" : "full-envelope";
}

inline SearchTarget target_from_string(const std::string& s) {
    if (s == "triple-inequality" || s == "triple") return SearchTarget::triple;
    if (s == "full-envelope" || s == "envelope") return SearchTarget::envelope;
    throw ParseError("unknown search target '" + s + "'");
}

inline const char* to_string(SearchMode m) {
    switch (m) {
        case SearchMode::exhaustive: return "exhaustive";
        case SearchMode::random: return "random";
        case SearchMode::hill_climb: return "hill-climb";
    }
    return "?";
}

inline SearchMode mode_from_string(const std::string& s) {
    if (s == "exhaustive" || s == "exhaustive-grid") return SearchMode::exhaustive;
    if (s == "random") return SearchMode::random;
    if (s == "hill-climb") return SearchMode::hill_climb;
    throw ParseError("unknown search mode '" + s + "'");
}

inline json to_json(const Finding& f) {
    return {{"side_matrix", to_json(f.side_matrix)},
            {"certificate", to_json(f.certificate)},
            {"violation_ratio", to_json(f.violation_ratio)},
            {"target", to_string(f.target)}};
}

inline Finding finding_from_json(const json& j) {
    Finding f;
    f.side_matrix = matrix_from_json(field(j, "side_matrix"));
    f.certificate = certificate_from_json(field(j, "certificate"));
    f.violation_ratio = rational_from_json(field(j, "violation_ratio"));
    f.target = j.contains("target") ? target_from_string(j.at("target").get<std::string>()) : SearchTarget::triple;
    return f;
}

inline json summary_to_json(const SearchResult& r) {
    json best = nullptr;
    if (!r.findings.empty()) best = to_json(r.findings.front().violation_ratio);
    return {{"summary", {{"evaluations", r.evaluations}, {"findings", r.findings.size()}, {"best_ratio", best}}}};
}

/// Search results as JSON lines: one Finding per line, then the summary.
inline std::string search_to_jsonl(const SearchResult& r) {
    std::string out;
    for (const auto& f : r.findings) out += to_json(f).dump() + "\n";
    out += summary_to_json(r).dump() + "\n";
    return out;
}

inline SearchSpace space_from_json(const json& j) {
    SearchSpace s;
    if (j.contains("n")) s.n = j.at("n").get<std::size_t>();
    if (j.contains("k")) s.k = j.at("k").get<std::size_t>();
    for (const auto& v : array_field(j, "side_grid")) s.side_grid.push_back(rational_from_json(v));
    return s;
}

}  // namespace mixvol::io
