#include "pencil_tns/io.hpp"

#include <fstream>
#include <sstream>

namespace ptns {

namespace {

const Json& field_of(const Json& j, const char* name, const std::string& where) {
    if (!j.is_object() || !j.contains(name)) throw InputError(where + ": missing field '" + name + "'");
    return j.at(name);
}

std::size_t size_of(const Json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw InputError("field '" + field + "': expected a non-negative integer");
    return j.get<std::size_t>();
}

Json index_json(const Index& idx) { return Json(idx); }

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t byte = std::min<std::size_t>(e.byte, text.size());
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < byte; ++i) {
            if (text[i] == '\n') ++line, column = 1;
            else ++column;
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

Json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw InputError("field '" + field + "': expected a rational string \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const InputError&) {
        throw InputError("field '" + field + "': cannot parse '" + j.get<std::string>() + "' as a rational");
    }
}

Json to_json(const BinaryForm& f) {
    Json c = Json::array();
    for (const auto& x : f.coeffs()) c.push_back(to_json(x));
    return Json{{"degree", f.degree()}, {"coeffs", c}};
}

BinaryForm binary_form_from_json(const Json& j) {
    std::size_t d = size_of(field_of(j, "degree", "binary form"), "degree");
    const Json& c = field_of(j, "coeffs", "binary form");
    if (!c.is_array() || c.size() != d + 1) throw InputError("field 'coeffs': expected degree + 1 entries");
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) coeffs.push_back(rational_from_json(c[i], "coeffs[" + std::to_string(i) + "]"));
    return BinaryForm(static_cast<int>(d), std::move(coeffs));
}

Json to_json(const Matrix<Rational>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<Rational> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& field) {
    if (!j.is_array() || j.size() != rows)
        throw InputError("field '" + field + "': expected " + std::to_string(rows) + " rows");
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::string where = field + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != cols)
            throw InputError("field '" + where + "': expected " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = rational_from_json(j[i][k], where + "[" + std::to_string(k) + "]");
    }
    return m;
}

Json to_json(const Tensor<Rational>& t) {
    Json entries = Json::array();
    for (const auto& x : t.entries()) entries.push_back(to_json(x));
    return Json{{"shape", t.shape()}, {"domain", "rational"}, {"entries", entries}};
}

Tensor<Rational> tensor_from_json(const Json& j) {
    const Json& sj = field_of(j, "shape", "tensor");
    if (!sj.is_array() || sj.empty()) throw InputError("field 'shape': expected a non-empty array");
    Shape shape;
    for (const auto& d : sj) shape.push_back(size_of(d, "shape"));
    if (j.contains("domain") && j.at("domain") != "rational") throw InputError("field 'domain': only \"rational\" is supported");
    Tensor<Rational> t(shape);
    if (j.contains("entries")) {
        const Json& e = j.at("entries");
        if (!e.is_array() || e.size() != t.size())
            throw InputError("field 'entries': expected " + std::to_string(t.size()) + " entries");
        for (std::size_t i = 0; i < e.size(); ++i)
            t.entries()[i] = rational_from_json(e[i], "entries[" + std::to_string(i) + "]");
        return t;
    }
    const Json& nz = field_of(j, "nz", "tensor");
    if (!nz.is_array()) throw InputError("field 'nz': expected an array");
    for (std::size_t k = 0; k < nz.size(); ++k) {
        std::string where = "nz[" + std::to_string(k) + "]";
        const Json& ij = field_of(nz[k], "idx", where);
        if (!ij.is_array() || ij.size() != shape.size()) throw InputError(where + ": index has the wrong length");
        Index idx;
        for (std::size_t s = 0; s < shape.size(); ++s) {
            idx.push_back(size_of(ij[s], where + ".idx"));
            if (idx.back() >= shape[s]) throw InputError(where + ": index out of range");
        }
        t.at(idx) += rational_from_json(field_of(nz[k], "val", where), where + ".val");
    }
    return t;
}

Json to_json(const Tensor<Laurent>& t) {
    Json nz = Json::array();
    for (std::size_t off = 0; off < t.size(); ++off)
        if (!t.entries()[off].is_zero())
            nz.push_back(Json{{"idx", index_json(t.unravel(off))}, {"val", t.entries()[off].str()}});
    return Json{{"shape", t.shape()}, {"nz", nz}};
}

Json to_json(const MatrixPencil& p) {
    return Json{{"n1", p.rows()}, {"n2", p.cols()}, {"A", to_json(p.A)}, {"B", to_json(p.B)}};
}

MatrixPencil pencil_from_json(const Json& j) {
    if (j.is_object() && j.contains("shape")) {
        auto t = tensor_from_json(j);
        if (t.order() != 3 || t.dim(0) != 2) throw InputError("field 'shape': a pencil tensor has shape (2, n1, n2)");
        return MatrixPencil::from_tensor(t);
    }
    std::size_t n1 = size_of(field_of(j, "n1", "pencil"), "n1"), n2 = size_of(field_of(j, "n2", "pencil"), "n2");
    return {matrix_from_json(field_of(j, "A", "pencil"), n1, n2, "A"),
            matrix_from_json(field_of(j, "B", "pencil"), n1, n2, "B")};
}

Json to_json(const Network& net) {
    Json vertices = Json::array(), edges = Json::array();
    for (auto n : net.dims()) vertices.push_back(Json{{"n", n}});
    for (const auto& e : net.edges()) edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"m", e.m}});
    return Json{{"vertices", vertices}, {"edges", edges}};
}

Network network_from_json(const Json& j) {
    const Json& vs = field_of(j, "vertices", "network");
    const Json& es = field_of(j, "edges", "network");
    if (!vs.is_array() || !es.is_array()) throw InputError("network: 'vertices' and 'edges' must be arrays");
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < vs.size(); ++i)
        dims.push_back(size_of(field_of(vs[i], "n", "vertices[" + std::to_string(i) + "]"), "n"));
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < es.size(); ++k) {
        std::string where = "edges[" + std::to_string(k) + "]";
        edges.push_back({size_of(field_of(es[k], "u", where), where + ".u"), size_of(field_of(es[k], "v", where), where + ".v"),
                         size_of(field_of(es[k], "m", where), where + ".m")});
    }
    try {
        return Network(std::move(dims), std::move(edges));
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(std::string("network: ") + e.what());
    }
}

Json to_json(const KroneckerForm& k) {
    Json blocks = Json::array();
    for (int p : k.left_indices) blocks.push_back(Json{{"kind", "L"}, {"size", p}});
    for (int p : k.right_indices) blocks.push_back(Json{{"kind", "R"}, {"size", p}});
    Json groups = Json::array();
    for (const auto& g : k.jordan) {
        Json entry{{"certificate", to_json(g.certificate)}, {"symbolic", g.symbolic}, {"eigenvalues", g.eigen_count}, {"sizes", g.sizes}};
        if (g.certificate.degree() == 1)
            entry["eigenvalue"] = "(" + g.certificate.coeff(0).str() + ":" + g.certificate.coeff(1).str() + ")";
        groups.push_back(entry);
        for (int s : g.sizes) {
            Json b{{"kind", "J"}, {"size", s}, {"certificate", to_json(g.certificate)}};
            if (g.certificate.degree() == 1) b["eigenvalue"] = entry["eigenvalue"];
            blocks.push_back(b);
        }
    }
    return Json{{"n1", k.rows},
                {"n2", k.cols},
                {"normal_rank", k.normal_rank},
                {"left_indices", k.left_indices},
                {"right_indices", k.right_indices},
                {"jordan", groups},
                {"blocks", blocks}};
}

Json to_json(const TriangleConfig& c) {
    return Json{{"m01", c.m01}, {"m02", c.m02}, {"m12", c.m12}, {"k1", c.k1}, {"k2", c.k2}, {"n1", c.n1()}, {"n2", c.n2()}};
}

Json to_json(const DefectReport& r) {
    return Json{{"dim", r.dim},
                {"expdim", r.expected},
                {"parameters", r.parameters},
                {"ambient", r.ambient},
                {"defect", r.defect},
                {"fiber_defect", r.fiber_defect}};
}

Json to_json(const std::vector<int>& partition) { return Json(partition); }

Json to_json(const ProfileVerdict& v) {
    Json attempts = Json::array();
    for (const auto& a : v.attempts) attempts.push_back(Json{{"profile", a.profile}, {"coarsens", a.coarsens}});
    return Json{{"member", v.member},
                {"size", v.size},
                {"lambda", v.lambda},
                {"attempts", attempts},
                {"degenerate_draws", v.degenerate_draws}};
}

Json to_json(const RankDropResult& r) {
    if (r.infinite) return Json{{"infinite", true}};
    Json factors = Json::array();
    for (const auto& f : r.factors) factors.push_back(Json{{"form", to_json(f.form)}, {"multiplicity", f.multiplicity}});
    return Json{{"infinite", false}, {"count", r.count}, {"divisor", to_json(r.divisor)}, {"profile", r.profile}, {"factors", factors}};
}

Json to_json(const RankDropPoint& p) {
    return Json{{"certificate", to_json(p.certificate)},
                {"eigenvalues", p.eigen_count},
                {"drop", p.drop},
                {"jordan_blocks", p.jordan_blocks},
                {"verified", p.verified}};
}

Json to_json(const CubicTestResult& r) {
    Json cubics = Json::array();
    for (const auto& c : r.cubics) {
        Json coeffs = Json::array();
        for (const auto& x : c.coefficients()) coeffs.push_back(to_json(x));
        cubics.push_back(coeffs);
    }
    return Json{{"pass", r.pass}, {"ranks", r.ranks}, {"cubics", cubics}};
}

Json to_json(const BlockAnnihilatorReport& r) {
    return Json{{"ann_sum", r.total}, {"ann_first", r.first}, {"ann_second", r.second}, {"m1", r.m1}, {"m2", r.m2},
                {"contained", r.contained}, {"equal", r.equal}};
}

Json to_json(const EpsilonCurve& c) {
    Json maps = Json::array();
    for (const auto& m : c.maps) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
            rows.push_back(row);
        }
        maps.push_back(rows);
    }
    return Json{{"lambda_eps", c.lambda ? Json(c.lambda->str()) : Json(nullptr)},
                {"maps", maps},
                {"scale", c.scale.str()},
                {"source", to_json(c.source)},
                {"target", to_json(c.target)}};
}

Json to_json(const DegenerationTranscript& t) {
    Json poles = Json::array(), mismatches = Json::array(), checks = Json::array();
    for (const auto& p : t.poles) poles.push_back(Json{{"idx", index_json(p.entry)}, {"order", p.order}});
    for (const auto& m : t.mismatches) mismatches.push_back(index_json(m));
    for (const auto& [what, ok] : t.checks) checks.push_back(Json{{"step", what}, {"ok", ok}});
    Json out{{"case", t.name}, {"verified", t.verified}, {"leading_order", t.leading_order}, {"image", to_json(t.image)},
             {"poles", poles}, {"mismatches", mismatches}, {"checks", checks}};
    if (t.limit.size() > 0) out["limit"] = to_json(t.limit);
    return out;
}

Json to_json(const RestrictionReport& r) {
    Json mismatches = Json::array();
    for (const auto& m : r.mismatches) mismatches.push_back(index_json(m));
    return Json{{"case", "restriction"},
                {"lambda", to_json(r.lambda)},
                {"mu_cubed", to_json(r.cube)},
                {"mu", r.mu ? Json(to_json(*r.mu)) : Json("mu in Q[mu]/(mu^3 - " + r.cube.str() + ")")},
                {"verified", r.verified},
                {"mismatches", mismatches}};
}

}  // namespace ptns
