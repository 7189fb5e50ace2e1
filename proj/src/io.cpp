#include "posetcode/io.hpp"

#include <fstream>
#include <sstream>

#include "posetcode/error.hpp"

namespace posetcode::io {

namespace {

template <class F>
auto guarded(const char* what, F&& body) {
    try {
        return body();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
    }
}

json poly_to_json(const poly::Polynomial& f) {
    auto out = json::array();
    for (auto c : f.coeffs()) out.push_back(c.v);
    return out;
}

poly::Polynomial poly_from_json(const gf::FieldPtr& field, const json& j) {
    std::vector<gf::Elem> coeffs;
    for (const auto& c : j) coeffs.push_back(field->element(c.get<std::uint64_t>()));
    return {field, std::move(coeffs)};
}

json place_to_json(const ag::Place& P) {
    return P.infinite ? json("inf") : json(P.alpha.v);
}

ag::Place place_from_json(const gf::Field& F, const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "inf") throw Error(ErrorKind::ParseError, "unknown place " + j.dump());
        return ag::Place::infinity();
    }
    return ag::Place::finite(F.element(j.get<std::uint64_t>()));
}

}  // namespace

json field_to_json(const gf::Field& F) {
    return {{"p", F.p()}, {"m", F.m()}, {"modulus", F.modulus()}};
}

gf::FieldPtr field_from_json(const json& j) {
    return guarded("field", [&] {
        const auto p = j.at("p").get<std::uint32_t>();
        const auto m = j.at("m").get<std::uint32_t>();
        if (m == 1 || !j.contains("modulus")) return gf::Field::make(p, m);
        auto modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
        if (modulus.size() != m + 1) throw Error(ErrorKind::InvalidModulus, "modulus degree differs from m");
        return gf::Field::make(p, std::move(modulus));
    });
}

json matrix_to_json(const poset::MatrixWord& A) {
    auto rows = json::array();
    for (unsigned i = 0; i < A.s; ++i) {
        auto row = json::array();
        for (unsigned j = 0; j < A.r; ++j) row.push_back(A.at(i, j).v);
        rows.push_back(row);
    }
    return rows;
}

poset::MatrixWord matrix_from_json(const json& j) {
    return guarded("matrix", [&] {
        const auto s = static_cast<unsigned>(j.size());
        const auto r = s ? static_cast<unsigned>(j.at(0).size()) : 0u;
        poset::MatrixWord A(s, r);
        for (unsigned i = 0; i < s; ++i) {
            if (j.at(i).size() != r) throw Error(ErrorKind::ParseError, "ragged matrix");
            for (unsigned c = 0; c < r; ++c) A.at(i, c) = gf::Elem{j.at(i).at(c).get<std::uint32_t>()};
        }
        return A;
    });
}

std::string matrix_text(const poset::MatrixWord& A) {
    std::ostringstream os;
    for (unsigned i = 0; i < A.s; ++i) {
        if (i) os << ';';
        for (unsigned j = 0; j < A.r; ++j) os << (j ? " " : "") << A.at(i, j).v;
    }
    return os.str();
}

json metric_to_json(const codes::Metric& m) {
    json j{{"type", m.b_row ? "bottleneck" : "nrt"}, {"s", m.s}, {"r", m.r}, {"length", m.length()},
           {"name", m.describe()}};
    j["b_row"] = m.b_row ? json(*m.b_row) : json(nullptr);
    return j;
}

json rs_code_to_json(const codes::RSCode& code) {
    const auto& sp = code.spec;
    json j;
    j["kind"] = "rs";
    j["field"] = field_to_json(*sp.field);
    auto pts = json::array();
    for (auto a : sp.points) pts.push_back(a.v);
    j["points"] = pts;
    j["s"] = sp.s;
    j["t"] = sp.t;
    j["b_row"] = sp.b_row ? json(*sp.b_row) : json(nullptr);
    j["metric"] = metric_to_json(code.code.metric);
    j["dim"] = code.code.dim();
    auto basis = json::array();
    for (const auto& f : code.basis) basis.push_back(poly_to_json(f));
    j["basis"] = basis;
    auto gen = json::array();
    for (const auto& g : code.code.generator) gen.push_back(matrix_to_json(g));
    j["generator"] = gen;
    return j;
}

codes::RSCode rs_code_from_json(const json& j) {
    return guarded("code.json", [&] {
        if (j.value("kind", std::string("rs")) != "rs") throw Error(ErrorKind::ParseError, "not an RS code file");
        codes::RSCodeSpec sp;
        sp.field = field_from_json(j.at("field"));
        for (const auto& a : j.at("points")) sp.points.push_back(sp.field->element(a.get<std::uint64_t>()));
        sp.s = j.at("s").get<unsigned>();
        sp.t = j.at("t").get<unsigned>();
        if (j.contains("b_row") && !j.at("b_row").is_null()) sp.b_row = j.at("b_row").get<unsigned>();
        sp.validate();
        codes::RSCode code{sp, {}, {sp.field, codes::Metric{sp.s, sp.r(), sp.b_row}, {}}};
        if (j.contains("basis")) {
            for (const auto& f : j.at("basis")) code.basis.push_back(poly_from_json(sp.field, f));
            for (const auto& f : code.basis) {
                if (f.degree() >= static_cast<int>(sp.t))
                    throw Error(ErrorKind::ParseError, "basis polynomial exceeds degree t-1");
                auto A = codes::evaluation_matrix(f, sp.points, sp.s);
                if (sp.b_row && !A.row_constant(*sp.b_row - 1))
                    throw Error(ErrorKind::NotConstantRow, "basis polynomial violates the row constraint");
                code.code.generator.push_back(std::move(A));
            }
        } else {
            code = codes::build_code(sp);
        }
        return code;
    });
}

json ag_code_to_json(const ag::AGCode& code) {
    const auto& sp = code.spec;
    json j;
    j["kind"] = "ag";
    j["field"] = field_to_json(*sp.field);
    auto places = json::array();
    for (const auto& P : sp.places) places.push_back(place_to_json(P));
    j["places"] = places;
    auto divisor = json::array();
    for (const auto& [P, n] : sp.G) divisor.push_back({{"place", place_to_json(P)}, {"coeff", n}});
    j["divisor"] = divisor;
    j["divisor_text"] = ag::divisor_to_text(sp.G);
    j["degree"] = ag::degree(sp.G);
    j["s"] = sp.s;
    j["constrained"] = sp.constrained;
    j["metric"] = metric_to_json(code.code.metric);
    j["dim"] = code.code.dim();
    auto basis = json::array();
    for (const auto& f : code.basis) basis.push_back({{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}});
    j["basis"] = basis;
    auto gen = json::array();
    for (const auto& g : code.code.generator) gen.push_back(matrix_to_json(g));
    j["generator"] = gen;
    return j;
}

ag::AGCode ag_code_from_json(const json& j) {
    return guarded("ag.json", [&] {
        if (j.value("kind", std::string()) != "ag") throw Error(ErrorKind::ParseError, "not an AG code file");
        ag::AGCodeSpec sp;
        sp.field = field_from_json(j.at("field"));
        for (const auto& P : j.at("places")) sp.places.push_back(place_from_json(*sp.field, P));
        for (const auto& term : j.at("divisor")) {
            const auto P = place_from_json(*sp.field, term.at("place"));
            const int n = term.at("coeff").get<int>();
            if (n != 0) sp.G[P] += n;
        }
        sp.s = j.at("s").get<unsigned>();
        sp.constrained = j.value("constrained", true);
        sp.validate();
        if (!j.contains("basis")) return ag::build_ag_code(sp);
        ag::AGCode code{sp, {}, {}};
        code.code.field = sp.field;
        code.code.metric = codes::Metric{sp.s, sp.r(), sp.constrained ? std::optional<unsigned>(1) : std::nullopt};
        for (const auto& f : j.at("basis"))
            code.basis.emplace_back(poly_from_json(sp.field, f.at("num")), poly_from_json(sp.field, f.at("den")));
        for (const auto& f : code.basis) {
            auto A = ag::cf_matrix(f, sp);
            if (sp.constrained && !A.row_constant(0))
                throw Error(ErrorKind::NotConstantRow, "basis function violates the L0 condition");
            code.code.generator.push_back(std::move(A));
        }
        return code;
    });
}

json enumerator_to_json(const codes::WeightEnumerator& e) {
    auto counts = json::object();
    for (std::size_t w = 0; w < e.counts.size(); ++w)
        if (e.counts[w]) counts[std::to_string(w)] = e.counts[w];
    return {{"counts", counts}, {"total", e.total()}, {"polynomial", e.polynomial()}};
}

std::string enumerator_to_csv(const codes::WeightEnumerator& e) {
    std::ostringstream os;
    os << "weight,count\n";
    for (std::size_t w = 0; w < e.counts.size(); ++w)
        if (e.counts[w]) os << w << ',' << e.counts[w] << '\n';
    return os.str();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

}  // namespace posetcode::io
