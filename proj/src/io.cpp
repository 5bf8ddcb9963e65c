#include "framecheck/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace framecheck {

std::string format_sci(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", value);
    return buf;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json value;
    in >> value;
    return value;
}

void write_json_file(const std::string& path, const json& value) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << value.dump(2) << "\n";
}

Rational rational_from_json(const json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
    throw std::invalid_argument("expected a rational string, got: " + value.dump());
}

json rational_to_json(const Rational& value) { return format_rational(value); }

RMatrix rmatrix_from_json(const json& value) {
    if (!value.is_array() || value.empty())
        throw std::invalid_argument("matrix: expected a non-empty array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : value) {
        if (!row.is_array()) throw std::invalid_argument("matrix: rows must be arrays");
        std::vector<Rational> r;
        for (const auto& entry : row) r.push_back(rational_from_json(entry));
        rows.push_back(std::move(r));
    }
    return RMatrix(std::move(rows));
}

json rmatrix_to_json(const RMatrix& value) {
    json rows = json::array();
    for (int r = 0; r < value.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < value.cols(); ++c) row.push_back(rational_to_json(value.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Box box_from_json(const json& value) {
    if (!value.is_array()) throw std::invalid_argument("box: expected an array of [lo, hi]");
    Box out;
    for (const auto& side : value) {
        if (!side.is_array() || side.size() != 2)
            throw std::invalid_argument("box: each side is [lo, hi]");
        out.sides.emplace_back(rational_from_json(side[0]), rational_from_json(side[1]));
    }
    return out;
}

json box_to_json(const Box& value) {
    json sides = json::array();
    for (const auto& side : value.sides) {
        sides.push_back(json::array({rational_to_json(side.lo), rational_to_json(side.hi)}));
    }
    return sides;
}

namespace {

CRational crational_from_json(const json& value) {
    if (value.is_object()) {
        CRational out;
        if (value.contains("re")) out.re = rational_from_json(value.at("re"));
        if (value.contains("im")) out.im = rational_from_json(value.at("im"));
        return out;
    }
    return CRational(rational_from_json(value));
}

json crational_to_json(const CRational& value) {
    if (value.im == 0) return rational_to_json(value.re);
    return json{{"re", rational_to_json(value.re)}, {"im", rational_to_json(value.im)}};
}

Piecewise pieces_from_json(const json& value) {
    std::vector<Piece> pieces;
    for (const auto& item : value) {
        const auto& iv = item.at("interval");
        if (!iv.is_array() || iv.size() != 2)
            throw std::invalid_argument("piece: interval must be [lo, hi]");
        Interval interval(rational_from_json(iv[0]), rational_from_json(iv[1]));
        std::vector<CRational> coeffs;
        for (const auto& c : item.at("coeffs")) coeffs.push_back(crational_from_json(c));
        pieces.push_back({interval, Polynomial(std::move(coeffs))});
    }
    return Piecewise(std::move(pieces));
}

json pieces_to_json(const Piecewise& pw) {
    json out = json::array();
    for (const auto& piece : pw.pieces()) {
        json coeffs = json::array();
        for (const auto& c : piece.poly.coeffs()) coeffs.push_back(crational_to_json(c));
        out.push_back(json{{"interval", json::array({rational_to_json(piece.iv.lo),
                                                     rational_to_json(piece.iv.hi)})},
                           {"coeffs", std::move(coeffs)}});
    }
    return out;
}

Grid grid_from_json(const json& value) {
    std::vector<Rational> origin;
    for (const auto& o : value.at("origin")) origin.push_back(rational_from_json(o));
    Rational step = rational_from_json(value.at("step"));
    std::vector<long> shape;
    for (const auto& s : value.at("shape")) shape.push_back(s.get<long>());
    std::vector<std::complex<double>> values;
    for (const auto& v : value.at("values")) {
        if (v.is_array() && v.size() == 2) {
            values.emplace_back(v[0].get<double>(), v[1].get<double>());
        } else {
            values.emplace_back(v.get<double>(), 0.0);
        }
    }
    return Grid(std::move(origin), std::move(step), std::move(shape), std::move(values));
}

}  // namespace

Profile profile_from_json(const json& value) {
    if (value.contains("name")) {
        std::vector<Rational> params;
        if (value.contains("params")) {
            for (const auto& p : value.at("params")) params.push_back(rational_from_json(p));
        }
        auto profiles = build_named_profile(value.at("name").get<std::string>(), params);
        size_t select = value.value("select", 0);
        if (select >= profiles.size())
            throw std::invalid_argument("profile: select index out of range");
        return profiles[select];
    }
    if (value.contains("pieces")) return Profile::exact(pieces_from_json(value.at("pieces")));
    if (value.contains("samples")) return Profile::sampled(grid_from_json(value.at("samples")));
    throw std::invalid_argument("profile: expected name/pieces/samples, got: " + value.dump());
}

json profile_to_json(const Profile& value) {
    if (value.mode() == Mode::Exact) {
        json out{{"pieces", pieces_to_json(value.piecewise())}};
        if (!value.piecewise().amplitude_is_one())
            out["amplitude_sq"] = rational_to_json(value.piecewise().amplitude_sq());
        return out;
    }
    const Grid& grid = value.grid();
    json origin = json::array();
    for (const auto& o : grid.origin()) origin.push_back(rational_to_json(o));
    json values = json::array();
    for (const auto& v : grid.values()) {
        values.push_back(json::array({v.real(), v.imag()}));
    }
    return json{{"samples", json{{"origin", std::move(origin)},
                                 {"step", rational_to_json(grid.step())},
                                 {"shape", grid.shape()},
                                 {"values", std::move(values)}}}};
}

SpectralSet spectral_set_from_json(const json& value) {
    int dim = value.value("dim", 1);
    std::vector<Box> boxes;
    for (const auto& b : value.at("boxes")) boxes.push_back(box_from_json(b));
    return SpectralSet(dim, std::move(boxes));
}

json spectral_set_to_json(const SpectralSet& value) {
    json boxes = json::array();
    for (const auto& b : value.boxes) boxes.push_back(box_to_json(b));
    return json{{"dim", value.dim()}, {"boxes", std::move(boxes)}};
}

SystemDescription system_from_json(const json& value) {
    SystemDescription out;
    out.kind = value.value("kind", "translation");
    int dim = value.value("dim", 1);
    if (out.kind == "translation") {
        std::optional<RMatrix> shared;
        if (value.contains("lattice")) shared = rmatrix_from_json(value.at("lattice"));
        std::vector<std::string> labels;
        std::vector<RMatrix> mats;
        std::vector<Profile> gens;
        size_t index = 0;
        for (const auto& g : value.at("generators")) {
            RMatrix lattice = g.contains("lattice") ? rmatrix_from_json(g.at("lattice"))
                              : shared              ? *shared
                                                    : RMatrix::identity(dim);
            labels.push_back(g.value("label", std::to_string(index)));
            mats.push_back(std::move(lattice));
            gens.push_back(profile_from_json(g));
            ++index;
        }
        out.translation = TranslationSystem(LatticeFamily(std::move(labels), std::move(mats)),
                                            std::move(gens), value.value("role", ""));
        return out;
    }
    if (out.kind == "affine" || out.kind == "quasi-affine") {
        DilationMatrix a = DilationMatrix::make(rmatrix_from_json(value.at("dilation")));
        RMatrix x = value.contains("translation") ? rmatrix_from_json(value.at("translation"))
                                                  : RMatrix::identity(a.dim());
        std::vector<Profile> gens;
        for (const auto& g : value.at("generators")) gens.push_back(profile_from_json(g));
        auto convention = out.kind == "affine" ? AffineSystem::Convention::Affine
                                               : AffineSystem::Convention::QuasiAffine;
        out.affine = AffineSystem(std::move(a), std::move(x), std::move(gens), convention);
        return out;
    }
    throw std::invalid_argument("unknown system kind: " + out.kind);
}

json translation_system_to_json(const TranslationSystem& sys) {
    json gens = json::array();
    for (size_t p = 0; p < sys.size(); ++p) {
        json g = profile_to_json(sys.gens[p]);
        g["lattice"] = rmatrix_to_json(sys.fam.mats[p]);
        g["label"] = sys.fam.labels[p];
        gens.push_back(std::move(g));
    }
    json out{{"kind", "translation"}, {"dim", sys.dim()}, {"generators", std::move(gens)}};
    if (!sys.role.empty()) out["role"] = sys.role;
    return out;
}

json affine_system_to_json(const AffineSystem& sys) {
    json gens = json::array();
    for (const auto& g : sys.gens) gens.push_back(profile_to_json(g));
    return json{{"kind", sys.convention == AffineSystem::Convention::Affine ? "affine"
                                                                            : "quasi-affine"},
                {"dim", sys.dim()},
                {"dilation", rmatrix_to_json(sys.dilation.mat)},
                {"translation", rmatrix_to_json(sys.translation)},
                {"generators", std::move(gens)}};
}

json verdict_to_json(const Verdict& verdict) {
    json violations = json::array();
    for (const auto& v : verdict.violations) {
        json item{{"condition", v.condition}};
        if (!v.shift.empty()) {
            json shift = json::array();
            for (const auto& s : v.shift) shift.push_back(rational_to_json(s));
            item["shift"] = std::move(shift);
        }
        if (v.where) item["where"] = v.where->str();
        if (!v.witness_xi.empty()) {
            json xi = json::array();
            for (const auto& x : v.witness_xi) xi.push_back(rational_to_json(x));
            item["witness_xi"] = std::move(xi);
            item["value_re"] = format_sci(v.value.real());
            item["value_im"] = format_sci(v.value.imag());
        }
        if (!v.detail.empty()) item["detail"] = v.detail;
        violations.push_back(std::move(item));
    }
    json truncation = json::array();
    for (const auto& t : verdict.truncation) {
        json item{{"name", t.name}, {"count", t.count}};
        if (!t.box.sides.empty()) item["box"] = box_to_json(t.box);
        if (t.has_j_range()) {
            item["j_lo"] = t.j_lo;
            item["j_hi"] = t.j_hi;
        }
        truncation.push_back(std::move(item));
    }
    json out{{"holds", verdict.holds},
             {"characterized", verdict.characterized},
             {"violations", std::move(violations)},
             {"truncation", std::move(truncation)}};
    if (!verdict.note.empty()) out["note"] = verdict.note;
    return out;
}

void dump_symbol_csv(std::ostream& out, const Profile& symbol, const Rational& lo,
                     const Rational& hi, int count) {
    if (count < 2) throw std::invalid_argument("dump_symbol_csv: need at least two points");
    out << "xi,re,im\n";
    Rational width = hi - lo;
    for (int k = 0; k < count; ++k) {
        Rational xi = lo + width * rational(k, count - 1);
        std::complex<double> v = symbol.eval1(xi);
        out << format_rational(xi) << "," << format_sci(v.real()) << "," << format_sci(v.imag())
            << "\n";
    }
}

void dump_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& matrix, double threshold) {
    out << "row,col,re,im\n";
    for (int i = 0; i < matrix.rows(); ++i) {
        for (int j = 0; j < matrix.cols(); ++j) {
            if (std::abs(matrix(i, j)) <= threshold) continue;
            out << i << "," << j << "," << format_sci(matrix(i, j).real()) << ","
                << format_sci(matrix(i, j).imag()) << "\n";
        }
    }
}

namespace {

json named_generator(const std::string& name, std::vector<std::string> params, int select = -1) {
    json g{{"name", name}};
    if (!params.empty()) {
        json ps = json::array();
        for (auto& p : params) ps.push_back(std::move(p));
        g["params"] = std::move(ps);
    }
    if (select >= 0) g["select"] = select;
    return g;
}

json affine_description(const std::string& kind, const std::string& dilation,
                        std::vector<json> generators) {
    return json{{"kind", kind},
                {"dim", 1},
                {"dilation", json::array({json::array({dilation})})},
                {"translation", json::array({json::array({"1"})})},
                {"generators", std::move(generators)}};
}

}  // namespace

json builtin_description(const std::string& name) {
    if (name == "fj2")
        return affine_description("quasi-affine", "2",
                                  {named_generator("frazier_jawerth", {"2", "1/128"})});
    if (name == "fj3")
        return affine_description("quasi-affine", "3",
                                  {named_generator("frazier_jawerth", {"3", "1/27"})});
    if (name == "shannon-wavelet")
        return affine_description("affine", "2", {named_generator("shannon_wavelet", {})});
    if (name == "super2")
        return affine_description("affine", "2",
                                  {named_generator("symmetric_band", {"1/4", "1/2"}),
                                   named_generator("symmetric_band", {"1/8", "1/4"})});
    if (name == "shannon") {
        return json{{"kind", "translation"},
                    {"dim", 1},
                    {"lattice", json::array({json::array({"1"})})},
                    {"generators", json::array({named_generator("shannon", {})})}};
    }
    if (name == "bidual") {
        json psi{{"kind", "translation"},
                 {"dim", 1},
                 {"lattice", json::array({json::array({"1"})})},
                 {"generators", json::array({named_generator("bidual_pair", {}, 0)})}};
        json phi{{"kind", "translation"},
                 {"dim", 1},
                 {"lattice", json::array({json::array({"1"})})},
                 {"generators", json::array({named_generator("bidual_pair", {}, 1)})}};
        json set{{"dim", 1},
                 {"boxes", json::array({json::array({json::array({"-1/4", "1/4"})})})}};
        return json{{"psi", std::move(psi)}, {"phi", std::move(phi)}, {"set", std::move(set)}};
    }
    throw std::invalid_argument("unknown builtin: " + name);
}

}  // namespace framecheck
