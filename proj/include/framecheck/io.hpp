#pragma once

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

#include "framecheck/oracle.hpp"
#include "framecheck/subspace.hpp"

namespace framecheck {

using nlohmann::json;

// Rationals travel as strings "p/q" so files stay lossless; measured floats
// are serialized with fixed scientific precision so identical runs produce
// byte-identical reports.
std::string format_sci(double value);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& value);

Rational rational_from_json(const json& value);
json rational_to_json(const Rational& value);

RMatrix rmatrix_from_json(const json& value);
json rmatrix_to_json(const RMatrix& value);

Box box_from_json(const json& value);
json box_to_json(const Box& value);

Profile profile_from_json(const json& value);
json profile_to_json(const Profile& value);

SpectralSet spectral_set_from_json(const json& value);
json spectral_set_to_json(const SpectralSet& value);

// {"kind": "translation"|"affine"|"quasi-affine", ...}
struct SystemDescription {
    std::string kind;
    std::optional<TranslationSystem> translation;
    std::optional<AffineSystem> affine;

    bool is_translation() const { return translation.has_value(); }
};
SystemDescription system_from_json(const json& value);
json translation_system_to_json(const TranslationSystem& sys);
json affine_system_to_json(const AffineSystem& sys);

json verdict_to_json(const Verdict& verdict);

// (xi, re, im) rows on a uniform rational grid.
void dump_symbol_csv(std::ostream& out, const Profile& symbol, const Rational& lo,
                     const Rational& hi, int count);
// (row, col, re, im) rows for entries over the threshold.
void dump_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& matrix, double threshold);

// Built-in example systems by CLI name (fj2, fj3, bidual, shannon,
// shannon-wavelet, super2); "bidual" yields three files worth of content
// returned as one object with psi/phi/set members.
json builtin_description(const std::string& name);

}  // namespace framecheck
