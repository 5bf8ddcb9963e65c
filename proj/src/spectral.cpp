#include "framecheck/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace framecheck {

Profile Profile::exact(Piecewise pw) {
    Profile p;
    p.dim_ = 1;
    p.mode_ = Mode::Exact;
    p.pw_ = std::move(pw);
    return p;
}

Profile Profile::sampled(Grid grid) {
    Profile p;
    p.dim_ = grid.dim();
    p.mode_ = Mode::Sampled;
    p.grid_ = std::move(grid);
    return p;
}

const Piecewise& Profile::piecewise() const {
    if (mode_ != Mode::Exact) throw std::logic_error("profile is not in exact mode");
    return pw_;
}

const Grid& Profile::grid() const {
    if (mode_ != Mode::Sampled) throw std::logic_error("profile is not in sampled mode");
    return grid_;
}

std::complex<double> Profile::eval(const std::vector<Rational>& xi) const {
    if (static_cast<int>(xi.size()) != dim_)
        throw std::invalid_argument("evaluate: dimension mismatch");
    if (mode_ == Mode::Exact) return pw_.eval(xi[0]);
    return grid_.eval(xi);
}

bool Profile::is_zero(double tol_zero) const {
    if (mode_ == Mode::Exact) return pw_.is_zero();
    return grid_.is_zero(tol_zero);
}

bool Profile::in_class_d(double tol_zero) const {
    if (mode_ == Mode::Exact) {
        auto dist = pw_.support_distance_from_zero();
        return dist.has_value() && *dist > 0;
    }
    Box supp = grid_.support_box(tol_zero);
    if (supp.empty()) return false;
    // Bounded away from 0: some axis of the closed support box avoids the origin.
    for (int i = 0; i < dim_; ++i) {
        if (supp.sides[i].lo > 0 || supp.sides[i].hi < 0) return true;
    }
    return false;
}

double Profile::sup_bound() const {
    if (mode_ == Mode::Exact) return std::sqrt(to_double(pw_.sup_bound_sq()));
    return grid_.max_abs();
}

Box Profile::support_box(double tol_zero) const {
    if (mode_ == Mode::Exact) {
        Interval hull = pw_.support_hull();
        if (hull.empty()) return {};
        return Box::of(hull);
    }
    return grid_.support_box(tol_zero);
}

Profile Profile::cross_product(const Profile& a, const Profile& b,
                               const std::vector<Rational>& shift, const Rational& weight) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("cross_product: dimension mismatch");
    if (a.mode_ != b.mode_) throw std::invalid_argument("cross_product: mixed modes");
    if (static_cast<int>(shift.size()) != a.dim_)
        throw std::invalid_argument("cross_product: shift dimension");
    if (a.mode_ == Mode::Exact) {
        Piecewise out = a.pw_.conjugate() * b.pw_.shift_arg(shift[0]);
        return Profile::exact(out.scaled(CRational(weight)));
    }
    Grid out = Grid::cross_product(a.grid_, b.grid_, shift).scaled(to_double(weight));
    return Profile::sampled(std::move(out));
}

Profile Profile::sum(const Profile& a, const Profile& b) {
    if (a.mode_ == Mode::Exact && a.pw_.is_zero()) return b;
    if (b.mode_ == Mode::Exact && b.pw_.is_zero()) return a;
    if (a.dim_ != b.dim_) throw std::invalid_argument("sum: dimension mismatch");
    if (a.mode_ != b.mode_) throw std::invalid_argument("sum: mixed modes");
    if (a.mode_ == Mode::Exact) return Profile::exact(a.pw_ + b.pw_);
    return Profile::sampled(Grid::sum(a.grid_, b.grid_));
}

Profile Profile::scaled(const Rational& factor) const {
    if (mode_ == Mode::Exact) return Profile::exact(pw_.scaled(CRational(factor)));
    return Profile::sampled(grid_.scaled(to_double(factor)));
}

std::optional<Profile::Witness> Profile::max_abs_witness(double tol_zero) const {
    if (mode_ == Mode::Exact) {
        auto w = pw_.max_abs_witness();
        if (!w) return std::nullopt;
        return Witness{{w->xi}, w->value, w->piece.str()};
    }
    auto w = grid_.max_abs_witness(tol_zero);
    if (!w) return std::nullopt;
    return Witness{w->xi, w->value, "grid"};
}

// ---- built-in constructions ------------------------------------------------

Profile make_characteristic(const Rational& lo, const Rational& hi, const CRational& value) {
    if (lo >= hi) throw std::invalid_argument("characteristic: empty interval");
    return Profile::exact(Piecewise::constant_on(Interval(lo, hi), value));
}

Profile make_shannon_band() {
    return make_characteristic(rational(-1, 2), rational(1, 2));
}

Profile make_shannon_wavelet() {
    Piecewise pos = Piecewise::constant_on(Interval(rational(1, 4), rational(1, 2)),
                                           CRational(Rational(1)));
    Piecewise neg = Piecewise::constant_on(Interval(rational(-1, 2), rational(-1, 4)),
                                           CRational(Rational(1)));
    return Profile::exact(pos + neg);
}

Profile make_frazier_jawerth(const Rational& a, const Rational& c) {
    if (a <= 1) throw std::invalid_argument("frazier_jawerth: dilation factor must exceed 1");
    if (c <= 0) throw std::invalid_argument("frazier_jawerth: inner radius must be positive");
    // Positive side: ramp up on [c, a c), ramp down on [a c, a^2 c).
    Rational ac = a * c;
    Rational a2c = a * ac;
    Rational up_den = c * (a - 1);
    Rational down_den = ac * (a - 1);
    Polynomial up = Polynomial::linear(CRational(Rational(-c / up_den)),
                                       CRational(Rational(1 / up_den)));
    Polynomial down = Polynomial::linear(CRational(Rational(a2c / down_den)),
                                         CRational(Rational(-1 / down_den)));
    Piecewise positive({Piece{Interval(c, ac), up}, Piece{Interval(ac, a2c), down}});
    Piecewise mirrored = positive.scale_arg(rational(-1));
    return Profile::exact(positive + mirrored);
}

Profile make_plateau(const Rational& inner, const Rational& outer) {
    if (!(0 < inner && inner < outer)) throw std::invalid_argument("plateau: need 0 < inner < outer");
    Rational den = outer - inner;
    // Right ramp from 1 at `inner` down to 0 at `outer`.
    Polynomial ramp = Polynomial::linear(CRational(Rational(outer / den)),
                                         CRational(Rational(-1 / den)));
    Piecewise right({Piece{Interval(inner, outer), ramp}});
    Piecewise flat = Piecewise::constant_on(Interval(-inner, inner), CRational(Rational(1)));
    return Profile::exact(right + right.scale_arg(rational(-1)) + flat);
}

std::pair<Profile, Profile> make_bidual_pair() {
    Profile psi = make_plateau(rational(1, 4), rational(1, 2));
    Piecewise phi = psi.piecewise() + psi.piecewise().shift_arg(rational(-1));
    return {psi, Profile::exact(std::move(phi))};
}

std::vector<Profile> build_named_profile(const std::string& name,
                                         const std::vector<Rational>& params) {
    auto need = [&](size_t n) {
        if (params.size() != n)
            throw std::invalid_argument("profile '" + name + "' expects " + std::to_string(n) +
                                        " parameter(s)");
    };
    if (name == "characteristic") {
        if (params.size() == 2) return {make_characteristic(params[0], params[1])};
        need(3);
        return {make_characteristic(params[0], params[1], CRational(params[2]))};
    }
    if (name == "shannon") {
        need(0);
        return {make_shannon_band()};
    }
    if (name == "shannon_wavelet") {
        need(0);
        return {make_shannon_wavelet()};
    }
    if (name == "symmetric_band") {
        need(2);
        if (!(0 < params[0] && params[0] < params[1]))
            throw std::invalid_argument("symmetric_band: need 0 < lo < hi");
        Piecewise pos = Piecewise::constant_on(Interval(params[0], params[1]),
                                               CRational(Rational(1)));
        return {Profile::exact(pos + pos.scale_arg(rational(-1)))};
    }
    if (name == "frazier_jawerth") {
        need(2);
        return {make_frazier_jawerth(params[0], params[1])};
    }
    if (name == "plateau") {
        if (params.empty()) return {make_plateau(rational(1, 4), rational(1, 2))};
        need(2);
        return {make_plateau(params[0], params[1])};
    }
    if (name == "bidual_pair") {
        need(0);
        auto [psi, phi] = make_bidual_pair();
        return {psi, phi};
    }
    throw std::invalid_argument("unknown profile name: " + name);
}

// ---- support arithmetic -----------------------------------------------------

std::vector<int> dilate_index_range(const Profile& gen, const Rational& scale,
                                    const Interval& window) {
    if (gen.dim() != 1 || !gen.is_exact())
        throw std::invalid_argument("dilate_index_range: needs a 1-D exact profile");
    if (rational_abs(scale) <= 1)
        throw std::invalid_argument("dilate_index_range: dilation must be expansive");
    const Piecewise& pw = gen.piecewise();
    auto dist = pw.support_distance_from_zero();
    if (!dist || *dist == 0)
        throw std::invalid_argument("dilate_index_range: generator is not in class D");
    if (window.empty()) return {};
    Rational w_lo = rational_abs(window.lo);
    Rational w_hi = rational_abs(window.hi);
    Rational w_min(0);
    if (window.lo > 0) {
        w_min = window.lo;
    } else if (window.hi < 0) {
        w_min = -window.hi;
    } else {
        throw std::invalid_argument("dilate_index_range: window closure touches 0");
    }
    Rational w_max = std::max(w_lo, w_hi);
    Interval hull = pw.support_hull();
    Rational s_max = std::max(rational_abs(hull.lo), rational_abs(hull.hi));
    Rational s_min = *dist;
    Rational mag = rational_abs(scale);

    std::vector<int> found;
    auto intersects = [&](const Rational& factor) {
        Interval img = window.scaled(factor);
        for (const auto& piece : pw.pieces()) {
            if (!Interval::intersect(img, piece.iv).empty()) return true;
        }
        return false;
    };
    // Upward: stop once |scale|^j * w_min is past the support radius.
    Rational factor(1);
    Rational magnitude(1);
    for (int j = 0; magnitude * w_min <= s_max; ++j) {
        if (intersects(factor)) found.push_back(j);
        factor *= scale;
        magnitude *= mag;
    }
    // Downward: stop once |scale|^j * w_max is below the support inner radius.
    factor = Rational(1) / scale;
    magnitude = Rational(1) / mag;
    for (int j = -1; magnitude * w_max >= s_min; --j) {
        if (intersects(factor)) found.push_back(j);
        factor /= scale;
        magnitude /= mag;
    }
    std::sort(found.begin(), found.end());
    return found;
}

Box support_difference(const Profile& a, const Profile& b, double tol_zero) {
    if (a.dim() != b.dim()) throw std::invalid_argument("support_difference: dimension mismatch");
    Box sa = a.support_box(tol_zero);
    Box sb = b.support_box(tol_zero);
    if (sa.empty() || sb.empty()) return {};
    return box_minkowski_diff(sa, sb);
}

}  // namespace framecheck
