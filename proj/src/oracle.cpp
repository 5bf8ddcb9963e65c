#include "framecheck/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace framecheck {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

long to_long(const Rational& value, const char* what) {
    if (!is_integer(value)) throw std::invalid_argument(std::string(what) + ": not an integer");
    if (!value.get_num().fits_slong_p())
        throw std::invalid_argument(std::string(what) + ": out of range");
    return value.get_num().get_si();
}

Rational pow_rational(const Rational& base, int exp) {
    Rational out(1);
    for (int i = 0; i < std::abs(exp); ++i) out *= base;
    if (exp < 0) out = 1 / out;
    return out;
}

}  // namespace

FiniteModel::FiniteModel(int points, Rational band) : n(points), bandwidth(std::move(band)) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("finite model: n must be even and >= 2");
    if (bandwidth <= 0) throw std::invalid_argument("finite model: bandwidth must be positive");
}

int FiniteModel::bin_of(const Rational& freq) const {
    Rational m = freq * Rational(n) / bandwidth;
    if (!is_integer(m)) return std::numeric_limits<int>::min();
    long bin = m.get_num().get_si();
    if (bin < -n / 2 || bin >= n / 2) return std::numeric_limits<int>::min();
    return static_cast<int>(bin);
}

long FiniteSystem::total_vectors() const {
    long total = 0;
    for (const auto& gen : gens) total += gen.period;
    return total;
}

Eigen::VectorXcd sample_model(const Profile& gen, const FiniteModel& model) {
    if (gen.dim() != 1) throw std::invalid_argument("sample_model: 1-D profiles only");
    Rational half = model.bandwidth / 2;
    Box supp = gen.support_box();
    if (!supp.empty()) {
        if (supp.sides[0].lo < -half || supp.sides[0].hi > half)
            throw std::invalid_argument("sample_model: support exceeds the model band "
                                        "(aliasing)");
    }
    Eigen::VectorXcd out(model.n);
    for (int i = 0; i < model.n; ++i) {
        int bin = i - model.n / 2;
        out[i] = gen.eval1(model.xi(bin));
    }
    return out;
}

FiniteSystem make_finite_system(const TranslationSystem& sys, const FiniteModel& model) {
    if (sys.dim() != 1) throw std::invalid_argument("make_finite_system: 1-D systems only");
    FiniteSystem out;
    for (size_t p = 0; p < sys.size(); ++p) {
        Rational step = rational_abs(sys.fam.mats[p].at(0, 0)) * model.bandwidth;
        Rational period = Rational(model.n) / step;
        long pval = to_long(period, "make_finite_system: translate count N/(c*B)");
        if (pval < 1)
            throw std::invalid_argument("make_finite_system: lattice coarser than the model "
                                        "period");
        out.gens.push_back({pval, sample_model(sys.gens[p], model)});
    }
    return out;
}

namespace {

struct LevelVectors {
    long period = 1;
    std::vector<Eigen::VectorXcd> per_gen;
};

// Live scales of an affine (or quasi-affine) system on the model, with exact
// alias guards: a dilated support must lie inside the band or miss it.
std::map<int, LevelVectors> affine_level_vectors(const AffineSystem& sys,
                                                 const FiniteModel& model, bool quasi) {
    if (sys.dim() != 1)
        throw std::invalid_argument("affine finite system: 1-D systems only");
    if (!sys.translation.is_identity())
        throw std::invalid_argument("affine finite system: X must be the identity");
    Rational a = sys.dilation.factor();
    Rational mag = rational_abs(a);
    Rational half = model.bandwidth / 2;
    Interval band(-half, half);
    Rational spacing = model.bandwidth / Rational(model.n);
    std::map<int, LevelVectors> levels;

    auto level_state = [&](int n) {
        // 0 = dead, 1 = live, throws on partial aliasing
        Rational power = pow_rational(a, n);
        bool live = false;
        for (const auto& gen : sys.gens) {
            Interval hull = gen.piecewise().support_hull();
            if (hull.empty()) continue;
            Interval scaled = hull.scaled(power);
            Interval common = Interval::intersect(scaled, band);
            if (common.empty()) continue;
            if (scaled.lo < band.lo || scaled.hi > band.hi)
                throw std::invalid_argument("affine finite system: a dilated support straddles "
                                            "the band edge (aliasing); enlarge the bandwidth");
            live = true;
        }
        return live;
    };
    auto build_level = [&](int n) {
        Rational power = pow_rational(a, n);
        Rational period_q = (n >= 0 || !quasi)
                                ? Rational(Rational(model.n) * pow_rational(mag, n) /
                                           model.bandwidth)
                                : Rational(Rational(model.n) / model.bandwidth);
        long period = to_long(period_q, "affine finite system: translate count");
        if (period < 1)
            throw std::invalid_argument("affine finite system: translate lattice coarser than "
                                        "the model period");
        LevelVectors lv;
        lv.period = period;
        for (const auto& gen : sys.gens) {
            Piecewise pw = gen.piecewise().scale_arg(1 / power);
            if (n >= 0 || !quasi) pw = pw.scaled_sqrt(pow_rational(mag, -n));
            lv.per_gen.push_back(sample_model(Profile::exact(std::move(pw)), model));
        }
        levels[n] = std::move(lv);
    };

    for (int n = 0;; ++n) {
        if (!level_state(n)) break;
        build_level(n);
    }
    for (int n = -1;; --n) {
        Rational power = pow_rational(mag, n);
        bool any_reachable = false;
        for (const auto& gen : sys.gens) {
            Interval hull = gen.piecewise().support_hull();
            if (hull.empty()) continue;
            Rational radius = std::max(rational_abs(hull.lo), rational_abs(hull.hi)) * power;
            if (radius >= spacing) any_reachable = true;
        }
        if (!any_reachable) break;
        if (level_state(n)) build_level(n);
    }
    return levels;
}

}  // namespace

FiniteSystem make_affine_finite_system(const AffineSystem& sys, const FiniteModel& model,
                                       bool quasi) {
    FiniteSystem out;
    for (auto& [n, lv] : affine_level_vectors(sys, model, quasi)) {
        for (auto& vec : lv.per_gen) out.gens.push_back({lv.period, std::move(vec)});
    }
    return out;
}

Eigen::MatrixXcd assemble_grammian(const FiniteSystem& H, const FiniteSystem& G,
                                   const FiniteModel& model) {
    if (H.gens.size() != G.gens.size())
        throw std::invalid_argument("assemble_grammian: index sets differ");
    Eigen::MatrixXcd theta = Eigen::MatrixXcd::Zero(model.n, model.n);
    double w = model.weight();
    for (size_t p = 0; p < H.gens.size(); ++p) {
        if (H.gens[p].period != G.gens[p].period)
            throw std::invalid_argument("assemble_grammian: translate counts differ at index " +
                                        std::to_string(p));
        long period = H.gens[p].period;
        const auto& h = H.gens[p].freq;
        const auto& g = G.gens[p].freq;
        if (h.size() != model.n || g.size() != model.n)
            throw std::invalid_argument("assemble_grammian: model size mismatch");
        double scale = w * static_cast<double>(period);
        for (int i = 0; i < model.n; ++i) {
            if (g[i] == std::complex<double>(0.0, 0.0)) continue;
            for (int j = i % period; j < model.n; j += period) {
                theta(i, j) += scale * g[i] * std::conj(h[j]);
            }
        }
    }
    return theta;
}

Eigen::MatrixXcd assemble_cross_lattice(const FiniteSystem& G, const FiniteSystem& H,
                                        const FiniteModel& model) {
    if (H.gens.size() != G.gens.size())
        throw std::invalid_argument("assemble_cross_lattice: index sets differ");
    Eigen::MatrixXcd theta = Eigen::MatrixXcd::Zero(model.n, model.n);
    double w = model.weight();
    for (size_t p = 0; p < H.gens.size(); ++p) {
        long pc = G.gens[p].period;
        long pd = H.gens[p].period;
        long shared = std::lcm(pc, pd);
        const auto& g = G.gens[p].freq;
        const auto& h = H.gens[p].freq;
        double scale = w * static_cast<double>(shared);
        // Row phase runs at rate 1/pd, column at 1/pc; the k-sum over one
        // shared period keeps only pairs with integral phase difference.
        for (int i = 0; i < model.n; ++i) {
            if (h[i] == std::complex<double>(0.0, 0.0)) continue;
            long mi = i - model.n / 2;
            for (int j = 0; j < model.n; ++j) {
                long mj = j - model.n / 2;
                // mi/pd - mj/pc integral <=> (mi*pc - mj*pd) % (pc*pd) == 0
                long num = mi * pc - mj * pd;
                if (num % (pc * pd) != 0) continue;
                theta(i, j) += scale * h[i] * std::conj(g[j]);
            }
        }
    }
    return theta;
}

double operator_norm(const Eigen::MatrixXcd& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    Eigen::MatrixXcd gram = m.adjoint() * m;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    double top = solver.eigenvalues().maxCoeff();
    return std::sqrt(std::max(0.0, top));
}

Eigen::MatrixXcd translation_matrix(const FiniteModel& model, long samples) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(model.n, model.n);
    for (int i = 0; i < model.n; ++i) {
        long bin = i - model.n / 2;
        double phase = -2.0 * kPi * static_cast<double>(bin) * static_cast<double>(samples) /
                       static_cast<double>(model.n);
        out(i, i) = std::polar(1.0, phase);
    }
    return out;
}

Eigen::MatrixXcd model_dilation(const FiniteModel& model, long a) {
    if (a < 2) throw std::invalid_argument("model_dilation: integer factor >= 2 required");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(model.n, model.n);
    double amp = std::sqrt(static_cast<double>(a));
    for (int j = 0; j < model.n; ++j) {
        long source_bin = j - model.n / 2;
        long target_bin = a * source_bin;
        if (target_bin < -model.n / 2 || target_bin >= model.n / 2) continue;
        out(static_cast<int>(target_bin + model.n / 2), j) = amp;
    }
    return out;
}

Eigen::MatrixXcd model_dilation_inverse(const FiniteModel& model, long a) {
    if (a < 2) throw std::invalid_argument("model_dilation_inverse: integer factor >= 2 required");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(model.n, model.n);
    double amp = std::sqrt(static_cast<double>(a));
    for (int i = 0; i < model.n; ++i) {
        long target_bin = i - model.n / 2;
        long source_bin = a * target_bin;
        if (source_bin < -model.n / 2 || source_bin >= model.n / 2) continue;
        out(i, static_cast<int>(source_bin + model.n / 2)) = amp;
    }
    return out;
}

Eigen::MatrixXcd assemble_affine_block(const AffineSystem& Psi, const AffineSystem& Phi,
                                       const FiniteModel& model, int n_lo, int n_hi) {
    if (Psi.generator_count() != Phi.generator_count())
        throw std::invalid_argument("assemble_affine_block: generator counts differ");
    auto psi_levels = affine_level_vectors(Psi, model, /*quasi=*/false);
    auto phi_levels = affine_level_vectors(Phi, model, /*quasi=*/false);
    Rational a = rational_abs(Psi.dilation.factor());
    Rational b = rational_abs(Phi.dilation.factor());
    Eigen::MatrixXcd theta = Eigen::MatrixXcd::Zero(model.n, model.n);
    double w = model.weight();
    for (int n = n_lo; n <= n_hi; ++n) {
        auto ip = psi_levels.find(n);
        auto is = phi_levels.find(n);
        if (ip == psi_levels.end() || is == phi_levels.end()) continue;
        Rational pa = Rational(model.n) * pow_rational(a, n) / model.bandwidth;
        Rational pb = Rational(model.n) * pow_rational(b, n) / model.bandwidth;
        for (size_t g = 0; g < ip->second.per_gen.size(); ++g) {
            const auto& psi_vec = ip->second.per_gen[g];
            const auto& phi_vec = is->second.per_gen[g];
            // One shared translate index for every scale: the entry survives
            // iff mi/pb - mj/pa is an integer. Structural normalization w.
            for (int i = 0; i < model.n; ++i) {
                if (phi_vec[i] == std::complex<double>(0.0, 0.0)) continue;
                long mi = i - model.n / 2;
                for (int j = 0; j < model.n; ++j) {
                    long mj = j - model.n / 2;
                    Rational phase = Rational(mi) / pb - Rational(mj) / pa;
                    if (!is_integer(phase)) continue;
                    theta(i, j) += w * phi_vec[i] * std::conj(psi_vec[j]);
                }
            }
        }
    }
    return theta;
}

MultiplierTest multiplier_test(const Eigen::MatrixXcd& theta, const FiniteModel& model) {
    if (theta.rows() != model.n || theta.cols() != model.n)
        throw std::invalid_argument("multiplier_test: size mismatch");
    MultiplierTest out;
    out.diagonal = theta.diagonal();
    for (int i = 0; i < theta.rows(); ++i) {
        for (int j = 0; j < theta.cols(); ++j) {
            if (i == j) continue;
            out.offdiag_max = std::max(out.offdiag_max, std::abs(theta(i, j)));
        }
    }
    return out;
}

double bessel_bound(const FiniteSystem& sys, const FiniteModel& model) {
    if (sys.gens.empty()) throw std::invalid_argument("bessel_bound: empty system");
    Eigen::MatrixXcd theta = assemble_grammian(sys, sys, model);
    Eigen::MatrixXcd herm = (theta + theta.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    return solver.eigenvalues().maxCoeff();
}

Eigen::VectorXcd translation_wobble(const Eigen::MatrixXcd& theta, const Eigen::VectorXcd& f,
                                    const FiniteModel& model) {
    if (theta.rows() != model.n || f.size() != model.n)
        throw std::invalid_argument("translation_wobble: size mismatch");
    Eigen::VectorXcd out(model.n);
    double w = model.weight();
    Eigen::VectorXcd shifted(model.n);
    for (int x = 0; x < model.n; ++x) {
        for (int i = 0; i < model.n; ++i) {
            long bin = i - model.n / 2;
            double phase = -2.0 * kPi * static_cast<double>(bin) * x / model.n;
            shifted[i] = std::polar(1.0, phase) * f[i];
        }
        // <Theta T_x f, T_x f> in the weighted inner product.
        out[x] = w * (shifted.adjoint() * (theta * shifted))(0, 0);
    }
    return out;
}

ProjectionSplit projection_split_test(const Eigen::MatrixXcd& theta,
                                      const Eigen::VectorXd& p_diag, double tol) {
    if (theta.rows() != p_diag.size())
        throw std::invalid_argument("projection_split_test: size mismatch");
    for (int i = 0; i < p_diag.size(); ++i) {
        double v = p_diag[i];
        if (std::abs(v) > 1e-12 && std::abs(v - 1.0) > 1e-12)
            throw std::invalid_argument("projection_split_test: P is not a 0/1 projection");
    }
    Eigen::MatrixXcd b = theta;
    Eigen::MatrixXcd c = theta;
    for (int i = 0; i < theta.rows(); ++i) {
        for (int j = 0; j < theta.cols(); ++j) {
            // B = P Theta Pperp, C = Pperp Theta P
            b(i, j) *= p_diag[i] * (1.0 - p_diag[j]);
            c(i, j) *= (1.0 - p_diag[i]) * p_diag[j];
        }
    }
    ProjectionSplit out;
    out.b_norm = operator_norm(b);
    out.c_norm = operator_norm(c);
    out.commutes = out.b_norm <= tol && out.c_norm <= tol;
    return out;
}

RoundtripResult multiaccess_roundtrip(const FiniteSystem& X, const FiniteSystem& Y,
                                      const Eigen::VectorXcd& v, const Eigen::VectorXcd& w,
                                      const FiniteModel& model) {
    RoundtripResult out;
    if (X.gens.size() != Y.gens.size())
        throw std::invalid_argument("multiaccess_roundtrip: index sets differ");
    for (size_t p = 0; p < X.gens.size(); ++p) {
        if (X.gens[p].period != Y.gens[p].period)
            throw std::invalid_argument("multiaccess_roundtrip: translate counts differ");
    }
    Eigen::MatrixXcd theta_xx = assemble_grammian(X, X, model);
    Eigen::MatrixXcd theta_yy = assemble_grammian(Y, Y, model);
    // M_xy = sum <., y_j> x_j; M_yx = sum <., x_j> y_j.
    Eigen::MatrixXcd m_xy = assemble_grammian(Y, X, model);
    Eigen::MatrixXcd m_yx = assemble_grammian(X, Y, model);
    double proj_x = operator_norm(theta_xx * theta_xx - theta_xx);
    double proj_y = operator_norm(theta_yy * theta_yy - theta_yy);
    double cross = std::max(operator_norm(m_xy), operator_norm(m_yx));
    double v_range = (theta_xx * v - v).norm();
    double w_range = (theta_yy * w - w).norm();
    double precondition_tol = 1e-8;
    out.preconditions_ok = proj_x <= precondition_tol && proj_y <= precondition_tol &&
                           cross <= precondition_tol && v_range <= precondition_tol &&
                           w_range <= precondition_tol;
    if (!out.preconditions_ok) {
        out.detail = "self-projection defects " + std::to_string(proj_x) + ", " +
                     std::to_string(proj_y) + "; cross norm " + std::to_string(cross) +
                     "; range defects " + std::to_string(v_range) + ", " +
                     std::to_string(w_range);
    }
    Eigen::VectorXcd v_rec = theta_xx * v + m_xy * w;
    Eigen::VectorXcd w_rec = m_yx * v + theta_yy * w;
    out.v_err = (v_rec - v).norm();
    out.w_err = (w_rec - w).norm();
    return out;
}

Verdict dual_parametrization_check(const FiniteSystem& X, const FiniteSystem& Y_dual,
                                   const FiniteSystem& Z_orth, const FiniteModel& model,
                                   double tol) {
    if (Y_dual.gens.size() != Z_orth.gens.size())
        throw std::invalid_argument("dual_parametrization_check: index sets differ");
    FiniteSystem perturbed;
    for (size_t p = 0; p < Y_dual.gens.size(); ++p) {
        if (Y_dual.gens[p].period != Z_orth.gens[p].period)
            throw std::invalid_argument("dual_parametrization_check: translate counts differ");
        perturbed.gens.push_back(
            {Y_dual.gens[p].period, Y_dual.gens[p].freq + Z_orth.gens[p].freq});
    }
    Eigen::MatrixXcd theta = assemble_grammian(X, perturbed, model);
    double defect = operator_norm(theta - Eigen::MatrixXcd::Identity(model.n, model.n));
    Verdict verdict;
    if (defect > tol) {
        Violation v;
        v.condition = "perturbed-duality";
        v.value = {defect, 0.0};
        v.detail = "|| Theta_{Y+Z,X} - I || = " + std::to_string(defect);
        verdict.add(std::move(v));
    }
    verdict.note = "perturbed-dual defect " + std::to_string(defect);
    verdict.finalize();
    return verdict;
}

double adjoint_check(const FiniteSystem& H, const FiniteSystem& G, const FiniteModel& model) {
    Eigen::MatrixXcd forward = assemble_grammian(H, G, model);
    Eigen::MatrixXcd backward = assemble_grammian(G, H, model);
    return operator_norm(Eigen::MatrixXcd(forward.adjoint() - backward));
}

Eigen::MatrixXcd identity_off_dc(const FiniteModel& model) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(model.n, model.n);
    out(model.n / 2, model.n / 2) = 0.0;
    return out;
}

Eigen::MatrixXcd assemble_superwavelet_grammian(const std::vector<AffineSystem>& components,
                                                const FiniteModel& model, bool quasi) {
    if (components.empty())
        throw std::invalid_argument("superwavelet grammian: empty component list");
    for (const auto& comp : components) {
        if (comp.dilation != components.front().dilation)
            throw std::invalid_argument("superwavelet grammian: the finite model requires one "
                                        "shared dilation");
    }
    size_t r = 0;
    std::vector<std::map<int, LevelVectors>> levels;
    for (const auto& comp : components) {
        levels.push_back(affine_level_vectors(comp, model, quasi));
        r += comp.gens.size();
    }
    // Flatten (component, generator) into block coordinates.
    struct BlockGen {
        size_t comp;
        size_t gen;
    };
    std::vector<BlockGen> blocks;
    for (size_t c = 0; c < components.size(); ++c) {
        for (size_t g = 0; g < components[c].gens.size(); ++g) blocks.push_back({c, g});
    }
    // Union of live scales.
    std::map<int, long> scale_period;
    for (const auto& lm : levels) {
        for (const auto& [n, lv] : lm) {
            auto it = scale_period.find(n);
            if (it == scale_period.end()) {
                scale_period[n] = lv.period;
            } else if (it->second != lv.period) {
                throw std::logic_error("superwavelet grammian: inconsistent periods");
            }
        }
    }
    long big = static_cast<long>(r) * model.n;
    Eigen::MatrixXcd theta = Eigen::MatrixXcd::Zero(big, big);
    Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(model.n);
    double w = model.weight();
    for (const auto& [n, period] : scale_period) {
        auto vec_of = [&](const BlockGen& bg) -> const Eigen::VectorXcd& {
            auto it = levels[bg.comp].find(n);
            if (it == levels[bg.comp].end()) return zero;
            return it->second.per_gen[bg.gen];
        };
        double scale = w * static_cast<double>(period);
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
            const Eigen::VectorXcd& gi = vec_of(blocks[bi]);
            for (size_t bj = 0; bj < blocks.size(); ++bj) {
                const Eigen::VectorXcd& gj = vec_of(blocks[bj]);
                for (int i = 0; i < model.n; ++i) {
                    if (gi[i] == std::complex<double>(0.0, 0.0)) continue;
                    for (int j = i % period; j < model.n; j += period) {
                        theta(bi * model.n + i, bj * model.n + j) +=
                            scale * gi[i] * std::conj(gj[j]);
                    }
                }
            }
        }
    }
    return theta;
}

double superwavelet_parseval_defect(const std::vector<AffineSystem>& components,
                                    const FiniteModel& model, bool quasi) {
    Eigen::MatrixXcd theta = assemble_superwavelet_grammian(components, model, quasi);
    long big = theta.rows();
    Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(big, big);
    for (long b = 0; b * model.n < big; ++b) {
        target.block(b * model.n, b * model.n, model.n, model.n) = identity_off_dc(model);
    }
    return operator_norm(theta - target);
}

}  // namespace framecheck
