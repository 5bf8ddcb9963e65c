// Batch front end: ingest JSON system descriptions, dispatch the checks, and
// emit verdict reports plus symbol/matrix dumps.
//
// Exit status: 0 = verdict holds, 1 = verdict fails, 2 = usage/parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "framecheck/io.hpp"

namespace fc = framecheck;

namespace {

struct Options {
    std::string mode = "exact";
    double tol_zero = 1e-10;
    double tol_oracle = 1e-10;
    int n = 256;
    std::string bandwidth = "4";
    std::string report_path;
    std::string dump_symbol_path;
    unsigned seed = 1;
};

fc::SystemDescription load_system(const std::string& path) {
    return fc::system_from_json(fc::load_json_file(path));
}

// Sampled mode: replace exact generators by their samples on the model grid.
fc::TranslationSystem resample(const fc::TranslationSystem& sys, const fc::FiniteModel& model) {
    std::vector<fc::Profile> gens;
    for (const auto& gen : sys.gens) {
        Eigen::VectorXcd values = fc::sample_model(gen, model);
        std::vector<std::complex<double>> data(values.data(), values.data() + values.size());
        fc::Grid grid({-model.bandwidth / 2}, model.bandwidth / fc::Rational(model.n),
                      {static_cast<long>(model.n)}, std::move(data));
        gens.push_back(fc::Profile::sampled(std::move(grid)));
    }
    return fc::TranslationSystem(sys.fam, std::move(gens), sys.role);
}

fc::TranslationSystem prepare(const fc::SystemDescription& desc, const Options& opt) {
    if (!desc.is_translation())
        throw std::invalid_argument("expected a translation system (kind: translation)");
    if (opt.mode == "sampled") {
        fc::FiniteModel model(opt.n, fc::parse_rational(opt.bandwidth));
        return resample(*desc.translation, model);
    }
    return *desc.translation;
}

void maybe_dump_symbol(const Options& opt, const fc::Profile& symbol) {
    if (opt.dump_symbol_path.empty()) return;
    std::ofstream out(opt.dump_symbol_path);
    if (!out) throw std::runtime_error("cannot write " + opt.dump_symbol_path);
    fc::Rational half = fc::parse_rational(opt.bandwidth) / 2;
    fc::dump_symbol_csv(out, symbol, -half, half, opt.n + 1);
}

int finish(const Options& opt, const std::string& command, fc::json report,
           const fc::Verdict& verdict) {
    report["command"] = command;
    report["mode"] = opt.mode;
    report["tol_zero"] = fc::format_sci(opt.tol_zero);
    report["verdict"] = fc::verdict_to_json(verdict);
    if (!opt.report_path.empty()) fc::write_json_file(opt.report_path, report);
    if (verdict.holds) {
        std::cout << "HOLDS" << (verdict.characterized ? "" : " (sufficient condition)") << "\n";
    } else {
        std::cout << "FAILS: " << verdict.violations.size() << " violation(s)";
        if (!verdict.characterized) std::cout << " (sufficient condition only: undecided)";
        std::cout << "\n";
        for (size_t i = 0; i < verdict.violations.size() && i < 4; ++i) {
            const auto& v = verdict.violations[i];
            std::cout << "  - " << v.condition;
            if (!v.shift.empty()) {
                std::cout << " shift=";
                for (const auto& s : v.shift) std::cout << fc::format_rational(s) << " ";
            }
            if (v.where) std::cout << " on " << v.where->str();
            std::cout << "\n";
        }
    }
    return verdict.holds ? 0 : 1;
}

int run_builtin(const std::string& name, const std::string& out_dir) {
    auto emit = [&](const std::string& file, const fc::json& value) {
        std::string path = out_dir + "/" + file;
        fc::write_json_file(path, value);
        std::cout << path << "\n";
    };
    fc::json desc = fc::builtin_description(name);
    if (name == "bidual") {
        emit("bidual_psi.json", desc.at("psi"));
        emit("bidual_phi.json", desc.at("phi"));
        emit("bidual_set.json", desc.at("set"));
        return 0;
    }
    emit(name + ".json", desc);
    return 0;
}

int run_oracle_verify(const Options& opt, const std::string& analysis_path,
                      const std::string& synthesis_path) {
    auto desc_h = load_system(analysis_path);
    auto desc_g = synthesis_path.empty() ? desc_h : load_system(synthesis_path);
    if (!desc_h.is_translation() || !desc_g.is_translation())
        throw std::invalid_argument("oracle-verify: translation systems required");
    const fc::TranslationSystem& H = *desc_h.translation;
    const fc::TranslationSystem& G = *desc_g.translation;
    fc::FiniteModel model(opt.n, fc::parse_rational(opt.bandwidth));
    fc::FiniteSystem fh = fc::make_finite_system(H, model);
    fc::FiniteSystem fg = fc::make_finite_system(G, model);
    Eigen::MatrixXcd theta = fc::assemble_grammian(fh, fg, model);
    fc::MultiplierTest mt = fc::multiplier_test(theta, model);
    fc::Verdict symbolic = fc::check_translation_commutant(H, G, opt.tol_zero);
    bool oracle_commutes = mt.offdiag_max <= opt.tol_oracle;
    double diag_dev = 0.0;
    fc::Profile symbol = fc::multiplier_symbol(H, G);
    for (int i = 0; i < model.n; ++i) {
        std::complex<double> expected = symbol.eval1(model.xi(i - model.n / 2));
        diag_dev = std::max(diag_dev, std::abs(expected - mt.diagonal[i]));
    }
    // The oracle bins decide exactly when every profile is piecewise constant
    // with breakpoints on bin boundaries; otherwise they are a consistency
    // check against the symbolic verdict's sampled values.
    bool bin_exact = true;
    fc::Rational spacing = model.bandwidth / fc::Rational(model.n);
    for (const auto& list : {H.gens, G.gens}) {
        for (const auto& gen : list) {
            if (!gen.is_exact()) continue;
            for (const auto& piece : gen.piecewise().pieces()) {
                if (piece.poly.degree() > 0 || !fc::is_integer(piece.iv.lo / spacing) ||
                    !fc::is_integer(piece.iv.hi / spacing))
                    bin_exact = false;
            }
        }
    }
    fc::Verdict verdict;
    if (symbolic.holds != oracle_commutes) {
        fc::Violation v;
        v.condition = "oracle-disagreement";
        v.detail = std::string("symbolic commutant ") + (symbolic.holds ? "holds" : "fails") +
                   " but oracle off-diagonal max is " + fc::format_sci(mt.offdiag_max);
        verdict.add(std::move(v));
    }
    if (symbolic.holds && oracle_commutes && diag_dev > opt.tol_oracle) {
        fc::Violation v;
        v.condition = "multiplier-mismatch";
        v.detail = "diagonal deviates from symbol samples by " + fc::format_sci(diag_dev);
        verdict.add(std::move(v));
    }
    verdict.finalize();
    fc::json report{{"offdiag_norm", fc::format_sci(mt.offdiag_max)},
                    {"diagonal_deviation", fc::format_sci(diag_dev)},
                    {"symbolic_commutant", symbolic.holds},
                    {"bin_exact", bin_exact},
                    {"model", {{"n", model.n}, {"bandwidth", fc::format_rational(model.bandwidth)}}}};
    maybe_dump_symbol(opt, symbol);
    Options with_tol = opt;
    return finish(with_tol, "oracle-verify", std::move(report), verdict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier-domain orthogonality, duality and reconstruction checks for systems "
                 "of translates"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--mode", opt.mode, "exact | sampled")->check(CLI::IsMember({"exact", "sampled"}));
    app.add_option("--tol-zero", opt.tol_zero, "zero tolerance for sampled-mode decisions");
    app.add_option("--tol-oracle", opt.tol_oracle, "tolerance for finite-model comparisons");
    app.add_option("--n", opt.n, "finite-model point count (power of two)");
    app.add_option("--bandwidth", opt.bandwidth, "finite-model bandwidth (rational)");
    app.add_option("--report", opt.report_path, "write the verdict report JSON here");
    app.add_option("--dump-symbol", opt.dump_symbol_path, "write the multiplier symbol CSV here");
    app.add_option("--seed", opt.seed, "seed for randomized sweeps");

    std::string path_a, path_b, path_set, out_dir = ".", builtin_name;
    std::vector<std::string> paths;
    bool no_lattice_check = false;

    auto* orth = app.add_subcommand("orthogonality", "Theta == 0 for two systems");
    orth->add_option("analysis", path_a)->required();
    orth->add_option("synthesis", path_b)->required();

    auto* dual = app.add_subcommand("duality", "Theta == I for two translation systems");
    dual->add_option("analysis", path_a)->required();
    dual->add_option("synthesis", path_b)->required();
    dual->add_flag("--no-lattice-check", no_lattice_check,
                   "report the commutant obstruction instead of failing fast on C != D");

    auto* cross = app.add_subcommand("cross-lattice",
                                     "Theta == 0 for systems on different lattices (shared k)");
    cross->add_option("analysis", path_a)->required();
    cross->add_option("synthesis", path_b)->required();

    auto* aff = app.add_subcommand("affine-orthogonality",
                                   "equal-dilation affine/quasi-affine orthogonality (iff)");
    aff->add_option("psi", path_a)->required();
    aff->add_option("phi", path_b)->required();

    auto* quasi = app.add_subcommand("quasi-affine",
                                     "different-dilation quasi-affine orthogonality (iff)");
    quasi->add_option("psi", path_a)->required();
    quasi->add_option("phi", path_b)->required();

    auto* super = app.add_subcommand("superwavelet", "direct-sum Parseval property");
    super->add_option("systems", paths, "one or more affine system files")->required();

    auto* sdual = app.add_subcommand("subspace-dual",
                                     "is --analysis a V_E-subspace dual to --synthesis?");
    sdual->add_option("--analysis", path_a)->required();
    sdual->add_option("--synthesis", path_b)->required();
    sdual->add_option("--set", path_set)->required();

    auto* plan = app.add_subcommand("plancherel", "V_E-Plancherel frame check");
    plan->add_option("system", path_a)->required();
    plan->add_option("--set", path_set)->required();

    auto* overify = app.add_subcommand("oracle-verify",
                                       "assemble the finite-model Grammian and compare with "
                                       "the symbolic verdict");
    overify->add_option("analysis", path_a)->required();
    overify->add_option("synthesis", path_b);

    auto* builtin = app.add_subcommand("builtin", "materialize a built-in example description");
    builtin->add_option("name", builtin_name,
                        "fj2 | fj3 | bidual | shannon | shannon-wavelet | super2")
        ->required();
    builtin->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (builtin->parsed()) return run_builtin(builtin_name, out_dir);
        if (overify->parsed()) return run_oracle_verify(opt, path_a, path_b);

        if (orth->parsed()) {
            auto a = load_system(path_a);
            auto b = load_system(path_b);
            if (a.is_translation() != b.is_translation())
                throw std::invalid_argument("orthogonality: systems of different kinds");
            if (a.is_translation()) {
                fc::TranslationSystem H = prepare(a, opt);
                fc::TranslationSystem G = prepare(b, opt);
                fc::Verdict verdict = fc::check_orthogonality(H, G, opt.tol_zero);
                maybe_dump_symbol(opt, fc::multiplier_symbol(H, G));
                return finish(opt, "orthogonality", {}, verdict);
            }
            if (opt.mode == "sampled")
                throw std::invalid_argument("sampled mode is not available for affine systems");
            const fc::AffineSystem& psi = *a.affine;
            const fc::AffineSystem& phi = *b.affine;
            if (psi.dilation == phi.dilation && psi.translation.is_identity() &&
                phi.translation.is_identity()) {
                return finish(opt, "orthogonality", {},
                              fc::check_affine_orthogonality(psi, phi, opt.tol_zero));
            }
            bool both_quasi = psi.convention == fc::AffineSystem::Convention::QuasiAffine &&
                              phi.convention == fc::AffineSystem::Convention::QuasiAffine;
            if (both_quasi)
                return finish(opt, "orthogonality", {},
                              fc::check_quasi_affine_orthogonality(psi, phi, opt.tol_zero));
            return finish(opt, "orthogonality", {},
                          fc::check_affine_sufficient(psi, phi, opt.tol_zero));
        }
        if (dual->parsed()) {
            fc::TranslationSystem H = prepare(load_system(path_a), opt);
            fc::TranslationSystem G = prepare(load_system(path_b), opt);
            fc::Verdict verdict = fc::check_duality(H, G, !no_lattice_check, opt.tol_zero);
            return finish(opt, "duality", {}, verdict);
        }
        if (cross->parsed()) {
            fc::TranslationSystem G = prepare(load_system(path_a), opt);
            fc::TranslationSystem H = prepare(load_system(path_b), opt);
            return finish(opt, "cross-lattice", {},
                          fc::check_cross_lattice_zero(G, H, opt.tol_zero));
        }
        if (aff->parsed()) {
            auto a = load_system(path_a);
            auto b = load_system(path_b);
            if (a.is_translation() || b.is_translation())
                throw std::invalid_argument("affine-orthogonality: affine systems required");
            return finish(opt, "affine-orthogonality", {},
                          fc::check_affine_orthogonality(*a.affine, *b.affine, opt.tol_zero));
        }
        if (quasi->parsed()) {
            auto a = load_system(path_a);
            auto b = load_system(path_b);
            if (a.is_translation() || b.is_translation())
                throw std::invalid_argument("quasi-affine: affine systems required");
            return finish(opt, "quasi-affine", {},
                          fc::check_quasi_affine_orthogonality(*a.affine, *b.affine,
                                                               opt.tol_zero));
        }
        if (super->parsed()) {
            std::vector<fc::AffineSystem> systems;
            for (const auto& p : paths) {
                auto desc = load_system(p);
                if (desc.is_translation())
                    throw std::invalid_argument("superwavelet: affine systems required");
                systems.push_back(*desc.affine);
            }
            return finish(opt, "superwavelet", {},
                          fc::check_parseval_superwavelet(systems, opt.tol_zero));
        }
        if (sdual->parsed()) {
            fc::TranslationSystem H = prepare(load_system(path_a), opt);
            fc::TranslationSystem G = prepare(load_system(path_b), opt);
            fc::SpectralSet E = fc::spectral_set_from_json(fc::load_json_file(path_set));
            fc::Verdict verdict = fc::check_subspace_dual(H, G, E, opt.tol_zero);
            maybe_dump_symbol(opt, fc::multiplier_symbol(H, G));
            return finish(opt, "subspace-dual", {{"set", fc::spectral_set_to_json(E)}}, verdict);
        }
        if (plan->parsed()) {
            fc::TranslationSystem G = prepare(load_system(path_a), opt);
            fc::SpectralSet E = fc::spectral_set_from_json(fc::load_json_file(path_set));
            return finish(opt, "plancherel", {{"set", fc::spectral_set_to_json(E)}},
                          fc::check_plancherel_frame(G, E, opt.tol_zero));
        }
        throw std::invalid_argument("no subcommand");
    } catch (const std::exception& err) {
        fc::json error{{"error", err.what()}};
        if (!opt.report_path.empty()) {
            try {
                fc::write_json_file(opt.report_path, error);
            } catch (...) {
            }
        }
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
