// Command-line front end: every library operation is reachable from one of
// the subcommands below. Results are serialized deterministically (sorted
// keys, canonical "p/q" rationals); errors go to stderr as one-line JSON.
//
// Exit codes: 0 success, 2 validation error, 3 mathematical-hypothesis
// violation, 64 usage error, 65 malformed JSON.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "mukai/json_io.hpp"
#include "mukai/selftest.hpp"

namespace {

using mukai::json;

struct Context {
    std::string lattice_path;
    bool approx = false;
    std::optional<mukai::IntersectionLattice> lattice;

    const mukai::IntersectionLattice& need_lattice() {
        if (!lattice) {
            if (lattice_path.empty())
                throw mukai::ValidationError("a lattice file is required (--lattice or MUKAI_LATTICE)");
            lattice = mukai::load_lattice_file(lattice_path);
        }
        return *lattice;
    }
};

json parse_arg(const std::string& text) { return json::parse(text); }

mukai::QClass omega_from(Context& ctx, const std::string& omega_text) {
    const auto& L = ctx.need_lattice();
    return mukai::q_class_from_json(parse_arg(omega_text), L.rank());
}

mukai::QClass b_field_from(Context& ctx, const std::string& b_text) {
    const auto& L = ctx.need_lattice();
    if (b_text.empty()) return mukai::QClass::zero(L.rank());
    return mukai::q_class_from_json(parse_arg(b_text), L.rank());
}

// beta precedence: explicit bracket, then explicit value, then (B.omega).
mukai::TiltSlope tilt_from(Context& ctx, const std::string& beta_text,
                           const std::string& bracket_text, const std::string& b_text,
                           const mukai::QClass& omega) {
    if (!bracket_text.empty()) {
        const auto comma = bracket_text.find(',');
        if (comma == std::string::npos)
            throw mukai::ValidationError("--beta-bracket expects \"lo,hi\"");
        return mukai::TiltSlope::bracket(mukai::parse_rat(bracket_text.substr(0, comma)),
                                         mukai::parse_rat(bracket_text.substr(comma + 1)));
    }
    if (!beta_text.empty()) return mukai::TiltSlope::exact(mukai::parse_rat(beta_text));
    const auto& L = ctx.need_lattice();
    return mukai::TiltSlope::exact(L.pair(b_field_from(ctx, b_text), omega));
}

const char* side_name(mukai::TorsionSide side) {
    switch (side) {
        case mukai::TorsionSide::torsion_side: return "torsion";
        case mukai::TorsionSide::free_side: return "free";
        case mukai::TorsionSide::neither: return "neither";
    }
    return "neither";
}

const char* shape_name(mukai::MinimalShape shape) {
    switch (shape) {
        case mukai::MinimalShape::point_class: return "point_class";
        case mukai::MinimalShape::shifted_stable_slope_beta: return "shifted_stable_slope_beta";
        case mukai::MinimalShape::not_minimal_shape: return "not_minimal_shape";
    }
    return "not_minimal_shape";
}

json twist_report(const mukai::IntersectionLattice& L, const mukai::MukaiIsometry& m,
                  const std::string& v_text) {
    json out{{"isometry", mukai::isometry_to_json(m)},
             {"inverse", mukai::isometry_to_json(m.inverse())},
             {"fixes_point_class", m.fixes_point_class()}};
    if (!v_text.empty()) {
        mukai::MukaiVector v = mukai::mukai_vector_from_json(L, parse_arg(v_text));
        out["image"] = mukai::mukai_vector_to_json(m.apply(v));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Mukai-lattice arithmetic and stability computations for K3 surfaces"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    Context ctx;
    app.add_option("--lattice", ctx.lattice_path, "lattice spec file (JSON)")
        ->envname("MUKAI_LATTICE");
    app.add_flag("--approx", ctx.approx, "add display-only floating-point fields");

    std::string v_text, w_text, c_text, x_text, f_text, omega_text, b_text;
    std::string beta_text, bracket_text, l_text, vf_text, c_extra_text;
    long bound = 0, n_value = 0, r_value = 0, r_extra = 0;
    int threads = 1;

    std::function<json()> handler;

    auto* pair_cmd = app.add_subcommand("pair", "Mukai pairing of two vectors");
    pair_cmd->add_option("--v", v_text)->required();
    pair_cmd->add_option("--w", w_text)->required();
    pair_cmd->callback([&] {
        handler = [&]() -> json {
            const auto& L = ctx.need_lattice();
            auto v = mukai::mukai_vector_from_json(L, parse_arg(v_text));
            auto w = mukai::mukai_vector_from_json(L, parse_arg(w_text));
            return json{{"value", mukai::int_to_json(mukai::mukai_pair(L, v, w))}};
        };
    });

    auto* euler_cmd = app.add_subcommand("euler", "Euler pairing chi(v,w) = -<v,w>");
    euler_cmd->add_option("--v", v_text)->required();
    euler_cmd->add_option("--w", w_text)->required();
    euler_cmd->callback([&] {
        handler = [&]() -> json {
            const auto& L = ctx.need_lattice();
            auto v = mukai::mukai_vector_from_json(L, parse_arg(v_text));
            auto w = mukai::mukai_vector_from_json(L, parse_arg(w_text));
            return json{{"value", mukai::int_to_json(mukai::euler_chi(L, v, w))}};
        };
    });

    auto* cruc_cmd = app.add_subcommand("crucform", "fine-moduli certificate for a Mukai vector");
    cruc_cmd->add_option("--v", v_text)->required();
    cruc_cmd->callback([&] {
        handler = [&]() -> json {
            const auto& L = ctx.need_lattice();
            auto v = mukai::mukai_vector_from_json(L, parse_arg(v_text));
            return json{{"v", mukai::mukai_vector_to_json(v)},
                        {"report", mukai::fine_moduli_report_to_json(mukai::fine_moduli_check(L, v))},
                        {"isotropic", mukai::is_isotropic(L, v)},
                        {"spherical", mukai::is_spherical(L, v)}};
        };
    });

    auto* tsph_cmd = app.add_subcommand("twist-spherical", "spherical-twist isometry");
    tsph_cmd->add_option("--v", v_text);
    tsph_cmd->callback([&] {
        handler = [&]() -> json {
            const auto& L = ctx.need_lattice();
            return twist_report(L, mukai::MukaiIsometry::spherical_twist(L), v_text);
        };
    });

    auto* tline_cmd = app.add_subcommand("twist-line", "line-bundle twist isometry exp(c)");
    tline_cmd->add_option("--c", c_text)->required();
    tline_cmd->add_option("--v", v_text);
    tline_cmd->callback([&] {
        handler = [&]() -> json {
            const auto& L = ctx.need_lattice();
            auto c = mukai::ns_class_from_json(parse_arg(c_text), L.rank());
            return twist_report(L, mukai::MukaiIsometry::line_twist(L, c), v_text);
        };
    });

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a fine-moduli vector to coprime rank/content");
    reduce_cmd->add_option("--v", v_text)->required();
    reduce_cmd->callback([&] {
        handler = [&]() -> json {
            const auto& L = ctx.need_lattice();
            auto v = mukai::mukai_vector_from_json(L, parse_arg(v_text));
            return mukai::reduction_to_json(L, mukai::reduce_to_coprime(L, v));
        };
    });

    auto* norm_cmd = app.add_subcommand("normalize-exp", "read lambda*exp(B+i*omega) off a complex class");
    norm_cmd->add_option("--w", w_text)->required();
    norm_cmd->callback([&] {
        handler = [&]() -> json {
            const auto& L = ctx.need_lattice();
            auto w = mukai::complex_class_from_json(L, parse_arg(w_text));
            mukai::ExponentialForm form = mukai::normalize_exponential(L, w);
            json out = mukai::exponential_form_to_json(form);
            switch (mukai::period_quadric_membership(L, w)) {
                case mukai::QuadricClass::q_tilde: out["input_quadric"] = "Q_tilde"; break;
                case mukai::QuadricClass::q_prime: out["input_quadric"] = "Q_prime"; break;
                case mukai::QuadricClass::neither: out["input_quadric"] = "neither"; break;
            }
            mukai::ComplexifiedClass K(L, form.B, form.omega);
            auto [self, conj] = mukai::exp_isotropy_identities(L, K);
            out["isotropy"] = json{{"self", json{{"re", mukai::rat_to_json(self.re)},
                                                 {"im", mukai::rat_to_json(self.im)}}},
                                   {"with_conjugate", json{{"re", mukai::rat_to_json(conj.re)},
                                                           {"im", mukai::rat_to_json(conj.im)}}}};
            return out;
        };
    });

    auto* charge_cmd = app.add_subcommand("charge", "central charge Z(v) = <v, exp(B+i*omega)>");
    charge_cmd->add_option("--v", v_text)->required();
    charge_cmd->add_option("--omega", omega_text)->required();
    charge_cmd->add_option("--B", b_text);
    charge_cmd->callback([&] {
        handler = [&]() -> json {
            const auto& L = ctx.need_lattice();
            mukai::ComplexifiedClass K(L, b_field_from(ctx, b_text), omega_from(ctx, omega_text));
            auto v = mukai::mukai_vector_from_json(L, parse_arg(v_text));
            mukai::CentralCharge z = mukai::central_charge(L, K, v);
            json out{{"re", mukai::rat_to_json(z.re)},
                     {"im", mukai::rat_to_json(z.im)},
                     {"im_direct", mukai::rat_to_json(mukai::central_charge_im(L, K, v))},
                     {"stability_valid", K.stability_valid}};
            if (ctx.approx) {
                out["re_approx"] = mukai::to_double(z.re);
                out["im_approx"] = mukai::to_double(z.im);
            }
            return out;
        };
    });

    auto* phase_cmd = app.add_subcommand("phase", "phase classification of Z(v)");
    phase_cmd->add_option("--v", v_text)->required();
    phase_cmd->add_option("--omega", omega_text)->required();
    phase_cmd->add_option("--B", b_text);
    phase_cmd->callback([&] {
        handler = [&]() -> json {
            const auto& L = ctx.need_lattice();
            mukai::ComplexifiedClass K(L, b_field_from(ctx, b_text), omega_from(ctx, omega_text));
            auto v = mukai::mukai_vector_from_json(L, parse_arg(v_text));
            mukai::PhaseReport rep = mukai::phase(L, K, v);
            const char* cls = rep.cls == mukai::PhaseClass::interior   ? "interior"
                              : rep.cls == mukai::PhaseClass::boundary ? "boundary"
                                                                       : "invalid";
            json out{{"class", cls},
                     {"re", mukai::rat_to_json(rep.re)},
                     {"im", mukai::rat_to_json(rep.im)}};
            if (ctx.approx && rep.cls != mukai::PhaseClass::invalid) out["phi_approx"] = rep.phi_approx;
            return out;
        };
    });

    auto* heart_cmd = app.add_subcommand("heart", "membership of a two-term complex in the tilted heart");
    heart_cmd->add_option("--X", x_text)->required();
    heart_cmd->add_option("--omega", omega_text)->required();
    heart_cmd->add_option("--B", b_text);
    heart_cmd->add_option("--beta", beta_text);
    heart_cmd->add_option("--beta-bracket", bracket_text);
    heart_cmd->callback([&] {
        handler = [&]() -> json {
            const auto& L = ctx.need_lattice();
            mukai::QClass omega = omega_from(ctx, omega_text);
            mukai::TiltSlope beta = tilt_from(ctx, beta_text, bracket_text, b_text, omega);
            auto X = mukai::numerical_complex_from_json(L, parse_arg(x_text));
            mukai::HeartReport rep = mukai::heart_membership(L, X, omega, beta);
            return json{{"in_heart", rep.in_heart},
                        {"h_minus1_in_free", rep.h_minus1_in_free},
                        {"h0_in_torsion", rep.h0_in_torsion},
                        {"minimal_shape", shape_name(mukai::classify_minimal_shape(L, X, omega, beta))}};
        };
    });

    auto* dec_cmd = app.add_subcommand("decompose", "torsion-pair decomposition of a formal sheaf");
    dec_cmd->add_option("--F", f_text)->required();
    dec_cmd->add_option("--omega", omega_text)->required();
    dec_cmd->add_option("--B", b_text);
    dec_cmd->add_option("--beta", beta_text);
    dec_cmd->add_option("--beta-bracket", bracket_text);
    dec_cmd->callback([&] {
        handler = [&]() -> json {
            const auto& L = ctx.need_lattice();
            mukai::QClass omega = omega_from(ctx, omega_text);
            mukai::TiltSlope beta = tilt_from(ctx, beta_text, bracket_text, b_text, omega);
            auto F = mukai::formal_sheaf_from_json(L, parse_arg(f_text));
            auto [t_part, f_part] = mukai::decompose(L, F, omega, beta);
            json out{{"t_part", mukai::formal_sheaf_to_json(t_part)},
                     {"f_part", mukai::formal_sheaf_to_json(f_part)},
                     {"membership", side_name(mukai::torsion_pair_membership(L, F, omega, beta))}};
            if (!F.factors.empty()) {
                out["mu_max"] = mukai::rat_to_json(mukai::hn_mu_max(L, F, omega));
                out["mu_min"] = mukai::rat_to_json(mukai::hn_mu_min(L, F, omega));
            } else {
                out["mu_max"] = nullptr;
                out["mu_min"] = nullptr;
            }
            return out;
        };
    });

    auto* scan_cmd = app.add_subcommand("scan-spherical", "spherical classes with Z in the non-positive reals");
    scan_cmd->add_option("--bound", bound)->required();
    scan_cmd->add_option("--omega", omega_text)->required();
    scan_cmd->add_option("--B", b_text);
    scan_cmd->add_option("--threads", threads);
    scan_cmd->callback([&] {
        handler = [&]() -> json {
            const auto& L = ctx.need_lattice();
            mukai::ComplexifiedClass K(L, b_field_from(ctx, b_text), omega_from(ctx, omega_text));
            auto hits = mukai::spherical_scan(L, K, bound, threads);
            json out = mukai::scan_hits_to_json(hits, ctx.approx);
            out["stability_valid"] = K.stability_valid;
            return out;
        };
    });

    auto* ext_cmd = app.add_subcommand("extension-lemma", "degree/rank solution of the stable-extension inequality");
    ext_cmd->add_option("--l", l_text)->required();
    ext_cmd->add_option("--r", r_value)->required();
    ext_cmd->add_option("--beta", beta_text)->required();
    ext_cmd->add_option("--vf", vf_text, "Mukai vector of F (enables the Euler s' threshold)");
    ext_cmd->add_option("--c-extra", c_extra_text, "NS class of the determinant increment");
    ext_cmd->add_option("--r-extra", r_extra, "rank increment");
    ext_cmd->callback([&] {
        handler = [&]() -> json {
            mukai::ExtensionProblem p{mukai::parse_rat(l_text), mukai::Int(r_value),
                                      mukai::parse_rat(beta_text)};
            mukai::ExtensionSolution sol = mukai::solve_extension_problem(p);
            if (!vf_text.empty()) {
                const auto& L = ctx.need_lattice();
                auto vf = mukai::mukai_vector_from_json(L, parse_arg(vf_text));
                auto c_extra = c_extra_text.empty()
                                   ? mukai::NSClass::zero(L.rank())
                                   : mukai::ns_class_from_json(parse_arg(c_extra_text), L.rank());
                sol.s_min = mukai::euler_positive_s_min(L, vf, c_extra, mukai::Int(r_extra));
            }
            return mukai::extension_solution_to_json(p, sol);
        };
    });

    auto* partners_cmd = app.add_subcommand("partners", "rank-one partner candidates via coprime factorizations");
    partners_cmd->add_option("--n", n_value)->required();
    partners_cmd->callback([&] {
        handler = [&]() -> json {
            mukai::Rank1Surface X{mukai::Int(n_value)};
            auto classes = mukai::enumerate_partner_candidates(X);
            json out = mukai::partner_classes_to_json(X, classes);
            out["count_formula"] = mukai::int_to_json(mukai::partner_class_count(X.n));
            return out;
        };
    });

    auto* selftest_cmd = app.add_subcommand("selftest", "run the deterministic invariant suites");
    bool run_selftest = false;
    selftest_cmd->callback([&] { run_selftest = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"code", "usage"}, {"error", e.what()}}.dump() << "\n";
        return 64;
    }

    try {
        if (run_selftest) {
            int failures = mukai::selftest::run(std::cout);
            return failures == 0 ? 0 : 1;
        }
        std::cout << handler().dump(2) << "\n";
        return 0;
    } catch (const mukai::HypothesisError& e) {
        std::cerr << json{{"code", e.code()}, {"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const mukai::ValidationError& e) {
        std::cerr << json{{"code", "validation"}, {"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const json::parse_error& e) {
        std::cerr << json{{"code", "json"}, {"error", e.what()}}.dump() << "\n";
        return 65;
    } catch (const std::exception& e) {
        std::cerr << json{{"code", "internal"}, {"error", e.what()}}.dump() << "\n";
        return 70;
    }
}
