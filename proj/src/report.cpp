#include "casimir/report.hpp"

#include <chrono>
#include <sstream>

#include "casimir/parallel.hpp"

namespace casimir {

namespace {

#ifndef CASIMIR_VERSION
#define CASIMIR_VERSION "dev"
#endif

Json poly_json(const QPolynomial& p) {
    Json out = Json::array();
    for (int i = 0; i <= p.degree(); ++i) out.push_back(p[i].get_str());
    return out;
}

QPolynomial poly_from_json(const Json& j) {
    std::vector<Rational> c;
    for (const auto& s : j) c.push_back(parse_rational(s.get<std::string>()));
    return QPolynomial(Rational(0), std::move(c));
}

Json sparse_element(const Element& v) {
    Json out = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back(Json::array({i, scalar_string(v[i])}));
    return out;
}

Element element_from_sparse(const Json& j, std::size_t len, const CyclotomicField& field) {
    Element v = zero_vector(len, Cyclotomic(field));
    for (const auto& t : j) v[t[0].get<std::size_t>()] = parse_scalar(t[1], field);
    return v;
}

Element element_from_json(const Json& j, const CyclotomicField& field) {
    Element v;
    for (const auto& s : j) v.push_back(parse_scalar(s, field));
    return v;
}

Json int_list(const std::vector<int>& v) { return Json(v); }

/// Tracks the overall exit status and optional per-section timings.
struct Run {
    Json& report;
    const AnalyzeOptions& opts;
    int exit_code = 0;

    void worse(int code) {
        if (code == 3 || (code == 2 && exit_code != 3) || (code == 1 && exit_code == 0)) exit_code = code;
    }

    template <class F>
    void timed(const std::string& key, F&& f) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        if (opts.timing) {
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            report["provenance"]["timing_ms"][key] = ms;
        }
    }
};

Json verification_json(const Verification& v) {
    return Json{{"passed", v.passed()}, {"failures", v.failures}};
}

Json wedderburn_json(const WedderburnData& W) {
    Json w;
    Json blocks = Json::array();
    for (std::size_t s = 0; s < W.size(); ++s) {
        Json b;
        b["degree"] = W.degrees[s];
        b["split_certified"] = static_cast<bool>(W.split_certified[s]);
        b["idempotent"] = element_json(W.idempotents[s]);
        if (W.split_certified[s]) {
            b["character"] = element_json(W.characters[s]);
            b["primitive_idempotent"] = element_json(W.primitive_idempotents[s]);
        }
        blocks.push_back(std::move(b));
    }
    w["blocks"] = std::move(blocks);
    w["degrees"] = int_list(W.degrees);
    w["all_split"] = W.all_split();
    return w;
}

std::string lambda_choice(const Input& in, const AnalyzeOptions& opts) {
    if (!opts.lambda.empty()) return opts.lambda;
    return in.lambda ? "custom" : "regular";
}

Json error_json(const Error& e) { return Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}; }

WedderburnOptions wedderburn_options(const AnalyzeOptions& opts) {
    WedderburnOptions w;
    w.prime = opts.prime;
    w.seed = opts.seed;
    return w;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
    return "{" + s + "}";
}

}  // namespace

Json certificate_json(const IntegralityCertificate& c) {
    Json j{{"element", c.element}, {"minimal_polynomial", poly_json(c.minimal_polynomial)}, {"integral", c.integral}};
    j["minimal_polynomial_text"] = format_rational_polynomial(c.minimal_polynomial);
    if (c.witness) j["witness"] = c.witness->get_str();
    return j;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput:
        case ErrorKind::ConductorMismatch:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::NotATraceForm:
        case ErrorKind::Degenerate:
        case ErrorKind::AxiomFailure:
        case ErrorKind::BadPrime:
        case ErrorKind::NotUnimodular:
        case ErrorKind::NormalizationImpossible:
        case ErrorKind::NotASymmetricHomomorphism:
        case ErrorKind::NonIntegralFusion:
            return 2;
        case ErrorKind::NotSemisimple:
        case ErrorKind::SplitUncertified:
        case ErrorKind::NonSplitCenter:
        case ErrorKind::InapplicableHypothesis:
            return 1;
        case ErrorKind::DivisionByZero:
        case ErrorKind::PrecisionExceeded:
        case ErrorKind::EquivalenceViolation:
        case ErrorKind::Internal:
            return 3;
    }
    return 3;
}

Json without_provenance(const Json& report) {
    Json r = report;
    r.erase("provenance");
    return r;
}

AnalyzeResult analyze(const Json& input, const AnalyzeOptions& opts) {
    AnalyzeResult result;
    Json& R = result.report;
    Run run{R, opts};
    const bool saved_parallel = parallel_enabled();
    set_parallel(opts.parallel);
    struct Restore {
        bool v;
        ~Restore() { set_parallel(v); }
    } restore{saved_parallel};

    R["tool"] = "casimir";
    R["version"] = CASIMIR_VERSION;
    Json options{{"check", opts.check}, {"lambda", opts.lambda.empty() ? "auto" : opts.lambda}};
    if (opts.conductor) options["conductor"] = *opts.conductor;
    R["options"] = options;
    R["checks"] = Json::object();

    const bool want_all = opts.check == "all";
    auto wants = [&](const std::string& c) { return want_all || opts.check == c; };
    if (!want_all && opts.check != "fd" && opts.check != "zhu" && opts.check != "class-equation" &&
        opts.check != "schneider") {
        R["status"] = "error";
        R["error"] = Json{{"kind", "InvalidInput"}, {"message", "unknown check \"" + opts.check + "\""}};
        result.exit_code = 2;
        return result;
    }

    try {
        Input in = parse_input(input, opts.conductor);
        WedderburnData W;
        Verification ver;
        // conductor retry: verify, split, and double the conductor once if a block stays uncertified
        for (int attempt = 0;; ++attempt) {
            R["input"] = input_json(in);
            R["input_digest"] = digest(R["input"]);
            run.timed("verify", [&] {
                ver = verify_algebra(*in.algebra);
                if (ver.passed() && in.hopf) ver.merge(verify_hopf(*in.hopf), "hopf: ");
            });
            R["verification"] = verification_json(ver);
            if (!ver.passed())
                fail(ErrorKind::InvalidInput,
                     "axiom check failed: " + ver.failures.front() +
                         (ver.failures.size() > 1 ? " (and " + std::to_string(ver.failures.size() - 1) + " more)" : ""));
            run.timed("wedderburn", [&] { W = central_primitive_idempotents(*in.algebra, wedderburn_options(opts)); });
            if (W.all_split() || attempt == 1) break;
            const int doubled = 2 * in.algebra->zero().conductor();
            in = parse_input(input, doubled);
            R["conductor_retry"] = doubled;
        }
        const Algebra& A = *in.algebra;
        R["algebra"] = Json{{"dim", A.dim()},
                            {"conductor", A.zero().conductor()},
                            {"kind", in.kind},
                            {"center_dimension", static_cast<int>(W.size())}};
        R["provenance"]["prime"] = W.prime_used;
        R["provenance"]["precision"] = W.precision_used;
        R["wedderburn"] = wedderburn_json(W);
        R["wedderburn"]["verification"] = verification_json(verify_wedderburn(A, W));

        std::optional<IntegralData> I;
        if (in.hopf) {
            run.timed("integrals", [&] {
                I = integrals(*in.hopf);
                HopfCasimirData hc = hopf_casimir(*in.hopf, *I);
                Json h;
                h["Lambda"] = element_json(I->Lambda);
                h["lambda"] = element_json(I->lambda);
                h["Lambda0"] = element_json(I->Lambda0);
                h["gamma_one"] = element_json(hc.gamma_one);
                h["dual_gamma_counit"] = element_json(hc.dual_gamma_counit);
                h["integral_checks"] = verification_json(verify_integrals(*in.hopf, *I));
                h["casimir_four_way"] = "pass";
                R["hopf"] = std::move(h);
                if (!verify_integrals(*in.hopf, *I).passed()) fail(ErrorKind::Internal, "integral checks failed");
            });
        }

        const std::string lam = lambda_choice(in, opts);
        Element lambda;
        if (lam == "custom") {
            if (!in.lambda) fail(ErrorKind::InvalidInput, "--lambda custom needs a \"lambda\" entry in the input");
            lambda = *in.lambda;
        } else if (lam == "regular") {
            lambda = I ? I->lambda : normalized_regular_form(A);
        } else if (lam == "delta-one") {
            lambda = delta_one_form(A);
        } else {
            fail(ErrorKind::InvalidInput, "unknown lambda choice \"" + lam + "\"");
        }
        FrobeniusStructure F;
        run.timed("frobenius", [&] {
            F = frobenius_structure(in.algebra, lambda);
            Json f;
            f["lambda_choice"] = lam;
            f["lambda"] = element_json(lambda);
            f["casimir"] = sparse_element(F.casimir);
            f["gamma_one"] = element_json(casimir_trace(F, A.unit()));
            Verification ci = check_casimir_identities(F);
            std::mt19937_64 rng(opts.seed);
            Verification ti = check_trace_identities(F, rng);
            f["casimir_identities"] = verification_json(ci);
            f["trace_identities"] = verification_json(ti);
            Verification cp = verify_cprid_formula(F, W);
            f["idempotent_formula"] = verification_json(cp);
            if (W.all_split()) {
                CasimirSquareTable T = casimir_square_components(F, W);
                Json diag = Json::array(), gam = Json::array();
                for (std::size_t s = 0; s < W.size(); ++s) {
                    diag.push_back(scalar_string(T.casimir_square[s][s]));
                    gam.push_back(scalar_string(T.gamma[s]));
                }
                f["casimir_square_diagonal"] = std::move(diag);
                f["gamma_components"] = std::move(gam);
                f["casimir_square_checks"] = verification_json(T.checks);
                if (!T.checks.passed()) fail(ErrorKind::Internal, "Casimir square identities failed: " + T.checks.summary());
            }
            R["frobenius"] = std::move(f);
            if (!ci.passed() || !ti.passed() || !cp.passed())
                fail(ErrorKind::Internal, "Casimir identity failure: " + ci.summary() + ti.summary() + cp.summary());
        });

        auto guarded = [&](const std::string& key, auto&& body) {
            try {
                run.timed(key, body);
            } catch (const Error& e) {
                Json c = R["checks"].value(key, Json::object());
                c["status"] = exit_code_for(e.kind()) == 1 ? "inapplicable" : "error";
                c["error"] = error_json(e);
                R["checks"][key] = std::move(c);
                run.worse(exit_code_for(e.kind()));
            }
        };

        if (wants("fd")) {
            guarded("fd", [&] {
                DivisibilityVerdict v = frobenius_divisibility_verdict(F, W);
                Json c;
                c["statement"] = in.hopf ? "Hopf algebra, lambda = chi_reg / dim H" : "symmetric algebra";
                c["gamma_one"] = v.gamma.get_str();
                c["degrees"] = int_list(v.degrees);
                c["divides"] = v.divides;
                c["casimir_certificate"] = certificate_json(v.casimir);
                c["status"] = v.holds ? "pass" : "fail";
                R["checks"]["fd"] = std::move(c);
                if (!v.holds) run.worse(1);
            });
        }

        const bool need_ring = in.hopf && (wants("zhu") || wants("class-equation") || wants("schneider"));
        std::optional<RepresentationRing> RR;
        if (!in.hopf) {
            for (const char* key : {"zhu", "class-equation", "schneider"})
                if (opts.check == key) {
                    R["checks"][key] = Json{{"status", "inapplicable"}, {"error", {{"kind", "InapplicableHypothesis"}, {"message", "input is not a Hopf algebra"}}}};
                    run.worse(1);
                }
        }
        if (need_ring) {
            guarded("representation_ring", [&] {
                RR = representation_ring(*in.hopf, *I, W);
                Json r;
                r["fusion"] = RR->fusion;
                r["dual"] = RR->dual;
                r["trivial"] = RR->trivial;
                r["delta"] = element_json(RR->delta);
                r["checks"] = verification_json(RR->checks);
                r["status"] = RR->checks.passed() ? "pass" : "error";
                R["checks"]["representation_ring"] = std::move(r);
                if (!RR->checks.passed()) fail(ErrorKind::Internal, RR->checks.summary());
            });
        }

        if (RR && wants("zhu")) {
            guarded("zhu", [&] {
                ZhuReport z = zhu_check(*in.hopf, *I, W, *RR);
                Json c;
                c["statement"] = "Zhu";
                Json comps = Json::array();
                bool ok = z.checks.passed();
                for (const auto& zc : z.components) {
                    Json j{{"degree", zc.degree}, {"central", zc.central}};
                    if (zc.central) {
                        j["identity_holds"] = zc.identity_holds;
                        j["coefficients_in_Z_zeta"] = zc.coefficients_in_Z_zeta;
                        j["certificate"] = certificate_json(zc.certificate);
                        j["verdict"] = zc.divides ? "divides" : "does not divide";
                        ok = ok && zc.divides;
                    } else {
                        j["verdict"] = "theorem silent";
                    }
                    comps.push_back(std::move(j));
                }
                c["components"] = std::move(comps);
                c["checks"] = verification_json(z.checks);
                c["status"] = ok ? "pass" : "fail";
                R["checks"]["zhu"] = std::move(c);
                if (!z.checks.passed()) fail(ErrorKind::Internal, z.checks.summary());
                if (!ok) run.worse(1);
            });
        }

        if (RR && wants("class-equation")) {
            guarded("class-equation", [&] {
                ClassEquationReport ce = class_equation_check(*in.hopf, *I, *RR, wedderburn_options(opts));
                Json c;
                c["statement"] = "class equation";
                std::vector<int> dims;
                Json scalars = Json::array();
                bool ok = true;
                for (const auto& m : ce.components) {
                    dims.push_back(m.induced_dimension);
                    scalars.push_back(scalar_string(m.scalar));
                    ok = ok && m.divides;
                }
                c["ring_degrees"] = int_list(ce.ring_wedderburn.degrees);
                c["induced_dimensions"] = int_list(dims);
                c["scalars"] = std::move(scalars);
                c["checks"] = verification_json(ce.checks);
                c["status"] = ok && ce.checks.passed() ? "pass" : "fail";
                R["checks"]["class-equation"] = std::move(c);
                if (!ce.checks.passed()) fail(ErrorKind::Internal, ce.checks.summary());
            });
        }

        if (in.hopf && wants("schneider")) {
            if (!in.hopf->R) {
                if (opts.check == "schneider") {
                    R["checks"]["schneider"] = Json{{"status", "inapplicable"}, {"error", {{"kind", "InapplicableHypothesis"}, {"message", "no R-matrix supplied"}}}};
                    run.worse(1);
                }
            } else if (RR) {
                guarded("schneider", [&] {
                    Json c;
                    c["statement"] = "Schneider";
                    QuasitriangularData Q = quasitriangular_verify(*in.hopf);
                    FactorizableVerdict fv = factorizable_check(*in.hopf, Q);
                    c["quasitriangular"] = true;
                    c["factorizable"] = fv.factorizable;
                    c["phi_rank"] = fv.phi_rank;
                    if (!fv.factorizable) {
                        c["status"] = want_all ? "silent" : "inapplicable";
                        R["checks"]["schneider"] = std::move(c);
                        if (!want_all) run.worse(1);
                        return;
                    }
                    SchneiderReport sr = schneider_check(*in.hopf, *I, Q, W, *RR, wedderburn_options(opts));
                    std::vector<int> squares;
                    bool ok = sr.checks.passed();
                    for (const auto& sc : sr.components) {
                        squares.push_back(sc.induced_dimension);
                        ok = ok && sc.divides;
                    }
                    c["squares"] = int_list(squares);
                    c["psi_checks"] = verification_json(sr.checks);
                    if (in.group && in.kind == "double") {
                        HopfAlgebra kG = group_algebra(*in.group, A.zero().conductor());
                        WedderburnData WG = central_primitive_idempotents(kG.A(), wedderburn_options(opts));
                        PullbackReport pb =
                            pullback_degrees(*in.hopf, W, kG, WG, double_projection(*in.group, *in.hopf, kG));
                        Json p;
                        std::vector<int> degs;
                        for (const auto& pc : pb.components) degs.push_back(pc.degree);
                        p["group_degrees"] = int_list(degs);
                        p["checks"] = verification_json(pb.checks);
                        c["pullback"] = std::move(p);
                        ok = ok && pb.checks.passed();
                    }
                    c["status"] = ok ? "pass" : "fail";
                    R["checks"]["schneider"] = std::move(c);
                    if (!sr.checks.passed()) fail(ErrorKind::Internal, sr.checks.summary());
                    if (!ok) run.worse(1);
                });
            }
        }
    } catch (const Error& e) {
        R["error"] = error_json(e);
        run.worse(exit_code_for(e.kind()));
    }
    result.exit_code = run.exit_code;
    R["exit_code"] = run.exit_code;
    R["status"] = run.exit_code == 0 ? "pass" : run.exit_code == 1 ? "negative" : run.exit_code == 2 ? "invalid-input" : "internal-error";
    return result;
}

std::string render_text(const Json& R) {
    std::ostringstream os;
    os << "casimir " << R.value("version", "") << "  input " << R.value("input_digest", "-") << "\n";
    if (R.contains("algebra")) {
        const Json& a = R["algebra"];
        os << "algebra: " << a["kind"].get<std::string>() << ", dim " << a["dim"] << ", conductor " << a["conductor"]
           << ", dim Z(A) = " << a["center_dimension"] << "\n";
    }
    if (R.contains("verification") && !R["verification"]["passed"].get<bool>()) {
        const Json& fs = R["verification"]["failures"];
        for (std::size_t i = 0; i < fs.size() && i < 5; ++i) os << "  axiom failure: " << fs[i].get<std::string>() << "\n";
        if (fs.size() > 5) os << "  ... " << fs.size() - 5 << " further failures in the JSON report\n";
    }
    if (R.contains("wedderburn")) {
        const Json& w = R["wedderburn"];
        os << "Wedderburn: degrees " << join(w["degrees"].get<std::vector<int>>())
           << ", split over the base field: " << (w["all_split"].get<bool>() ? "yes" : "no") << "\n";
    }
    if (R.contains("frobenius")) {
        const Json& f = R["frobenius"];
        auto pass = [&](const char* k) { return f.contains(k) && f[k]["passed"].get<bool>() ? "pass" : "FAIL"; };
        os << "Frobenius form: " << f["lambda_choice"].get<std::string>() << "; Casimir identities " << pass("casimir_identities")
           << "; trace identities " << pass("trace_identities") << "; idempotent formula " << pass("idempotent_formula") << "\n";
        if (f.contains("casimir_square_diagonal")) {
            os << "Casimir square diagonal:";
            for (const auto& s : f["casimir_square_diagonal"]) os << " " << s.get<std::string>();
            os << "\n";
        }
    }
    if (R.contains("hopf")) {
        os << "Hopf: integral Lambda and lambda verified; Gamma(1) = dim H; four Casimir expressions agree\n";
    }
    const Json& C = R.value("checks", Json::object());
    if (C.contains("fd")) {
        const Json& c = C["fd"];
        if (c.contains("casimir_certificate")) {
            os << "FD [" << c["statement"].get<std::string>() << "]: Gamma(1) = " << c["gamma_one"].get<std::string>()
               << ", degrees " << join(c["degrees"].get<std::vector<int>>()) << "\n";
            bool all = true;
            for (const auto& d : c["divides"]) all = all && d.get<bool>();
            os << "  degrees divide Gamma(1): " << (all ? "yes" : "no") << "\n";
            os << "  c_lambda integral: " << (c["casimir_certificate"]["integral"].get<bool>() ? "yes" : "no")
               << "  [minimal polynomial " << c["casimir_certificate"]["minimal_polynomial_text"].get<std::string>() << "]\n";
        }
    }
    if (C.contains("zhu") && C["zhu"].contains("components")) {
        os << "Zhu:";
        for (const auto& z : C["zhu"]["components"])
            os << " d=" << z["degree"] << " " << z["verdict"].get<std::string>() << ";";
        os << "\n";
    }
    if (C.contains("class-equation") && C["class-equation"].contains("induced_dimensions"))
        os << "class equation: induced dimensions "
           << join(C["class-equation"]["induced_dimensions"].get<std::vector<int>>()) << " each divide dim H\n";
    if (C.contains("schneider")) {
        const Json& s = C["schneider"];
        if (s.contains("factorizable"))
            os << "Schneider: quasitriangular; factorizable " << (s["factorizable"].get<bool>() ? "yes" : "no")
               << " (rank Phi = " << s["phi_rank"] << ")\n";
        if (s.contains("squares")) os << "  d(S)^2: " << join(s["squares"].get<std::vector<int>>()) << " each divide dim H\n";
        if (s.contains("pullback"))
            os << "  pulled-back group degrees " << join(s["pullback"]["group_degrees"].get<std::vector<int>>()) << "\n";
    }
    for (const auto& [k, c] : C.items())
        if (c.contains("error")) os << k << ": " << c["status"].get<std::string>() << ": " << c["error"]["message"].get<std::string>() << "\n";
    if (R.contains("error")) os << "error: " << R["error"]["message"].get<std::string>() << "\n";
    if (R.contains("provenance") && R["provenance"].contains("prime"))
        os << "provenance: prime " << R["provenance"]["prime"] << ", precision p^" << R["provenance"]["precision"] << "\n";
    os << "status: " << R.value("status", "?") << "\n";
    return os.str();
}

Verification replay_report(const Json& R) {
    Verification v;
    if (!R.contains("input") || !R.contains("wedderburn")) {
        v.add_failure("report carries no input or no decomposition");
        return v;
    }
    Input in = parse_input(R["input"]);
    const Algebra& A = *in.algebra;
    const CyclotomicField& field = A.zero().field();
    v.check(digest(R["input"]) == R.value("input_digest", ""), "input digest mismatch");

    WedderburnData W;
    for (const auto& b : R["wedderburn"]["blocks"]) {
        W.idempotents.push_back(element_from_json(b["idempotent"], field));
        W.degrees.push_back(b["degree"].get<int>());
        bool split = b["split_certified"].get<bool>();
        W.split_certified.push_back(split);
        W.characters.push_back(split ? element_from_json(b["character"], field) : Element{});
        W.primitive_idempotents.push_back(split ? element_from_json(b["primitive_idempotent"], field) : Element{});
    }
    v.merge(verify_wedderburn(A, W), "wedderburn: ");
    for (std::size_t s = 0; s < W.size(); ++s)
        if (W.split_certified[s]) {
            Element chi = regular_character(A);
            Element expected;
            for (int i = 0; i < A.dim(); ++i)
                expected.push_back(evaluate(chi, A.multiply(A.basis(i), W.idempotents[s])) *
                                   Cyclotomic(field, Rational(1, W.degrees[s])));
            v.check(expected == W.characters[s], "character " + std::to_string(s) + " differs from chi_reg(- e)/d");
        }

    if (R.contains("frobenius") && R.contains("checks") && R["checks"].contains("fd") &&
        R["checks"]["fd"].contains("casimir_certificate")) {
        const int n = A.dim();
        Element c = element_from_sparse(R["frobenius"]["casimir"], static_cast<std::size_t>(n * n), field);
        Element lambda = element_from_json(R["frobenius"]["lambda"], field);
        // c is the Casimir element of lambda: sum_k lambda(x_i x_k) Y(k, j) = delta_ij
        for (int i = 0; i < n && v.passed(); ++i)
            for (int j = 0; j < n; ++j) {
                Cyclotomic acc(field);
                for (int k = 0; k < n; ++k)
                    if (!c[j * n + k].is_zero()) acc += evaluate(lambda, A.multiply(A.basis(i), A.basis(k))) * c[j * n + k];
                if (acc != Cyclotomic(field, Rational(i == j ? 1 : 0))) {
                    v.add_failure("recorded Casimir element is not dual to lambda");
                    break;
                }
            }
        IntegralityCertificate cert;
        const Json& cj = R["checks"]["fd"]["casimir_certificate"];
        cert.minimal_polynomial = poly_from_json(cj["minimal_polynomial"]);
        cert.integral = cj["integral"].get<bool>();
        Element one = pure_tensor(A.unit(), A.unit());
        v.check(replay_certificate(one, [&](const Element& u) { return tensor_multiply(A, A, c, u); }, cert),
                "c_lambda certificate does not replay");
    }
    if (R.contains("checks") && R["checks"].contains("zhu") && R["checks"]["zhu"].contains("components")) {
        std::size_t s = 0;
        const int n = A.dim();
        for (const auto& z : R["checks"]["zhu"]["components"]) {
            if (z["central"].get<bool>() && s < W.size()) {
                IntegralityCertificate cert;
                cert.minimal_polynomial = poly_from_json(z["certificate"]["minimal_polynomial"]);
                cert.integral = z["certificate"]["integral"].get<bool>();
                Element x = scale(Cyclotomic(field, Rational(n) / W.degrees[s]), W.idempotents[s]);
                v.check(replay_certificate(A.unit(), [&](const Element& u) { return A.multiply(x, u); }, cert),
                        "Zhu certificate " + std::to_string(s) + " does not replay");
            }
            ++s;
        }
    }
    return v;
}

}  // namespace casimir
