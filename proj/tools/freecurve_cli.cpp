#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "freecurve/errors.hpp"
#include "freecurve/fixtures.hpp"
#include "freecurve/parser.hpp"
#include "freecurve/report.hpp"

using namespace freecurve;
using report::json;

namespace {

struct Globals {
    std::string field_text = "q";
    int tmax = -1;
    bool json_out = false;
    bool timing = false;
    std::uint64_t seed = 1;
    std::string backend_text = "parallel";

    FieldId field() const { return FieldId::parse(field_text); }
    ElimBackend backend() const {
        if (backend_text == "reference") return ElimBackend::Reference;
        if (backend_text == "serial") return ElimBackend::Fast;
        if (backend_text == "parallel") return ElimBackend::FastParallel;
        throw Refusal("unknown backend '" + backend_text + "' (reference|serial|parallel)");
    }
    std::optional<int> tmax_opt() const { return tmax >= 0 ? std::optional<int>(tmax) : std::nullopt; }
};

void emit(const Globals& g, json rep, std::chrono::steady_clock::time_point started) {
    if (g.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
        rep["timing_ms"] = ms.count();
    }
    if (g.json_out)
        std::cout << rep.dump(2) << "\n";
    else
        std::cout << report::render_text(rep);
}

json base_report(const std::string& subcommand, const json& request) {
    json rep;
    rep["version"] = report::kVersion;
    rep["subcommand"] = subcommand;
    rep["request"] = request;
    return rep;
}

std::vector<PencilParam> parse_members(const std::string& text, const FieldId& field) {
    std::vector<PencilParam> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        std::string item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        if (!item.empty()) {
            std::size_t colon = item.find(':');
            if (colon == std::string::npos) throw Refusal("member parameter '" + item + "' needs the form l:m");
            out.emplace_back(parse_scalar(item.substr(0, colon), field), parse_scalar(item.substr(colon + 1), field));
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (out.empty()) throw Refusal("no pencil members given");
    return out;
}

json run_fixture_conformance(const Globals& g, int n, bool include_slow);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact freeness of reduced plane curves: Saito certificates, eigenschemes, pencils"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--field", g.field_text, "ground field: q, qi or fp:P")->capture_default_str();
    app.add_option("--tmax", g.tmax, "Hilbert profile degree bound override");
    app.add_flag("--json", g.json_out, "machine-readable output");
    app.add_flag("--timing", g.timing, "include timing (breaks byte-identical output)");
    app.add_option("--seed", g.seed, "seed for seeded fixtures")->capture_default_str();
    app.add_option("--backend", g.backend_text, "elimination backend: reference, serial, parallel")
        ->capture_default_str();

    auto* free_cmd = app.add_subcommand("free-check", "decide freeness of a reduced curve");
    std::string free_poly;
    free_cmd->add_option("poly", free_poly, "curve polynomial")->required();

    auto* eig_cmd = app.add_subcommand("eigenscheme", "eigenscheme of a derivation");
    std::vector<std::string> eig_coeffs;
    eig_cmd->add_option("coeffs", eig_coeffs, "derivation coefficients P1 P2 P3")->expected(3);

    auto* pa_cmd = app.add_subcommand("pencil-analyze", "base locus, gradient locus, eigenscheme, singular members");
    std::string pa_f, pa_g;
    pa_cmd->add_option("f", pa_f)->required();
    pa_cmd->add_option("g", pa_g)->required();

    auto* pf_cmd = app.add_subcommand("pencil-free", "pencil freeness/containment equivalence check");
    std::string pf_f, pf_g, pf_members, pf_curve;
    pf_cmd->add_option("f", pf_f)->required();
    pf_cmd->add_option("g", pf_g)->required();
    pf_cmd->add_option("--members", pf_members, "member parameters 'l:m;l:m;...'")->required();
    pf_cmd->add_option("--curve", pf_curve, "divisor of the member union to test (default: the union)");

    auto* tau_cmd = app.add_subcommand("tau", "total Tjurina number and per-point invariants");
    std::string tau_poly;
    tau_cmd->add_option("poly", tau_poly)->required();

    auto* mu_cmd = app.add_subcommand("mu", "Milnor number at a point");
    std::string mu_poly, mu_at;
    mu_cmd->add_option("poly", mu_poly)->required();
    mu_cmd->add_option("--at", mu_at, "projective point (a,b,c)")->required();

    auto* fx_cmd = app.add_subcommand("fixtures", "named examples");
    auto* fx_list = fx_cmd->add_subcommand("list", "list fixture names");
    auto* fx_emit = fx_cmd->add_subcommand("emit", "emit a fixture payload");
    std::string fx_name;
    int fx_n = 2;
    fx_emit->add_option("name", fx_name)->required();
    fx_emit->add_option("--n", fx_n, "family parameter")->capture_default_str();
    auto* fx_run = fx_cmd->add_subcommand("run-all", "run the conformance checks");
    bool fx_slow = false;
    int fx_run_n = 2;
    fx_run->add_flag("--slow", fx_slow, "include the heavier checks");
    fx_run->add_option("--n", fx_run_n, "family parameter")->capture_default_str();

    auto* vc_cmd = app.add_subcommand("verify-cert", "re-verify a serialized freeness certificate");
    std::string vc_path;
    vc_cmd->add_option("cert", vc_path, "certificate JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    try {
        const FieldId field = g.field();
        const ElimBackend backend = g.backend();

        if (*free_cmd) {
            Poly f = parse_poly(free_poly, field);
            FreenessVerdict v = decide_freeness(f, backend);
            json rep = base_report("free-check", {{"poly", f.str()}, {"field", field.name()}});
            rep["verdict"] = report::verdict_json(v);
            if (v.certificate) rep["certificate"] = report::certificate_json(f, *v.certificate);
            emit(g, rep, started);
            return 0;
        }
        if (*eig_cmd) {
            Derivation delta({parse_poly(eig_coeffs[0], field), parse_poly(eig_coeffs[1], field),
                              parse_poly(eig_coeffs[2], field)});
            Eigenscheme e = eigenscheme_of(delta, g.tmax_opt(), backend);
            json rep = base_report("eigenscheme", {{"coeffs", report::derivation_json(delta)},
                                                   {"field", field.name()}});
            rep["eigenscheme"] = report::eigenscheme_json(e);
            if (e.finite()) {
                ProjectivePoints pts = projective_points(e.ideal);
                json jp = json::array();
                for (const auto& p : pts.points) jp.push_back(report::point_json(p));
                rep["rational_points"] = jp;
                rep["point_residual_degrees"] = pts.residual_degrees;
            }
            emit(g, rep, started);
            return 0;
        }
        if (*pa_cmd) {
            Pencil p = make_pencil(parse_poly(pa_f, field), parse_poly(pa_g, field));
            PencilAnalysis a = analyze(p, backend);
            json rep = base_report("pencil-analyze", {{"f", p.f.str()}, {"g", p.g.str()}, {"field", field.name()}});
            rep["pencil"] = report::pencil_json(p);
            rep["analysis"] = report::analysis_json(a);
            emit(g, rep, started);
            return 0;
        }
        if (*pf_cmd) {
            Pencil p = make_pencil(parse_poly(pf_f, field), parse_poly(pf_g, field));
            std::vector<PencilParam> members = parse_members(pf_members, field);
            MemberSelection sel = member_union(p, members);
            Poly curve = pf_curve.empty() ? sel.union_poly : parse_poly(pf_curve, field);
            PencilFreenessReport r = pencil_freeness_check(p, curve, sel.union_poly, backend);
            json rep = base_report("pencil-free", {{"f", p.f.str()},
                                                   {"g", p.g.str()},
                                                   {"curve", curve.str()},
                                                   {"field", field.name()}});
            rep["report"] = report::pencil_freeness_json(r);
            if (r.freeness_certificate) rep["certificate"] = report::certificate_json(curve, *r.freeness_certificate);
            emit(g, rep, started);
            return 0;
        }
        if (*tau_cmd) {
            Poly f = parse_poly(tau_poly, field);
            long total = tjurina_total(f);
            json rep = base_report("tau", {{"poly", f.str()}, {"field", field.name()}});
            rep["tjurina_total"] = total;
            GradedIdeal jac(field, {f.partial(0), f.partial(1), f.partial(2)});
            ProjectivePoints pts = projective_points(jac);
            json table = json::array();
            long local_sum = 0;
            for (const auto& p : pts.points) {
                LocalInvariants inv{p, milnor_at(f, p), tjurina_at(f, p)};
                local_sum += inv.tau;
                table.push_back(report::local_invariants_json(inv));
            }
            rep["singular_points"] = table;
            rep["residual_degrees"] = pts.residual_degrees;
            rep["local_tau_sum"] = local_sum;
            rep["all_points_rational"] = pts.residual_degrees.empty();
            emit(g, rep, started);
            return 0;
        }
        if (*mu_cmd) {
            Poly f = parse_poly(mu_poly, field);
            auto p = parse_point(mu_at, field);
            json rep = base_report("mu", {{"poly", f.str()}, {"at", report::point_json(p)}, {"field", field.name()}});
            rep["mu"] = milnor_at(f, p);
            rep["tau"] = tjurina_at(f, p);
            emit(g, rep, started);
            return 0;
        }
        if (*fx_cmd) {
            if (*fx_list) {
                json rep = base_report("fixtures list", json::object());
                rep["fixtures"] = fixtures::fixture_names();
                emit(g, rep, started);
                return 0;
            }
            if (*fx_emit) {
                json rep = base_report("fixtures emit", {{"name", fx_name}, {"n", fx_n}, {"seed", g.seed}});
                json payload;
                if (fx_name == "ceva") {
                    auto fx = fixtures::ceva(field);
                    payload["sextic"] = fx.sextic.str();
                    payload["pencil"] = report::pencil_json(fx.pencil);
                    payload["expected_exponents"] = json::array({fx.exp_a, fx.exp_b});
                } else if (fx_name == "hesse") {
                    auto fx = fixtures::hesse(field);
                    payload["arrangement"] = fx.arrangement.str();
                    payload["pencil"] = report::pencil_json(fx.pencil);
                    payload["expected_exponents"] = json::array({fx.exp_a, fx.exp_b});
                    payload["expected_eigenscheme_length"] = fx.gamma_length;
                } else if (fx_name == "fermat") {
                    auto fx = fixtures::fermat(fx_n, field);
                    payload["arrangement"] = fx.arrangement.str();
                    payload["pencil"] = report::pencil_json(fx.pencil);
                    payload["expected_exponents"] = json::array({fx.exp_a, fx.exp_b});
                } else if (fx_name == "sextic-pencil") {
                    auto fx = fixtures::sextic_pencil(field);
                    payload["pencil"] = report::pencil_json(fx.pencil);
                    payload["xyz_curve"] = fx.xyz_curve.str();
                    payload["yz_curve"] = fx.yz_curve.str();
                    payload["expected_eigenscheme_length"] = fx.gamma_length;
                } else if (fx_name == "osculating-conics") {
                    auto fx = fixtures::osculating_conics(field);
                    payload["pencil"] = report::pencil_json(fx.pencil);
                    payload["ideal"] = json::array({fx.ideal_uvw[0].str(), fx.ideal_uvw[1].str(), fx.ideal_uvw[2].str()});
                    payload["fg"] = fx.fg.str();
                    payload["three_smooth"] = fx.three_smooth.str();
                    payload["line_member_union"] = fx.line_member_union.str();
                    payload["tangency_point"] = report::point_json(fx.tangency_point);
                } else if (fx_name == "diagonal-conic-pencil") {
                    auto fx = fixtures::diagonal_conic_pencil(field);
                    payload["pencil"] = report::pencil_json(fx.pencil);
                } else if (fx_name == "quadruple-contact-pencil") {
                    auto fx = fixtures::quadruple_contact_pencil(field);
                    payload["pencil"] = report::pencil_json(fx.pencil);
                    payload["two_smooth"] = fx.two_smooth.str();
                } else if (fx_name == "tangent-conic-pencil") {
                    auto fx = fixtures::tangent_conic_pencil(field);
                    payload["pencil"] = report::pencil_json(fx.pencil);
                    payload["two_smooth"] = fx.two_smooth.str();
                    payload["three_smooth"] = fx.three_smooth.str();
                } else if (fx_name == "reflection-net") {
                    auto fx = fixtures::reflection_net(fx_n, field, g.seed);
                    payload["arrangement"] = fx.arrangement.str();
                    payload["mu"] = report::derivation_json(fx.mu);
                    payload["delta"] = report::derivation_json(fx.delta);
                    payload["net"] = json::array({fx.net[0].str(), fx.net[1].str(), fx.net[2].str()});
                    json members = json::array();
                    for (const Poly& m : fx.members) members.push_back(m.str());
                    payload["members"] = members;
                    payload["member_coefficients"] = fx.member_coeffs;
                    payload["expected_eigenscheme_length"] = fx.gamma_mu_length;
                } else {
                    throw Refusal("unknown fixture '" + fx_name + "'");
                }
                rep["payload"] = payload;
                emit(g, rep, started);
                return 0;
            }
            if (*fx_run) {
                json rep = run_fixture_conformance(g, fx_run_n, fx_slow);
                bool ok = rep["all_passed"].get<bool>();
                emit(g, rep, started);
                return ok ? 0 : 2;
            }
            throw Refusal("fixtures requires a subcommand: list, emit, run-all");
        }
        if (*vc_cmd) {
            std::ifstream in(vc_path);
            if (!in) throw Refusal("cannot open certificate file " + vc_path);
            json doc = json::parse(in, nullptr, true);
            report::ParsedCertificate parsed = report::certificate_from_json(doc);
            verify_freeness_certificate(parsed.curve, parsed.certificate);
            json rep = base_report("verify-cert", {{"file", vc_path}});
            rep["verified"] = true;
            rep["exponents"] = json::array({parsed.certificate.a, parsed.certificate.b});
            emit(g, rep, started);
            return 0;
        }
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const Refusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "refused: malformed JSON: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

namespace {

json run_fixture_conformance(const Globals& g, int n, bool include_slow) {
    const FieldId field = g.field();
    const ElimBackend backend = g.backend();
    json checks = json::array();
    bool all = true;
    auto check = [&](const std::string& name, auto&& body) {
        json entry;
        entry["check"] = name;
        try {
            body();
            entry["passed"] = true;
        } catch (const std::exception& e) {
            entry["passed"] = false;
            entry["detail"] = e.what();
            all = false;
        }
        checks.push_back(entry);
    };
    auto expect = [](bool cond, const std::string& what) {
        if (!cond) throw Error("expected " + what);
    };
    auto expect_free = [&](const Poly& f, int a, int b) {
        FreenessVerdict v = decide_freeness(f, backend);
        expect(v.free(), "free verdict");
        expect(v.certificate->a == std::min(a, b) && v.certificate->b == std::max(a, b),
               "exponents (" + std::to_string(a) + "," + std::to_string(b) + ")");
    };

    check("ceva sextic free (2,3)", [&] { expect_free(fixtures::ceva(field).sextic, 2, 3); });
    check("ceva pencil eigenscheme finite", [&] {
        auto fx = fixtures::ceva(field);
        expect(analyze(fx.pencil, backend).gamma.finite(), "finite eigenscheme");
    });
    check("fermat n=3 free (4,4)", [&] { expect_free(fixtures::fermat(3, field).arrangement, 4, 4); });
    check("sextic pencil: eigenscheme length 13, members at (1:-27)", [&] {
        auto fx = fixtures::sextic_pencil(field);
        PencilAnalysis a = analyze(fx.pencil, backend);
        expect(a.gamma.length() == fx.gamma_length, "length 13");
        expect(a.singular_members.size() == 4, "four located singular points");
        for (const auto& s : a.singular_members)
            expect(s.param.first == fx.singular_param.first && s.param.second == fx.singular_param.second,
                   "parameter (1:-27)");
    });
    check("sextic pencil: xyz-curve free (3,5), yz-curve free (3,4)", [&] {
        auto fx = fixtures::sextic_pencil(field);
        expect_free(fx.xyz_curve, 3, 5);
        expect_free(fx.yz_curve, 3, 4);
    });
    check("osculating conics: eigenscheme length 7, fg free (1,2)", [&] {
        auto fx = fixtures::osculating_conics(field);
        expect(eigenscheme_of(fx.pencil.canonical, g.tmax_opt(), backend).length() == 7, "length 7");
        expect_free(fx.fg, 1, 2);
    });
    check("osculating conics: unions of three members", [&] {
        auto fx = fixtures::osculating_conics(field);
        expect_free(fx.three_smooth, 2, 3);
        expect_free(fx.line_member_union, 2, 2);
    });
    check("osculating conics: tau/mu at the tangency point", [&] {
        auto fx = fixtures::osculating_conics(field);
        expect(tjurina_at(fx.three_smooth, fx.tangency_point) == fx.tau_three, "tau 15");
        expect(milnor_at(fx.three_smooth, fx.tangency_point) == fx.mu_three, "mu 16");
        expect(tjurina_at(fx.line_member_union, fx.tangency_point) == fx.tau_line, "tau 11");
        expect(milnor_at(fx.line_member_union, fx.tangency_point) == fx.mu_line, "mu 12");
    });
    check("conic pencils: eigenscheme lengths 7/3/7 and small unions", [&] {
        auto diag = fixtures::diagonal_conic_pencil(field);
        PencilAnalysis a = analyze(diag.pencil, backend);
        expect(a.base_length() == diag.base_length, "base length 4");
        expect(a.gradient_length() == diag.gradient_length, "gradient length 3");
        expect(a.gamma.length() == diag.gamma_length, "eigenscheme length 7");
        auto quad = fixtures::quadruple_contact_pencil(field);
        expect(eigenscheme_of(quad.pencil.canonical, g.tmax_opt(), backend).length() == 3, "length 3");
        expect_free(quad.two_smooth, 1, 2);
        auto tang = fixtures::tangent_conic_pencil(field);
        expect(!decide_freeness(tang.two_smooth, backend).free(), "two members not free");
        expect_free(tang.three_smooth, 2, 3);
    });
    check("reflection net: determinant identities and eigenscheme length", [&] {
        auto fx = fixtures::reflection_net(n, field, g.seed);
        Poly det_mu_delta =
            det3(PolyMatrix::from_columns({coordinate_triple(field), fx.mu.coeffs(), fx.delta.coeffs()}));
        expect(det_mu_delta == fx.arrangement, "det(E,mu,delta) = F");
        Poly det_net = det3(PolyMatrix::from_columns(
            {fx.net[0].gradient(), fx.net[1].gradient(), fx.net[2].gradient()}));
        expect(det_net == fx.arrangement * Scalar::of_int(field, n * (n + 1)), "det of net gradients");
        expect(eigenscheme_of(fx.mu, g.tmax_opt(), backend).length() == fx.gamma_mu_length, "length n^2+3n+3");
    });
    if (include_slow) {
        check("hesse: eigenscheme length 21 and arrangement free (4,7)", [&] {
            auto fx = fixtures::hesse(field);
            expect(analyze(fx.pencil, backend).gamma.length() == 21, "length 21");
            expect_free(fx.arrangement, 4, 7);
        });
        check("reflection suite", [&] {
            auto fx = fixtures::reflection_net(n, field, g.seed);
            for (const auto& c : fixtures::reflection_suite(fx, 5)) {
                FreenessVerdict v = decide_freeness(c.curve, backend);
                if (c.expected_exponents) {
                    expect(v.free(), c.name + " free");
                    expect(v.certificate->a == std::min(c.expected_exponents->first, c.expected_exponents->second) &&
                               v.certificate->b ==
                                   std::max(c.expected_exponents->first, c.expected_exponents->second),
                           c.name + " exponents");
                } else {
                    expect(!v.free(), c.name + " not free");
                }
            }
        });
    }

    json rep = base_report("fixtures run-all", {{"n", n}, {"field", field.name()}, {"slow", include_slow}});
    rep["checks"] = checks;
    rep["all_passed"] = all;
    return rep;
}

}  // namespace
