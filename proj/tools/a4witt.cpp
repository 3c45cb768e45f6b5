#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "a4witt/generic.hpp"
#include "a4witt/numeric.hpp"
#include "a4witt/suites.hpp"

namespace {

using namespace a4witt;

constexpr std::uint64_t kDefaultSeed = 0xA4;

// quartic input: descending coefficient list "[1,-4,38,-4,33]" or an
// expression in one variable like "x^4 - 4*x^3 + 38*x^2 - 4*x + 33"
RatPoly parse_unipoly_arg(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw ParseError("expected ']' at end of coefficient list", s.size());
        std::vector<Rational> coeffs;
        std::string body = s.substr(1, s.size() - 2);
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
            if (tok.empty()) throw ParseError("empty coefficient", pos + 1);
            coeffs.push_back(Rational::parse(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return RatPoly::from_descending(std::move(coeffs));
    }
    MultiPoly p = parse_multipoly(s);
    std::vector<int> vars = p.variables();
    if (vars.size() > 1) throw ParseError("expected a univariate polynomial", 0);
    if (vars.empty()) return RatPoly(p.constant_value());
    return to_rational_poly(unipoly_in(p, vars.front()));
}

RatPoly require_monic_quartic_arg(const std::string& text) {
    RatPoly f = parse_unipoly_arg(text);
    if (f.degree() != 4) throw ParseError("expected a quartic polynomial", 0);
    if (!(f.lc() == Rational(1))) throw ParseError("expected a monic quartic", 0);
    return f;
}

Json poly_json(const RatPoly& f) {
    Json coeffs = Json::array();
    for (const Rational& c : f.descending()) coeffs.push_back(c.str());
    Json j;
    j["text"] = f.str("x");
    j["coefficients"] = coeffs;
    return j;
}

Json class_json(const BrauerClass& cls) {
    Json j;
    j["trivial"] = cls.is_trivial();
    j["ramified"] = cls.place_names();
    return j;
}

int emit(Report& rep, std::chrono::steady_clock::time_point t0, int exit_code) {
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    std::cout << rep.to_json().dump(2) << std::endl;
    int pass = 0, fail = 0;
    for (const Check& c : rep.claims) (c.passed() ? pass : fail)++;
    if (!rep.claims.empty())
        std::cerr << rep.command << ": " << pass << " claim(s) passed, " << fail << " failed"
                  << std::endl;
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for quartic resolvents, trace-form Witt invariants "
                 "and Hilbert-symbol parametrizations"};
    app.require_subcommand(1);

    if (const char* ceiling = std::getenv("A4WITT_FACTOR_CEILING")) {
        try {
            FactorLimits::set_ceiling(Int(ceiling));
        } catch (const std::exception&) {
            std::cerr << "invalid A4WITT_FACTOR_CEILING: " << ceiling << std::endl;
            return 2;
        }
    }

    std::uint64_t seed = kDefaultSeed;
    int samples = 100;
    std::string scope, poly_arg, u_str, v_str;
    std::string a_str, b_str, c_str, d_str = "1", e_str = "1", sign_str = "-";
    std::string convention = "HASSE";
    bool search_params = false;

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("scope", scope, "prop2 | prop1 | criterion | all")->required();
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--samples", samples, "sample count per randomized suite");

    CLI::App* resolvent = app.add_subcommand("resolvent", "resolvent cubic of a monic quartic");
    resolvent->add_option("quartic", poly_arg, "monic quartic")->required();

    CLI::App* galois = app.add_subcommand("galois", "Galois group of a monic quartic");
    galois->add_option("quartic", poly_arg, "monic quartic")->required();

    CLI::App* traceform = app.add_subcommand("traceform", "trace form invariants of a quartic");
    traceform->add_option("quartic", poly_arg, "monic quartic")->required();
    traceform->add_option("--convention", convention,
                          "HASSE | HASSE_PLUS_MINUSONE | HASSE_PLUS_DISC");

    CLI::App* specialize = app.add_subcommand("specialize", "specialize the generic quartic");
    specialize->add_option("--U", u_str)->required();
    specialize->add_option("--V", v_str)->required();

    CLI::App* param = app.add_subcommand("param", "derive (U,V) from symbol parameters");
    param->add_option("--A", a_str)->required();
    param->add_option("--B", b_str)->required();
    param->add_option("--C", c_str)->required();
    param->add_option("--D", d_str)->required();
    param->add_option("--E", e_str)->required();
    param->add_option("--sign", sign_str, "+ or - (default -)");

    CLI::App* embed = app.add_subcommand("embeddable", "decide the embedding obstruction");
    embed->add_option("--U", u_str)->required();
    embed->add_option("--V", v_str)->required();
    embed->add_flag("--search-params", search_params, "also search for symbol parameters");

    CLI::App* calibrate = app.add_subcommand("calibrate", "run both calibrations");
    calibrate->add_option("--seed", seed, "random seed");
    calibrate->add_option("--samples", samples, "sample count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.seed = seed;

    try {
        if (verify->parsed()) {
            rep.command = "verify";
            rep.inputs = Json{{"scope", scope}, {"samples", samples}};
            SuiteOptions opt{seed, samples};
            rep.claims = verify_scope(scope, opt);
            return emit(rep, t0, rep.all_passed() ? 0 : 1);
        }
        if (resolvent->parsed()) {
            rep.command = "resolvent";
            RatPoly f = require_monic_quartic_arg(poly_arg);
            rep.inputs = Json{{"quartic", poly_json(f)}};
            Quartic<Rational> P = Quartic<Rational>::from_poly(f);
            ResolventCubic<Rational> Q = resolvent_from_division(P);
            Json r;
            r["b0"] = Q.b0.str();
            r["b1"] = Q.b1.str();
            r["b2"] = Q.b2.str();
            r["b3"] = Q.b3.str();
            r["resolvent"] = Q.poly().str("x");
            if (!Q.b0.is_zero()) {
                CCoords<Rational> c = to_c_coords(P);
                r["c_coords"] = Json{{"a1", c.a1.str()}, {"c1", c.c1.str()}, {"c2", c.c2.str()},
                                     {"c3", c.c3.str()}};
            } else {
                r["c_coords"] = "degenerate (b0 = 0)";
            }
            rep.result = r;
            return emit(rep, t0, 0);
        }
        if (galois->parsed()) {
            rep.command = "galois";
            RatPoly f = require_monic_quartic_arg(poly_arg);
            rep.inputs = Json{{"quartic", poly_json(f)}};
            Json r;
            Rational disc = discriminant(f);
            if (disc.is_zero()) throw SingularInput("quartic has zero discriminant");
            IrreducibilityResult irr = is_irreducible_quartic(f);
            if (!irr.irreducible) {
                GaloisLabel label{GaloisLabel::Kind::Reducible, irr.shape};
                r["label"] = label.str();
                r["certificate"] = Json{{"disc", disc.str()}, {"shape", irr.shape}};
            } else {
                auto [label, cert] = quartic_galois(f);
                r["label"] = label.str();
                Json roots = Json::array();
                for (const Rational& x : cert.resolvent_rational_roots) roots.push_back(x.str());
                Json tests = Json::array();
                for (const auto& [desc, verdict] : cert.squareness_tests)
                    tests.push_back(Json{{"test", desc}, {"verdict", verdict}});
                r["certificate"] = Json{{"disc", cert.disc.str()},
                                        {"disc_is_square", cert.disc_is_square},
                                        {"resolvent", cert.resolvent.str("y")},
                                        {"resolvent_rational_roots", roots},
                                        {"squareness_tests", tests}};
            }
            rep.result = r;
            return emit(rep, t0, 0);
        }
        if (traceform->parsed()) {
            rep.command = "traceform";
            RatPoly f = require_monic_quartic_arg(poly_arg);
            rep.inputs = Json{{"quartic", poly_json(f)}, {"convention", convention}};
            WittConvention conv;
            if (convention == "HASSE")
                conv = WittConvention::HASSE;
            else if (convention == "HASSE_PLUS_MINUSONE")
                conv = WittConvention::HASSE_PLUS_MINUSONE;
            else if (convention == "HASSE_PLUS_DISC")
                conv = WittConvention::HASSE_PLUS_DISC;
            else
                throw ParseError("unknown convention " + convention, 0);
            Quartic<Rational> P = Quartic<Rational>::from_poly(f);
            GramMatrix G = gram_matrix(P);
            Json gram = Json::array();
            for (const auto& row : G) {
                Json r = Json::array();
                for (const Rational& x : row) r.push_back(x.str());
                gram.push_back(r);
            }
            DiagonalForm diag = diagonalize(G);
            Json dd = Json::array();
            for (const Int& x : diag.d) dd.push_back(x.get_str());
            Json r;
            r["gram"] = gram;
            r["diagonal"] = dd;
            r["signature"] = diag.signature();
            r["witt"] = Json{{"convention", convention},
                             {"ramified", witt_class(diag, conv).place_names()}};
            rep.result = r;
            return emit(rep, t0, 0);
        }
        if (specialize->parsed()) {
            rep.command = "specialize";
            Rational U = Rational::parse(u_str), V = Rational::parse(v_str);
            rep.inputs = Json{{"U", U.str()}, {"V", V.str()}};
            Quartic<Rational> P = prop1_quartic(U, V);
            RatPoly f = P.poly();
            Json r;
            r["quartic"] = poly_json(f);
            Rational disc = discriminant(f);
            r["disc"] = disc.str();
            r["disc_is_square"] = is_square(disc);
            if (!disc.is_zero()) {
                IrreducibilityResult irr = is_irreducible_quartic(f);
                if (irr.irreducible) {
                    auto [label, cert] = quartic_galois(f);
                    r["label"] = label.str();
                    r["real_roots"] = real_root_count(f);
                } else {
                    r["label"] = GaloisLabel{GaloisLabel::Kind::Reducible, irr.shape}.str();
                }
            }
            try {
                r["obstruction"] = class_json(obstruction_formula_class(U, V));
            } catch (const UndefinedSymbol& e) {
                r["obstruction"] = Json{{"error", e.what()}};
            }
            rep.result = r;
            return emit(rep, t0, 0);
        }
        if (param->parsed()) {
            rep.command = "param";
            SymbolParams p;
            p.A = Rational::parse(a_str);
            p.B = Rational::parse(b_str);
            p.C = Rational::parse(c_str);
            p.D = Rational::parse(d_str);
            p.E = Rational::parse(e_str);
            if (sign_str == "+")
                p.sign = 1;
            else if (sign_str == "-")
                p.sign = -1;
            else
                throw ParseError("sign must be + or -", 0);
            rep.inputs = Json{{"A", p.A.str()}, {"B", p.B.str()}, {"C", p.C.str()},
                              {"D", p.D.str()}, {"E", p.E.str()}, {"sign", sign_str}};
            UVSample s = uv_from_symbols(p);
            Json r;
            r["a"] = s.ab.a.str();
            r["b"] = s.ab.b.str();
            r["U"] = s.U.str();
            r["V"] = s.V.str();
            EmbedReport er = embeddable_from_parts(s, /*classify=*/true);
            r["embeddable"] = er.embeddable;
            r["obstruction"] = class_json(er.obstruction);
            if (er.label) r["label"] = er.label->str();
            if (er.real_roots) r["real_roots"] = *er.real_roots;
            rep.result = r;
            return emit(rep, t0, 0);
        }
        if (embed->parsed()) {
            rep.command = "embeddable";
            Rational U = Rational::parse(u_str), V = Rational::parse(v_str);
            rep.inputs = Json{{"U", U.str()}, {"V", V.str()}};
            EmbedReport er = embeddable(U, V, /*classify=*/true);
            Json r;
            r["embeddable"] = er.embeddable;
            r["obstruction"] = class_json(er.obstruction);
            if (er.label) r["label"] = er.label->str();
            if (er.real_roots) r["real_roots"] = *er.real_roots;
            if (er.shape) r["shape"] = *er.shape;
            if (search_params) {
                auto found = search_symbol_params(U, V, 30);
                if (found) {
                    r["params"] = Json{{"A", found->A.str()}, {"B", found->B.str()},
                                       {"C", found->C.str()}, {"D", found->D.str()},
                                       {"E", found->E.str()},
                                       {"sign", found->sign > 0 ? "+" : "-"}};
                } else {
                    r["params"] = "not found within the search bound";
                }
            }
            rep.result = r;
            return emit(rep, t0, er.embeddable ? 0 : 1);
        }
        if (calibrate->parsed()) {
            rep.command = "calibrate";
            rep.inputs = Json{{"samples", samples}};
            SuiteOptions opt{seed, samples};
            rep.claims.push_back(check_sign_calibration(opt));
            rep.claims.push_back(check_witt_calibration(opt));
            return emit(rep, t0, rep.all_passed() ? 0 : 1);
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return 2;
    } catch (const UndefinedSymbol& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return 2;
    } catch (const SingularInput& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return 2;
    } catch (const DegenerateParams& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}
