#include "a4witt/suites.hpp"

#include <algorithm>

#include "a4witt/generic.hpp"
#include "a4witt/numeric.hpp"
#include "a4witt/rng.hpp"

namespace a4witt {

namespace {

// (U,V) samples on which every pipeline stage is defined
std::vector<std::pair<Rational, Rational>> sample_uv(Rng& rng, int want, long height,
                                                     bool need_family_diagonal) {
    std::vector<std::pair<Rational, Rational>> out;
    int attempt = 0;
    while (static_cast<int>(out.size()) < want && attempt < want * 100) {
        Rng r = rng.child(static_cast<std::uint64_t>(++attempt));
        Rational U = r.rational(height), V = r.rational(height);
        Rational u2 = U * U;
        if (u2 == Rational(9)) continue;
        if ((Rational(-2) * (u2 * V - Rational(9) * V + Rational(1) - u2)).is_zero()) continue;
        if (discriminant(prop1_quartic(U, V).poly()).is_zero()) continue;
        if (need_family_diagonal &&
            !specialize_family_diagonal(prop1_family_diagonal(), U, V))
            continue;
        out.emplace_back(U, V);
    }
    return out;
}

std::vector<SymbolParams> sample_params(Rng& rng, int want, long height) {
    std::vector<SymbolParams> out;
    int attempt = 0;
    while (static_cast<int>(out.size()) < want && attempt < want * 100) {
        Rng r = rng.child(0x5151u + static_cast<std::uint64_t>(++attempt));
        SymbolParams p;
        p.A = r.rational(height);
        p.B = r.rational(height);
        p.C = r.rational(height);
        p.D = r.rational(height, /*nonzero=*/true);
        p.E = r.rational(height, /*nonzero=*/true);
        // a = 1 would make U undefined; only possible with sign +
        Rational alpha = Rational(1) + p.A * p.A + p.A * p.A * p.B * p.B;
        Rational beta = Rational(1) + p.B * p.B + p.B * p.B * p.C * p.C;
        if (p.D * p.D * alpha * beta == Rational(1)) continue;
        out.push_back(p);
    }
    return out;
}

Check pencil_checks(std::vector<Check>& out) {
    try {
        PencilReport rep = pencil_analysis();
        Json w;
        w["modulus"] = rep.str_modulus();
        w["U_of_T"] = rep.u_of_t.str();
        out.push_back(Check::pass("resolvent.pencil_proportionality", "prop2.2", w));
        out.push_back(rep.u_at_zero_is_one
                          ? Check::pass("resolvent.pencil_u_at_zero", "prop2.2",
                                        Json{{"U_at_0", "1"}})
                          : Check::fail("resolvent.pencil_u_at_zero", "prop2.2", w));
        out.push_back(rep.disc_identity_holds
                          ? Check::pass("resolvent.pencil_disc_identity", "prop2.3", w)
                          : Check::fail("resolvent.pencil_disc_identity", "prop2.3", w));
        return out.back();
    } catch (const NoProportionality& e) {
        Json w{{"error", e.what()}};
        out.push_back(Check::fail("resolvent.pencil_proportionality", "prop2.2", w));
        return out.back();
    }
}

}  // namespace

std::vector<Check> verify_prop2(const SuiteOptions& opt) {
    std::vector<Check> out;
    out.push_back(check_resolvent_formulas());
    out.push_back(check_disc_product_identity());
    out.push_back(check_hessian_identity());
    out.push_back(check_birational_roundtrip());
    pencil_checks(out);
    out.push_back(check_root_formula_random(opt.seed, opt.samples, 1e-9));
    return out;
}

namespace {

Check galois_corpus_check() {
    struct Pinned {
        const char* poly;
        GaloisLabel::Kind want;
    };
    const Pinned corpus[] = {
        {"x^4 + 8*x + 12", GaloisLabel::Kind::A4}, {"x^4 + x^3 + x^2 + x + 1", GaloisLabel::Kind::C4},
        {"x^4 + 1", GaloisLabel::Kind::V4},        {"x^4 - 2", GaloisLabel::Kind::D4},
        {"x^4 + x + 1", GaloisLabel::Kind::S4},
    };
    Json w = Json::array();
    bool ok = true;
    for (const Pinned& c : corpus) {
        MultiPoly mp = parse_multipoly(c.poly);
        RatPoly f = to_rational_poly(unipoly_in(mp, Vars::id("x")));
        auto [label, cert] = quartic_galois(f);
        Json item;
        item["quartic"] = c.poly;
        item["label"] = label.str();
        item["disc"] = cert.disc.str();
        w.push_back(item);
        if (!(label.kind == c.want)) ok = false;
    }
    return ok ? Check::pass("prop1.galois_corpus", "galois.classifier", w)
              : Check::fail("prop1.galois_corpus", "galois.classifier", w);
}

Check specialization_labels_check(std::uint64_t seed) {
    Rng rng(seed ^ 0xD1CEull);
    int collected = 0, attempt = 0;
    int a4 = 0, v4 = 0;
    bool ok = true;
    Json bad = Json::array();
    while (collected < 50 && attempt < 5000) {
        Rng r = rng.child(static_cast<std::uint64_t>(++attempt));
        Rational U = r.rational(50), V = r.rational(50);
        Quartic<Rational> P = prop1_quartic(U, V);
        RatPoly f = P.poly();
        if (discriminant(f).is_zero()) continue;
        if (!is_irreducible_quartic(f).irreducible) continue;
        auto [label, cert] = quartic_galois(f);
        collected++;
        bool is_a4 = label.kind == GaloisLabel::Kind::A4;
        bool is_v4 = label.kind == GaloisLabel::Kind::V4;
        (is_a4 ? a4 : v4)++;
        if (!is_a4 && !is_v4) {
            ok = false;
            bad.push_back(Json{{"U", U.str()}, {"V", V.str()}, {"label", label.str()}});
        }
        // with square discriminant, an irreducible resolvent must mean A4
        if (cert.resolvent_rational_roots.empty() && !is_a4) ok = false;
    }
    Json w;
    w["samples"] = collected;
    w["A4"] = a4;
    w["V4"] = v4;
    if (!bad.empty()) w["offenders"] = bad;
    return (ok && collected == 50) ? Check::pass("prop1.specialization_labels", "prop1", w)
                                   : Check::fail("prop1.specialization_labels", "prop1", w);
}

}  // namespace

Check check_witt_calibration(const SuiteOptions& opt) {
    Rng rng(opt.seed ^ 0x3117ull);
    auto formula = [](const Rational& U, const Rational& V) {
        return obstruction_formula_class(U, V);
    };
    auto diag = [](const Rational& U, const Rational& V) {
        return specialize_family_diagonal(prop1_family_diagonal(), U, V);
    };
    Json w;
    try {
        std::vector<std::pair<Rational, Rational>> cal =
            sample_uv(rng, opt.samples, 50, /*need_family_diagonal=*/true);
        ConventionReport rep = calibrate_convention(cal, formula, diag);
        w["calibration"] = rep.details;
        if (!rep.selected) {
            w["winners"] = static_cast<int>(rep.winners.size());
            return Check::fail("prop1.witt_calibration", "prop1.witt_invariant", w);
        }
        w["selected"] = convention_name(*rep.selected);
        // fresh disjoint batch must agree at rate 1.0 as well
        Rng rng2(opt.seed ^ 0xF2E54ull);
        std::vector<std::pair<Rational, Rational>> fresh =
            sample_uv(rng2, opt.samples, 50, /*need_family_diagonal=*/true);
        ConventionReport rep2 = calibrate_convention(fresh, formula, diag);
        w["fresh"] = rep2.details;
        bool fresh_ok = std::find(rep2.winners.begin(), rep2.winners.end(), *rep.selected) !=
                        rep2.winners.end();
        bool ok = fresh_ok && rep.samples == opt.samples && rep2.samples == opt.samples;
        return ok ? Check::pass("prop1.witt_calibration", "prop1.witt_invariant", w)
                  : Check::fail("prop1.witt_calibration", "prop1.witt_invariant", w);
    } catch (const NoConventionMatches& e) {
        w["error"] = e.what();
        return Check::fail("prop1.witt_calibration", "prop1.witt_invariant", w);
    }
}

std::vector<Check> verify_prop1(const SuiteOptions& opt) {
    std::vector<Check> out;
    out.push_back(check_prop1_disc_square());
    out.push_back(check_cubic_disc_square());
    out.push_back(check_change_of_variables());
    out.push_back(galois_corpus_check());
    out.push_back(specialization_labels_check(opt.seed));
    out.push_back(check_witt_calibration(opt));
    return out;
}

Check check_sign_calibration(const SuiteOptions& opt) {
    Rng rng(opt.seed ^ 0xC4117ull);
    std::vector<SymbolParams> samples = sample_params(rng, opt.samples, 20);
    Json w;
    try {
        SignCalibration cal = calibrate_criterion_sign(samples);
        w = cal.details;
        bool ok = cal.samples == opt.samples && cal.selected_sign && *cal.selected_sign == -1 &&
                  cal.trivial_plus < cal.samples && cal.negativity_invariant_ok;
        w["selected_sign"] = cal.selected_sign ? (*cal.selected_sign > 0 ? "+" : "-") : "none";
        w["negativity_invariant"] = cal.negativity_invariant_ok;
        return ok ? Check::pass("criterion.sign_calibration", "sec1.criterion", w)
                  : Check::fail("criterion.sign_calibration", "sec1.criterion", w);
    } catch (const NoSignMatches& e) {
        w["error"] = e.what();
        return Check::fail("criterion.sign_calibration", "sec1.criterion", w);
    }
}

namespace {

void end_to_end_checks(const SuiteOptions& opt, std::vector<Check>& out) {
    Rng rng(opt.seed ^ 0xE2Eull);
    std::vector<SymbolParams> samples = sample_params(rng, opt.samples, 20);
    int embeddable_ok = 0, classified = 0, totally_real = 0;
    Json offenders = Json::array();
    for (const SymbolParams& base : samples) {
        SymbolParams p = base;
        p.sign = -1;
        UVSample s = uv_from_symbols(p);
        EmbedReport rep = embeddable_from_parts(s, /*classify=*/true);
        if (rep.embeddable) {
            embeddable_ok++;
        } else {
            offenders.push_back(Json{{"U", s.U.str()}, {"V", s.V.str()},
                                     {"class", rep.obstruction.str()}});
        }
        if (rep.label) {
            classified++;
            if (rep.real_roots && *rep.real_roots == 4) totally_real++;
        }
    }
    Json w;
    w["samples"] = static_cast<int>(samples.size());
    w["embeddable"] = embeddable_ok;
    if (!offenders.empty()) w["offenders"] = offenders;
    bool ok1 = embeddable_ok == static_cast<int>(samples.size()) &&
               static_cast<int>(samples.size()) == opt.samples;
    out.push_back(ok1 ? Check::pass("criterion.end_to_end_embeddable", "theorem1", w)
                      : Check::fail("criterion.end_to_end_embeddable", "theorem1", w));
    Json w2;
    w2["irreducible_nondegenerate"] = classified;
    w2["totally_real"] = totally_real;
    bool ok2 = classified == totally_real;
    out.push_back(ok2 ? Check::pass("criterion.total_reality", "theorem1", w2)
                      : Check::fail("criterion.total_reality", "theorem1", w2));
}

}  // namespace

std::vector<Check> verify_criterion(const SuiteOptions& opt) {
    std::vector<Check> out;
    out.push_back(check_sign_calibration(opt));
    end_to_end_checks(opt, out);
    return out;
}

namespace {

Check hilbert_reciprocity_check(const SuiteOptions& opt) {
    Rng rng(opt.seed ^ 0x4eC1ull);
    int bad = 0;
    Json offender;
    for (int i = 0; i < opt.samples; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        // heights up to 10^6 via products of smaller parts
        Rational a = r.rational(1000, true) * r.rational(1000, true);
        Rational b = r.rational(1000, true) * r.rational(1000, true);
        std::set<Place> support{Place::real(), Place::finite(Int(2))};
        for (const Rational& x : {a, b}) {
            Factorization f = factorize(squarefree_part(x));
            for (const auto& [p, e] : f.primes)
                if (p != 2) support.insert(Place::finite(p));
        }
        int prod = 1;
        for (const Place& v : support) prod *= hilbert_symbol(a, b, v);
        if (prod != 1) {
            bad++;
            offender = Json{{"a", a.str()}, {"b", b.str()}};
        }
    }
    Json w{{"samples", opt.samples}, {"violations", bad}};
    if (bad) w["offender"] = offender;
    return bad == 0 ? Check::pass("infra.hilbert_reciprocity", "arith", w)
                    : Check::fail("infra.hilbert_reciprocity", "arith", w);
}

Check hilbert_identities_check(const SuiteOptions& opt) {
    Rng rng(opt.seed ^ 0xB1Cull);
    int bad = 0;
    for (int i = 0; i < opt.samples; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        Rational a = r.rational(200, true);
        Rational b1 = r.rational(200, true);
        Rational b2 = r.rational(200, true);
        std::set<Place> support{Place::real(), Place::finite(Int(2))};
        for (const Rational& x : {a, b1, b2, Rational(1) - a}) {
            if (x.is_zero()) continue;
            Factorization f = factorize(squarefree_part(x));
            for (const auto& [p, e] : f.primes)
                if (p != 2) support.insert(Place::finite(p));
        }
        for (const Place& v : support) {
            if (hilbert_symbol(a, b1 * b2, v) != hilbert_symbol(a, b1, v) * hilbert_symbol(a, b2, v))
                bad++;
            if (hilbert_symbol(a, -a, v) != 1) bad++;
            if (a != Rational(1) && hilbert_symbol(a, Rational(1) - a, v) != 1) bad++;
        }
        if (symbol_class(a * b1 * b1, b2 * a * a) != symbol_class(a, b2)) bad++;
        if (symbol_class(a, b1).ramified().size() % 2 != 0) bad++;
    }
    Json w{{"samples", opt.samples}, {"violations", bad}};
    return bad == 0 ? Check::pass("infra.hilbert_identities", "arith", w)
                    : Check::fail("infra.hilbert_identities", "arith", w);
}

Check divrem_roundtrip_check(const SuiteOptions& opt) {
    Rng rng(opt.seed ^ 0xD1Dull);
    int bad = 0;
    for (int i = 0; i < opt.samples; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        auto rand_poly = [&](int maxdeg) {
            std::vector<Rational> c;
            int deg = static_cast<int>(r.int_in(0, maxdeg));
            for (int k = 0; k <= deg; k++) c.push_back(r.rational(30));
            return RatPoly::from_ascending(std::move(c));
        };
        RatPoly f = rand_poly(6), g = rand_poly(4);
        if (g.is_zero()) continue;
        auto [q, rem] = divrem(f, g);
        if (!(q * g + rem == f)) bad++;
        if (!rem.is_zero() && rem.degree() >= g.degree()) bad++;
    }
    // a few symbolic-coefficient division round trips
    for (int i = 0; i < 5; i++) {
        Rng r = rng.child(0xF00ull + static_cast<std::uint64_t>(i));
        RatFunc t{MultiPoly::var("T")};
        auto rand_func_poly = [&](int deg) {
            std::vector<RatFunc> c;
            for (int k = 0; k <= deg; k++)
                c.push_back(RatFunc(Rational(r.int_in(-5, 5))) + t * RatFunc(Rational(r.int_in(-5, 5))));
            return FuncPoly::from_ascending(std::move(c));
        };
        FuncPoly f = rand_func_poly(4), g = rand_func_poly(2);
        if (g.is_zero()) continue;
        auto [q, rem] = divrem(f, g);
        if (!(q * g + rem == f)) bad++;
    }
    Json w{{"samples", opt.samples}, {"violations", bad}};
    return bad == 0 ? Check::pass("infra.divrem_roundtrip", "poly", w)
                    : Check::fail("infra.divrem_roundtrip", "poly", w);
}

Check sturm_numeric_check(const SuiteOptions& opt) {
    Rng rng(opt.seed ^ 0x57u);
    int done = 0, attempt = 0, bad = 0;
    while (done < opt.samples && attempt < opt.samples * 50) {
        Rng r = rng.child(static_cast<std::uint64_t>(++attempt));
        std::vector<Rational> c;
        for (int k = 0; k < 4; k++) c.push_back(Rational(r.int_in(-20, 20)));
        c.push_back(Rational(1));
        RatPoly f = RatPoly::from_ascending(std::move(c));
        if (discriminant(f).is_zero()) continue;
        done++;
        if (real_root_count(f) != numeric_real_root_count(f)) bad++;
    }
    Json w{{"samples", done}, {"violations", bad}};
    return (bad == 0 && done == opt.samples)
               ? Check::pass("infra.sturm_numeric_agreement", "galois", w)
               : Check::fail("infra.sturm_numeric_agreement", "galois", w);
}

}  // namespace

std::vector<Check> verify_infrastructure(const SuiteOptions& opt) {
    std::vector<Check> out;
    out.push_back(hilbert_reciprocity_check(opt));
    out.push_back(hilbert_identities_check(opt));
    out.push_back(divrem_roundtrip_check(opt));
    out.push_back(sturm_numeric_check(opt));
    return out;
}

std::vector<Check> verify_scope(const std::string& scope, const SuiteOptions& opt) {
    std::vector<Check> out;
    auto append = [&](std::vector<Check> v) {
        for (Check& c : v) out.push_back(std::move(c));
    };
    if (scope == "prop2") {
        append(verify_prop2(opt));
    } else if (scope == "prop1") {
        append(verify_prop1(opt));
    } else if (scope == "criterion") {
        append(verify_criterion(opt));
    } else if (scope == "all") {
        append(verify_prop2(opt));
        append(verify_prop1(opt));
        append(verify_criterion(opt));
        append(verify_infrastructure(opt));
    } else {
        throw Error("unknown verify scope: " + scope);
    }
    return out;
}

}  // namespace a4witt
