#include "a4witt/traceform.hpp"

#include <algorithm>

namespace a4witt {

namespace {

template <typename C>
int pick_pivot(const Gram<C>& M, int k) {
    // first j >= k with a nonzero diagonal entry; for rationals, the smallest
    // height wins (keeps intermediate entries small)
    int best = -1;
    for (int j = k; j < 4; j++) {
        const C& cand = M[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
        if (cand.is_zero()) continue;
        if constexpr (std::is_same_v<C, Rational>) {
            if (best < 0 ||
                cand.height() < M[static_cast<std::size_t>(best)][static_cast<std::size_t>(best)].height())
                best = j;
        } else {
            if (best < 0) best = j;
        }
    }
    return best;
}

template <typename C>
void swap_basis(Gram<C>& M, int a, int b) {
    for (int j = 0; j < 4; j++)
        std::swap(M[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)],
                  M[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)]);
    for (int i = 0; i < 4; i++)
        std::swap(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)],
                  M[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)]);
}

// basis vector a += basis vector b (rows then columns)
template <typename C>
void add_basis(Gram<C>& M, int a, int b) {
    for (int j = 0; j < 4; j++)
        M[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] =
            M[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] +
            M[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
    for (int i = 0; i < 4; i++)
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] =
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] +
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
}

}  // namespace

template <typename C>
std::array<C, 4> congruent_diagonal(Gram<C> M, std::vector<C>* pivots_out) {
    std::array<C, 4> d{C(0), C(0), C(0), C(0)};
    for (int k = 0; k < 4; k++) {
        if (M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
            int j = pick_pivot(M, k);
            if (j >= 0) {
                swap_basis(M, k, j);
            } else {
                // all remaining diagonal entries vanish; an off-diagonal
                // entry 2*M[i][j] becomes the pivot after adding a row
                int ii = -1, jj = -1;
                for (int i = k; i < 4 && ii < 0; i++)
                    for (int j2 = k; j2 < 4; j2++)
                        if (i != j2 &&
                            !M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)].is_zero()) {
                            ii = i;
                            jj = j2;
                            break;
                        }
                if (ii < 0) throw DegenerateForm("form is singular (disc = 0)");
                add_basis(M, ii, jj);
                if (ii != k) swap_basis(M, k, ii);
            }
        } else if constexpr (std::is_same_v<C, Rational>) {
            int j = pick_pivot(M, k);
            if (j != k) swap_basis(M, k, j);
        }
        const C pivot = M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        if (pivot.is_zero()) throw DegenerateForm("zero pivot");
        if (pivots_out) pivots_out->push_back(pivot);
        for (int i = k + 1; i < 4; i++) {
            C f = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] / pivot;
            if (f.is_zero()) continue;
            for (int j = 0; j < 4; j++)
                M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    f * M[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            for (int j = 0; j < 4; j++)
                M[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    M[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -
                    f * M[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        }
        d[static_cast<std::size_t>(k)] = pivot;
    }
    return d;
}

template std::array<Rational, 4> congruent_diagonal<Rational>(Gram<Rational>, std::vector<Rational>*);
template std::array<RatFunc, 4> congruent_diagonal<RatFunc>(Gram<RatFunc>, std::vector<RatFunc>*);

int DiagonalForm::signature() const {
    int s = 0;
    for (const Int& x : d) s += sgn(x) > 0 ? 1 : -1;
    return s;
}

DiagonalForm diagonalize(const GramMatrix& G) {
    std::array<Rational, 4> raw = congruent_diagonal<Rational>(G);
    DiagonalForm out;
    for (int i = 0; i < 4; i++) out.d[static_cast<std::size_t>(i)] = squarefree_part(raw[static_cast<std::size_t>(i)]);
    return out;
}

std::string convention_name(WittConvention c) {
    switch (c) {
        case WittConvention::HASSE: return "HASSE";
        case WittConvention::HASSE_PLUS_MINUSONE: return "HASSE_PLUS_MINUSONE";
        case WittConvention::HASSE_PLUS_DISC: return "HASSE_PLUS_DISC";
    }
    return "?";
}

BrauerClass witt_class_pieces(const DiagonalPieces& d, WittConvention conv) {
    BrauerClass cls;
    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++)
            cls = class_add(cls, symbol_class_parts(d[static_cast<std::size_t>(i)],
                                                    d[static_cast<std::size_t>(j)]));
    const Rational minus_one(-1);
    if (conv == WittConvention::HASSE_PLUS_MINUSONE) {
        cls = class_add(cls, symbol_class(minus_one, minus_one));
    } else if (conv == WittConvention::HASSE_PLUS_DISC) {
        // (-1, -disc) with disc = product of all diagonal entries
        std::vector<Rational> parts{minus_one};
        for (const auto& entry : d) parts.insert(parts.end(), entry.begin(), entry.end());
        cls = class_add(cls, symbol_class_parts({minus_one}, parts));
    }
    return cls;
}

BrauerClass witt_class(const DiagonalForm& d, WittConvention conv) {
    DiagonalPieces pieces;
    for (int i = 0; i < 4; i++) {
        if (sgn(d.d[static_cast<std::size_t>(i)]) == 0) throw Error("witt_class of degenerate diagonal");
        pieces[static_cast<std::size_t>(i)] = {Rational(d.d[static_cast<std::size_t>(i)])};
    }
    return witt_class_pieces(pieces, conv);
}

int signature_of_pieces(const DiagonalPieces& d) {
    int s = 0;
    for (const auto& entry : d) {
        int sign = 1;
        for (const Rational& x : entry) sign *= x.sign();
        s += sign;
    }
    return s;
}

namespace {

RatPoly to_ratpoly(const MultiPoly& h, int var) {
    std::vector<MultiPoly> cs = h.coefficients_in(var);
    std::vector<Rational> out;
    out.reserve(cs.size());
    for (const MultiPoly& c : cs) {
        if (!c.is_constant()) throw Error("polynomial is not univariate in the given variable");
        out.push_back(c.constant_value());
    }
    return RatPoly::from_ascending(std::move(out));
}

MultiPoly from_ratpoly(const RatPoly& f, int var) {
    MultiPoly out;
    for (int k = 0; k <= f.degree(); k++)
        out += MultiPoly(f.coeff(k)) * MultiPoly::var(var, k);
    return out;
}

// primitive integer polynomial with positive leading coefficient
RatPoly primitive_part(const RatPoly& f, Rational* scale_out) {
    Int g = 0, l = 1;
    for (int k = 0; k <= f.degree(); k++) {
        const Rational& c = f.coeff(k);
        if (c.is_zero()) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    }
    Rational content(g, l);
    if (f.lc().sign() < 0) content = -content;
    if (scale_out) *scale_out = content;
    return f * (Rational(1) / content);
}

// f == scalar * prod(odd pieces) modulo squares in Q(x)
std::pair<Rational, std::vector<RatPoly>> square_class_core_uni(const RatPoly& f) {
    auto [unit, factors] = squarefree_decomposition(f);
    Rational s = unit;
    std::vector<RatPoly> pieces;
    for (const auto& [p, mult] : factors) {
        Rational content;
        RatPoly prim = primitive_part(p, &content);
        s = s * pow(content, static_cast<unsigned>(mult));
        if (mult % 2 == 1 && prim.degree() > 0) pieces.push_back(prim);
    }
    return {s, pieces};
}

RatPoly uni_gcd_list(const std::vector<RatPoly>& fs) {
    RatPoly g;
    for (const RatPoly& f : fs) {
        if (f.is_zero()) continue;
        g = g.is_zero() ? f.monic() : gcd_poly(g, f);
        if (g.degree() == 0) break;
    }
    return g.is_zero() ? RatPoly(Rational(1)) : g.monic();
}

}  // namespace

SquareClassCore square_class_core(const MultiPoly& h) {
    if (h.is_zero()) throw Error("square class of zero");
    std::vector<int> vars = h.variables();
    SquareClassCore out;
    out.scalar = Rational(1);

    if (vars.empty()) {
        out.scalar = h.constant_value();
        return out;
    }
    if (vars.size() == 1) {
        int v = vars[0];
        auto [s, pieces] = square_class_core_uni(to_ratpoly(h, v));
        out.scalar = s;
        for (const RatPoly& p : pieces) out.pieces.push_back(from_ratpoly(p, v));
        return out;
    }
    if (vars.size() != 2) throw Error("square_class_core supports at most two variables");

    int u = vars[0], v = vars[1];
    // split off the Q[v]-content so the remaining part is primitive in u
    std::vector<MultiPoly> cs = h.coefficients_in(u);
    std::vector<RatPoly> cs_uni;
    for (const MultiPoly& c : cs)
        if (!c.is_zero()) cs_uni.push_back(to_ratpoly(c, v));
    RatPoly cont = uni_gcd_list(cs_uni);
    MultiPoly pp = h;
    if (cont.degree() > 0) {
        auto q = h.exact_divide(from_ratpoly(cont, v));
        if (!q) throw Error("content division failed");
        pp = *q;
        auto [s1, p1] = square_class_core_uni(cont);
        out.scalar *= s1;
        for (const RatPoly& p : p1) out.pieces.push_back(from_ratpoly(p, v));
    }

    // Yun over the field Q(v): pp = unit(v) * prod a_i(u,v)^i with a_i monic in u
    FuncPoly F = unipoly_in(pp, u);
    auto [unitF, factorsF] = squarefree_decomposition(F);
    {
        // unit is a rational function of v; modulo squares it is num*den
        MultiPoly un = unitF.num() * unitF.den();
        SquareClassCore sub = square_class_core(un);  // at most one variable
        out.scalar *= sub.scalar;
        for (MultiPoly& p : sub.pieces) out.pieces.push_back(std::move(p));
    }
    for (const auto& [a, mult] : factorsF) {
        if (mult % 2 == 0) continue;
        // clear v-denominators: a = atilde / D, so a ~ atilde * D mod squares
        RatPoly D(Rational(1));
        for (int k = 0; k <= a.degree(); k++) {
            const RatFunc& c = a.coeff(k);
            if (c.is_zero()) continue;
            RatPoly dk = c.den().is_constant() ? RatPoly(c.den().constant_value())
                                               : to_ratpoly(c.den(), v);
            RatPoly g = gcd_poly(D, dk);
            D = (D * dk) / g;  // lcm
        }
        MultiPoly atilde;
        MultiPoly Dmp = from_ratpoly(D, v);
        for (int k = 0; k <= a.degree(); k++) {
            const RatFunc& c = a.coeff(k);
            if (c.is_zero()) continue;
            auto q = Dmp.exact_divide(c.den());
            if (!q) throw Error("denominator does not divide the common denominator");
            atilde += c.num() * (*q) * MultiPoly::var(u, k);
        }
        // strip v-content of atilde, then keep the primitive bivariate piece
        std::vector<MultiPoly> acs = atilde.coefficients_in(u);
        std::vector<RatPoly> acs_uni;
        for (const MultiPoly& c : acs)
            if (!c.is_zero()) acs_uni.push_back(to_ratpoly(c, v));
        RatPoly acont = uni_gcd_list(acs_uni);
        MultiPoly core = atilde;
        if (acont.degree() > 0) {
            auto q = atilde.exact_divide(from_ratpoly(acont, v));
            if (!q) throw Error("content division failed");
            core = *q;
            auto [sc, pc] = square_class_core_uni(acont);
            out.scalar *= sc;
            for (const RatPoly& p : pc) out.pieces.push_back(from_ratpoly(p, v));
        }
        {
            Rational content = core.content();
            if (core.leading_coeff().sign() < 0) content = -content;
            core *= Rational(1) / content;
            out.scalar *= content;
        }
        if (!core.is_constant()) out.pieces.push_back(core);
        // and the denominator D contributes its own square class
        if (D.degree() > 0) {
            auto [sd, pd] = square_class_core_uni(D);
            out.scalar *= sd;
            for (const RatPoly& p : pd) out.pieces.push_back(from_ratpoly(p, v));
        }
    }
    return out;
}

FamilyDiagonal build_family_diagonal(const Quartic<RatFunc>& family, const std::string& pu,
                                     const std::string& pv) {
    FamilyDiagonal fam;
    fam.param_u = Vars::id(pu);
    fam.param_v = Vars::id(pv);
    Gram<RatFunc> G = gram_matrix(family);
    std::vector<RatFunc> pivots;
    std::array<RatFunc, 4> d = congruent_diagonal<RatFunc>(G, &pivots);
    fam.d_sym = d;
    for (const RatFunc& p : pivots) {
        if (!p.num().is_constant()) fam.guards.push_back(p.num());
        if (!p.den().is_constant()) fam.guards.push_back(p.den());
    }
    for (int i = 0; i < 4; i++) {
        const RatFunc& di = d[static_cast<std::size_t>(i)];
        // square class of n/d equals square class of n*d
        SquareClassCore core = square_class_core(di.num() * di.den());
        Rational scalar{squarefree_part(core.scalar)};  // factored once, at build time
        // sanity: d_i / (scalar * prod pieces) must be a square in Q(U,V)
        RatFunc rest{di};
        rest = rest / RatFunc(MultiPoly(scalar));
        for (const MultiPoly& p : core.pieces) rest = rest / RatFunc(p);
        if (!ratfunc_is_square(rest))
            throw Error("family diagonal core extraction lost a square class");
        fam.core_scalars[static_cast<std::size_t>(i)] = scalar;
        fam.core_polys[static_cast<std::size_t>(i)] = core.pieces;
    }
    return fam;
}

std::optional<DiagonalPieces> specialize_family_diagonal(const FamilyDiagonal& fam,
                                                         const Rational& U, const Rational& V) {
    std::map<int, Rational> at{{fam.param_u, U}, {fam.param_v, V}};
    auto eval_full = [&](const MultiPoly& p) {
        std::map<int, Rational> bound;
        for (int v : p.variables()) {
            auto it = at.find(v);
            if (it == at.end()) throw Error("family diagonal depends on an unexpected variable");
            bound.emplace(*it);
        }
        return p.eval(bound);
    };
    for (const MultiPoly& g : fam.guards)
        if (eval_full(g).is_zero()) return std::nullopt;

    DiagonalPieces out;
    for (int i = 0; i < 4; i++) {
        const RatFunc& di = fam.d_sym[static_cast<std::size_t>(i)];
        Rational dd = eval_full(di.den());
        if (dd.is_zero()) return std::nullopt;
        Rational dn = eval_full(di.num());
        if (dn.is_zero()) return std::nullopt;  // degenerate sample (disc vanishes)
        Rational d_val = dn / dd;

        std::vector<Rational>& pieces = out[static_cast<std::size_t>(i)];
        pieces.push_back(fam.core_scalars[static_cast<std::size_t>(i)]);
        Rational prod = pieces.back();
        for (const MultiPoly& p : fam.core_polys[static_cast<std::size_t>(i)]) {
            Rational val = eval_full(p);
            if (val.is_zero()) return std::nullopt;
            pieces.push_back(val);
            prod *= val;
        }
        // the specialized entry and its core product must differ by a square
        if (!is_square(d_val / prod)) return std::nullopt;
    }
    return out;
}

ConventionReport calibrate_convention(
    const std::vector<std::pair<Rational, Rational>>& samples,
    const std::function<BrauerClass(const Rational&, const Rational&)>& formula_class,
    const std::function<std::optional<DiagonalPieces>(const Rational&, const Rational&)>&
        trace_diagonal) {
    if (samples.empty()) throw NoConventionMatches("empty calibration sample list");
    ConventionReport rep;
    Json mismatches = Json::object();
    for (const auto& [U, V] : samples) {
        std::optional<DiagonalPieces> pieces = trace_diagonal(U, V);
        if (!pieces) continue;  // degenerate locus; sampler should avoid these
        BrauerClass target = formula_class(U, V);
        rep.samples++;
        for (std::size_t c = 0; c < kAllConventions.size(); c++) {
            BrauerClass got = witt_class_pieces(*pieces, kAllConventions[c]);
            if (got == target) {
                rep.agree_counts[c]++;
            } else if (!mismatches.contains(convention_name(kAllConventions[c]))) {
                Json m;
                m["U"] = U.str();
                m["V"] = V.str();
                m["witt"] = got.str();
                m["formula"] = target.str();
                mismatches[convention_name(kAllConventions[c])] = m;
            }
        }
    }
    if (rep.samples == 0) throw NoConventionMatches("all samples fell on the degenerate locus");
    for (std::size_t c = 0; c < kAllConventions.size(); c++) {
        rep.details[convention_name(kAllConventions[c])] =
            Json{{"agree", rep.agree_counts[c]}, {"samples", rep.samples}};
        if (rep.agree_counts[c] == rep.samples) rep.winners.push_back(kAllConventions[c]);
    }
    rep.details["mismatch_witnesses"] = mismatches;
    if (rep.winners.empty())
        throw NoConventionMatches("no Witt convention matches the invariant formula");
    if (rep.winners.size() == 1) rep.selected = rep.winners.front();
    return rep;
}

}  // namespace a4witt
