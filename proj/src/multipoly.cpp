#include "a4witt/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "a4witt/factor.hpp"

namespace a4witt {

namespace {

std::mutex vars_mutex;

struct VarRegistry {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> ids;
    VarRegistry() {
        static const char* canonical[] = {"a1", "a2", "a3", "a4", "T", "U", "V", "u", "v",
                                          "c1", "c2", "c3", "X", "Y", "A", "B", "C", "D", "E"};
        for (const char* n : canonical) {
            ids.emplace(n, static_cast<int>(names.size()));
            names.emplace_back(n);
        }
    }
};

VarRegistry& registry() {
    static VarRegistry r;
    return r;
}

}  // namespace

int Vars::id(const std::string& name) {
    std::lock_guard<std::mutex> lk(vars_mutex);
    VarRegistry& r = registry();
    auto it = r.ids.find(name);
    if (it != r.ids.end()) return it->second;
    int id = static_cast<int>(r.names.size());
    r.ids.emplace(name, id);
    r.names.push_back(name);
    return id;
}

std::string Vars::name(int id) {
    std::lock_guard<std::mutex> lk(vars_mutex);
    return registry().names.at(static_cast<std::size_t>(id));
}

Monomial Monomial::var(int v, int e) {
    Monomial m;
    if (e < 0) throw Error("negative exponent in monomial");
    if (e > 0) m.factors_.emplace_back(v, e);
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::degree_in(int var) const {
    for (const auto& [v, e] : factors_)
        if (v == var) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    auto b = o.factors_.begin();
    for (const auto& [v, e] : factors_) {
        while (b != o.factors_.end() && b->first < v) ++b;
        if (b == o.factors_.end() || b->first != v || b->second < e) return false;
    }
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    Monomial out;
    auto a = factors_.begin();
    for (const auto& [v, e] : o.factors_) {
        int sub = 0;
        if (a != factors_.end() && a->first == v) {
            sub = a->second;
            ++a;
        }
        if (e - sub > 0) out.factors_.emplace_back(v, e - sub);
    }
    return out;
}

Monomial Monomial::without(int var) const {
    Monomial out;
    for (const auto& f : factors_)
        if (f.first != var) out.factors_.push_back(f);
    return out;
}

bool MonoOrder::operator()(const Monomial& a, const Monomial& b) const {
    // "a < b" here means a is *closer to the front*, i.e. graded-lex greater.
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    auto x = a.factors().begin(), xe = a.factors().end();
    auto y = b.factors().begin(), ye = b.factors().end();
    while (x != xe && y != ye) {
        if (x->first != y->first) return x->first < y->first;  // earlier var with positive exp wins
        if (x->second != y->second) return x->second > y->second;
        ++x;
        ++y;
    }
    return x != xe;  // remaining positive exponents on earlier... (y exhausted): a lex-greater
}

MultiPoly MultiPoly::var(const std::string& name, int exp) { return var(Vars::id(name), exp); }

MultiPoly MultiPoly::var(int id, int exp) {
    MultiPoly p;
    p.set_term(Monomial::var(id, exp), Rational(1));
    return p;
}

void MultiPoly::set_term(const Monomial& m, const Rational& c) {
    if (!c.is_zero()) terms_[m] = c;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value of non-constant polynomial");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total_degree();
}

int MultiPoly::degree_in(int var) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(var));
    return d;
}

std::vector<int> MultiPoly::variables() const {
    std::vector<int> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    return vs;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma * mb;
            Rational c = ca * cb;
            auto [it, inserted] = out.terms_.emplace(std::move(m), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        int e = m.degree_in(var);
        if (e == 0) continue;
        Monomial dm = m.without(var) * Monomial::var(var, e - 1);
        out.set_term(dm, c * Rational(e));
    }
    return out;
}

Rational MultiPoly::content() const {
    if (is_zero()) throw Error("content of zero polynomial");
    Int g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    }
    return Rational(g, l);
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& g) const {
    if (g.is_zero()) throw Error("exact division by zero polynomial");
    MultiPoly rem = *this;
    MultiPoly q;
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        if (!g.leading_monomial().divides(lm)) return std::nullopt;
        Monomial qm = g.leading_monomial().divide_into(lm);
        Rational qc = rem.leading_coeff() / g.leading_coeff();
        MultiPoly t;
        t.set_term(qm, qc);
        q += t;
        rem -= t * g;
    }
    return q;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
    int d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d, 0)) + 1);
    for (const auto& [m, c] : terms_) {
        int e = m.degree_in(var);
        out[static_cast<std::size_t>(e)].set_term(m.without(var), c);
    }
    return out;
}

MultiPoly MultiPoly::from_coefficients_in(const std::vector<MultiPoly>& coeffs, int var) {
    MultiPoly out;
    for (std::size_t e = 0; e < coeffs.size(); e++) {
        MultiPoly pw = MultiPoly::var(var, static_cast<int>(e));
        out += coeffs[e] * pw;
    }
    return out;
}

Rational MultiPoly::eval(const std::map<int, Rational>& values) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = values.find(v);
            if (it == values.end()) throw Error("eval: unbound variable " + Vars::name(v));
            t *= a4witt::pow(it->second, static_cast<unsigned>(e));
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_poly(const std::map<int, MultiPoly>& bindings) const {
    MultiPoly acc;
    std::map<int, std::vector<MultiPoly>> powers;  // memoized binding powers
    auto power_of = [&](int v, int e) -> const MultiPoly& {
        auto& vec = powers[v];
        if (vec.empty()) vec.push_back(MultiPoly(1));
        while (static_cast<int>(vec.size()) <= e) vec.push_back(vec.back() * bindings.at(v));
        return vec[static_cast<std::size_t>(e)];
    };
    for (const auto& [m, c] : terms_) {
        MultiPoly t(c);
        for (const auto& [v, e] : m.factors()) {
            if (bindings.count(v))
                t *= power_of(v, e);
            else
                t *= MultiPoly::var(v, e);
        }
        acc += t;
    }
    return acc;
}

RatFunc MultiPoly::substitute(const std::map<int, RatFunc>& bindings) const {
    RatFunc acc;
    std::map<int, std::vector<RatFunc>> powers;
    auto power_of = [&](int v, int e) -> const RatFunc& {
        auto& vec = powers[v];
        if (vec.empty()) vec.push_back(RatFunc(1));
        while (static_cast<int>(vec.size()) <= e) vec.push_back(vec.back() * bindings.at(v));
        return vec[static_cast<std::size_t>(e)];
    };
    for (const auto& [m, c] : terms_) {
        RatFunc t{Rational(c)};
        for (const auto& [v, e] : m.factors()) {
            if (bindings.count(v))
                t *= power_of(v, e);
            else
                t *= RatFunc(MultiPoly::var(v, e));
        }
        acc += t;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool coef_one = (a == Rational(1));
        if (!coef_one || m.is_one()) os << a.str();
        bool need_star = !coef_one && !m.is_one();
        bool first_var = true;
        for (const auto& [v, e] : m.factors()) {
            if (need_star || !first_var) os << "*";
            os << Vars::name(v);
            if (e > 1) os << "^" << e;
            need_star = false;
            first_var = false;
        }
    }
    return os.str();
}

std::optional<MultiPoly> poly_square_root(const MultiPoly& f) {
    if (f.is_zero()) throw Error("poly_square_root of zero");
    if (f.is_constant()) {
        Rational c = f.constant_value();
        if (!is_square(c)) return std::nullopt;
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), c.denominator().get_mpz_t());
        return MultiPoly(Rational(rn, rd));
    }
    int var = f.variables().front();
    std::vector<MultiPoly> c = f.coefficients_in(var);
    int deg = static_cast<int>(c.size()) - 1;
    if (deg % 2 != 0) return std::nullopt;
    int half = deg / 2;
    std::vector<MultiPoly> g(static_cast<std::size_t>(half) + 1);
    auto top = poly_square_root(c[static_cast<std::size_t>(deg)]);
    if (!top) return std::nullopt;
    g[static_cast<std::size_t>(half)] = *top;
    MultiPoly twice_lead = g[static_cast<std::size_t>(half)] * Rational(2);
    for (int k = half - 1; k >= 0; k--) {
        // coefficient of var^(half+k) in g^2 is sum_{i+j=half+k} g_i g_j
        MultiPoly rhs = c[static_cast<std::size_t>(half + k)];
        for (int i = k + 1; i < half; i++) {
            int j = half + k - i;
            if (j <= i && j >= 0) {
                MultiPoly prod = g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
                rhs -= (i == j) ? prod : prod * Rational(2);
            }
        }
        auto q = rhs.exact_divide(twice_lead);
        if (!q) return std::nullopt;
        g[static_cast<std::size_t>(k)] = *q;
    }
    MultiPoly root = MultiPoly::from_coefficients_in(g, var);
    if (!(root * root == f)) return std::nullopt;
    if (root.leading_coeff().sign() < 0) root = -root;
    return root;
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    Rational cn = num_.content();
    Rational cd = den_.content();
    Rational ratio = cn / cd;  // in lowest terms
    num_ *= Rational(ratio.numerator()) / cn;
    den_ *= Rational(ratio.denominator()) / cd;
    if (den_.leading_coeff().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error("rational function division by zero");
    if (a.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(unsigned e) const {
    RatFunc r(1);
    RatFunc base = *this;
    while (e) {
        if (e & 1) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

RatFunc RatFunc::substitute(const std::map<int, RatFunc>& bindings) const {
    RatFunc n = num_.substitute(bindings);
    RatFunc d = den_.substitute(bindings);
    if (d.is_zero()) throw Error("substitution sends denominator to zero");
    return n / d;
}

Rational RatFunc::eval(const std::map<int, Rational>& values) const {
    Rational d = den_.eval(values);
    if (d.is_zero()) throw Error("denominator vanishes at evaluation point");
    return num_.eval(values) / d;
}

std::string RatFunc::str() const {
    if (den_ == MultiPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool ratfunc_is_square(const RatFunc& f) {
    if (f.is_zero()) return true;
    // f = n/d ~ n*d modulo squares
    return poly_square_root(f.num() * f.den()).has_value();
}

namespace {

// minimal recursive-descent parser for the documented polynomial text format
class PolyParser {
  public:
    explicit PolyParser(const std::string& text) : t_(text) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != t_.size()) throw ParseError("unexpected character", pos_);
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) pos_++;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < t_.size() && t_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < t_.size() ? t_[pos_] : '\0';
    }

    MultiPoly expr() {
        MultiPoly acc;
        bool neg = eat('-');
        acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    MultiPoly factor() {
        skip_ws();
        if (pos_ >= t_.size()) throw ParseError("unexpected end of input", pos_);
        char c = t_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(number());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = ident();
            int e = 1;
            if (eat('^')) e = exponent();
            return MultiPoly::var(name, e);
        }
        if (c == '(') {
            pos_++;
            MultiPoly p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            if (eat('^')) return p.pow(static_cast<unsigned>(exponent()));
            return p;
        }
        throw ParseError("expected number, variable or '('", pos_);
    }

    Rational number() {
        std::size_t start = pos_;
        while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) pos_++;
        std::string num = t_.substr(start, pos_ - start);
        if (pos_ < t_.size() && t_[pos_] == '/') {
            std::size_t save = pos_++;
            std::size_t dstart = pos_;
            while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) pos_++;
            if (pos_ == dstart) throw ParseError("expected denominator digits", pos_);
            std::string den = t_.substr(dstart, pos_ - dstart);
            if (Int(den) == 0) throw ParseError("zero denominator", save + 1);
            return Rational(Int(num), Int(den));
        }
        return Rational(Int(num));
    }

    std::string ident() {
        std::size_t start = pos_;
        while (pos_ < t_.size() &&
               (std::isalnum(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '_'))
            pos_++;
        return t_.substr(start, pos_ - start);
    }

    int exponent() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) pos_++;
        if (pos_ == start) throw ParseError("expected exponent", pos_);
        return std::stoi(t_.substr(start, pos_ - start));
    }

    const std::string& t_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_multipoly(const std::string& text) { return PolyParser(text).parse(); }

}  // namespace a4witt
