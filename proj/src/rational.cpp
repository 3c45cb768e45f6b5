#include "a4witt/rational.hpp"

#include <cctype>
#include <ostream>

namespace a4witt {

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Int Rational::height() const {
    Int n = ::abs(v_.get_num());
    const Int& d = v_.get_den();
    return n > d ? n : d;
}

Rational Rational::parse(const std::string& text) {
    std::size_t i = 0;
    auto digits = [&](const char* what) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) i++;
        if (i == start) throw ParseError(std::string("expected ") + what, start);
        return text.substr(start, i - start);
    };
    bool neg = false;
    if (i < text.size() && text[i] == '-') { neg = true; i++; }
    std::string num = digits("digits in numerator");
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        i++;
        den = digits("digits in denominator");
    }
    if (i != text.size()) throw ParseError("trailing characters after rational", i);
    Int n(num), d(den);
    if (sgn(d) == 0) throw ParseError("zero denominator", text.find('/') + 1);
    if (neg) n = -n;
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational pow(const Rational& q, unsigned e) {
    Rational r(1);
    Rational base = q;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace a4witt
