#include "exgraph/rational.hpp"

#include <cctype>

#include "exgraph/errors.hpp"

namespace exgraph {

Rational::Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(static_cast<long int>(num), static_cast<long int>(den));
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw InputError("empty rational literal");

    const std::string s(text);
    auto is_valid = [](const std::string& t, bool allow_slash, bool allow_dot) {
        bool seen_digit = false, seen_slash = false, seen_dot = false;
        for (std::size_t i = 0; i < t.size(); ++i) {
            char c = t[i];
            if (c == '+' || c == '-') {
                if (i != 0 && !(seen_slash && t[i - 1] == '/')) return false;
            } else if (c == '/') {
                if (!allow_slash || seen_slash || !seen_digit) return false;
                seen_slash = true;
            } else if (c == '.') {
                if (!allow_dot || seen_dot || seen_slash) return false;
                seen_dot = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                seen_digit = true;
            } else {
                return false;
            }
        }
        return seen_digit;
    };
    if (!is_valid(s, true, true)) throw InputError("bad rational literal: " + s);

    try {
        const auto dot = s.find('.');
        if (dot != std::string::npos) {
            // decimal: shift the point into a power-of-ten denominator
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
            const std::size_t frac_len = s.size() - dot - 1;
            if (digits.empty() || digits == "-") throw InputError("bad rational literal: " + s);
            mpq_class num(digits, 10);
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
            mpq_class q(num / mpq_class(den));
            q.canonicalize();
            return Rational(q);
        }

        std::string plain = s;
        if (plain.front() == '+') plain.erase(0, 1);
        mpq_class q(plain, 10);
        if (q.get_den() == 0) throw InputError("rational with zero denominator: " + s);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw InputError("bad rational literal: " + s);
    }
}

Rational Rational::pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw InputError("zero to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Rational acc(1);
    Rational b = base;
    long e = exponent;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

bool Rational::is_integer() const { return v_.get_den() == 1; }

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace exgraph
