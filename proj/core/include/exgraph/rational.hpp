#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace exgraph {

// Exact fraction arithmetic on top of GMP. Values are kept canonical
// (lowest terms, positive denominator). LP optima such as 5/2 must
// compare exactly, so nothing here is allowed to round.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}               // NOLINT: implicit by intent
    Rational(long n) : v_(static_cast<long int>(n)) {}
    Rational(long num, long den);

    // Accepts "p", "p/q", or a plain decimal such as "0.25" / "-1.5".
    static Rational parse(std::string_view text);

    static Rational pow(const Rational& base, long exponent);

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws InputError on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const;

    // Canonical rendering: "p" when the denominator is 1, else "p/q".
    std::string str() const;
    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    double to_double() const { return v_.get_d(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

}  // namespace exgraph
