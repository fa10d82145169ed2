#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "girth6/errors.hpp"

namespace girth6 {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always stored reduced with positive denominator.
// Charges, weights and epsilon values never touch floating point.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    // Accepts "p", "-p", "p/q".
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(text));
            BigInt n(text.substr(0, slash));
            BigInt d(text.substr(slash + 1));
            return Rational(std::move(n), std::move(d));
        } catch (const std::exception&) {
            throw ParseError("bad rational literal: " + text);
        }
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }
    bool is_integer() const { return den_ == 1; }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    Rational operator-() const { return raw(-num_, den_); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

  private:
    static Rational raw(BigInt n, BigInt d) {
        Rational r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_, den_;
};

}  // namespace girth6
