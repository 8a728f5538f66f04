#include "mpbt/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mpbt {

namespace {

std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("exact integer arithmetic exceeded 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    return narrow(static_cast<__int128>(a) + b);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    return narrow(static_cast<__int128>(a) * b);
}

std::int64_t factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i) / i;  // divides exactly at each step
    }
    return r;
}

std::int64_t ipow(std::int64_t base, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

Rational make_reduced(__int128 num, __int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return {narrow(num), narrow(den)};
}

}  // namespace

Rational& Rational::operator+=(const Rational& o) {
    *this = make_reduced(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                         static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    *this += -o;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    *this = make_reduced(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero rational");
    *this = make_reduced(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(Rational a, const Rational& b) { return a += b; }
Rational operator-(Rational a, const Rational& b) { return a -= b; }
Rational operator*(Rational a, const Rational& b) { return a *= b; }
Rational operator/(Rational a, const Rational& b) { return a /= b; }

bool operator==(const Rational& a, const Rational& b) {
    return a.num() == b.num() && a.den() == b.den();
}

bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num()) * b.den() < static_cast<__int128>(b.num()) * a.den();
}

bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
bool operator>(const Rational& a, const Rational& b) { return b < a; }
bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mpbt
