#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace mpbt {

// Checked exact integer helpers. All intermediates go through __int128 and
// anything that does not round-trip to 64 bits throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t factorial(int n);
std::int64_t binomial(int n, int k);
std::int64_t ipow(std::int64_t base, int exp);

// Exact rational on 64-bit words, always stored reduced with positive
// denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    double to_double() const;
    std::string str() const;  // "7/40", integers as "3"

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    Rational operator-() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

Rational operator+(Rational a, const Rational& b);
Rational operator-(Rational a, const Rational& b);
Rational operator*(Rational a, const Rational& b);
Rational operator/(Rational a, const Rational& b);

bool operator==(const Rational& a, const Rational& b);
bool operator!=(const Rational& a, const Rational& b);
bool operator<(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);
bool operator>(const Rational& a, const Rational& b);
bool operator>=(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace mpbt
