#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace upq {

// Exact rational scalar. Canonical form: den >= 1, gcd(|num|, den) = 1.
// Every weight, content and nu coordinate in this library is one of these;
// there is no floating point anywhere in the computational path.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    static Rational parse(const std::string& s);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    long long floor_value() const;
    long long as_integer() const;  // throws if not integral

    std::string str() const;

    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    long long num_ = 0;
    long long den_ = 1;
};

// n/2 as an exact value; the staggered rho vectors live in (1/2)Z.
inline Rational half(long long n) { return Rational(n, 2); }

using RatVec = std::vector<Rational>;

Rational vec_sum(const RatVec& v);
Rational vec_norm_sq(const RatVec& v);
RatVec sorted_desc(RatVec v);
bool weakly_decreasing(const RatVec& v);

}  // namespace upq
