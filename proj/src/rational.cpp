#include "upq/rational.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace upq {

namespace {

using i128 = __int128;

long long narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = n;
    den_ = d;
}

static Rational make128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n), narrow(d));
}

Rational& Rational::operator+=(const Rational& o) {
    *this = make128(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    *this = make128(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    *this = make128(i128(num_) * o.num_, i128(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::invalid_argument("rational: division by zero");
    *this = make128(i128(num_) * o.den_, i128(den_) * o.num_);
    return *this;
}

bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

long long Rational::floor_value() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

long long Rational::as_integer() const {
    if (den_ != 1) throw std::invalid_argument("rational: not an integer: " + str());
    return num_;
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    size_t slash = s.find('/');
    auto parse_ll = [](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("rational: bad integer");
        size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("rational: trailing junk in '" + t + "'");
        return v;
    };
    if (slash == std::string::npos) return Rational(parse_ll(s));
    long long n = parse_ll(s.substr(0, slash));
    long long d = parse_ll(s.substr(slash + 1));
    return Rational(n, d);
}

Rational vec_sum(const RatVec& v) {
    Rational s;
    for (const auto& x : v) s += x;
    return s;
}

Rational vec_norm_sq(const RatVec& v) {
    Rational s;
    for (const auto& x : v) s += x * x;
    return s;
}

RatVec sorted_desc(RatVec v) {
    std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return b < a; });
    return v;
}

bool weakly_decreasing(const RatVec& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

}  // namespace upq
