#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tilemul {

// Exact rational on int64. Tile costs are multiples of 1/100, efficiencies are
// small ratios of those, so int64 with normalization never gets near overflow
// for any board this tool accepts.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    static Rational hundredths(std::int64_t h) { return Rational(h, 100); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const { return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rational operator-(const Rational& o) const { return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    double toDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Fixed-point decimal string, round-half-up; "12.25", "0.65", "3".
    std::string toDecimal(int places = 2) const;

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }
    std::int64_t num_, den_;
};

inline std::string Rational::toDecimal(int places) const {
    std::int64_t scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    bool neg = num_ < 0;
    std::int64_t n = neg ? -num_ : num_;
    // round half up on the scaled value
    std::int64_t scaled = (n * scale + den_ / 2) / den_;
    std::int64_t whole = scaled / scale, frac = scaled % scale;
    std::string s = (neg && scaled != 0 ? "-" : "") + std::to_string(whole);
    if (frac != 0) {
        std::string f = std::to_string(frac);
        f.insert(f.begin(), places - static_cast<int>(f.size()), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        s += "." + f;
    }
    return s;
}

} // namespace tilemul
