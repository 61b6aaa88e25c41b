#include "bk/rational.hpp"

#include <numeric>

namespace bk {

namespace {

using i128 = __int128;

long long clamp128(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw OverflowError();
    return (long long)v;
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i128 t = a % b; a = b; b = t; }
    return a;
}

} // namespace

Rat::Rat(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    normalize();
}

void Rat::normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
}

Rat Rat::operator+(const Rat& o) const {
    i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    i128 g = gcd128(n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num_ = clamp128(n);
    r.den_ = clamp128(d);
    return r;
}

Rat Rat::operator-(const Rat& o) const { return *this + (-o); }

Rat Rat::operator*(const Rat& o) const {
    i128 n = i128(num_) * o.num_;
    i128 d = i128(den_) * o.den_;
    i128 g = gcd128(n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num_ = clamp128(n);
    r.den_ = clamp128(d);
    return r;
}

Rat Rat::operator/(const Rat& o) const {
    if (o.num_ == 0) throw std::invalid_argument("division by zero");
    Rat inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_ < 0) { inv.num_ = -inv.num_; inv.den_ = -inv.den_; }
    return *this * inv;
}

bool Rat::operator<(const Rat& o) const {
    return i128(num_) * o.den_ < i128(o.num_) * den_;
}

long long Rat::floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

long long Rat::ceil() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rat::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rat> Rat::parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(text, &used);
            if (used != text.size()) return std::nullopt;
            return Rat(n);
        }
        long long n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) return std::nullopt;
        std::string dpart = text.substr(slash + 1);
        long long d = std::stoll(dpart, &used);
        if (used != dpart.size() || d == 0) return std::nullopt;
        return Rat(n, d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace bk
