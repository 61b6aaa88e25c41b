#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace bk {

// exact rational on 64-bit num/den; intermediates go through 128 bits and
// overflow past that throws instead of wrapping
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rat operator-() const { return Rat(-num_, den_); }
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const;
    bool operator<=(const Rat& o) const { return *this < o || *this == o; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return o <= *this; }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    bool is_integer() const { return den_ == 1; }
    Rat abs() const { return num_ < 0 ? -*this : *this; }

    // largest integer <= value / smallest integer >= value
    long long floor() const;
    long long ceil() const;

    // serialized as "n" or "n/d"
    std::string str() const;
    static std::optional<Rat> parse(const std::string& text);

private:
    long long num_;
    long long den_; // > 0, gcd(num,den) = 1
    void normalize();
};

inline Rat operator*(long long a, const Rat& b) { return Rat(a) * b; }

struct OverflowError : std::runtime_error {
    OverflowError() : std::runtime_error("rational overflow") {}
};

} // namespace bk
