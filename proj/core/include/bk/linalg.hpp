#pragma once

#include <vector>

#include "bk/rational.hpp"

namespace bk {

using Vec = std::vector<Rat>;
using Mat = std::vector<std::vector<Rat>>;

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x.sign() != 0) return false;
    return true;
}

// bilinear form a^T G b
inline Rat pair(const Mat& gram, const Vec& a, const Vec& b) {
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].sign() == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j].sign() != 0) s += a[i] * gram[i][j] * b[j];
    }
    return s;
}

inline Rat sq_norm(const Mat& gram, const Vec& a) { return pair(gram, a, a); }

// plain dot product (covector applied to point)
inline Rat dot(const Vec& a, const Vec& b) {
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// solve A x = b by gaussian elimination; A square, exact; empty result if singular
std::vector<Rat> inline solve_linear(Mat a, Vec b) {
    const size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].sign() == 0) ++piv;
        if (piv == n) return {};
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].sign() == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    Vec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

} // namespace bk
