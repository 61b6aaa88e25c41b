#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bk/rational.hpp"

namespace bk {

// brute-force rank-1 oracle: the (p+1)-regular tree of lattice classes in a
// 2-dimensional p-adic space, with explicit 2x2 matrix stabilizer tests
struct TreeModel {
    long long p = 5;
    int trunc = 12;  // matrix entries carried mod p^trunc
    int radius = 4;  // vertices enumerated to this distance from the base
};

struct TruncationError : std::runtime_error {
    explicit TruncationError(int needed)
        : std::runtime_error("insufficient truncation; need mod p^" + std::to_string(needed)) {}
};

// canonical lattice-class representative: column Hermite form with the common
// p-power removed; entries row-major (m00 m01 / m10 m11)
struct TreeVertex {
    std::array<long long, 4> m{1, 0, 0, 1};

    bool operator==(const TreeVertex& o) const { return m == o.m; }
    bool operator<(const TreeVertex& o) const { return m < o.m; }
};

TreeVertex tree_base();
TreeVertex canonical_lattice(long long a, long long b, long long c, long long d, long long p);
std::vector<TreeVertex> enumerate_vertices(const TreeModel& model);
long long tree_distance(const TreeVertex& a, const TreeVertex& b, long long p);

// the standard apartment is the diagonal line; its vertex at coordinate c
// (in half-integers) is the class of span(p^{-2c} e1, e2)
std::optional<Rat> apartment_coord(const TreeVertex& v, long long p);
TreeVertex apartment_vertex(const Rat& coord, long long p);

// group elements, entries mod p^trunc
struct TreeElement {
    std::array<long long, 4> g{1, 0, 0, 1};
};

TreeElement tree_identity();
// diag(u, u^{-1}) with val(u - 1) = t
TreeElement tree_torus(const TreeModel& model, int t);
// x_alpha(p^n) upper / x_{-alpha}(p^n) lower
TreeElement tree_unipotent_upper(const TreeModel& model, int n);
TreeElement tree_unipotent_lower(const TreeModel& model, int n);
// norm-one element of the unramified anisotropic torus, depth t:
// [[a, b*eps],[b, a]] with a^2 - eps b^2 = 1, val(b) = t, eps a non-residue
TreeElement tree_anisotropic(const TreeModel& model, int t);

TreeElement tree_multiply(const TreeModel& model, const TreeElement& a, const TreeElement& b);

bool fixes_vertex(const TreeModel& model, const TreeElement& g, const TreeVertex& v);
std::vector<TreeVertex> fixed_vertices(const TreeModel& model, const TreeElement& g);
// intersection of the generators' fixed sets
std::vector<TreeVertex> fixed_vertices_all(const TreeModel& model,
                                           const std::vector<TreeElement>& gens);

// image of the apartment vertex at `coord` under the fold element x_{-alpha}(p^m)
TreeVertex folded_vertex(const TreeModel& model, int m, const Rat& coord);

} // namespace bk
