#include "bk/oracle_tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bk {

namespace {

using i128 = __int128;

long long pow_ll(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

long long mod_pos(i128 v, long long m) {
    i128 r = v % m;
    if (r < 0) r += m;
    return (long long)r;
}

long long mulmod(long long a, long long b, long long m) { return mod_pos(i128(a) * b, m); }

long long invmod(long long a, long long m) {
    // extended euclid; a must be a unit
    long long old_r = mod_pos(a, m), r = m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1) throw std::invalid_argument("not a unit");
    return mod_pos(old_s, m);
}

int valuation(long long v, long long p) {
    if (v == 0) return -1; // sentinel: infinite
    int n = 0;
    while (v % p == 0) { v /= p; ++n; }
    return n;
}

// extended gcd returning (g, u, v) with u*a + v*b = g
void ext_gcd(long long a, long long b, long long& g, long long& u, long long& v) {
    long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long long q = old_r / r, tmp;
        tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    g = old_r; u = old_s; v = old_t;
    if (g < 0) { g = -g; u = -u; v = -v; }
}

} // namespace

TreeVertex tree_base() { return TreeVertex{}; }

TreeVertex canonical_lattice(long long a, long long b, long long c, long long d, long long p) {
    // columns (a,c) and (b,d); bring to lower-triangular column Hermite form
    if (a == 0 && b == 0) throw std::invalid_argument("singular lattice basis");
    long long g, u, v;
    ext_gcd(a, b, g, u, v);
    // new first column = u*(a,c) + v*(b,d); new second = (-b/g)*(a,c) + (a/g)*(b,d)
    long long c1x = g;
    long long c1y = u * c + v * d;
    long long c2y = (-b / g) * c + (a / g) * d;
    if (c2y < 0) c2y = -c2y;
    if (c2y == 0) throw std::invalid_argument("singular lattice basis");
    c1y = ((c1y % c2y) + c2y) % c2y;
    // strip the common power of p
    while (c1x % p == 0 && c1y % p == 0 && c2y % p == 0) {
        c1x /= p; c1y /= p; c2y /= p;
    }
    return TreeVertex{{c1x, 0, c1y, c2y}};
}

std::vector<TreeVertex> enumerate_vertices(const TreeModel& model) {
    std::set<TreeVertex> seen;
    std::vector<TreeVertex> frontier{tree_base()};
    seen.insert(tree_base());
    for (int depth = 0; depth < model.radius; ++depth) {
        std::vector<TreeVertex> next;
        for (const TreeVertex& vtx : frontier) {
            long long a = vtx.m[0], b = vtx.m[1], c = vtx.m[2], d = vtx.m[3];
            // index-p sublattices: (p c1, c2 + j c1) and (c1, p c2)
            std::vector<TreeVertex> nbrs;
            for (long long j = 0; j < model.p; ++j)
                nbrs.push_back(canonical_lattice(model.p * a, b + j * a, model.p * c, d + j * c,
                                                 model.p));
            nbrs.push_back(canonical_lattice(a, model.p * b, c, model.p * d, model.p));
            for (const TreeVertex& n : nbrs) {
                if (seen.insert(n).second) next.push_back(n);
            }
        }
        frontier = std::move(next);
    }
    return std::vector<TreeVertex>(seen.begin(), seen.end());
}

long long tree_distance(const TreeVertex& av, const TreeVertex& bv, long long p) {
    // C = adj(A) * B; distance = val(det C) - 2 * min valuation of entries
    long long a = av.m[0], b = av.m[1], c = av.m[2], d = av.m[3];
    long long e = bv.m[0], f = bv.m[1], g = bv.m[2], h = bv.m[3];
    long long c00 = d * e - b * g, c01 = d * f - b * h;
    long long c10 = -c * e + a * g, c11 = -c * f + a * h;
    long long det = c00 * c11 - c01 * c10;
    if (det < 0) det = -det;
    int vdet = valuation(det, p);
    int vmin = 1 << 20;
    for (long long entry : {c00, c01, c10, c11}) {
        int v = valuation(entry, p);
        if (v >= 0) vmin = std::min(vmin, v);
    }
    return vdet - 2 * vmin;
}

std::optional<Rat> apartment_coord(const TreeVertex& v, long long p) {
    if (v.m[1] != 0 || v.m[2] != 0) return std::nullopt;
    int va = valuation(v.m[0], p);
    int vb = valuation(v.m[3], p);
    if (pow_ll(p, va) != v.m[0] || pow_ll(p, vb) != v.m[3]) return std::nullopt;
    // class of span(p^k e1, e2) sits at coordinate -k/2
    return Rat(vb - va, 2);
}

TreeVertex apartment_vertex(const Rat& coord, long long p) {
    Rat k = Rat(-2) * coord;
    if (!k.is_integer()) throw std::invalid_argument("not a vertex coordinate");
    long long kk = k.num();
    if (kk >= 0) return TreeVertex{{pow_ll(p, (int)kk), 0, 0, 1}};
    return TreeVertex{{1, 0, 0, pow_ll(p, (int)-kk)}};
}

TreeElement tree_identity() { return TreeElement{}; }

TreeElement tree_torus(const TreeModel& model, int t) {
    long long mod = pow_ll(model.p, model.trunc);
    // need val(u - 1) = t with u + 1 still a unit, so that the root value
    // u^2 has valuation exactly t away from 1
    for (long long k = 1; k < model.p; ++k) {
        long long u = mod_pos(1 + i128(pow_ll(model.p, t)) * k, mod);
        if (u % model.p == 0 || (u + 1) % model.p == 0) continue;
        return TreeElement{{u, 0, 0, invmod(u, mod)}};
    }
    throw std::invalid_argument("no split torus element of this exact depth mod p");
}

TreeElement tree_unipotent_upper(const TreeModel& model, int n) {
    long long mod = pow_ll(model.p, model.trunc);
    return TreeElement{{1, mod_pos(pow_ll(model.p, n), mod), 0, 1}};
}

TreeElement tree_unipotent_lower(const TreeModel& model, int n) {
    long long mod = pow_ll(model.p, model.trunc);
    return TreeElement{{1, 0, mod_pos(pow_ll(model.p, n), mod), 1}};
}

TreeElement tree_anisotropic(const TreeModel& model, int t) {
    long long p = model.p;
    long long mod = pow_ll(p, model.trunc);
    // smallest quadratic non-residue mod p
    long long eps = 0;
    for (long long cand = 2; cand < p; ++cand) {
        bool residue = false;
        for (long long s = 1; s < p; ++s)
            if (s * s % p == cand) { residue = true; break; }
        if (!residue) { eps = cand; break; }
    }
    if (eps == 0) throw std::invalid_argument("p too small for an anisotropic model");
    // b = p^t u for a unit u such that s = 1 + eps b^2 is p^{2v} times a unit
    // square; then a = p^v sqrt(unit part) gives norm(a + b sqrt(eps)) = 1.
    long long b = 0, s = 0, v = -1;
    for (long long u = 1; u < p * p && v < 0; ++u) {
        if (u % p == 0) continue;
        long long cb = mod_pos(i128(pow_ll(p, t)) * u, mod);
        long long cs = mod_pos(1 + i128(eps) * cb % mod * cb, mod);
        int cv = valuation(cs, p);
        if (cv % 2 != 0 || cv > model.trunc / 2) continue;
        long long unit = cs / pow_ll(p, cv);
        for (long long r = 1; r < p; ++r)
            if (r * r % p == unit % p) { b = cb; s = cs; v = cv; break; }
    }
    if (v < 0) throw std::invalid_argument("no anisotropic element of this depth mod p");
    long long submod = pow_ll(p, model.trunc - (int)v);
    long long unit = s / pow_ll(p, (int)v);
    long long a = 0;
    for (long long r = 1; r < p; ++r)
        if (r * r % p == unit % p) { a = r; break; }
    long long two_inv = invmod(2, submod);
    for (int i = 0; i < model.trunc + 2; ++i)
        a = mulmod(mod_pos(i128(a) + mulmod(unit % submod, invmod(a, submod), submod), submod),
                   two_inv, submod);
    a = mulmod(a, pow_ll(p, (int)v / 2), mod);
    return TreeElement{{a, mulmod(mod_pos(b, mod), eps, mod), mod_pos(b, mod), a}};
}

TreeElement tree_multiply(const TreeModel& model, const TreeElement& x, const TreeElement& y) {
    long long mod = pow_ll(model.p, model.trunc);
    const auto& a = x.g;
    const auto& b = y.g;
    return TreeElement{{mod_pos(i128(a[0]) * b[0] + i128(a[1]) * b[2], mod),
                        mod_pos(i128(a[0]) * b[1] + i128(a[1]) * b[3], mod),
                        mod_pos(i128(a[2]) * b[0] + i128(a[3]) * b[2], mod),
                        mod_pos(i128(a[2]) * b[1] + i128(a[3]) * b[3], mod)}};
}

bool fixes_vertex(const TreeModel& model, const TreeElement& g, const TreeVertex& v) {
    long long mod = pow_ll(model.p, model.trunc);
    long long a = v.m[0], b = v.m[1], c = v.m[2], d = v.m[3];
    long long det = a * d - b * c;
    if (det < 0) det = -det;
    int n = valuation(det, model.p);
    if (n > model.trunc - 2) throw TruncationError(n + 2);
    long long pn = pow_ll(model.p, n);
    // adj(V) * g * V must be divisible by det(V) = p^n
    long long adj[4] = {d, -b, -c, a};
    long long gv[4];
    gv[0] = mod_pos(i128(g.g[0]) * a + i128(g.g[1]) * c, mod);
    gv[1] = mod_pos(i128(g.g[0]) * b + i128(g.g[1]) * d, mod);
    gv[2] = mod_pos(i128(g.g[2]) * a + i128(g.g[3]) * c, mod);
    gv[3] = mod_pos(i128(g.g[2]) * b + i128(g.g[3]) * d, mod);
    long long r[4];
    r[0] = mod_pos(i128(adj[0]) * gv[0] + i128(adj[1]) * gv[2], mod);
    r[1] = mod_pos(i128(adj[0]) * gv[1] + i128(adj[1]) * gv[3], mod);
    r[2] = mod_pos(i128(adj[2]) * gv[0] + i128(adj[3]) * gv[2], mod);
    r[3] = mod_pos(i128(adj[2]) * gv[1] + i128(adj[3]) * gv[3], mod);
    for (long long e : r)
        if (e % pn != 0) return false;
    return true;
}

std::vector<TreeVertex> fixed_vertices(const TreeModel& model, const TreeElement& g) {
    std::vector<TreeVertex> out;
    for (const TreeVertex& v : enumerate_vertices(model))
        if (fixes_vertex(model, g, v)) out.push_back(v);
    return out;
}

std::vector<TreeVertex> fixed_vertices_all(const TreeModel& model,
                                           const std::vector<TreeElement>& gens) {
    std::vector<TreeVertex> out;
    for (const TreeVertex& v : enumerate_vertices(model)) {
        bool all = true;
        for (const TreeElement& g : gens)
            if (!fixes_vertex(model, g, v)) { all = false; break; }
        if (all) out.push_back(v);
    }
    return out;
}

TreeVertex folded_vertex(const TreeModel& model, int m, const Rat& coord) {
    TreeVertex base = apartment_vertex(coord, model.p);
    long long pm = pow_ll(model.p, m);
    // left-multiply by the fold element [[1,0],[p^m,1]]
    long long a = base.m[0], b = base.m[1], c = base.m[2], d = base.m[3];
    return canonical_lattice(a, b, pm * a + c, pm * b + d, model.p);
}

} // namespace bk
