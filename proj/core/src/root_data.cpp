#include "bk/root_data.hpp"

#include <algorithm>
#include <stdexcept>

namespace bk {

std::optional<SystemLabel> parse_system_label(const std::string& text) {
    if (text == "A1") return SystemLabel::A1;
    if (text == "A1xA1" || text == "A1A1") return SystemLabel::A1xA1;
    if (text == "A2") return SystemLabel::A2;
    if (text == "B2" || text == "C2" || text == "B2C2") return SystemLabel::B2C2;
    if (text == "G2") return SystemLabel::G2;
    return std::nullopt;
}

std::string system_label_str(SystemLabel label) {
    switch (label) {
        case SystemLabel::A1: return "A1";
        case SystemLabel::A1xA1: return "A1xA1";
        case SystemLabel::A2: return "A2";
        case SystemLabel::B2C2: return "C2";
        case SystemLabel::G2: return "G2";
    }
    return "?";
}

int RootSystem::index_of(const Vec& v) const {
    for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == v) return (int)i;
    return -1;
}

int RootSystem::negate(int idx) const {
    return index_of(scale(Rat(-1), roots[idx]));
}

const ChevalleyEntry* RootSystem::commutator_entry(int a, int b) const {
    for (const auto& e : chevalley)
        if (e.a == a && e.b == b) return &e;
    return nullptr;
}

namespace {

Vec v2(long long x, long long y) { return Vec{Rat(x), Rat(y)}; }

// p+1 where p is the length of the string b, b-a, b-2a, ... inside the system;
// the magnitude of the basis structure constant N_{a,b} (defined when a+b is a root)
long long n_abs(const RootSystem& sys, const Vec& a, const Vec& b) {
    long long p = 0;
    Vec cur = sub(b, a);
    while (sys.index_of(cur) >= 0) {
        ++p;
        cur = sub(cur, a);
    }
    return p + 1;
}

void build_chevalley(RootSystem& sys) {
    const int n = (int)sys.roots.size();
    for (int ia = 0; ia < n; ++ia) {
        for (int ib = 0; ib < n; ++ib) {
            if (ia == ib) continue;
            const Vec& a = sys.roots[ia];
            const Vec& b = sys.roots[ib];
            // skip proportional pairs (reduced systems: only b = -a)
            if (sys.index_of(add(a, b)) == -1 && is_zero(add(a, b))) continue;
            bool proportional = false;
            {
                // proportional iff a x b = 0 componentwise cross check
                Rat cross = a[0] * b[1] - a[1] * b[0];
                if (a.size() == 1 || cross.sign() == 0) proportional = true;
            }
            if (proportional) continue;
            ChevalleyEntry entry{ia, ib, {}};
            // commutator product terms in the normal order of Carter 5.2.2
            auto M = [&](const Vec& x, const Vec& y, int i) -> long long {
                long long prod = 1;
                Vec acc = y;
                for (int k = 0; k < i; ++k) {
                    prod *= n_abs(sys, x, acc);
                    acc = add(acc, x);
                }
                long long fact = 1;
                for (int k = 2; k <= i; ++k) fact *= k;
                return prod / fact;
            };
            for (int i = 1; i <= 3; ++i) {
                for (int j = 1; j <= 3; ++j) {
                    Vec sum(a.size(), Rat(0));
                    for (size_t c = 0; c < a.size(); ++c)
                        sum[c] = Rat(i) * a[c] + Rat(j) * b[c];
                    int ridx = sys.index_of(sum);
                    if (ridx < 0) continue;
                    long long cabs = 1;
                    if (j == 1) cabs = M(a, b, i);
                    else if (i == 1) cabs = M(b, a, j);
                    else if (i == 3 && j == 2) cabs = M(add(a, b), a, 2) / 3;
                    else if (i == 2 && j == 3) cabs = (2 * M(add(a, b), b, 2)) / 3;
                    if (cabs < 1) cabs = 1;
                    entry.terms.push_back({i, j, ridx, cabs});
                }
            }
            if (!entry.terms.empty()) sys.chevalley.push_back(entry);
        }
    }
}

} // namespace

RootSystem build_root_system(SystemLabel label) {
    RootSystem sys;
    sys.label = label;
    switch (label) {
        case SystemLabel::A1:
            sys.rank = 1;
            sys.roots = {Vec{Rat(1)}, Vec{Rat(-1)}};
            sys.gram = {{Rat(2)}};
            break;
        case SystemLabel::A1xA1:
            sys.rank = 2;
            sys.roots = {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)};
            sys.gram = {{Rat(2), Rat(0)}, {Rat(0), Rat(2)}};
            break;
        case SystemLabel::A2:
            sys.rank = 2;
            sys.roots = {v2(1, 0), v2(0, 1), v2(1, 1), v2(-1, 0), v2(0, -1), v2(-1, -1)};
            sys.gram = {{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}};
            break;
        case SystemLabel::B2C2:
            sys.rank = 2;
            sys.roots = {v2(1, 1), v2(1, -1), v2(-1, 1), v2(-1, -1),
                         v2(2, 0), v2(-2, 0), v2(0, 2), v2(0, -2)};
            sys.gram = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
            break;
        case SystemLabel::G2:
            sys.rank = 2;
            sys.roots = {v2(1, 0), v2(0, 1), v2(1, 1), v2(2, 1), v2(3, 1), v2(3, 2),
                         v2(-1, 0), v2(0, -1), v2(-1, -1), v2(-2, -1), v2(-3, -1), v2(-3, -2)};
            sys.gram = {{Rat(2), Rat(-3)}, {Rat(-3), Rat(6)}};
            break;
    }
    build_chevalley(sys);
    return sys;
}

RootSubsystem make_subsystem(const RootSystem& sys, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int m : members)
        if (m < 0 || m >= (int)sys.roots.size())
            throw std::invalid_argument("root index out of range");
    return RootSubsystem{&sys, std::move(members)};
}

RootSubsystem full_subsystem(const RootSystem& sys) {
    std::vector<int> all(sys.roots.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = (int)i;
    return RootSubsystem{&sys, all};
}

bool RootSubsystem::contains(int idx) const {
    return std::binary_search(members.begin(), members.end(), idx);
}

bool RootSubsystem::closed() const {
    for (int a : members) {
        if (!contains(parent->negate(a))) return false;
        for (int b : members) {
            int s = parent->index_of(add(parent->roots[a], parent->roots[b]));
            if (s >= 0 && !contains(s)) return false;
        }
    }
    return true;
}

int RootSubsystem::span_rank() const {
    if (members.empty()) return 0;
    // rank of the member vectors (dimension <= 2 in practice)
    std::vector<Vec> basis;
    for (int m : members) {
        Vec v = parent->roots[m];
        for (const Vec& b : basis) {
            // eliminate against b
            size_t lead = 0;
            while (lead < b.size() && b[lead].sign() == 0) ++lead;
            if (lead < b.size() && v[lead].sign() != 0) {
                Rat f = v[lead] / b[lead];
                v = sub(v, scale(f, b));
            }
        }
        if (!is_zero(v)) basis.push_back(v);
    }
    return (int)basis.size();
}

std::vector<CommutatorTerm> chevalley_commutator(const RootSystem& sys, int a, int b,
                                                 const Rat& val_a, const Rat& val_b,
                                                 long long p) {
    const Vec& ra = sys.roots[a];
    const Vec& rb = sys.roots[b];
    bool proportional;
    if (ra.size() == 1) {
        proportional = true;
    } else {
        Rat cross = ra[0] * rb[1] - ra[1] * rb[0];
        proportional = cross.sign() == 0;
    }
    if (proportional) throw std::invalid_argument("proportional roots");
    std::vector<CommutatorTerm> out;
    const ChevalleyEntry* entry = sys.commutator_entry(a, b);
    if (!entry) return out;
    for (const auto& t : entry->terms) {
        CommutatorTerm term;
        term.root = t.root;
        term.valuation = Rat(t.i) * val_a + Rat(t.j) * val_b;
        term.exact = (t.c_abs % p) != 0;
        out.push_back(term);
    }
    return out;
}

std::optional<Vec> exists_proper_parabolic_containing(const RootSubsystem& phi_q,
                                                      const std::vector<int>& s) {
    const RootSystem& sys = *phi_q.parent;
    for (int idx : s)
        if (!phi_q.contains(idx)) throw std::invalid_argument("S not inside the subsystem");
    if (phi_q.members.empty()) return std::nullopt;

    // candidate functionals: the roots themselves, generators of every root-kernel
    // line inside the span, and pairwise sums; covers a representative of each face
    // of the rank <= 2 coweight arrangement
    std::vector<Vec> candidates;
    auto push = [&](const Vec& v) {
        if (is_zero(v)) return;
        candidates.push_back(v);
    };
    const size_t dim = sys.roots[0].size();
    for (int m : phi_q.members) push(sys.roots[m]);
    if (dim == 2) {
        // kernel of <.,r> under the gram form: direction (g2r, -g1r)
        for (int m : phi_q.members) {
            const Vec& r = sys.roots[m];
            Rat g1 = sys.gram[0][0] * r[0] + sys.gram[0][1] * r[1];
            Rat g2 = sys.gram[1][0] * r[0] + sys.gram[1][1] * r[1];
            push(Vec{g2, -g1});
            push(Vec{-g2, g1});
        }
    }
    size_t base_count = candidates.size();
    for (size_t i = 0; i < base_count; ++i)
        for (size_t j = i + 1; j < base_count; ++j)
            push(add(candidates[i], candidates[j]));

    for (const Vec& lam : candidates) {
        bool ok = true;
        for (int m : s) {
            if (pair(sys.gram, lam, sys.roots[m]).sign() < 0) { ok = false; break; }
        }
        if (!ok) continue;
        bool strict = false;
        for (int m : phi_q.members) {
            if (pair(sys.gram, lam, sys.roots[m]).sign() < 0) { strict = true; break; }
        }
        if (strict) return lam;
    }
    return std::nullopt;
}

} // namespace bk
