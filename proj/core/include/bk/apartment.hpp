#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bk/root_data.hpp"

namespace bk {

// filtration index: a rational r, or r+ (the jump just past r), or infinity
struct Depth {
    Rat value;
    bool plus = false;
    bool inf = false;

    static Depth at(const Rat& r) { return Depth{r, false, false}; }
    static Depth just_after(const Rat& r) { return Depth{r, true, false}; }
    static Depth infinite() { return Depth{Rat(0), false, true}; }

    bool operator==(const Depth& o) const {
        if (inf || o.inf) return inf == o.inf;
        return value == o.value && plus == o.plus;
    }
    bool operator<(const Depth& o) const {
        if (inf) return false;
        if (o.inf) return true;
        if (value != o.value) return value < o.value;
        return !plus && o.plus;
    }
    bool operator<=(const Depth& o) const { return *this < o || *this == o; }

    Depth operator+(const Depth& o) const {
        if (inf || o.inf) return infinite();
        return Depth{value + o.value, plus || o.plus, false};
    }

    // smallest integer n with n >= value (resp. > value for a plus depth);
    // the realizable jump of an integrally-valued filtration
    long long eff_int() const;

    std::string str() const;
};

Depth depth_max(const Depth& a, const Depth& b);
Depth depth_min(const Depth& a, const Depth& b);

struct AffineRoot {
    int root = -1;
    long long offset = 0; // psi = a + n
};

// evaluation <a,p> through the gram form; p may carry extra central coordinates
Rat root_eval(const RootSystem& sys, int root, const Vec& p);
Rat affine_eval(const RootSystem& sys, const AffineRoot& psi, const Vec& p);

// least integer offset n making <a,x>+n >= d (strict when d is a plus depth)
long long min_offset(const RootSystem& sys, int root, const Vec& x, const Depth& d);

struct FiltrationProfile {
    const RootSystem* sys = nullptr;
    Vec base;                       // the point x
    Depth torus_depth;
    std::vector<Depth> root_depths; // indexed like sys->roots
    // level whose center contributes a transverse band to fixed regions;
    // -1 means split/ambient (no band)
    int center_level = -1;

    bool concave() const;
    // pointwise comparisons; "finer" means deeper (smaller subgroup)
    bool contains(const FiltrationProfile& finer) const;
};

FiltrationProfile mp_profile(const RootSystem& sys, const Vec& x, const Depth& r);

FiltrationProfile profile_pointwise_max(const FiltrationProfile& a, const FiltrationProfile& b);
FiltrationProfile profile_pointwise_min(const FiltrationProfile& a, const FiltrationProfile& b);

RootSubsystem quotient_root_system(const RootSystem& sys, const Vec& x);

struct Facet {
    std::vector<AffineRoot> zero_set;
    std::vector<std::pair<AffineRoot, int>> signs; // sign in {-1,0,1} per relevant wall

    bool operator==(const Facet& o) const;
};

struct Box {
    Vec lo;
    Vec hi;
};

Facet facet_of(const RootSystem& sys, const Vec& x, const Box& box);
bool facet_adjacent(const Facet& a, const Facet& b);
bool is_vertex(const RootSystem& sys, const Vec& x, const Box& box);

// root-span component ([x]) and central component (the fibre direction)
struct ReducedCoords {
    Vec reduced;
    Vec central;
};
ReducedCoords reduced_coords(const RootSystem& sys, const Vec& x);

} // namespace bk
