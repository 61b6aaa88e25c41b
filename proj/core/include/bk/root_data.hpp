#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bk/linalg.hpp"

namespace bk {

enum class SystemLabel { A1, A1xA1, A2, B2C2, G2 };

std::optional<SystemLabel> parse_system_label(const std::string& text);
std::string system_label_str(SystemLabel label);

// one term of a commutator expansion: the root i*a + j*b with integer
// structure constant of magnitude |c|
struct ChevalleyTerm {
    int i = 0;
    int j = 0;
    int root = -1;      // index of i*a + j*b
    long long c_abs = 1;
};

struct ChevalleyEntry {
    int a = -1;
    int b = -1;
    std::vector<ChevalleyTerm> terms;
};

struct RootSystem {
    SystemLabel label;
    int rank = 0;
    std::vector<Vec> roots;
    Mat gram;
    std::vector<ChevalleyEntry> chevalley; // ordered pairs with at least one term

    int index_of(const Vec& v) const;          // -1 if not a root
    int negate(int idx) const;
    bool is_root_sum(int a, int b) const { return index_of(add(roots[a], roots[b])) >= 0; }
    const ChevalleyEntry* commutator_entry(int a, int b) const;
};

struct RootSubsystem {
    const RootSystem* parent = nullptr;
    std::vector<int> members; // sorted root indices

    bool contains(int idx) const;
    bool closed() const;        // under negation and addition inside parent
    int span_rank() const;      // dimension of the linear span
};

RootSystem build_root_system(SystemLabel label);

RootSubsystem make_subsystem(const RootSystem& sys, std::vector<int> members);
RootSubsystem full_subsystem(const RootSystem& sys);

// a valuation-level commutator term: lower bound on the coefficient valuation,
// exact when the structure constant is prime to p
struct CommutatorTerm {
    int root = -1;
    Rat valuation;
    bool exact = true;
};

// terms of [U_a, U_b] for non-proportional roots; throws on proportional pair
std::vector<CommutatorTerm> chevalley_commutator(const RootSystem& sys, int a, int b,
                                                 const Rat& val_a, const Rat& val_b,
                                                 long long p);

// witness functional l with <l,a> >= 0 on S and < 0 somewhere on the subsystem,
// i.e. S lies in a proper parabolic subset; empty if none exists.
// The witness is a vector paired through the gram form.
std::optional<Vec> exists_proper_parabolic_containing(const RootSubsystem& phi_q,
                                                      const std::vector<int>& s);

} // namespace bk
