#pragma once

// Bigness of -K on plane blow-ups: the lattice criterion (a big divisor
// supported on a set of curves exists iff their orthogonal complement is
// negative definite) and the closed-form inequalities for points on a cubic.

#include <optional>
#include <string>
#include <vector>

#include "bigsurf/picard.hpp"

namespace bigsurf {

struct OrthogonalComplement {
    std::vector<IntVector> basis;  // saturated, in the ambient basis
    IntMatrix gram;                // restricted form
};

OrthogonalComplement orthogonal_complement(const PicardLattice& lattice,
                                           const std::vector<DivisorClass>& classes);

// True iff the complement of the classes is negative definite (the empty
// complement counts).
bool is_big_supported(const PicardLattice& lattice, const std::vector<DivisorClass>& classes);

enum class BignessCase { I, II, III };
std::string to_string(BignessCase c);
BignessCase case_from_string(const std::string& s);

struct BignessVerdict {
    bool big = false;
    BignessCase which = BignessCase::I;
    std::optional<Rational> inequality_lhs;  // 1/a + 4/b or the sum of 1/a_i
    std::optional<DivisorClass> v;            // auxiliary vector orthogonal to the components
    std::optional<Rational> v_squared;
    bool effective = true;         // the distinguished member of |-K| exists by construction
    bool lattice_confirmed = false;  // the lattice criterion gives the same answer

    bool operator==(const BignessVerdict&) const = default;
};

// Generic{r}: big iff r <= 8. LineConic: big iff ab = 0 or 1/a + 4/b > 1.
// ThreeLines: big iff a1 a2 a3 = 0 or sum 1/a_i > 1.
BignessVerdict classify_anticanonical(const PointConfiguration& config);

struct CrossCheckReport {
    BignessVerdict verdict;
    bool lattice_big = false;
    Inertia complement_inertia;
    bool agree = false;
    bool v_orthogonal = true;    // v pairs to zero with every component (vacuous without v)
    bool v_sign_matches = true;  // v^2 < 0 iff the inequality holds (vacuous without v)

    bool ok() const { return agree && v_orthogonal && v_sign_matches; }
    bool operator==(const CrossCheckReport&) const = default;
};

// Runs both routes on LineConic / ThreeLines. Throws DomainError on Generic.
CrossCheckReport cross_check(const PointConfiguration& config);

}  // namespace bigsurf
