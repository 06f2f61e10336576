#pragma once

// Picard lattices of blow-ups of the plane and of Hirzebruch surfaces, with
// divisor-class arithmetic. Points are combinatorial labels only.

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "bigsurf/exact_linalg.hpp"

namespace bigsurf {

class DivisorClass {
public:
    DivisorClass() = default;
    explicit DivisorClass(RatVector coeffs) : coeffs_(std::move(coeffs)) {}
    static DivisorClass zero(std::size_t rank) { return DivisorClass(RatVector(rank, 0)); }
    static DivisorClass from_integers(std::span<const Integer> v);
    static DivisorClass basis(std::size_t rank, std::size_t index);

    std::size_t size() const { return coeffs_.size(); }
    const RatVector& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }

    bool integral() const;
    bool is_zero() const;
    // Throws DomainError unless integral.
    IntVector to_integers() const;

    DivisorClass& operator+=(const DivisorClass& other);
    DivisorClass& operator-=(const DivisorClass& other);
    DivisorClass& operator*=(const Rational& s);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
    DivisorClass operator-() const { return Rational(-1) * *this; }
    bool operator==(const DivisorClass& other) const { return coeffs_ == other.coeffs_; }

private:
    RatVector coeffs_;
};

struct FiberSpec {
    int off_sigma = 0;          // blown-up points on the fiber away from the negative section
    bool on_sigma_blown = false;  // the point fiber ∩ section is blown up

    bool operator==(const FiberSpec&) const = default;
};

struct PlaneBlowup {
    int r = 0;
    bool operator==(const PlaneBlowup&) const = default;
};

struct HirzebruchBlowup {
    int n = 1;
    std::vector<FiberSpec> fibers;
    int extra_on_sigma = 0;
    bool operator==(const HirzebruchBlowup&) const = default;
};

using ModelTag = std::variant<PlaneBlowup, HirzebruchBlowup>;

class PicardLattice {
public:
    PicardLattice(IntMatrix gram, DivisorClass canonical, std::vector<std::string> labels,
                  ModelTag model);

    const IntMatrix& gram() const { return gram_; }
    const DivisorClass& canonical() const { return canonical_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const ModelTag& model() const { return model_; }
    std::size_t rank() const { return gram_.rows(); }

    DivisorClass basis(std::size_t index) const { return DivisorClass::basis(rank(), index); }
    // Basis class with the given label; throws DomainError if absent.
    DivisorClass named(const std::string& label) const;
    std::size_t index_of(const std::string& label) const;

    // Human-readable form such as "3l-e1-e2".
    std::string format(const DivisorClass& d) const;

    bool operator==(const PicardLattice&) const = default;

private:
    IntMatrix gram_;
    DivisorClass canonical_;
    std::vector<std::string> labels_;
    ModelTag model_;
};

// Plane blown up at r points: basis (l, e1..er), gram diag(1, -1, ..., -1).
PicardLattice blowup_p2(int r);
// Same lattice with caller-chosen exceptional labels (size r).
PicardLattice blowup_p2(std::vector<std::string> exceptional_labels);

// F_n blown up at points on fibers and on the negative section. Basis
// (s, F, exceptionals grouped by fiber, then the extras on s).
PicardLattice blowup_hirzebruch(int n, std::vector<FiberSpec> fibers, int extra_on_sigma);

// Derived classes on a Hirzebruch model.
std::vector<std::size_t> fiber_exceptionals(const PicardLattice& lattice, std::size_t fiber);
std::vector<std::size_t> sigma_exceptionals(const PicardLattice& lattice);
DivisorClass fiber_strict_transform(const PicardLattice& lattice, std::size_t fiber);
DivisorClass sigma_strict_transform(const PicardLattice& lattice);

Rational pair(const PicardLattice& lattice, const DivisorClass& a, const DivisorClass& b);
Rational self_intersection(const PicardLattice& lattice, const DivisorClass& a);

// p_a = 1 + (C^2 + C.K)/2 for an integral class.
Integer arithmetic_genus(const PicardLattice& lattice, const DivisorClass& c);
// (N^2 - K.N)/2 + 1. No nefness check: the hypothesis is the caller's.
Integer riemann_roch_nef(const PicardLattice& lattice, const DivisorClass& n);

// --- point configurations on a plane cubic ---------------------------------

struct Generic {
    int r = 0;
    bool operator==(const Generic&) const = default;
};

// a points only on the line, b only on the conic, `both` blown-up points of
// line ∩ conic (a tangency point counts as one intersection point).
struct LineConic {
    int a = 0;
    int b = 0;
    int both = 0;
    bool operator==(const LineConic&) const = default;
};

// counts[i] points only on line i; intersections = {p12, p13, p23} blown up.
// The lines are pairwise distinct and not concurrent.
struct ThreeLines {
    std::array<int, 3> counts{};
    std::array<bool, 3> intersections{};
    bool operator==(const ThreeLines&) const = default;
};

using PointConfiguration = std::variant<Generic, LineConic, ThreeLines>;

// Throws DomainError on negative counts or both > 2.
void validate(const PointConfiguration& config);
int total_points(const PointConfiguration& config);
std::string describe(const PointConfiguration& config);

// Plane blow-up with labels l, e*, f*, g* (line/conic) or l, e1_*, e2_*, e3_*,
// p12/p13/p23 (three lines).
PicardLattice model_lattice(const PointConfiguration& config);

// Components of the distinguished reducible member of |-K| on model_lattice:
// strict transforms of the curves, then the exceptional classes over blown-up
// intersection points. Throws DomainError on Generic.
std::vector<DivisorClass> anticanonical_components(const PointConfiguration& config);

// --- witness identities ------------------------------------------------------

enum class WitnessExample { HirzebruchB, ConicC, CastravetD };

struct WitnessParams {
    WitnessExample example = WitnessExample::ConicC;
    int n = 1;                       // HirzebruchB, ConicC
    std::vector<FiberSpec> fibers;   // HirzebruchB: exactly n+1 special fibers
    int extra_on_sigma = 0;          // HirzebruchB

    bool operator==(const WitnessParams&) const = default;
};

struct WitnessReport {
    WitnessParams params;
    std::vector<std::string> labels;
    DivisorClass lhs;           // the multiple of -K
    DivisorClass big_part;
    DivisorClass effective_part;
    DivisorClass residual;      // lhs - big_part - effective_part
    Rational big_part_square;
    bool identity_holds = false;

    bool operator==(const WitnessReport&) const = default;
};

std::string to_string(WitnessExample e);
WitnessExample witness_from_string(const std::string& s);

// Checks the decomposition of a multiple of -K as big + effective as a literal
// class identity. Throws DomainError on malformed parameters.
WitnessReport verify_witness(const WitnessParams& params);

}  // namespace bigsurf
