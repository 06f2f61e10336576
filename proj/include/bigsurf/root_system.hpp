#pragma once

// Root systems of negative definite lattices: extraction of the vectors of
// square -1 and -2, simple roots, Cartan matrices and finite-type recognition.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bigsurf/bigness.hpp"

namespace bigsurf {

struct CartanType {
    char family = 'A';  // A..G
    int rank = 0;

    std::string str() const { return std::string(1, family) + std::to_string(rank); }
    auto operator<=>(const CartanType&) const = default;
};

// Canonical order (family ascending, rank descending), rank-0 entries dropped.
std::vector<CartanType> normalized(std::vector<CartanType> types);
// "A5+A1"; the empty system is "0".
std::string type_string(const std::vector<CartanType>& types);
std::vector<CartanType> parse_type_string(const std::string& s);

struct CoxeterEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    int multiplicity = 1;  // c_ij * c_ji
    bool operator==(const CoxeterEdge&) const = default;
};

struct RootSystemReport {
    std::vector<IntVector> roots;         // both signs, lexicographic
    std::vector<IntVector> simple_roots;  // lexicographic
    std::vector<std::string> labels;      // one per simple root
    IntMatrix cartan;                     // c_ij = 2 (a_i.a_j) / (a_j.a_j)
    std::vector<CartanType> components;   // normalized
    std::vector<CoxeterEdge> graph;

    std::string type() const { return type_string(components); }
    bool operator==(const RootSystemReport&) const = default;
};

// All vectors of square -1 or -2, both signs.
std::vector<IntVector> extract_roots(const IntMatrix& gram);

// Positive roots are the lexicographically positive ones; simple roots are the
// positive roots that are not a sum of two positive roots. `gram` is the form
// the root coordinates are expressed in; `namer` labels simple roots (default
// a1, a2, ...). Throws InvariantError if a component is not of finite type.
using RootNamer = std::function<std::string(const IntVector&)>;
RootSystemReport classify(const std::vector<IntVector>& roots, const IntMatrix& gram,
                          const RootNamer& namer = {});

// Finite type of a single connected Cartan matrix; nullopt if not finite.
std::optional<CartanType> recognize_component(const IntMatrix& cartan,
                                              const std::vector<Integer>& norms);

// The tabulated type of the root lattice of a line/conic or three-line
// configuration; nullopt outside the tables.
std::optional<std::vector<CartanType>> predicted_type(const PointConfiguration& config);

struct ConfigRootLattice {
    PicardLattice lattice;
    OrthogonalComplement complement;
};

// Orthogonal complement of the anticanonical components. Throws DomainError
// when the complement is not negative definite (the configuration is not big).
ConfigRootLattice root_lattice_of_config(const PointConfiguration& config);

// Extracts and classifies the root system of a configuration, with roots and
// labels expressed in Picard coordinates.
RootSystemReport config_root_system(const PointConfiguration& config);

// Root system of K-perp on the plane blown up at r <= 8 points.
RootSystemReport del_pezzo_root_system(int r);

// Graphviz text for the Coxeter graph.
std::string coxeter_dot(const RootSystemReport& report);

}  // namespace bigsurf
