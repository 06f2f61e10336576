#pragma once

// JSON encoding of configurations and reports. Rationals travel as "p/q"
// strings (plain "p" for integers); key order is fixed so output is
// byte-for-byte reproducible.

#include "json.hpp"

#include "bigsurf/bigness.hpp"
#include "bigsurf/curves.hpp"
#include "bigsurf/root_system.hpp"
#include "bigsurf/zariski.hpp"

namespace bigsurf {

using Json = nlohmann::ordered_json;

Json encode(const Rational& q);
Json encode(const IntVector& v);
Json encode(const IntMatrix& m);
Json encode(const DivisorClass& d);
Json encode(const PicardLattice& lattice);
Json encode(const PointConfiguration& config);
Json encode(const FamilyParams& params);
Json encode(const WitnessParams& params);
Json encode(const Inertia& inertia);
Json encode(const BignessVerdict& verdict);
Json encode(const CrossCheckReport& report);
Json encode(const RootSystemReport& report);
Json encode(const ZariskiReport& report);
Json encode(const NegativeClassTable& table);
Json encode(const WitnessReport& report);

// Decoders throw DomainError naming the offending field path ("$.a[1]").
void decode(const Json& j, Rational& out);
void decode(const Json& j, IntVector& out);
void decode(const Json& j, IntMatrix& out);
void decode(const Json& j, DivisorClass& out);
PicardLattice decode_lattice(const Json& j);
void decode(const Json& j, PointConfiguration& out);
void decode(const Json& j, FamilyParams& out);
void decode(const Json& j, WitnessParams& out);
void decode(const Json& j, Inertia& out);
void decode(const Json& j, BignessVerdict& out);
void decode(const Json& j, CrossCheckReport& out);
void decode(const Json& j, RootSystemReport& out);
void decode(const Json& j, ZariskiReport& out);
void decode(const Json& j, NegativeClassTable& out);
void decode(const Json& j, WitnessReport& out);

template <class T>
T decode_as(const Json& j) {
    T out{};
    decode(j, out);
    return out;
}

}  // namespace bigsurf
