#include "bigsurf/picard.hpp"

#include <algorithm>
#include <sstream>

namespace bigsurf {

// --- DivisorClass ------------------------------------------------------------

DivisorClass DivisorClass::from_integers(std::span<const Integer> v) {
    RatVector c;
    c.reserve(v.size());
    for (const auto& x : v) c.emplace_back(x);
    return DivisorClass(std::move(c));
}

DivisorClass DivisorClass::basis(std::size_t rank, std::size_t index) {
    DivisorClass d = zero(rank);
    d.coeffs_.at(index) = 1;
    return d;
}

bool DivisorClass::integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& q) { return q.get_den() == 1; });
}

bool DivisorClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

IntVector DivisorClass::to_integers() const {
    if (!integral()) throw DomainError("divisor class is not integral");
    IntVector v;
    v.reserve(coeffs_.size());
    for (const auto& q : coeffs_) v.push_back(q.get_num());
    return v;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
    if (other.size() != size()) throw DomainError("divisor classes of different rank");
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
    if (other.size() != size()) throw DomainError("divisor classes of different rank");
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

// --- PicardLattice -------------------------------------------------------------

PicardLattice::PicardLattice(IntMatrix gram, DivisorClass canonical,
                             std::vector<std::string> labels, ModelTag model)
    : gram_(std::move(gram)),
      canonical_(std::move(canonical)),
      labels_(std::move(labels)),
      model_(std::move(model)) {
    if (!gram_.symmetric()) throw DomainError("Picard lattice: Gram matrix not symmetric");
    if (canonical_.size() != gram_.rows() || labels_.size() != gram_.rows())
        throw DomainError("Picard lattice: inconsistent dimensions");
}

std::size_t PicardLattice::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw DomainError("no basis class labelled '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

DivisorClass PicardLattice::named(const std::string& label) const { return basis(index_of(label)); }

std::string PicardLattice::format(const DivisorClass& d) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const Rational& c = d[i];
        if (c == 0) continue;
        if (c < 0)
            out << '-';
        else if (!first)
            out << '+';
        const Rational mag = abs(c);
        if (mag != 1) out << mag.get_str();
        out << labels_.at(i);
        first = false;
    }
    return first ? "0" : out.str();
}

PicardLattice blowup_p2(std::vector<std::string> exceptional_labels) {
    const std::size_t r = exceptional_labels.size();
    IntMatrix g(r + 1, r + 1);
    g(0, 0) = 1;
    for (std::size_t i = 1; i <= r; ++i) g(i, i) = -1;
    DivisorClass k = DivisorClass::zero(r + 1);
    k[0] = -3;
    for (std::size_t i = 1; i <= r; ++i) k[i] = 1;
    std::vector<std::string> labels{"l"};
    labels.insert(labels.end(), exceptional_labels.begin(), exceptional_labels.end());
    return PicardLattice(std::move(g), std::move(k), std::move(labels),
                         PlaneBlowup{static_cast<int>(r)});
}

PicardLattice blowup_p2(int r) {
    if (r < 0) throw DomainError("blowup_p2: r must be >= 0");
    std::vector<std::string> labels;
    for (int i = 1; i <= r; ++i) labels.push_back("e" + std::to_string(i));
    return blowup_p2(std::move(labels));
}

PicardLattice blowup_hirzebruch(int n, std::vector<FiberSpec> fibers, int extra_on_sigma) {
    if (n < 1) throw DomainError("blowup_hirzebruch: n must be >= 1");
    if (extra_on_sigma < 0) throw DomainError("blowup_hirzebruch: extra_on_sigma must be >= 0");
    std::vector<std::string> labels{"s", "F"};
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        if (fibers[i].off_sigma < 0) throw DomainError("blowup_hirzebruch: negative point count");
        const std::string fiber = std::to_string(i + 1);
        for (int j = 1; j <= fibers[i].off_sigma; ++j)
            labels.push_back("E" + fiber + "_" + std::to_string(j));
        if (fibers[i].on_sigma_blown) labels.push_back("E" + fiber + "_s");
    }
    for (int j = 1; j <= extra_on_sigma; ++j) labels.push_back("Es_" + std::to_string(j));

    const std::size_t rank = labels.size();
    IntMatrix g(rank, rank);
    g(0, 0) = -n;
    g(0, 1) = 1;
    g(1, 0) = 1;
    for (std::size_t i = 2; i < rank; ++i) g(i, i) = -1;
    DivisorClass k = DivisorClass::zero(rank);
    k[0] = -2;
    k[1] = -(n + 2);
    for (std::size_t i = 2; i < rank; ++i) k[i] = 1;
    return PicardLattice(std::move(g), std::move(k), std::move(labels),
                         HirzebruchBlowup{n, std::move(fibers), extra_on_sigma});
}

namespace {

const HirzebruchBlowup& hirzebruch_model(const PicardLattice& lattice) {
    const auto* model = std::get_if<HirzebruchBlowup>(&lattice.model());
    if (!model) throw DomainError("not a Hirzebruch blow-up model");
    return *model;
}

}  // namespace

std::vector<std::size_t> fiber_exceptionals(const PicardLattice& lattice, std::size_t fiber) {
    const auto& model = hirzebruch_model(lattice);
    if (fiber >= model.fibers.size()) throw DomainError("fiber index out of range");
    std::size_t index = 2;
    for (std::size_t i = 0; i < fiber; ++i)
        index += static_cast<std::size_t>(model.fibers[i].off_sigma) + (model.fibers[i].on_sigma_blown ? 1 : 0);
    const std::size_t count =
        static_cast<std::size_t>(model.fibers[fiber].off_sigma) + (model.fibers[fiber].on_sigma_blown ? 1 : 0);
    std::vector<std::size_t> out(count);
    for (std::size_t j = 0; j < count; ++j) out[j] = index + j;
    return out;
}

std::vector<std::size_t> sigma_exceptionals(const PicardLattice& lattice) {
    const auto& model = hirzebruch_model(lattice);
    std::vector<std::size_t> out;
    std::size_t index = 2;
    for (const auto& f : model.fibers) {
        index += static_cast<std::size_t>(f.off_sigma);
        if (f.on_sigma_blown) out.push_back(index++);
    }
    for (int j = 0; j < model.extra_on_sigma; ++j) out.push_back(index++);
    return out;
}

DivisorClass fiber_strict_transform(const PicardLattice& lattice, std::size_t fiber) {
    DivisorClass d = lattice.basis(1);
    for (auto i : fiber_exceptionals(lattice, fiber)) d[i] -= 1;
    return d;
}

DivisorClass sigma_strict_transform(const PicardLattice& lattice) {
    DivisorClass d = lattice.basis(0);
    for (auto i : sigma_exceptionals(lattice)) d[i] -= 1;
    return d;
}

Rational pair(const PicardLattice& lattice, const DivisorClass& a, const DivisorClass& b) {
    return bilinear(lattice.gram(), std::span<const Rational>(a.coeffs()),
                    std::span<const Rational>(b.coeffs()));
}

Rational self_intersection(const PicardLattice& lattice, const DivisorClass& a) {
    return pair(lattice, a, a);
}

Integer arithmetic_genus(const PicardLattice& lattice, const DivisorClass& c) {
    if (!c.integral()) throw DomainError("arithmetic_genus: class is not integral");
    const Rational twice = self_intersection(lattice, c) + pair(lattice, c, lattice.canonical());
    const Rational g = 1 + twice / 2;
    if (g.get_den() != 1) throw InvariantError("arithmetic_genus: parity violated");
    return g.get_num();
}

Integer riemann_roch_nef(const PicardLattice& lattice, const DivisorClass& n) {
    if (!n.integral()) throw DomainError("riemann_roch_nef: class is not integral");
    const Rational twice = self_intersection(lattice, n) - pair(lattice, lattice.canonical(), n);
    const Rational h = twice / 2 + 1;
    if (h.get_den() != 1) throw InvariantError("riemann_roch_nef: parity violated");
    return h.get_num();
}

// --- configurations ------------------------------------------------------------

void validate(const PointConfiguration& config) {
    std::visit(
        [](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Generic>) {
                if (c.r < 0) throw DomainError("generic: r must be >= 0");
            } else if constexpr (std::is_same_v<T, LineConic>) {
                if (c.a < 0) throw DomainError("line_conic: a must be >= 0");
                if (c.b < 0) throw DomainError("line_conic: b must be >= 0");
                if (c.both < 0 || c.both > 2)
                    throw DomainError("line_conic: both must satisfy 0 <= both <= 2");
            } else {
                for (int a : c.counts)
                    if (a < 0) throw DomainError("three_lines: counts must be >= 0");
            }
        },
        config);
}

int total_points(const PointConfiguration& config) {
    return std::visit(
        [](const auto& c) -> int {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Generic>)
                return c.r;
            else if constexpr (std::is_same_v<T, LineConic>)
                return c.a + c.b + c.both;
            else
                return c.counts[0] + c.counts[1] + c.counts[2] +
                       static_cast<int>(std::count(c.intersections.begin(), c.intersections.end(), true));
        },
        config);
}

std::string describe(const PointConfiguration& config) {
    std::ostringstream out;
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Generic>)
                out << "Generic{" << c.r << "}";
            else if constexpr (std::is_same_v<T, LineConic>)
                out << "LineConic{" << c.a << "," << c.b << "," << c.both << "}";
            else
                out << "ThreeLines{" << c.counts[0] << "," << c.counts[1] << "," << c.counts[2] << ","
                    << c.intersections[0] << c.intersections[1] << c.intersections[2] << "}";
        },
        config);
    return out.str();
}

namespace {

constexpr std::array<const char*, 3> kIntersectionLabels{"p12", "p13", "p23"};
// Lines through each intersection point (0-based).
constexpr std::array<std::array<int, 2>, 3> kIntersectionLines{{{0, 1}, {0, 2}, {1, 2}}};

}  // namespace

PicardLattice model_lattice(const PointConfiguration& config) {
    validate(config);
    std::vector<std::string> labels;
    if (const auto* g = std::get_if<Generic>(&config)) return blowup_p2(g->r);
    if (const auto* lc = std::get_if<LineConic>(&config)) {
        for (int i = 1; i <= lc->a; ++i) labels.push_back("e" + std::to_string(i));
        for (int i = 1; i <= lc->b; ++i) labels.push_back("f" + std::to_string(i));
        for (int i = 1; i <= lc->both; ++i) labels.push_back("g" + std::to_string(i));
    } else {
        const auto& tl = std::get<ThreeLines>(config);
        for (int line = 0; line < 3; ++line)
            for (int j = 1; j <= tl.counts[line]; ++j)
                labels.push_back("e" + std::to_string(line + 1) + "_" + std::to_string(j));
        for (int p = 0; p < 3; ++p)
            if (tl.intersections[p]) labels.push_back(kIntersectionLabels[p]);
    }
    return blowup_p2(std::move(labels));
}

std::vector<DivisorClass> anticanonical_components(const PointConfiguration& config) {
    if (std::holds_alternative<Generic>(config))
        throw DomainError("anticanonical_components: generic configuration has no distinguished reducible member");
    const PicardLattice lattice = model_lattice(config);
    const std::size_t rank = lattice.rank();
    std::vector<DivisorClass> out;
    if (const auto* lc = std::get_if<LineConic>(&config)) {
        DivisorClass line = lattice.basis(0);
        DivisorClass conic = Rational(2) * lattice.basis(0);
        std::size_t idx = 1;
        for (int i = 0; i < lc->a; ++i) line[idx++] = -1;
        for (int i = 0; i < lc->b; ++i) conic[idx++] = -1;
        std::vector<std::size_t> shared;
        for (int i = 0; i < lc->both; ++i) {
            line[idx] = -1;
            conic[idx] = -1;
            shared.push_back(idx++);
        }
        out.push_back(std::move(line));
        out.push_back(std::move(conic));
        for (auto i : shared) out.push_back(DivisorClass::basis(rank, i));
        return out;
    }
    const auto& tl = std::get<ThreeLines>(config);
    std::array<DivisorClass, 3> lines{lattice.basis(0), lattice.basis(0), lattice.basis(0)};
    std::size_t idx = 1;
    for (int line = 0; line < 3; ++line)
        for (int j = 0; j < tl.counts[line]; ++j) lines[line][idx++] = -1;
    std::vector<std::size_t> shared;
    for (int p = 0; p < 3; ++p) {
        if (!tl.intersections[p]) continue;
        for (int line : kIntersectionLines[p]) lines[line][idx] = -1;
        shared.push_back(idx++);
    }
    for (auto& l : lines) out.push_back(std::move(l));
    for (auto i : shared) out.push_back(DivisorClass::basis(rank, i));
    return out;
}

// --- witnesses -------------------------------------------------------------------

std::string to_string(WitnessExample e) {
    switch (e) {
        case WitnessExample::HirzebruchB: return "hirzebruch_b";
        case WitnessExample::ConicC: return "conic_c";
        case WitnessExample::CastravetD: return "castravet_d";
    }
    return "?";
}

WitnessExample witness_from_string(const std::string& s) {
    if (s == "hirzebruch_b") return WitnessExample::HirzebruchB;
    if (s == "conic_c") return WitnessExample::ConicC;
    if (s == "castravet_d") return WitnessExample::CastravetD;
    throw DomainError("unknown witness example '" + s + "'");
}

WitnessReport verify_witness(const WitnessParams& params) {
    WitnessReport report;
    report.params = params;
    const auto finish = [&](const PicardLattice& lattice, const Rational& multiple, DivisorClass big,
                            DivisorClass effective) {
        report.labels = lattice.labels();
        report.lhs = -multiple * lattice.canonical();
        report.residual = report.lhs - big - effective;
        report.big_part_square = self_intersection(lattice, big);
        report.big_part = std::move(big);
        report.effective_part = std::move(effective);
        report.identity_holds = report.residual.is_zero();
        return report;
    };

    switch (params.example) {
        case WitnessExample::HirzebruchB: {
            const int n = params.n;
            if (n < 1) throw DomainError("hirzebruch_b: n must be >= 1");
            if (params.fibers.size() != static_cast<std::size_t>(n) + 1)
                throw DomainError("hirzebruch_b: exactly n+1 special fibers are required");
            const PicardLattice lattice = blowup_hirzebruch(n, params.fibers, params.extra_on_sigma);
            const DivisorClass sigma = lattice.basis(0);  // total transform of the section
            const DivisorClass fiber = lattice.basis(1);
            DivisorClass big = sigma + Rational(n) * fiber;
            DivisorClass effective = Rational(n - 1) * sigma + Rational(n) * sigma_strict_transform(lattice);
            for (std::size_t i = 0; i < params.fibers.size(); ++i)
                effective += Rational(n) * fiber_strict_transform(lattice, i);
            return finish(lattice, n, std::move(big), std::move(effective));
        }
        case WitnessExample::ConicC: {
            const int n = params.n;
            if (n < 1) throw DomainError("conic_c: n must be >= 1");
            std::vector<std::string> labels{"ep"};
            for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
            const PicardLattice lattice = blowup_p2(std::move(labels));
            const DivisorClass line = lattice.basis(0);
            DivisorClass conic = Rational(2) * line;
            for (int i = 1; i <= n; ++i) conic -= lattice.basis(1 + i);
            DivisorClass effective = Rational(n - 1) * conic;
            for (int i = 1; i <= n; ++i)
                effective += line - lattice.basis(1) - lattice.basis(1 + i);
            return finish(lattice, n, Rational(2) * line, std::move(effective));
        }
        case WitnessExample::CastravetD: {
            // The ten points are the pairwise intersections of five lines.
            std::vector<std::string> labels;
            std::vector<std::array<int, 2>> points;
            for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j) {
                    labels.push_back("e" + std::to_string(i) + std::to_string(j));
                    points.push_back({i, j});
                }
            const PicardLattice lattice = blowup_p2(std::move(labels));
            const DivisorClass line = lattice.basis(0);
            DivisorClass effective = DivisorClass::zero(lattice.rank());
            for (int k = 1; k <= 5; ++k) {
                DivisorClass strict = line;
                for (std::size_t p = 0; p < points.size(); ++p)
                    if (points[p][0] == k || points[p][1] == k) strict -= lattice.basis(p + 1);
                effective += strict;
            }
            return finish(lattice, 2, line, std::move(effective));
        }
    }
    throw DomainError("unknown witness example");
}

}  // namespace bigsurf
