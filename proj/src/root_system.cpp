#include "bigsurf/root_system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bigsurf {

std::vector<CartanType> normalized(std::vector<CartanType> types) {
    std::erase_if(types, [](const CartanType& t) { return t.rank <= 0; });
    std::sort(types.begin(), types.end(), [](const CartanType& x, const CartanType& y) {
        if (x.family != y.family) return x.family < y.family;
        return x.rank > y.rank;
    });
    return types;
}

std::string type_string(const std::vector<CartanType>& types) {
    if (types.empty()) return "0";
    std::string out;
    for (const auto& t : types) {
        if (!out.empty()) out += '+';
        out += t.str();
    }
    return out;
}

std::vector<CartanType> parse_type_string(const std::string& s) {
    std::vector<CartanType> out;
    if (s == "0") return out;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, '+')) {
        if (part.size() < 2 || part[0] < 'A' || part[0] > 'G')
            throw DomainError("malformed root system type '" + s + "'");
        try {
            std::size_t used = 0;
            const int rank = std::stoi(part.substr(1), &used);
            if (used != part.size() - 1 || rank <= 0) throw std::invalid_argument(part);
            out.push_back({part[0], rank});
        } catch (const std::exception&) {
            throw DomainError("malformed root system type '" + s + "'");
        }
    }
    return normalized(std::move(out));
}

std::vector<IntVector> extract_roots(const IntMatrix& gram) {
    std::vector<IntVector> candidates = short_vectors(gram, Integer(2), true);
    // Every vector with 0 < -v.v <= 2 has square -1 or -2.
    return candidates;
}

namespace {

bool lex_positive(const IntVector& v) {
    for (const auto& c : v)
        if (c != 0) return c > 0;
    return false;
}

struct LexLess {
    bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

std::vector<std::size_t> neighbours(const IntMatrix& cartan, std::size_t i) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < cartan.rows(); ++j)
        if (j != i && cartan(i, j) != 0) out.push_back(j);
    return out;
}

}  // namespace

std::optional<CartanType> recognize_component(const IntMatrix& cartan,
                                              const std::vector<Integer>& norms) {
    const std::size_t k = cartan.rows();
    if (k == 0) return std::nullopt;
    if (k == 1) return CartanType{'A', 1};
    const int rank = static_cast<int>(k);

    std::size_t edges = 0;
    int doubles = 0, triples = 0;
    std::size_t double_u = 0, double_v = 0;
    std::vector<std::size_t> degree(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (cartan(i, j) == 0) continue;
            const Integer m = cartan(i, j) * cartan(j, i);
            ++edges;
            ++degree[i];
            ++degree[j];
            if (m == 2) {
                ++doubles;
                double_u = i;
                double_v = j;
            } else if (m == 3) {
                ++triples;
            } else if (m != 1) {
                return std::nullopt;
            }
        }
    if (edges != k - 1) return std::nullopt;  // connected, so a tree
    const std::size_t max_degree = *std::max_element(degree.begin(), degree.end());

    if (triples > 0) {
        if (k == 2 && triples == 1) return CartanType{'G', 2};
        return std::nullopt;
    }
    if (doubles > 1) return std::nullopt;
    if (doubles == 1) {
        if (max_degree > 2) return std::nullopt;
        if (k == 2) return CartanType{'B', 2};
        const bool at_end = degree[double_u] == 1 || degree[double_v] == 1;
        if (!at_end) {
            if (k == 4) return CartanType{'F', 4};
            return std::nullopt;
        }
        Integer shortest = abs(norms[0]);
        for (const auto& n : norms) shortest = std::min<Integer>(shortest, abs(n));
        const auto short_count = std::count_if(norms.begin(), norms.end(),
                                               [&](const Integer& n) { return abs(n) == shortest; });
        return CartanType{short_count == 1 ? 'B' : 'C', rank};
    }

    if (max_degree <= 2) return CartanType{'A', rank};
    if (max_degree > 3 || std::count(degree.begin(), degree.end(), 3u) != 1) return std::nullopt;
    const std::size_t branch = static_cast<std::size_t>(
        std::find(degree.begin(), degree.end(), 3u) - degree.begin());
    std::vector<int> arms;
    for (std::size_t start : neighbours(cartan, branch)) {
        int length = 1;
        std::size_t prev = branch, cur = start;
        while (degree[cur] == 2) {
            const auto nb = neighbours(cartan, cur);
            const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++length;
        }
        arms.push_back(length);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return CartanType{'D', rank};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return CartanType{'E', rank};
    return std::nullopt;
}

RootSystemReport classify(const std::vector<IntVector>& roots, const IntMatrix& gram,
                          const RootNamer& namer) {
    RootSystemReport report;
    report.roots = roots;
    std::sort(report.roots.begin(), report.roots.end(), LexLess{});
    if (roots.empty()) return report;

    std::set<IntVector, LexLess> positive;
    for (const auto& r : report.roots) {
        if (r.size() != gram.rows()) throw DomainError("classify: root dimension mismatch");
        if (lex_positive(r)) positive.insert(r);
    }
    if (positive.size() * 2 != report.roots.size())
        throw DomainError("classify: root list is not closed under negation");

    for (const auto& alpha : positive) {
        bool decomposable = false;
        for (const auto& beta : positive) {
            IntVector diff(alpha.size());
            for (std::size_t i = 0; i < alpha.size(); ++i) diff[i] = alpha[i] - beta[i];
            if (positive.count(diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) report.simple_roots.push_back(alpha);
    }

    const std::size_t k = report.simple_roots.size();
    std::vector<Integer> norms(k);
    for (std::size_t i = 0; i < k; ++i)
        norms[i] = bilinear(gram, report.simple_roots[i], report.simple_roots[i]);
    report.cartan = IntMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const Integer num = 2 * bilinear(gram, report.simple_roots[i], report.simple_roots[j]);
            if (num % norms[j] != 0) throw InvariantError("classify: non-integral Cartan entry");
            report.cartan(i, j) = num / norms[j];
        }

    for (std::size_t i = 0; i < k; ++i) {
        report.labels.push_back(namer ? namer(report.simple_roots[i]) : "a" + std::to_string(i + 1));
        for (std::size_t j = i + 1; j < k; ++j)
            if (report.cartan(i, j) != 0)
                report.graph.push_back(
                    {i, j, static_cast<int>(Integer(report.cartan(i, j) * report.cartan(j, i)).get_si())});
    }

    std::vector<bool> seen(k, false);
    for (std::size_t s = 0; s < k; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> nodes{s};
        seen[s] = true;
        for (std::size_t q = 0; q < nodes.size(); ++q)
            for (std::size_t nb : neighbours(report.cartan, nodes[q]))
                if (!seen[nb]) {
                    seen[nb] = true;
                    nodes.push_back(nb);
                }
        std::sort(nodes.begin(), nodes.end());
        IntMatrix sub(nodes.size(), nodes.size());
        std::vector<Integer> sub_norms;
        for (std::size_t a = 0; a < nodes.size(); ++a) {
            sub_norms.push_back(norms[nodes[a]]);
            for (std::size_t b = 0; b < nodes.size(); ++b) sub(a, b) = report.cartan(nodes[a], nodes[b]);
        }
        const auto type = recognize_component(sub, sub_norms);
        if (!type) throw InvariantError("classify: component is not of finite type");
        report.components.push_back(*type);
    }
    report.components = normalized(std::move(report.components));
    return report;
}

std::optional<std::vector<CartanType>> predicted_type(const PointConfiguration& config) {
    using T = std::vector<CartanType>;
    if (const auto* lc = std::get_if<LineConic>(&config)) {
        const int a = lc->a, b = lc->b;
        if (a == 0 || b == 0) return normalized(T{{'A', a + b - 1}});
        if (b == 1) return normalized(T{{'A', a - 1}});
        if (b == 2) return normalized(T{{'A', a}, {'A', 1}});
        if (b == 3) return normalized(T{{'A', a + 2}});
        if (b == 4 || a == 1) return normalized(T{{'D', a + b - 1}});
        if (a == 2 && b == 5) return T{{'E', 6}};
        if ((a == 3 && b == 5) || (a == 2 && b == 6)) return T{{'E', 7}};
        if ((a == 4 && b == 5) || (a == 2 && b == 7)) return T{{'E', 8}};
        return std::nullopt;
    }
    if (const auto* tl = std::get_if<ThreeLines>(&config)) {
        auto a = tl->counts;
        std::sort(a.begin(), a.end(), std::greater<>());
        if (a[2] == 0) return normalized(T{{'A', a[0] - 1}, {'A', a[1] - 1}});
        if (a[2] == 1) return normalized(T{{'A', a[0] + a[1] - 1}});
        if (a[1] == 2 && a[2] == 2) return T{{'D', a[0] + 2}};
        if (a[1] == 3 && a[2] == 2 && a[0] >= 3 && a[0] <= 5) return T{{'E', a[0] + 3}};
        return std::nullopt;
    }
    throw DomainError("predicted_type: requires a line_conic or three_lines configuration");
}

ConfigRootLattice root_lattice_of_config(const PointConfiguration& config) {
    if (std::holds_alternative<Generic>(config))
        throw DomainError("root_lattice_of_config: requires a line_conic or three_lines configuration");
    PicardLattice lattice = model_lattice(config);
    OrthogonalComplement complement = orthogonal_complement(lattice, anticanonical_components(config));
    if (!inertia(complement.gram).negative_definite())
        throw DomainError("configuration " + describe(config) +
                          " is not big: the complement of the anticanonical components is not negative definite");
    return {std::move(lattice), std::move(complement)};
}

namespace {

RootSystemReport classify_in_ambient(const PicardLattice& lattice, const OrthogonalComplement& complement) {
    std::vector<IntVector> roots;
    for (const auto& coeffs : extract_roots(complement.gram))
        roots.push_back(combine(complement.basis, coeffs));
    return classify(roots, lattice.gram(), [&lattice](const IntVector& v) {
        return lattice.format(DivisorClass::from_integers(v));
    });
}

}  // namespace

RootSystemReport config_root_system(const PointConfiguration& config) {
    const auto rl = root_lattice_of_config(config);
    return classify_in_ambient(rl.lattice, rl.complement);
}

RootSystemReport del_pezzo_root_system(int r) {
    if (r < 0 || r > 8) throw DomainError("del Pezzo root system: requires 0 <= r <= 8");
    const PicardLattice lattice = blowup_p2(r);
    return classify_in_ambient(lattice, orthogonal_complement(lattice, {lattice.canonical()}));
}

std::string coxeter_dot(const RootSystemReport& report) {
    auto quoted = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream out;
    out << "graph coxeter {\n";
    for (const auto& label : report.labels) out << "  " << quoted(label) << ";\n";
    for (const auto& e : report.graph) {
        out << "  " << quoted(report.labels[e.from]) << " -- " << quoted(report.labels[e.to]);
        if (e.multiplicity > 1) out << " [label=\"" << e.multiplicity << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace bigsurf
