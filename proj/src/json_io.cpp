#include "bigsurf/json_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <string_view>

namespace bigsurf {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw DomainError(path + ": " + what);
}

// Strict object access: unknown keys and missing required keys are errors.
class Reader {
public:
    Reader(const Json& j, std::string path, std::initializer_list<std::string_view> allowed)
        : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) fail(path_, "expected an object");
        for (const auto& item : j_.items())
            if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
                fail(path_ + "." + item.key(), "unknown field");
    }

    bool has(const std::string& key) const { return j_.contains(key); }
    std::string path(const std::string& key) const { return path_ + "." + key; }

    const Json& at(const std::string& key) const {
        if (!j_.contains(key)) fail(path(key), "missing required field");
        return j_.at(key);
    }

    int integer(const std::string& key) const { return as_int(at(key), path(key)); }

    bool boolean(const std::string& key) const {
        const Json& v = at(key);
        if (!v.is_boolean()) fail(path(key), "expected a boolean");
        return v.get<bool>();
    }

    std::string string(const std::string& key) const {
        const Json& v = at(key);
        if (!v.is_string()) fail(path(key), "expected a string");
        return v.get<std::string>();
    }

    const Json& array(const std::string& key) const {
        const Json& v = at(key);
        if (!v.is_array()) fail(path(key), "expected an array");
        return v;
    }

    static int as_int(const Json& v, const std::string& path) {
        if (!v.is_number_integer()) fail(path, "expected an integer");
        const auto x = v.get<long long>();
        if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
            fail(path, "integer out of range");
        return static_cast<int>(x);
    }

private:
    const Json& j_;
    std::string path_;
};

Json encode_integer(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Integer decode_integer(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0) fail(path, "malformed integer");
        return x;
    }
    fail(path, "expected an integer");
}

Rational decode_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), j.get<std::string>().c_str(), 10) != 0 || q.get_den() == 0)
        fail(path, "malformed rational");
    q.canonicalize();
    return q;
}

DivisorClass decode_class(const Json& j, const std::string& path) {
    Reader r(j, path, {"coeffs", "integral"});
    const Json& coeffs = r.array("coeffs");
    RatVector v;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        v.push_back(decode_rational(coeffs[i], r.path("coeffs") + "[" + std::to_string(i) + "]"));
    DivisorClass d(std::move(v));
    if (r.has("integral") && r.boolean("integral") != d.integral())
        fail(r.path("integral"), "flag contradicts the coefficients");
    return d;
}

IntVector decode_int_vector(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(decode_integer(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

std::vector<IntVector> decode_int_vectors(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(decode_int_vector(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::string> decode_strings(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

std::vector<int> decode_ints(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(Reader::as_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Json encode_fibers(const std::vector<FiberSpec>& fibers) {
    Json out = Json::array();
    for (const auto& f : fibers) out.push_back(Json{{"off_sigma", f.off_sigma}, {"on_sigma", f.on_sigma_blown}});
    return out;
}

std::vector<FiberSpec> decode_fibers(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    std::vector<FiberSpec> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        Reader r(j[i], path + "[" + std::to_string(i) + "]", {"off_sigma", "on_sigma"});
        out.push_back({r.integer("off_sigma"), r.boolean("on_sigma")});
    }
    return out;
}

Json encode_optional(const std::optional<Rational>& q) { return q ? encode(*q) : Json(nullptr); }

std::optional<Rational> decode_optional(const Reader& r, const std::string& key) {
    if (!r.has(key) || r.at(key).is_null()) return std::nullopt;
    return decode_rational(r.at(key), r.path(key));
}

Json encode_classes(const std::vector<DivisorClass>& classes) {
    Json out = Json::array();
    for (const auto& c : classes) out.push_back(encode(c.to_integers()));
    return out;
}

std::vector<DivisorClass> decode_classes(const Json& j, const std::string& path) {
    std::vector<DivisorClass> out;
    for (const auto& v : decode_int_vectors(j, path)) out.push_back(DivisorClass::from_integers(v));
    return out;
}

}  // namespace

// --- primitives ----------------------------------------------------------------

Json encode(const Rational& q) { return Json(q.get_str()); }

Json encode(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(encode_integer(x));
    return out;
}

Json encode(const IntMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = m.row(i);
        out.push_back(encode(IntVector(row.begin(), row.end())));
    }
    return out;
}

Json encode(const DivisorClass& d) {
    Json coeffs = Json::array();
    for (const auto& q : d.coeffs()) coeffs.push_back(encode(q));
    return Json{{"coeffs", coeffs}, {"integral", d.integral()}};
}

void decode(const Json& j, Rational& out) { out = decode_rational(j, "$"); }
void decode(const Json& j, IntVector& out) { out = decode_int_vector(j, "$"); }

void decode(const Json& j, IntMatrix& out) {
    const auto rows = decode_int_vectors(j, "$");
    out = IntMatrix::from_rows(rows);
}

void decode(const Json& j, DivisorClass& out) { out = decode_class(j, "$"); }

// --- lattices and inputs -----------------------------------------------------------

Json encode(const PicardLattice& lattice) {
    Json model;
    if (const auto* p = std::get_if<PlaneBlowup>(&lattice.model())) {
        model = Json{{"kind", "plane_blowup"}, {"r", p->r}};
    } else {
        const auto& h = std::get<HirzebruchBlowup>(lattice.model());
        model = Json{{"kind", "hirzebruch_blowup"},
                     {"n", h.n},
                     {"fibers", encode_fibers(h.fibers)},
                     {"extra_on_sigma", h.extra_on_sigma}};
    }
    return Json{{"model", model},
                {"labels", lattice.labels()},
                {"gram", encode(lattice.gram())},
                {"canonical", encode(lattice.canonical())}};
}

PicardLattice decode_lattice(const Json& j) {
    Reader r(j, "$", {"model", "labels", "gram", "canonical"});
    Reader m(r.at("model"), r.path("model"), {"kind", "r", "n", "fibers", "extra_on_sigma"});
    ModelTag tag;
    const std::string kind = m.string("kind");
    if (kind == "plane_blowup")
        tag = PlaneBlowup{m.integer("r")};
    else if (kind == "hirzebruch_blowup")
        tag = HirzebruchBlowup{m.integer("n"), decode_fibers(m.array("fibers"), m.path("fibers")),
                               m.integer("extra_on_sigma")};
    else
        fail(m.path("kind"), "unknown lattice model '" + kind + "'");
    return PicardLattice(IntMatrix::from_rows(decode_int_vectors(r.array("gram"), r.path("gram"))),
                         decode_class(r.at("canonical"), r.path("canonical")),
                         decode_strings(r.array("labels"), r.path("labels")), std::move(tag));
}

Json encode(const PointConfiguration& config) {
    return std::visit(
        [](const auto& c) -> Json {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Generic>)
                return Json{{"model", "generic"}, {"r", c.r}};
            else if constexpr (std::is_same_v<T, LineConic>)
                return Json{{"model", "line_conic"}, {"a", c.a}, {"b", c.b}, {"both", c.both}};
            else
                return Json{{"model", "three_lines"},
                            {"a", Json(c.counts)},
                            {"intersections", Json(c.intersections)}};
        },
        config);
}

void decode(const Json& j, PointConfiguration& out) {
    if (!j.is_object() || !j.contains("model") || !j.at("model").is_string())
        fail("$.model", "missing or non-string model discriminator");
    const std::string model = j.at("model").get<std::string>();
    if (model == "generic") {
        Reader r(j, "$", {"model", "r"});
        out = Generic{r.integer("r")};
    } else if (model == "line_conic") {
        Reader r(j, "$", {"model", "a", "b", "both"});
        out = LineConic{r.integer("a"), r.integer("b"), r.has("both") ? r.integer("both") : 0};
    } else if (model == "three_lines") {
        Reader r(j, "$", {"model", "a", "intersections"});
        const auto counts = decode_ints(r.array("a"), r.path("a"));
        if (counts.size() != 3) fail(r.path("a"), "expected exactly 3 counts");
        ThreeLines tl;
        std::copy(counts.begin(), counts.end(), tl.counts.begin());
        if (r.has("intersections")) {
            const Json& flags = r.array("intersections");
            if (flags.size() != 3) fail(r.path("intersections"), "expected exactly 3 flags");
            for (std::size_t i = 0; i < 3; ++i) {
                if (!flags[i].is_boolean())
                    fail(r.path("intersections") + "[" + std::to_string(i) + "]", "expected a boolean");
                tl.intersections[i] = flags[i].get<bool>();
            }
        }
        out = tl;
    } else {
        fail("$.model", "expected a point configuration (generic, line_conic, three_lines), got '" + model + "'");
    }
    validate(out);
}

Json encode(const FamilyParams& params) {
    return Json{{"model", "hirzebruch_family"}, {"n", params.n}, {"k", params.k}, {"a", params.a}};
}

void decode(const Json& j, FamilyParams& out) {
    Reader r(j, "$", {"model", "n", "k", "a"});
    if (r.string("model") != "hirzebruch_family") fail(r.path("model"), "expected 'hirzebruch_family'");
    out.n = r.integer("n");
    out.k = r.integer("k");
    out.a = decode_ints(r.array("a"), r.path("a"));
    validate(out);
}

Json encode(const WitnessParams& params) {
    Json out{{"model", "witness"}, {"example", to_string(params.example)}};
    if (params.example != WitnessExample::CastravetD) out["n"] = params.n;
    if (params.example == WitnessExample::HirzebruchB) {
        out["fibers"] = encode_fibers(params.fibers);
        out["extra_on_sigma"] = params.extra_on_sigma;
    }
    return out;
}

void decode(const Json& j, WitnessParams& out) {
    Reader r(j, "$", {"model", "example", "n", "fibers", "extra_on_sigma"});
    if (r.string("model") != "witness") fail(r.path("model"), "expected 'witness'");
    out = WitnessParams{};
    try {
        out.example = witness_from_string(r.string("example"));
    } catch (const DomainError& e) {
        fail(r.path("example"), e.what());
    }
    switch (out.example) {
        case WitnessExample::CastravetD:
            if (r.has("n") || r.has("fibers") || r.has("extra_on_sigma"))
                fail("$", "castravet_d takes no parameters");
            break;
        case WitnessExample::ConicC:
            if (r.has("fibers") || r.has("extra_on_sigma")) fail("$", "conic_c takes only n");
            out.n = r.integer("n");
            if (out.n < 1) fail(r.path("n"), "n must be >= 1");
            break;
        case WitnessExample::HirzebruchB:
            out.n = r.integer("n");
            if (out.n < 1) fail(r.path("n"), "n must be >= 1");
            if (r.has("fibers")) {
                out.fibers = decode_fibers(r.array("fibers"), r.path("fibers"));
            } else {
                // Default placement: one point on each special fiber, none on the section.
                out.fibers.assign(static_cast<std::size_t>(out.n) + 1, FiberSpec{1, false});
            }
            if (out.fibers.size() != static_cast<std::size_t>(out.n) + 1)
                fail(r.path("fibers"), "exactly n+1 special fibers are required");
            for (const auto& f : out.fibers)
                if (f.off_sigma < 0) fail(r.path("fibers"), "point counts must be >= 0");
            out.extra_on_sigma = r.has("extra_on_sigma") ? r.integer("extra_on_sigma") : 0;
            if (out.extra_on_sigma < 0) fail(r.path("extra_on_sigma"), "must be >= 0");
            break;
    }
}

// --- reports ---------------------------------------------------------------------

Json encode(const Inertia& i) {
    return Json{{"positive", i.positive}, {"negative", i.negative}, {"zero", i.zero}};
}

void decode(const Json& j, Inertia& out) {
    Reader r(j, "$", {"positive", "negative", "zero"});
    out.positive = static_cast<std::size_t>(r.integer("positive"));
    out.negative = static_cast<std::size_t>(r.integer("negative"));
    out.zero = static_cast<std::size_t>(r.integer("zero"));
}

Json encode(const BignessVerdict& v) {
    return Json{{"big", v.big},
                {"case", to_string(v.which)},
                {"inequality", encode_optional(v.inequality_lhs)},
                {"v", v.v ? encode(*v.v) : Json(nullptr)},
                {"v_squared", encode_optional(v.v_squared)},
                {"effective", v.effective},
                {"lattice_confirmed", v.lattice_confirmed}};
}

void decode(const Json& j, BignessVerdict& out) {
    Reader r(j, "$", {"big", "case", "inequality", "v", "v_squared", "effective", "lattice_confirmed"});
    out = BignessVerdict{};
    out.big = r.boolean("big");
    out.which = case_from_string(r.string("case"));
    out.inequality_lhs = decode_optional(r, "inequality");
    if (r.has("v") && !r.at("v").is_null()) out.v = decode_class(r.at("v"), r.path("v"));
    out.v_squared = decode_optional(r, "v_squared");
    out.effective = r.boolean("effective");
    out.lattice_confirmed = r.boolean("lattice_confirmed");
}

Json encode(const CrossCheckReport& c) {
    return Json{{"verdict", encode(c.verdict)},
                {"lattice_big", c.lattice_big},
                {"complement_inertia", encode(c.complement_inertia)},
                {"agree", c.agree},
                {"v_orthogonal", c.v_orthogonal},
                {"v_sign_matches", c.v_sign_matches}};
}

void decode(const Json& j, CrossCheckReport& out) {
    Reader r(j, "$", {"verdict", "lattice_big", "complement_inertia", "agree", "v_orthogonal", "v_sign_matches"});
    decode(r.at("verdict"), out.verdict);
    out.lattice_big = r.boolean("lattice_big");
    decode(r.at("complement_inertia"), out.complement_inertia);
    out.agree = r.boolean("agree");
    out.v_orthogonal = r.boolean("v_orthogonal");
    out.v_sign_matches = r.boolean("v_sign_matches");
}

Json encode(const RootSystemReport& report) {
    Json components = Json::array();
    for (const auto& c : report.components)
        components.push_back(Json{{"family", std::string(1, c.family)}, {"rank", c.rank}});
    Json graph = Json::array();
    for (const auto& e : report.graph)
        graph.push_back(Json{{"from", e.from}, {"to", e.to}, {"multiplicity", e.multiplicity}});
    Json roots = Json::array();
    for (const auto& v : report.roots) roots.push_back(encode(v));
    Json simple = Json::array();
    for (const auto& v : report.simple_roots) simple.push_back(encode(v));
    return Json{{"type", report.type()},
                {"root_count", report.roots.size()},
                {"components", components},
                {"simple_roots", simple},
                {"labels", report.labels},
                {"cartan", encode(report.cartan)},
                {"graph", graph},
                {"roots", roots}};
}

void decode(const Json& j, RootSystemReport& out) {
    Reader r(j, "$", {"type", "root_count", "components", "simple_roots", "labels", "cartan", "graph", "roots"});
    out = RootSystemReport{};
    out.roots = decode_int_vectors(r.array("roots"), r.path("roots"));
    if (static_cast<std::size_t>(r.integer("root_count")) != out.roots.size())
        fail(r.path("root_count"), "does not match the root list");
    out.simple_roots = decode_int_vectors(r.array("simple_roots"), r.path("simple_roots"));
    out.labels = decode_strings(r.array("labels"), r.path("labels"));
    out.cartan = IntMatrix::from_rows(decode_int_vectors(r.array("cartan"), r.path("cartan")));
    const Json& comps = r.array("components");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        Reader c(comps[i], r.path("components") + "[" + std::to_string(i) + "]", {"family", "rank"});
        const std::string family = c.string("family");
        if (family.size() != 1 || family[0] < 'A' || family[0] > 'G') fail(c.path("family"), "unknown family");
        out.components.push_back({family[0], c.integer("rank")});
    }
    if (type_string(out.components) != r.string("type")) fail(r.path("type"), "does not match components");
    const Json& graph = r.array("graph");
    for (std::size_t i = 0; i < graph.size(); ++i) {
        Reader e(graph[i], r.path("graph") + "[" + std::to_string(i) + "]", {"from", "to", "multiplicity"});
        out.graph.push_back({static_cast<std::size_t>(e.integer("from")), static_cast<std::size_t>(e.integer("to")),
                             e.integer("multiplicity")});
    }
}

Json encode(const ZariskiReport& z) {
    const auto& c = z.checks;
    return Json{{"params", encode(z.params)},
                {"labels", z.labels},
                {"P", encode(z.p)},
                {"N", encode(z.n)},
                {"P_squared", encode(z.p_squared)},
                {"checks",
                 Json{{"P_dot_sigma_zero", c.p_dot_sigma_zero},
                      {"P_dot_Fi_zero", c.p_dot_fibers_zero},
                      {"P_dot_N_zero", c.p_dot_n_zero},
                      {"P_squared_closed_form", c.p_square_closed_form},
                      {"N_effective", c.n_effective},
                      {"N_support_negdef", c.n_support_negative_definite},
                      {"sum_is_minus_K", c.sum_is_minus_k},
                      {"P_nonnegative_on_listed_curves", c.p_nonnegative_on_listed_curves}}},
                {"lc_coefficient", encode(z.lc_coefficient)},
                {"log_canonical", z.log_canonical}};
}

void decode(const Json& j, ZariskiReport& out) {
    Reader r(j, "$", {"params", "labels", "P", "N", "P_squared", "checks", "lc_coefficient", "log_canonical"});
    out = ZariskiReport{};
    decode(r.at("params"), out.params);
    out.labels = decode_strings(r.array("labels"), r.path("labels"));
    out.p = decode_class(r.at("P"), r.path("P"));
    out.n = decode_class(r.at("N"), r.path("N"));
    out.p_squared = decode_rational(r.at("P_squared"), r.path("P_squared"));
    Reader c(r.at("checks"), r.path("checks"),
             {"P_dot_sigma_zero", "P_dot_Fi_zero", "P_dot_N_zero", "P_squared_closed_form", "N_effective",
              "N_support_negdef", "sum_is_minus_K", "P_nonnegative_on_listed_curves"});
    out.checks.p_dot_sigma_zero = c.boolean("P_dot_sigma_zero");
    out.checks.p_dot_fibers_zero = c.boolean("P_dot_Fi_zero");
    out.checks.p_dot_n_zero = c.boolean("P_dot_N_zero");
    out.checks.p_square_closed_form = c.boolean("P_squared_closed_form");
    out.checks.n_effective = c.boolean("N_effective");
    out.checks.n_support_negative_definite = c.boolean("N_support_negdef");
    out.checks.sum_is_minus_k = c.boolean("sum_is_minus_K");
    out.checks.p_nonnegative_on_listed_curves = c.boolean("P_nonnegative_on_listed_curves");
    out.lc_coefficient = decode_rational(r.at("lc_coefficient"), r.path("lc_coefficient"));
    out.log_canonical = r.boolean("log_canonical");
}

Json encode(const NegativeClassTable& t) {
    std::vector<std::string> labels{"l"};
    for (int i = 1; i <= t.r; ++i) labels.push_back("e" + std::to_string(i));
    return Json{{"r", t.r},
                {"labels", labels},
                {"minus_one_count", t.minus_one_classes.size()},
                {"root_count", t.minus_two_roots.size()},
                {"minus_one_classes", encode_classes(t.minus_one_classes)},
                {"minus_two_roots", encode_classes(t.minus_two_roots)}};
}

void decode(const Json& j, NegativeClassTable& out) {
    Reader r(j, "$", {"r", "labels", "minus_one_count", "root_count", "minus_one_classes", "minus_two_roots"});
    out.r = r.integer("r");
    out.minus_one_classes = decode_classes(r.array("minus_one_classes"), r.path("minus_one_classes"));
    out.minus_two_roots = decode_classes(r.array("minus_two_roots"), r.path("minus_two_roots"));
    if (static_cast<std::size_t>(r.integer("minus_one_count")) != out.minus_one_classes.size())
        fail(r.path("minus_one_count"), "does not match the class list");
    if (static_cast<std::size_t>(r.integer("root_count")) != out.minus_two_roots.size())
        fail(r.path("root_count"), "does not match the root list");
}

Json encode(const WitnessReport& w) {
    return Json{{"params", encode(w.params)},
                {"labels", w.labels},
                {"lhs", encode(w.lhs)},
                {"big_part", encode(w.big_part)},
                {"effective_part", encode(w.effective_part)},
                {"residual", encode(w.residual)},
                {"big_part_square", encode(w.big_part_square)},
                {"identity_holds", w.identity_holds}};
}

void decode(const Json& j, WitnessReport& out) {
    Reader r(j, "$", {"params", "labels", "lhs", "big_part", "effective_part", "residual", "big_part_square",
                      "identity_holds"});
    decode(r.at("params"), out.params);
    out.labels = decode_strings(r.array("labels"), r.path("labels"));
    out.lhs = decode_class(r.at("lhs"), r.path("lhs"));
    out.big_part = decode_class(r.at("big_part"), r.path("big_part"));
    out.effective_part = decode_class(r.at("effective_part"), r.path("effective_part"));
    out.residual = decode_class(r.at("residual"), r.path("residual"));
    out.big_part_square = decode_rational(r.at("big_part_square"), r.path("big_part_square"));
    out.identity_holds = r.boolean("identity_holds");
}

}  // namespace bigsurf
