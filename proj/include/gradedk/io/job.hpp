#pragma once

// Job files: a JSON document naming a ring (a built-in example or an explicit
// cone), a coefficient base, an optional module, and command parameters.
//
//   {
//     "example": "R2",                    // or "scalars" + "cone" (+ "generators")
//     "scalars": "rational" | "quadratic:2",
//     "cone": [[1, 0], ["1", "√2"]],
//     "base": "rational" | "fp:7" | "rational^2" | "fp:7^2",
//     "order": [1, 0],
//     "generators": {"U": [1, 0]},
//     "module": {"shifts": [[0, 0], [1, 0]], "idempotent": [[<term list>, ...], ...]},
//     "params": {"bound": 5, "window_k": 2, "axis": 0, "seed": 1, "expr": "U*W - V^2",
//                "base_point": [0, 0]}
//   }
//
// Syntax and schema problems raise ParseError; semantic problems (a cone that
// is not pointed, an exponent outside the cone, a matrix that is not
// idempotent) raise ValidationError.

#include "gradedk/io/json.hpp"
#include "gradedk/io/scalar_io.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gradedk {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using IntVec = std::vector<std::int64_t>;

struct TermSpec {
    IntVec exp;
    std::string coef;
    friend bool operator==(const TermSpec&, const TermSpec&) = default;
};
using TermList = std::vector<TermSpec>;
using MatrixSpec = std::vector<std::vector<TermList>>;

struct ModuleSpec {
    std::vector<IntVec> shifts;
    std::optional<MatrixSpec> idempotent;
    friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

struct ParamsSpec {
    std::optional<std::int64_t> bound;
    std::optional<std::int64_t> window_k;
    std::optional<std::int64_t> axis;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> expr;
    std::optional<IntVec> base_point;
    friend bool operator==(const ParamsSpec&, const ParamsSpec&) = default;
};

struct JobSpec {
    std::optional<std::string> example;
    std::optional<std::string> scalars;
    std::optional<std::vector<std::vector<std::string>>> cone;
    std::optional<std::string> base;
    std::optional<IntVec> order;
    std::optional<std::map<std::string, IntVec>> generators;
    std::optional<ModuleSpec> module;
    std::optional<ParamsSpec> params;
    friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// A ring after applying a built-in example and overrides.
struct RingDescription {
    std::string name;
    std::string scalars = "rational";
    std::vector<std::vector<std::string>> cone;
    std::string base = "rational";
    std::optional<IntVec> order;
    std::map<std::string, IntVec> generators;
};

// ---------------------------------------------------------------------------
// Built-in examples.

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"R1", "R2", "R3"};
    return names;
}

/// R1 = S[X, Y] on the positive orthant with deg X = (1,0), deg Y = (0,1),
/// ordered by γ₀ = (2,3). R2 = S[U,V,W]/(UW − V²) as the monoid ring of
/// cone{(1,0),(1,2)}. R3 = the monoid ring of cone{(1,0),(1,√2)}.
inline RingDescription preset(const std::string& name) {
    RingDescription d;
    d.name = name;
    if (name == "R1") {
        d.cone = {{"1", "0"}, {"0", "1"}};
        d.order = IntVec{2, 3};
        d.generators = {{"X", {1, 0}}, {"Y", {0, 1}}};
    } else if (name == "R2") {
        d.cone = {{"1", "0"}, {"1", "2"}};
        d.generators = {{"U", {1, 0}}, {"V", {1, 1}}, {"W", {1, 2}}};
    } else if (name == "R3") {
        d.scalars = "quadratic:2";
        d.cone = {{"1", "0"}, {"1", "√2"}};
    } else {
        throw ValidationError("unknown example '" + name + "' (expected R1, R2 or R3)");
    }
    return d;
}

inline RingDescription resolve_ring(const JobSpec& job) {
    RingDescription d;
    if (job.example) {
        if (job.scalars || job.cone || job.generators)
            throw ValidationError("example: 'scalars', 'cone' and 'generators' cannot be combined with a built-in example");
        d = preset(*job.example);
    } else {
        if (!job.cone) throw ValidationError("cone: required when no example is given");
        d.name = "custom";
        d.scalars = job.scalars.value_or("rational");
        d.cone = *job.cone;
        if (job.generators) d.generators = *job.generators;
    }
    if (job.base) d.base = *job.base;
    if (job.order) d.order = job.order;
    return d;
}

// ---------------------------------------------------------------------------
// Building the objects.

namespace detail {

inline std::int64_t parse_int_text(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        auto v = std::stoll(s, &used);
        if (used == s.size() && !s.empty()) return v;
    } catch (const std::logic_error&) {
    }
    throw ValidationError(what + ": malformed integer '" + s + "'");
}

}  // namespace detail

/// Radicand of "quadratic:d", or 0 for "rational".
inline std::int64_t scalars_radicand(const std::string& scalars) {
    if (scalars == "rational") return 0;
    const std::string prefix = "quadratic:";
    if (scalars.rfind(prefix, 0) == 0) {
        auto d = detail::parse_int_text(scalars.substr(prefix.size()), "scalars");
        if (d < 2 || !is_squarefree(d)) throw ValidationError("scalars: radicand " + std::to_string(d) + " is not squarefree >= 2");
        return d;
    }
    throw ValidationError("scalars: expected 'rational' or 'quadratic:d', got '" + scalars + "'");
}

inline AnyCone build_cone(const RingDescription& d) {
    auto radicand = scalars_radicand(d.scalars);
    try {
        if (radicand == 0) {
            std::vector<Vec<Rational>> gens;
            for (const auto& g : d.cone) {
                Vec<Rational> v;
                for (const auto& x : g) v.push_back(Rational::parse(x));
                gens.push_back(std::move(v));
            }
            return Cone<Rational>(std::move(gens));
        }
        std::vector<Vec<QuadraticReal>> gens;
        for (const auto& g : d.cone) {
            Vec<QuadraticReal> v;
            for (const auto& x : g) v.push_back(QuadraticReal::parse(x, radicand));
            gens.push_back(std::move(v));
        }
        return Cone<QuadraticReal>(std::move(gens));
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("cone: ") + ex.what());
    }
}

/// Unit of the coefficient ring named by a base descriptor.
using BaseUnit = std::variant<Rational, PrimeFieldElem, Product<Rational>, Product<PrimeFieldElem>>;

inline BaseUnit parse_base(const std::string& text) {
    std::string kind = text;
    std::int64_t factors = 1;
    if (auto caret = text.find('^'); caret != std::string::npos) {
        kind = text.substr(0, caret);
        factors = detail::parse_int_text(text.substr(caret + 1), "base");
        if (factors < 1 || factors > 16) throw ValidationError("base: number of factors must lie in 1..16");
    }
    auto make = [&](auto one) -> BaseUnit {
        using F = decltype(one);
        if (text.find('^') == std::string::npos) return one;
        return Product<F>(std::vector<F>(static_cast<std::size_t>(factors), one));
    };
    if (kind == "rational") return make(Rational(1));
    if (kind.rfind("fp:", 0) == 0) {
        auto p = detail::parse_int_text(kind.substr(3), "base");
        if (p < 2 || static_cast<std::uint64_t>(p) >= PrimeFieldElem::max_modulus || !is_prime(static_cast<std::uint64_t>(p)))
            throw ValidationError("base: " + std::to_string(p) + " is not a supported prime");
        return make(PrimeFieldElem(1, static_cast<std::uint64_t>(p)));
    }
    throw ValidationError("base: expected 'rational', 'fp:p', 'rational^m' or 'fp:p^m', got '" + text + "'");
}

template <Scalar S>
GradedRing<S> build_ring(const RingDescription& d, const S& one) {
    AnyCone cone = build_cone(d);
    if (!cone.full_dimensional()) throw ValidationError("cone: generators do not span the ambient space");
    auto witness = cone.pointed_witness();
    if (!witness) throw ValidationError("cone: not pointed (contains a line)");
    IntVec gamma = d.order ? *d.order : *witness;
    if (gamma.size() != cone.dim()) throw ValidationError("order: expected " + std::to_string(cone.dim()) + " entries");
    OrderForm order;
    try {
        order = cone.order_form(gamma);
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("order: ") + ex.what());
    }
    std::map<std::string, LatticePoint> named;
    for (const auto& [sym, exp] : d.generators) {
        if (sym.empty() || !std::isalpha(static_cast<unsigned char>(sym[0])) || sym == "t")
            throw ValidationError("generators: invalid symbol '" + sym + "'");
        LatticePoint p(exp);
        if (p.dim() != cone.dim() || !cone.contains(p))
            throw ValidationError("generators." + sym + ": exponent " + p.to_string() + " lies outside the cone");
        named.emplace(sym, p);
    }
    return GradedRing<S>(std::move(cone), std::move(order), one, std::move(named), d.name);
}

inline ShiftList shifts_from(const std::vector<IntVec>& v, std::size_t n, const std::string& where) {
    ShiftList out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].size() != n)
            throw ValidationError(where + "[" + std::to_string(i) + "]: expected " + std::to_string(n) + " coordinates");
        out.emplace_back(v[i]);
    }
    return out;
}

template <Scalar S>
RingElem<S> elem_from(const TermList& terms, const GradedRing<S>& ring, const std::string& where) {
    auto x = ring.zero();
    for (std::size_t t = 0; t < terms.size(); ++t) {
        std::string at = where + "[" + std::to_string(t) + "]";
        LatticePoint exp(terms[t].exp);
        if (exp.dim() != ring.dim()) throw ValidationError(at + ".exp: expected " + std::to_string(ring.dim()) + " coordinates");
        if (!ring.in_support(exp)) throw ValidationError(at + ".exp: exponent " + exp.to_string() + " lies outside the cone");
        S c = ring.base_zero();
        try {
            c = parse_coefficient(terms[t].coef, ring.base_one());
        } catch (const std::exception& ex) {
            throw ValidationError(at + ".coef: " + ex.what());
        }
        x = x + ring.monomial(exp, c);
    }
    return x;
}

template <Scalar S>
IdempotentPresentation<S> build_module(const ModuleSpec& m, const GradedRing<S>& ring) {
    auto shifts = shifts_from(m.shifts, ring.dim(), "module.shifts");
    if (!m.idempotent) return IdempotentPresentation<S>::free(ring, shifts);
    const auto& rows = *m.idempotent;
    if (rows.size() != shifts.size())
        throw ValidationError("module.idempotent: expected " + std::to_string(shifts.size()) + " rows");
    auto e = GradedMatrix<S>::zero(ring, shifts, shifts);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != shifts.size())
            throw ValidationError("module.idempotent[" + std::to_string(i) + "]: expected " + std::to_string(shifts.size()) +
                                  " entries");
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            std::string where = "module.idempotent[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            auto x = elem_from(rows[i][j], ring, where);
            try {
                e.set(i, j, x);
            } catch (const std::exception& ex) {
                throw ValidationError(where + ": " + ex.what());
            }
        }
    }
    try {
        return IdempotentPresentation<S>(std::move(e));
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("module.idempotent: ") + ex.what());
    }
}

/// Term-list form of a graded matrix, for writing modules back out.
template <Scalar S>
MatrixSpec matrix_spec(const GradedMatrix<S>& m) {
    MatrixSpec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            TermList terms;
            for (const auto& [exp, c] : m.at(i, j).sorted_terms()) terms.push_back({exp.coords(), to_string(c)});
            out[i].push_back(std::move(terms));
        }
    return out;
}

template <Scalar S>
ModuleSpec module_spec(const IdempotentPresentation<S>& p) {
    ModuleSpec m;
    for (const auto& b : p.shifts()) m.shifts.push_back(b.coords());
    m.idempotent = matrix_spec(p.matrix());
    return m;
}

/// Calls f(unit) with the unit of the job's coefficient ring.
template <class F>
decltype(auto) with_base(const RingDescription& d, F&& f) {
    return std::visit(std::forward<F>(f), parse_base(d.base));
}

// ---------------------------------------------------------------------------
// JSON schema.

namespace detail {

class Reader {
public:
    [[noreturn]] static void fail(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

    static void check_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
        if (!j.is_object()) fail(path, "expected an object");
        for (const auto& [key, value] : j.items()) {
            bool ok = false;
            for (const char* a : allowed) ok |= key == a;
            if (!ok) fail(path + "." + key, "unknown field");
        }
    }
    static std::string string(const Json& j, const std::string& path) {
        if (!j.is_string()) fail(path, "expected a string");
        return j.get<std::string>();
    }
    static std::int64_t integer(const Json& j, const std::string& path) {
        if (!j.is_number_integer()) fail(path, "expected an integer");
        return j.get<std::int64_t>();
    }
    static IntVec int_vec(const Json& j, const std::string& path) {
        if (!j.is_array()) fail(path, "expected an array of integers");
        IntVec out;
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], path + "[" + std::to_string(i) + "]"));
        return out;
    }
    /// A scalar written as a JSON integer or string.
    static std::string scalar_text(const Json& j, const std::string& path) {
        if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
        if (j.is_string()) return j.get<std::string>();
        fail(path, "expected an integer or a string");
    }
    static TermList term_list(const Json& j, const std::string& path) {
        if (!j.is_array()) fail(path, "expected a term list");
        TermList out;
        for (std::size_t t = 0; t < j.size(); ++t) {
            std::string at = path + "[" + std::to_string(t) + "]";
            check_keys(j[t], at, {"exp", "coef"});
            if (!j[t].contains("exp")) fail(at + ".exp", "missing");
            if (!j[t].contains("coef")) fail(at + ".coef", "missing");
            out.push_back({int_vec(j[t]["exp"], at + ".exp"), scalar_text(j[t]["coef"], at + ".coef")});
        }
        return out;
    }
};

inline std::string location_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Json scalar_json(const std::string& s) {
    if (!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos && s != "-") {
        try {
            std::size_t used = 0;
            auto v = std::stoll(s, &used);
            if (used == s.size() && std::to_string(v) == s) return v;
        } catch (const std::logic_error&) {
        }
    }
    return s;
}

}  // namespace detail

/// Syntax and schema only; no semantic validation.
inline JobSpec parse_job_document(const std::string& text) {
    using R = detail::Reader;
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError("syntax error at " + detail::location_of(text, ex.byte > 0 ? ex.byte - 1 : 0) + ": " + ex.what());
    }
    R::check_keys(j, "$", {"example", "scalars", "cone", "base", "order", "generators", "module", "params"});
    JobSpec job;
    if (j.contains("example")) job.example = R::string(j["example"], "$.example");
    if (j.contains("scalars")) job.scalars = R::string(j["scalars"], "$.scalars");
    if (j.contains("cone")) {
        const auto& c = j["cone"];
        if (!c.is_array() || c.empty()) R::fail("$.cone", "expected a nonempty array of generators");
        std::vector<std::vector<std::string>> gens;
        for (std::size_t g = 0; g < c.size(); ++g) {
            std::string at = "$.cone[" + std::to_string(g) + "]";
            if (!c[g].is_array()) R::fail(at, "expected an array of coordinates");
            std::vector<std::string> v;
            for (std::size_t i = 0; i < c[g].size(); ++i) v.push_back(R::scalar_text(c[g][i], at + "[" + std::to_string(i) + "]"));
            gens.push_back(std::move(v));
        }
        job.cone = std::move(gens);
    }
    if (j.contains("base")) job.base = R::string(j["base"], "$.base");
    if (j.contains("order")) job.order = R::int_vec(j["order"], "$.order");
    if (j.contains("generators")) {
        const auto& g = j["generators"];
        if (!g.is_object()) R::fail("$.generators", "expected an object");
        std::map<std::string, IntVec> gens;
        for (const auto& [sym, exp] : g.items()) gens.emplace(sym, R::int_vec(exp, "$.generators." + sym));
        job.generators = std::move(gens);
    }
    if (j.contains("module")) {
        const auto& m = j["module"];
        R::check_keys(m, "$.module", {"shifts", "idempotent"});
        if (!m.contains("shifts")) R::fail("$.module.shifts", "missing");
        ModuleSpec mod;
        const auto& s = m["shifts"];
        if (!s.is_array()) R::fail("$.module.shifts", "expected an array of integer vectors");
        for (std::size_t i = 0; i < s.size(); ++i) mod.shifts.push_back(R::int_vec(s[i], "$.module.shifts[" + std::to_string(i) + "]"));
        if (m.contains("idempotent")) {
            const auto& e = m["idempotent"];
            if (!e.is_array()) R::fail("$.module.idempotent", "expected an array of rows");
            MatrixSpec rows;
            for (std::size_t r = 0; r < e.size(); ++r) {
                std::string at = "$.module.idempotent[" + std::to_string(r) + "]";
                if (!e[r].is_array()) R::fail(at, "expected a row of term lists");
                std::vector<TermList> row;
                for (std::size_t c = 0; c < e[r].size(); ++c) row.push_back(R::term_list(e[r][c], at + "[" + std::to_string(c) + "]"));
                rows.push_back(std::move(row));
            }
            mod.idempotent = std::move(rows);
        }
        job.module = std::move(mod);
    }
    if (j.contains("params")) {
        const auto& p = j["params"];
        R::check_keys(p, "$.params", {"bound", "window_k", "axis", "seed", "expr", "base_point"});
        ParamsSpec ps;
        if (p.contains("bound")) ps.bound = R::integer(p["bound"], "$.params.bound");
        if (p.contains("window_k")) ps.window_k = R::integer(p["window_k"], "$.params.window_k");
        if (p.contains("axis")) ps.axis = R::integer(p["axis"], "$.params.axis");
        if (p.contains("seed")) {
            if (!p["seed"].is_number_unsigned()) R::fail("$.params.seed", "expected a nonnegative integer");
            ps.seed = p["seed"].get<std::uint64_t>();
        }
        if (p.contains("expr")) ps.expr = R::string(p["expr"], "$.params.expr");
        if (p.contains("base_point")) ps.base_point = R::int_vec(p["base_point"], "$.params.base_point");
        job.params = std::move(ps);
    }
    return job;
}

/// Builds the ring and module once so every cross-reference is checked.
inline void validate_job(const JobSpec& job) {
    auto d = resolve_ring(job);
    with_base(d, [&](const auto& one) {
        auto ring = build_ring(d, one);
        if (job.module) (void)build_module(*job.module, ring);
        if (job.params && job.params->base_point && job.params->base_point->size() != ring.dim())
            throw ValidationError("params.base_point: expected " + std::to_string(ring.dim()) + " coordinates");
        if (job.params && job.params->axis && (*job.params->axis < 0 || static_cast<std::size_t>(*job.params->axis) >= ring.dim()))
            throw ValidationError("params.axis: out of range");
        if (job.params && job.params->window_k && *job.params->window_k < 0)
            throw ValidationError("params.window_k: must be nonnegative");
    });
}

/// Parses and validates a job document.
inline JobSpec parse_job(const std::string& text) {
    JobSpec job = parse_job_document(text);
    validate_job(job);
    return job;
}

inline Json job_to_json(const JobSpec& job) {
    Json j = Json::object();
    if (job.example) j["example"] = *job.example;
    if (job.scalars) j["scalars"] = *job.scalars;
    if (job.cone) {
        Json c = Json::array();
        for (const auto& g : *job.cone) {
            Json v = Json::array();
            for (const auto& x : g) v.push_back(detail::scalar_json(x));
            c.push_back(std::move(v));
        }
        j["cone"] = std::move(c);
    }
    if (job.base) j["base"] = *job.base;
    if (job.order) j["order"] = *job.order;
    if (job.generators) {
        Json g = Json::object();
        for (const auto& [sym, exp] : *job.generators) g[sym] = exp;
        j["generators"] = std::move(g);
    }
    if (job.module) {
        Json m = Json::object();
        m["shifts"] = job.module->shifts;
        if (job.module->idempotent) {
            Json rows = Json::array();
            for (const auto& r : *job.module->idempotent) {
                Json row = Json::array();
                for (const auto& terms : r) {
                    Json tl = Json::array();
                    for (const auto& t : terms) tl.push_back({{"exp", t.exp}, {"coef", detail::scalar_json(t.coef)}});
                    row.push_back(std::move(tl));
                }
                rows.push_back(std::move(row));
            }
            m["idempotent"] = std::move(rows);
        }
        j["module"] = std::move(m);
    }
    if (job.params) {
        Json p = Json::object();
        const auto& ps = *job.params;
        if (ps.bound) p["bound"] = *ps.bound;
        if (ps.window_k) p["window_k"] = *ps.window_k;
        if (ps.axis) p["axis"] = *ps.axis;
        if (ps.seed) p["seed"] = *ps.seed;
        if (ps.expr) p["expr"] = *ps.expr;
        if (ps.base_point) p["base_point"] = *ps.base_point;
        j["params"] = std::move(p);
    }
    return j;
}

/// Canonical text: keys sorted, two-space indentation, trailing newline.
inline std::string serialize_job(const JobSpec& job) { return job_to_json(job).dump(2) + "\n"; }

}  // namespace gradedk
