#pragma once

// The command layer behind the `gradedk` executable. Each command takes a
// validated job and produces human text, a JSON document and an exit code:
//   0 success, 2 parse error, 3 validation error, 4 failed check, 5 internal error.

#include "gradedk/io/job.hpp"
#include "gradedk/k0/verify.hpp"
#include "gradedk/modules/random.hpp"
#include "gradedk/ring/expression.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace gradedk::cli {

enum ExitCode : int { kOk = 0, kParse = 2, kValidation = 3, kCheckFailed = 4, kInternal = 5 };

struct CommandOutput {
    std::string human;
    Json machine = Json::object();
    int exit_code = kOk;
};

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"cone check", "enumerate", "ring eval", "decompose",
                                                "filtration", "k0",        "verify",    "hilbert"};
    return names;
}

/// Defaults for parameters a job may omit.
struct Defaults {
    static constexpr std::int64_t enumerate_bound = 5;
    static constexpr std::int64_t hilbert_bound = 10;
    static constexpr std::uint64_t seed = 1;
    static constexpr std::size_t random_samples = 10;
    static constexpr std::int64_t random_pool_degree = 4;
};

/// Degrees used for sample modules: the named generators in ring order, or,
/// for rings without names, the nonzero lattice points of C of least
/// positive γ₀-degree.
template <Scalar S>
std::vector<LatticePoint> sample_degrees(const GradedRing<S>& ring) {
    std::vector<LatticePoint> out;
    for (const auto& [sym, exp] : ring.named_generators())
        if (!exp.is_zero()) out.push_back(exp);
    if (out.empty()) {
        for (std::int64_t bound = 1; out.empty() && bound <= 64; ++bound)
            for (const auto& p : ring.cone().enumerate(ring.order(), LatticePoint(ring.dim()), bound))
                if (!p.is_zero()) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), ring.order().less_fn());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// e = [[1, t^g], [0, 0]] on shifts (0, g): a non-free summand of R ⊕ R(−g)
/// isomorphic to R.
template <Scalar S>
IdempotentPresentation<S> worked_example(const GradedRing<S>& ring, const LatticePoint& g) {
    ShiftList shifts{LatticePoint(ring.dim()), g};
    auto e = GradedMatrix<S>::zero(ring, shifts, shifts);
    e.set(0, 0, ring.one());
    e.set(0, 1, ring.monomial(g));
    return IdempotentPresentation<S>(std::move(e));
}

/// The module of the job, or the worked example on the first sample degree.
template <Scalar S>
IdempotentPresentation<S> job_module(const JobSpec& job, const GradedRing<S>& ring) {
    if (job.module) return build_module(*job.module, ring);
    auto degrees = sample_degrees(ring);
    if (degrees.empty()) throw ValidationError("ring has no nonzero lattice points for a sample module");
    return worked_example(ring, degrees.front());
}

/// Default verification sample: R ⊕ R(−g) per sample degree g, then seeded
/// random idempotents on 2 to 4 shifts of γ₀-degree at most 4.
template <Scalar S>
std::vector<std::pair<std::string, IdempotentPresentation<S>>> default_sample(const GradedRing<S>& ring, std::uint64_t seed,
                                                                               std::size_t random_count) {
    std::vector<std::pair<std::string, IdempotentPresentation<S>>> out;
    for (const auto& g : sample_degrees(ring)) {
        ShiftList shifts{LatticePoint(ring.dim()), g};
        out.emplace_back("free R + R(-" + g.to_string() + ")", IdempotentPresentation<S>::free(ring, shifts));
    }
    Rng rng(seed);
    auto pool = support_pool(ring, Defaults::random_pool_degree);
    for (std::size_t i = 0; i < random_count; ++i) {
        auto size = static_cast<std::size_t>(draw(rng, 2, 4));
        auto shifts = random_shifts(pool, size, rng);
        out.emplace_back("random #" + std::to_string(i + 1) + " on " + shifts_to_string(shifts),
                         random_presentation(ring, shifts, rng));
    }
    return out;
}

namespace detail {

inline std::string indent(const std::string& block, const std::string& pad) {
    std::string out;
    std::istringstream in(block);
    for (std::string line; std::getline(in, line);) out += pad + line + "\n";
    return out;
}

template <Scalar S>
std::string dense_to_string(const DenseMatrix<S>& m) {
    std::string s;
    for (const auto& row : m) {
        s += "[";
        for (std::size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + to_string(row[j]);
        s += "]\n";
    }
    return s;
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

inline Json ring_json(const RingDescription& d, const OrderForm& order) {
    return {{"name", d.name}, {"scalars", d.scalars}, {"base", d.base}, {"order", order.gamma()}};
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline CommandOutput cone_check(const JobSpec& job) {
    CommandOutput out;
    auto d = resolve_ring(job);
    AnyCone cone = build_cone(d);
    std::ostringstream h;
    h << "ring: " << d.name << "\n";
    h << "scalars: " << d.scalars << "\n";
    h << "generators: " << detail::join(cone.generator_strings(), "; ") << "\n";
    bool full = cone.full_dimensional();
    h << "full-dimensional: " << (full ? "yes" : "no") << "\n";
    out.machine["ring"] = d.name;
    out.machine["scalars"] = d.scalars;
    out.machine["generators"] = cone.generator_strings();
    out.machine["full_dimensional"] = full;
    bool pointed = cone.visit([&](const auto& c) {
        auto pt = is_pointed(c);
        if (pt.pointed) {
            h << "pointed: yes\n";
            h << "witness: " << LatticePoint(*pt.witness).to_string() << "\n";
            out.machine["pointed"] = true;
            out.machine["witness"] = *pt.witness;
        } else {
            h << "pointed: no\n";
            h << "line: +/-" << vec_to_string(*pt.line) << "\n";
            out.machine["pointed"] = false;
            out.machine["line"] = vec_to_string(*pt.line);
        }
        return pt.pointed;
    });
    if (full) {
        h << "facets: " << detail::join(cone.facet_strings(), "; ") << "\n";
        out.machine["facets"] = cone.facet_strings();
    }
    if (full && pointed) {
        IntVec gamma = d.order ? *d.order : *cone.pointed_witness();
        bool order_ok = true;
        try {
            (void)cone.order_form(gamma);
        } catch (const std::exception& ex) {
            order_ok = false;
            h << "order: " << ex.what() << "\n";
        }
        if (order_ok) h << "order: gamma0 = " << LatticePoint(gamma).to_string() << ", ties broken lexicographically\n";
        out.machine["order"] = gamma;
        out.machine["order_valid"] = order_ok;
        auto v = cone.interior_vector();
        h << "interior vector: " << v.to_string() << "\n";
        out.machine["interior_vector"] = v.coords();
        if (!order_ok) out.exit_code = kCheckFailed;
    } else {
        out.exit_code = kCheckFailed;
    }
    out.machine["passed"] = out.exit_code == kOk;
    out.human = h.str();
    return out;
}

template <Scalar S>
CommandOutput enumerate_cmd(const JobSpec& job, const GradedRing<S>& ring) {
    CommandOutput out;
    const auto& params = job.params ? *job.params : ParamsSpec{};
    auto bound = params.bound.value_or(Defaults::enumerate_bound);
    LatticePoint base = params.base_point ? LatticePoint(*params.base_point) : LatticePoint(ring.dim());
    auto pts = ring.cone().enumerate(ring.order(), base, bound);
    std::string h;
    Json arr = Json::array();
    for (const auto& p : pts) {
        h += p.to_string() + "\n";
        arr.push_back(p.coords());
    }
    out.human = h;
    out.machine = {{"base_point", base.coords()}, {"bound", bound}, {"order", ring.order().gamma()}, {"points", arr}};
    return out;
}

template <Scalar S>
CommandOutput ring_eval(const JobSpec& job, const GradedRing<S>& ring) {
    CommandOutput out;
    if (!job.params || !job.params->expr) throw ParseError("ring eval: missing --expr");
    auto x = parse_expression(ring, *job.params->expr);
    out.human = x.to_string() + "\n";
    out.machine = {{"expr", *job.params->expr}, {"value", encode_elem(x)}, {"text", x.to_string()}};
    return out;
}

template <Scalar S>
CommandOutput decompose_cmd(const JobSpec& job, const GradedRing<S>& ring) {
    CommandOutput out;
    auto p = job_module(job, ring);
    auto dec = conjugator(p);
    std::ostringstream h;
    h << "shifts: " << shifts_to_string(p.shifts()) << "\n";
    h << "e:\n" << detail::indent(p.matrix().to_string(), "  ");
    h << "blocks of T(P):\n";
    Json blocks = Json::array();
    for (const auto& [b, block] : dec.blocks) {
        auto cls = k0_of_idempotent(block.matrix, ring.base_one());
        std::string rows = detail::dense_to_string(block.matrix);
        std::replace(rows.begin(), rows.end(), '\n', ' ');
        while (!rows.empty() && rows.back() == ' ') rows.pop_back();
        h << "  " << b.to_string() << " rank " << cls.to_string() << ": " << rows << "\n";
        blocks.push_back({{"shift", b.coords()}, {"matrix", encode_dense(block.matrix)}, {"class", cls.components()}});
    }
    h << "u:\n" << detail::indent(dec.u.to_string(), "  ");
    h << "u^-1:\n" << detail::indent(dec.u_inv.to_string(), "  ");
    h << "nilpotency: (u - 1)^" << dec.nilpotency_index << " = 0, bound D + 1 = " << dec.nilpotency_bound + 1 << "\n";
    out.human = h.str();
    out.machine = {{"shifts", encode_shifts(p.shifts())},
                   {"e", encode_matrix(p.matrix())},
                   {"blocks", blocks},
                   {"u", encode_matrix(dec.u)},
                   {"u_inv", encode_matrix(dec.u_inv)},
                   {"nilpotency_index", dec.nilpotency_index},
                   {"nilpotency_bound", dec.nilpotency_bound}};
    return out;
}

template <Scalar S>
CommandOutput filtration_cmd(const JobSpec& job, const GradedRing<S>& ring) {
    CommandOutput out;
    auto p = job_module(job, ring);
    auto dec = conjugator(p);
    auto v = ring.cone().interior_vector();
    auto minimal = window_index(p, v);
    std::int64_t k = job.params && job.params->window_k ? *job.params->window_k : minimal;
    auto window = window_points(ring, v, k);
    const S one = ring.base_one();
    std::ostringstream h;
    h << "shifts: " << shifts_to_string(p.shifts()) << "\n";
    h << "window: v = " << v.to_string() << ", k = " << k << " (minimal " << minimal << "), " << window.size()
      << " points (interior rows with a zero quotient omitted)\n";
    Json rows = Json::array();
    std::optional<GradedMatrix<S>> prev;
    bool ok = true;
    for (const auto& a : window) {
        auto pa = filtration_matrix(p, dec, a);
        auto rank_a = k0_of_idempotent(reduce_entries(pa), one);
        auto quotient = prev ? k0_of_idempotent(reduce_entries(pa - *prev), one) : rank_a;
        auto block = dec.blocks.find(a);
        K0Class want = block == dec.blocks.end() ? K0Class(std::vector<std::int64_t>(quotient.factors()))
                                                 : k0_of_idempotent(block->second.matrix, one);
        bool row_ok = quotient == want;
        ok &= row_ok;
        if (!quotient.is_zero() || !row_ok || a == window.front() || a == window.back())
            h << "  " << a.to_string() << ": rank F^a = " << rank_a.to_string() << ", quotient = " << quotient.to_string()
              << (row_ok ? "" : " (block " + want.to_string() + ")") << "\n";
        rows.push_back({{"a", a.coords()}, {"rank", rank_a.components()}, {"quotient", quotient.components()},
                        {"block", want.components()}});
        prev = std::move(pa);
    }
    bool bottom_ok = !window.empty() && k0_of_idempotent(reduce_entries(filtration_matrix(p, dec, window.front())), one).is_zero();
    bool top_ok = !window.empty() && filtration_matrix(p, dec, window.back()) == p.matrix();
    // A window that misses a generator degree cannot see its quotient.
    for (const auto& b : generator_degrees(p, dec))
        if (!std::binary_search(window.begin(), window.end(), b, ring.order().less_fn())) ok = false;
    ok = ok && bottom_ok && top_ok;
    h << "F^{-kv}P = 0: " << (bottom_ok ? "yes" : "no") << "\n";
    h << "F^{kv}P = P: " << (top_ok ? "yes" : "no") << "\n";
    h << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
    out.human = h.str();
    out.machine = {{"window", {{"vector", v.coords()}, {"k", k}, {"minimal_k", minimal}}},
                   {"points", rows},
                   {"bottom_zero", bottom_ok},
                   {"top_full", top_ok},
                   {"passed", ok}};
    out.exit_code = ok ? kOk : kCheckFailed;
    return out;
}

template <Scalar S>
CommandOutput k0_cmd(const JobSpec& job, const GradedRing<S>& ring) {
    CommandOutput out;
    auto p = job_module(job, ring);
    auto cls = graded_rank(p);
    out.human = cls.to_string(ring.order()) + "\n";
    out.machine = {{"graded_rank", encode_class(cls, ring.order())}, {"text", cls.to_string(ring.order())}};
    return out;
}

template <Scalar S>
CommandOutput verify_cmd(const JobSpec& job, const GradedRing<S>& ring) {
    CommandOutput out;
    const auto& params = job.params ? *job.params : ParamsSpec{};
    std::vector<std::pair<std::string, IdempotentPresentation<S>>> sample;
    if (job.module) sample.emplace_back("job module on " + shifts_to_string(shifts_from(job.module->shifts, ring.dim(), "module.shifts")),
                                        build_module(*job.module, ring));
    else sample = default_sample(ring, params.seed.value_or(Defaults::seed), Defaults::random_samples);
    std::ostringstream h;
    Json modules = Json::array();
    bool all = true;
    std::size_t index = 0;
    for (const auto& [label, p] : sample) {
        auto report = verify_theorem_k0(p, params.window_k);
        all &= report.passed();
        h << "module " << ++index << ": " << label << "\n";
        for (const auto& c : report.checks) {
            h << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
            if (!c.counterexample.empty()) h << detail::indent(c.counterexample, "    ");
        }
        h << "  graded rank: " << report.graded_rank.to_string(ring.order()) << "\n";
        Json m = encode_report(report, ring.order());
        m["label"] = label;
        m["shifts"] = encode_shifts(p.shifts());
        modules.push_back(std::move(m));
    }
    h << "verdict: " << (all ? "PASS" : "FAIL") << " (" << sample.size() << " module" << (sample.size() == 1 ? "" : "s")
      << ")\n";
    out.human = h.str();
    out.machine = {{"passed", all}, {"modules", modules}};
    out.exit_code = all ? kOk : kCheckFailed;
    return out;
}

template <Scalar S>
CommandOutput hilbert_cmd(const JobSpec& job, const GradedRing<S>& ring) {
    CommandOutput out;
    if constexpr (!factor_traits<S>::is_field) {
        throw ValidationError("hilbert: the coefficient base must be a field");
    } else {
        auto p = job_module(job, ring);
        auto bound = job.params && job.params->bound ? *job.params->bound : Defaults::hilbert_bound;
        auto rows = hilbert_table(p, bound);
        std::ostringstream h;
        h << "shifts: " << shifts_to_string(p.shifts()) << "\n";
        h << "graded rank: " << graded_rank(p).to_string(ring.order()) << "\n";
        h << "degree  dim  expected\n";
        Json arr = Json::array();
        bool ok = true;
        for (const auto& r : rows) {
            bool row_ok = static_cast<std::int64_t>(r.dimension) == r.expected;
            ok &= row_ok;
            h << r.degree.to_string() << "  " << r.dimension << "  " << r.expected << (row_ok ? "" : "  MISMATCH") << "\n";
            arr.push_back({{"a", r.degree.coords()}, {"dim", r.dimension}, {"expected", r.expected}});
        }
        h << "verdict: " << (ok ? "PASS" : "FAIL") << " (" << rows.size() << " degrees with gamma0 <= " << bound << ")\n";
        out.human = h.str();
        out.machine = {{"bound", bound}, {"rows", arr}, {"passed", ok}};
        out.exit_code = ok ? kOk : kCheckFailed;
    }
    return out;
}

/// Runs `command` on a validated job.
inline CommandOutput run_command(const std::string& command, const JobSpec& job) {
    if (command == "cone check") return cone_check(job);
    auto d = resolve_ring(job);
    return with_base(d, [&](const auto& one) -> CommandOutput {
        auto ring = build_ring(d, one);
        CommandOutput out;
        if (command == "enumerate") out = enumerate_cmd(job, ring);
        else if (command == "ring eval") out = ring_eval(job, ring);
        else if (command == "decompose") out = decompose_cmd(job, ring);
        else if (command == "filtration") out = filtration_cmd(job, ring);
        else if (command == "k0") out = k0_cmd(job, ring);
        else if (command == "verify") out = verify_cmd(job, ring);
        else if (command == "hilbert") out = hilbert_cmd(job, ring);
        else throw ParseError("unknown command '" + command + "'");
        out.machine["command"] = command;
        out.machine["ring"] = detail::ring_json(d, ring.order());
        return out;
    });
}

/// Maps an exception escaping a command to its exit code.
inline int exit_code_for(const std::exception& ex) {
    if (dynamic_cast<const ParseError*>(&ex) || dynamic_cast<const ExpressionError*>(&ex)) return kParse;
    if (dynamic_cast<const VerificationError*>(&ex)) return kInternal;
    if (dynamic_cast<const ValidationError*>(&ex) || dynamic_cast<const std::invalid_argument*>(&ex) ||
        dynamic_cast<const std::domain_error*>(&ex) || dynamic_cast<const std::out_of_range*>(&ex) ||
        dynamic_cast<const std::overflow_error*>(&ex))
        return kValidation;
    return kInternal;
}

}  // namespace gradedk::cli
