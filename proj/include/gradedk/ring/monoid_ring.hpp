#pragma once

// The ℤⁿ-graded monoid ring R = S[C ∩ ℤⁿ] over a coefficient ring S, for a
// full-dimensional pointed cone C. Elements are sparse maps from exponents
// in C to nonzero coefficients. R₀ = S, and R₊ is spanned by the nonzero
// exponents, all of which are > 0 in the cone order.

#include "gradedk/exact/scalar.hpp"
#include "gradedk/geometry/any_cone.hpp"
#include "gradedk/geometry/order.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gradedk {

/// Operands from different ring contexts, or exponents outside the cone.
class RingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <Scalar S>
struct RingContext {
    AnyCone cone;
    OrderForm order;
    S one;
    std::map<std::string, LatticePoint> named_generators;
    std::string name;
};

template <Scalar S>
class RingElem;

template <Scalar S>
class GradedRing {
public:
    using Elem = RingElem<S>;

    /// `base_one` is the unit of S (it fixes moduli and the number of factors).
    GradedRing(AnyCone cone, OrderForm order, S base_one, std::map<std::string, LatticePoint> named = {},
               std::string name = {}) {
        if (!cone.full_dimensional()) throw GeometryError("graded ring needs a full-dimensional cone");
        if (!cone.pointed_witness()) throw GeometryError("graded ring needs a pointed cone");
        OrderForm checked_order = cone.order_form(order.gamma());
        for (const auto& [sym, exp] : named)
            if (exp.dim() != cone.dim() || !cone.contains(exp))
                throw RingError("generator " + sym + " has exponent " + exp.to_string() + " outside the cone");
        ctx_ = std::make_shared<const RingContext<S>>(
            RingContext<S>{std::move(cone), std::move(checked_order), std::move(base_one), std::move(named), std::move(name)});
    }

    std::size_t dim() const { return ctx_->cone.dim(); }
    const AnyCone& cone() const { return ctx_->cone; }
    const OrderForm& order() const { return ctx_->order; }
    const std::string& name() const { return ctx_->name; }
    const std::map<std::string, LatticePoint>& named_generators() const { return ctx_->named_generators; }
    S base_one() const { return ctx_->one; }
    S base_zero() const { return zero_like(ctx_->one); }
    S base_int(std::int64_t v) const { return from_int_like(ctx_->one, v); }

    bool in_support(const LatticePoint& a) const { return a.dim() == dim() && ctx_->cone.contains(a); }

    Elem zero() const { return Elem(ctx_); }
    Elem one() const { return constant(ctx_->one); }
    Elem constant(const S& c) const { return monomial(LatticePoint(dim()), c); }
    Elem monomial(const LatticePoint& exp, const S& c) const {
        if (!in_support(exp)) throw RingError("exponent " + exp.to_string() + " is outside the cone");
        Elem e(ctx_);
        if (!is_zero(c)) e.terms_.emplace(exp, c);
        return e;
    }
    Elem monomial(const LatticePoint& exp) const { return monomial(exp, ctx_->one); }
    Elem generator(const std::string& symbol) const {
        auto it = ctx_->named_generators.find(symbol);
        if (it == ctx_->named_generators.end()) throw RingError("unknown generator '" + symbol + "'");
        return monomial(it->second);
    }

    bool same_context(const GradedRing& o) const { return ctx_ == o.ctx_; }
    const std::shared_ptr<const RingContext<S>>& context() const { return ctx_; }

private:
    std::shared_ptr<const RingContext<S>> ctx_;
};

template <Scalar S>
class RingElem {
public:
    using Terms = std::map<LatticePoint, S>;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Terms sorted ascending in the ring's order (canonical output order).
    std::vector<std::pair<LatticePoint, S>> sorted_terms() const {
        std::vector<std::pair<LatticePoint, S>> out(terms_.begin(), terms_.end());
        const auto& order = ctx_->order;
        std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return order.less(a.first, b.first); });
        return out;
    }

    /// Degree of a nonzero homogeneous element.
    std::optional<LatticePoint> homogeneous_degree() const {
        if (terms_.size() != 1) return std::nullopt;
        return terms_.begin()->first;
    }
    bool is_homogeneous_of(const LatticePoint& a) const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == a);
    }

    /// Coefficient of t^a (zero when absent).
    S coefficient(const LatticePoint& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? zero_like(ctx_->one) : it->second;
    }

    RingElem operator-() const {
        RingElem r = *this;
        for (auto& [exp, c] : r.terms_) c = -c;
        return r;
    }
    friend RingElem operator+(const RingElem& x, const RingElem& y) {
        check(x, y);
        RingElem r = x;
        for (const auto& [exp, c] : y.terms_) r.accumulate(exp, c);
        return r;
    }
    friend RingElem operator-(const RingElem& x, const RingElem& y) { return x + (-y); }
    friend RingElem operator*(const RingElem& x, const RingElem& y) {
        check(x, y);
        RingElem r(x.ctx_);
        for (const auto& [ea, ca] : x.terms_)
            for (const auto& [eb, cb] : y.terms_) r.accumulate(ea + eb, ca * cb);
        return r;
    }
    friend RingElem operator*(const S& s, const RingElem& x) {
        RingElem r(x.ctx_);
        for (const auto& [exp, c] : x.terms_) r.accumulate(exp, s * c);
        return r;
    }
    RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
    RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    friend bool operator==(const RingElem& x, const RingElem& y) {
        check(x, y);
        if (x.terms_.size() != y.terms_.size()) return false;
        for (auto i = x.terms_.begin(), j = y.terms_.begin(); i != x.terms_.end(); ++i, ++j)
            if (!(i->first == j->first) || !(i->second == j->second)) return false;
        return true;
    }

    RingElem pow(unsigned k) const {
        RingElem r = one_of(*this);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    const std::shared_ptr<const RingContext<S>>& context() const { return ctx_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [exp, c] : sorted_terms()) {
            if (!s.empty()) s += " + ";
            std::string cs = gradedk::to_string(c);
            if (cs.find(" mod ") != std::string::npos && !exp.is_zero()) cs = "(" + cs + ")";
            if (exp.is_zero()) s += cs;
            else s += (cs == "1" ? std::string() : cs + "*") + "t^" + exp.to_string();
        }
        return s;
    }

private:
    friend class GradedRing<S>;
    explicit RingElem(std::shared_ptr<const RingContext<S>> ctx) : ctx_(std::move(ctx)) {}

    static RingElem one_of(const RingElem& x) {
        RingElem r(x.ctx_);
        r.terms_.emplace(LatticePoint(x.ctx_->cone.dim()), x.ctx_->one);
        return r;
    }
    static void check(const RingElem& x, const RingElem& y) {
        if (x.ctx_ != y.ctx_) throw RingError("operands belong to different ring contexts");
    }
    void accumulate(const LatticePoint& exp, const S& c) {
        if (gradedk::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(exp, c);
        if (inserted) return;
        it->second = it->second + c;
        if (gradedk::is_zero(it->second)) terms_.erase(it);
    }

    std::shared_ptr<const RingContext<S>> ctx_;
    Terms terms_;
};

/// Coefficient of the graded piece R_a.
template <Scalar S>
S graded_piece(const RingElem<S>& x, const LatticePoint& a) {
    return x.coefficient(a);
}

/// The ring map R → R₀ = R/R₊, i.e. the degree-zero coefficient.
template <Scalar S>
S reduce_mod_plus(const RingElem<S>& x) {
    return x.coefficient(LatticePoint(x.context()->cone.dim()));
}

}  // namespace gradedk
