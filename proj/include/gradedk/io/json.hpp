#pragma once

// Canonical JSON encodings: term lists [{"coef": ..., "exp": [...]}] sorted
// by the ring order, matrices as row-major arrays of term lists, graded rank
// classes as [{"class": [...], "exp": [...]}].

#include "gradedk/k0/verify.hpp"

#include <nlohmann/json.hpp>

namespace gradedk {

using Json = nlohmann::json;

inline Json encode_point(const LatticePoint& p) { return Json(p.coords()); }

inline Json encode_shifts(const ShiftList& shifts) {
    Json out = Json::array();
    for (const auto& b : shifts) out.push_back(encode_point(b));
    return out;
}

template <Scalar S>
Json encode_elem(const RingElem<S>& x) {
    Json out = Json::array();
    for (const auto& [exp, c] : x.sorted_terms()) out.push_back({{"exp", encode_point(exp)}, {"coef", to_string(c)}});
    return out;
}

template <Scalar S>
Json encode_matrix(const GradedMatrix<S>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode_elem(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <Scalar S>
Json encode_dense(const DenseMatrix<S>& m) {
    Json rows = Json::array();
    for (const auto& r : m) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(to_string(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json encode_class(const GradedRankClass& c, const OrderForm& order) {
    std::vector<LatticePoint> exps;
    for (const auto& [exp, x] : c.terms()) exps.push_back(exp);
    std::sort(exps.begin(), exps.end(), order.less_fn());
    Json out = Json::array();
    for (const auto& exp : exps) out.push_back({{"exp", encode_point(exp)}, {"class", c.terms().at(exp).components()}});
    return out;
}

inline Json encode_report(const TheoremReport& r, const OrderForm& order) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j = {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
        if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
        checks.push_back(std::move(j));
    }
    return {{"passed", r.passed()},
            {"checks", std::move(checks)},
            {"graded_rank", encode_class(r.graded_rank, order)},
            {"graded_rank_text", r.graded_rank.to_string(order)},
            {"window", {{"vector", encode_point(r.window_vector)}, {"k", r.window_k}, {"points", r.window_size}}}};
}

}  // namespace gradedk
