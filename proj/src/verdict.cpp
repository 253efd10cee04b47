#include "seqspace/verdict.hpp"

#include <cmath>
#include <stdexcept>

namespace seqspace {

std::string_view verdict_state_name(VerdictState s) {
    switch (s) {
        case VerdictState::HoldsAtTruncation: return "HoldsAtTruncation";
        case VerdictState::Fails: return "Fails";
        case VerdictState::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string_view conclusion_name(Conclusion c) {
    switch (c) {
        case Conclusion::MemberAtTruncation: return "MemberAtTruncation";
        case Conclusion::NotMember: return "NotMember";
        case Conclusion::Inconclusive: return "Inconclusive";
    }
    return "?";
}

void ConditionReport::add(std::string key, Verdict v) {
    conditions_.emplace_back(std::move(key), std::move(v));
}

const Verdict& ConditionReport::at(std::string_view key) const {
    for (const auto& [k, v] : conditions_)
        if (k == key) return v;
    throw std::out_of_range("no condition '" + std::string(key) + "' in report");
}

bool ConditionReport::has(std::string_view key) const {
    for (const auto& [k, v] : conditions_)
        if (k == key) return true;
    return false;
}

Conclusion ConditionReport::conclusion() const {
    bool inconclusive = false;
    for (const auto& [k, v] : conditions_) {
        if (v.state == VerdictState::Fails) return Conclusion::NotMember;
        if (v.state == VerdictState::Inconclusive) inconclusive = true;
    }
    return inconclusive ? Conclusion::Inconclusive : Conclusion::MemberAtTruncation;
}

std::optional<std::size_t> ConditionReport::witness() const {
    for (const auto& [k, v] : conditions_)
        if (v.state == VerdictState::Fails && v.witness) return v.witness;
    return std::nullopt;
}

namespace trend {

bool near_zero(const Scalar& v, const TrendOptions& opts) {
    if (v.is_exact()) return v.is_zero();
    return std::fabs(v.value()) <= opts.tol;
}

namespace {

std::vector<Scalar> window_of(const std::vector<Scalar>& values, std::size_t window) {
    std::size_t n = std::min(values.size(), std::max<std::size_t>(window, 1));
    return {values.end() - static_cast<std::ptrdiff_t>(n), values.end()};
}

bool diverges(const std::vector<Scalar>& abs_window, const Scalar& last, const TrendOptions& opts) {
    // Monotone growth beyond the tol-scaled bound; only meaningful in Float
    // mode (a finite exact truncation cannot witness divergence).
    if (last.is_exact() || abs_window.size() < 2) return false;
    for (std::size_t i = 0; i + 1 < abs_window.size(); ++i)
        if (!(abs_window[i] < abs_window[i + 1])) return false;
    return std::fabs(last.value()) > 1.0 / opts.tol;
}

}  // namespace

Verdict limit_zero(const std::vector<Scalar>& values, const TrendOptions& opts) {
    Verdict v;
    if (values.empty()) {
        v.note = "no data";
        return v;
    }
    std::vector<Scalar> w = window_of(values, opts.window);
    std::vector<Scalar> aw;
    aw.reserve(w.size());
    for (const Scalar& x : w) aw.push_back(x.abs());

    v.trend = w;
    v.estimate = aw.back();

    if (near_zero(aw.back(), opts)) {
        v.state = VerdictState::HoldsAtTruncation;
        v.stabilized = true;
        for (const Scalar& x : aw)
            if (!near_zero(x, opts)) v.stabilized = false;
        return v;
    }

    bool decreasing = aw.size() >= 2, nondecreasing = aw.size() >= 2;
    for (std::size_t i = 0; i + 1 < aw.size(); ++i) {
        if (!(aw[i + 1] < aw[i])) decreasing = false;
        if (aw[i + 1] < aw[i]) nondecreasing = false;
    }
    if (decreasing) {
        v.state = VerdictState::HoldsAtTruncation;
        v.note = "decreasing trend";
        return v;
    }
    bool bounded_away = true;
    for (const Scalar& x : aw)
        if (near_zero(x, opts)) bounded_away = false;
    if (nondecreasing && bounded_away) {
        v.state = VerdictState::Fails;
        v.witness = values.size() - 1;
        v.note = "bounded away from zero across the trend window";
        return v;
    }
    v.state = VerdictState::Inconclusive;
    return v;
}

Verdict limit_exists(const std::vector<Scalar>& values, const TrendOptions& opts) {
    Verdict v;
    if (values.empty()) {
        v.note = "no data";
        return v;
    }
    std::vector<Scalar> w = window_of(values, opts.window);
    v.trend = w;
    v.estimate = w.back();

    Scalar lo = w.front(), hi = w.front();
    for (const Scalar& x : w) {
        lo = min(lo, x);
        hi = max(hi, x);
    }
    if (near_zero(hi - lo, opts)) {
        v.state = VerdictState::HoldsAtTruncation;
        v.stabilized = true;
        return v;
    }
    std::vector<Scalar> aw;
    aw.reserve(w.size());
    for (const Scalar& x : w) aw.push_back(x.abs());
    if (diverges(aw, w.back(), opts)) {
        v.state = VerdictState::Fails;
        v.witness = values.size() - 1;
        v.note = "monotone divergence beyond 1/tol";
        return v;
    }
    v.state = VerdictState::Inconclusive;
    return v;
}

Verdict sup_finite(const std::vector<Scalar>& values, const TrendOptions& opts) {
    Verdict v;
    if (values.empty()) {
        v.note = "no data";
        return v;
    }
    // Running sup of |values|; track the last row that raised it.
    Scalar sup = values.front().abs();
    std::size_t last_raise = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        Scalar a = values[i].abs();
        if (sup < a) {
            sup = a;
            last_raise = i;
        }
    }
    v.trend = window_of(values, opts.window);
    v.estimate = sup;

    std::size_t stale = values.size() - 1 - last_raise;
    std::size_t need = std::min(std::max<std::size_t>(opts.window, 1), values.size()) - 1;
    if (stale >= need) {
        v.state = VerdictState::HoldsAtTruncation;
        v.stabilized = true;
        return v;
    }
    std::vector<Scalar> aw;
    for (const Scalar& x : v.trend) aw.push_back(x.abs());
    if (diverges(aw, aw.back(), opts)) {
        v.state = VerdictState::Fails;
        v.witness = values.size() - 1;
        v.note = "monotone divergence beyond 1/tol";
        return v;
    }
    v.state = VerdictState::Inconclusive;
    v.note = "running sup still rising near the truncation edge";
    return v;
}

Verdict conjunction(const std::vector<Verdict>& parts) {
    if (parts.empty()) throw std::invalid_argument("conjunction of zero verdicts");
    const Verdict* decisive = &parts.front();
    Verdict out;
    out.state = VerdictState::HoldsAtTruncation;
    out.stabilized = true;
    out.estimate = parts.front().estimate.abs();
    for (const Verdict& p : parts) {
        out.estimate = max(out.estimate, p.estimate.abs());
        out.stabilized = out.stabilized && p.stabilized;
        bool worse = (p.state == VerdictState::Fails && out.state != VerdictState::Fails) ||
                     (p.state == VerdictState::Inconclusive &&
                      out.state == VerdictState::HoldsAtTruncation);
        if (worse) {
            out.state = p.state;
            decisive = &p;
        }
    }
    out.witness = decisive->witness;
    out.trend = decisive->trend;
    out.note = decisive->note;
    return out;
}

}  // namespace trend

}  // namespace seqspace
