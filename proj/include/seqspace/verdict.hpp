#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqspace/scalar.hpp"

namespace seqspace {

/// Outcome of evaluating an asymptotic condition on a finite truncation.
/// HoldsAtTruncation is explicitly not a proof of the infinite statement;
/// Fails carries a concrete witness index.
enum class VerdictState { HoldsAtTruncation, Fails, Inconclusive };

std::string_view verdict_state_name(VerdictState s);

struct Verdict {
    VerdictState state = VerdictState::Inconclusive;
    /// Running sup / limit estimate, or the offending value on Fails.
    Scalar estimate;
    /// Index where a violation was observed (Fails only).
    std::optional<std::size_t> witness;
    /// Last K values of the monitored quantity.
    std::vector<Scalar> trend;
    /// The trend window has settled (exactly, or within tolerance).
    bool stabilized = false;
    std::string note;
};

/// Overall outcome of a set of conditions: the conjunction of Verdicts.
enum class Conclusion { MemberAtTruncation, NotMember, Inconclusive };

std::string_view conclusion_name(Conclusion c);

/// Map from condition identifiers (e.g. "4.5", "B1") to Verdicts, in
/// insertion order, plus the conjunction conclusion.
class ConditionReport {
public:
    explicit ConditionReport(std::string subject = "") : subject_(std::move(subject)) {}

    void add(std::string key, Verdict v);
    const Verdict& at(std::string_view key) const;
    bool has(std::string_view key) const;
    const std::vector<std::pair<std::string, Verdict>>& conditions() const { return conditions_; }
    const std::string& subject() const { return subject_; }

    /// All Holds -> MemberAtTruncation; any Fails -> NotMember with the
    /// first failing witness; otherwise Inconclusive.
    Conclusion conclusion() const;
    std::optional<std::size_t> witness() const;

private:
    std::string subject_;
    std::vector<std::pair<std::string, Verdict>> conditions_;
};

struct TrendOptions {
    double tol = 1e-9;       // float-mode tolerance; exact mode compares exactly
    std::size_t window = 8;  // trend rows examined
};

/// Trend evaluators shared by the condition batteries. Each takes the full
/// monitored value sequence (row index order) and judges the trailing
/// window.
namespace trend {

/// Is |v| zero within tolerance (exactly zero in Exact mode)?
bool near_zero(const Scalar& v, const TrendOptions& opts);

/// lim value_n = 0. Holds when the window has settled at zero or decreases
/// monotonically toward it; Fails when the window is bounded away from zero
/// and never decreases (constant nonzero limits fail here).
Verdict limit_zero(const std::vector<Scalar>& values, const TrendOptions& opts);

/// lim value_n exists. Holds when the window spread is zero within
/// tolerance; Fails only on a monotone-diverging witness beyond 1/tol.
Verdict limit_exists(const std::vector<Scalar>& values, const TrendOptions& opts);

/// sup |value_n| is finite. Holds when the running sup gained no new
/// maximum within the trailing window; Fails only on monotone divergence
/// beyond 1/tol.
Verdict sup_finite(const std::vector<Scalar>& values, const TrendOptions& opts);

/// Worst-wins conjunction of per-part verdicts (parts must be nonempty).
/// The estimate is the largest part estimate in magnitude.
Verdict conjunction(const std::vector<Verdict>& parts);

}  // namespace trend

}  // namespace seqspace
