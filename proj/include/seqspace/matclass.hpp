#pragma once

#include "seqspace/duals.hpp"

namespace seqspace {

/// The three classical spaces handled by the classifier.
enum class Space { C0, C, LInf };

Space space_from_name(std::string_view name);  // "c0" | "c" | "linf"
std::string_view space_name(Space s);

/// Per-row derived tables of a candidate matrix transformation: for each
/// row A_n the dual coefficients R(A_n), the tail-remainder table W^{A_n},
/// and its row-sum limit gamma_n (exactly 0 for finitely supported rows).
struct TransformTables {
    std::vector<SeqPrefix> dual_rows;
    std::vector<LowerTable> remainders;
    std::vector<Scalar> tail_limits;

    std::size_t row_count() const { return dual_rows.size(); }
    std::size_t table_size() const { return dual_rows.front().length(); }

    /// The dual coefficient rows as a rectangular truncation.
    Rows dual_matrix() const;
};

/// Requires every row finitely supported (tail = Zero) and table_size past
/// every support bound.
TransformTables transform_tables(const ParamTriple& p, const std::vector<SeqPrefix>& rows,
                                 std::size_t table_size);

/// The condition identifiers tested for a (from, to) pair.
const std::vector<std::string>& conditions_for(Space from, Space to);

struct ClassifyReport {
    Space from;
    Space to;
    ConditionReport report;  // keyed by the condition identifiers
    TransformTables tables;
    /// States what happened to the eta * gamma_n correction of the image
    /// representation (it vanishes when every tail limit is exactly zero,
    /// which finitely supported rows force).
    std::string correction_remark;

    Conclusion conclusion() const { return report.conclusion(); }
    std::optional<std::size_t> witness() const { return report.witness(); }
};

/// Evaluates exactly the condition list for the pair, each as a Verdict on
/// the derived tables; the conjunction is the membership conclusion at
/// truncation.
ClassifyReport classify(const ParamTriple& p, const std::vector<SeqPrefix>& rows, Space from,
                        Space to, std::size_t table_size, const BatteryOptions& opts = {});

/// Presets with closed-form dual tables used as an independent cross-check
/// route (binomial weights for Euler, two-term weights for AydinBasar).
enum class ClosedFormPreset { Euler, AydinBasar };

struct ClosedFormCheck {
    TransformTables general;  // via the D-coefficient machinery
    TransformTables closed;   // via the preset's closed forms
    /// Row-sum-of-absolute-values tables sum_k |w_mk| per row n, per m:
    /// general from the general W, closed from the closed-form display.
    std::vector<std::vector<Scalar>> abs_sums_general;
    std::vector<std::vector<Scalar>> abs_sums_closed;
    bool equal;            // entrywise equality of all general/closed pairs
    std::string mismatch;  // first mismatch description, empty when equal
};

ClosedFormCheck application_closed_forms(ClosedFormPreset which, const Scalar& alpha,
                                         const std::vector<SeqPrefix>& rows,
                                         std::size_t table_size);

}  // namespace seqspace
