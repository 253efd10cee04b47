#include "seqspace/duals.hpp"

#include <bit>
#include <stdexcept>

namespace seqspace {

void validate_rows(const Rows& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix truncation must have at least one row");
    const std::size_t cols = rows.front().size();
    if (cols == 0) throw std::invalid_argument("matrix truncation must have at least one column");
    Mode m = rows.front().front().mode();
    for (const auto& row : rows) {
        if (row.size() != cols)
            throw std::invalid_argument("matrix truncation rows must have equal length");
        for (const Scalar& e : row)
            if (e.mode() != m)
                throw std::invalid_argument("matrix truncation mixes exact and float entries");
    }
}

Mode rows_mode(const Rows& rows) { return rows.front().front().mode(); }

namespace {

// Suffix sums G_i = sum_{j >= i} a_j of a finitely supported sequence.
std::vector<Scalar> suffix_sums(const SeqPrefix& a) {
    std::vector<Scalar> g(a.length() + 1, Scalar::zero(a.mode()));
    for (std::size_t i = a.length(); i-- > 0;) g[i] = g[i + 1] + a[i];
    return g;
}

}  // namespace

DualDerived dual_derived(const ParamTriple& p, const SeqPrefix& a, std::size_t table_size) {
    if (a.tail() != Tail::Zero)
        throw std::invalid_argument(
            "dual tables need a finitely supported sequence (tail = Zero); "
            "infinite tails are not computable from a prefix");
    if (a.mode() != p.mode()) throw std::invalid_argument("dual_derived: mode mismatch");
    if (table_size == 0) throw std::invalid_argument("dual_derived: table size must be >= 1");
    if (table_size > p.length())
        throw std::invalid_argument("dual_derived: table size exceeds parameter prefix length");

    const Mode m = p.mode();
    const auto support = a.support_bound();
    if (support && *support >= table_size)
        throw std::invalid_argument("dual_derived: table size must exceed the support bound of a");

    const SeqPrefix &r = p.r(), &s = p.s(), &t = p.t();
    const Scalar zero = Scalar::zero(m);
    // D coefficients up to table_size - 1: the partial-pairing table needs
    // D_{j-n} for j up to the last row.
    DCoeffs d = d_coeffs(s, table_size);
    auto signed_d = [&](std::size_t l) { return l % 2 == 0 ? d[l] : -d[l]; };

    std::vector<Scalar> g = suffix_sums(a);
    auto tail_sum = [&](std::size_t i) { return i < g.size() ? g[i] : zero; };
    const std::size_t bound_plus1 = support ? *support + 1 : 0;  // G_i = 0 for i >= bound_plus1

    // R_k(a): the diagonal term, the grouped (D_0, D_1) tail term, and the
    // higher D terms; every sum is empty past the support bound.
    std::vector<Scalar> coeffs;
    coeffs.reserve(table_size);
    for (std::size_t k = 0; k < table_size; ++k) {
        Scalar acc = a.get(k) / (s[0] * t[k]);
        if (k + 1 < bound_plus1) acc += (d[0] / t[k] - d[1] / t[k + 1]) * tail_sum(k + 1);
        for (std::size_t l = 2; k + l < bound_plus1; ++l)
            acc += signed_d(l) / t[l + k] * tail_sum(k + l);
        coeffs.push_back(r[k] * acc);
    }

    // w_mk = r_k [ sum_{l=0}^{m-k} (-1)^l D_l/t_{l+k} G_m
    //            + sum_{l=m-k+1} (-1)^l D_l/t_{l+k} G_{k+l} ].
    LowerTable remainder = LowerTable::build(
        table_size,
        [&](std::size_t mm, std::size_t k) {
            Scalar acc = zero;
            if (mm < bound_plus1) {
                Scalar head = zero;
                for (std::size_t l = 0; l <= mm - k; ++l) head += signed_d(l) / t[l + k];
                acc += head * tail_sum(mm);
            }
            for (std::size_t l = mm - k + 1; k + l < bound_plus1; ++l)
                acc += signed_d(l) / t[l + k] * tail_sum(k + l);
            return r[k] * acc;
        },
        "W");

    // e_mn from partial sums of a within the truncation window.
    std::vector<Scalar> prefix(a.length() + 1, zero);
    for (std::size_t i = 0; i < a.length(); ++i) prefix[i + 1] = prefix[i] + a[i];
    auto range_sum = [&](std::size_t lo, std::size_t hi_incl) {  // sum_{j=lo}^{hi} a_j
        if (lo > hi_incl) return zero;
        std::size_t lo_c = std::min(lo, a.length());
        std::size_t hi_c = std::min(hi_incl + 1, a.length());
        if (lo_c >= hi_c) return zero;
        return prefix[hi_c] - prefix[lo_c];
    };
    LowerTable pairing = LowerTable::build(
        table_size,
        [&](std::size_t mm, std::size_t n) {
            Scalar acc = a.get(n) / (s[0] * t[n]);
            if (n + 1 <= mm) acc += (d[0] / t[n] - d[1] / t[n + 1]) * range_sum(n + 1, mm);
            for (std::size_t j = n + 2; j <= mm; ++j) {
                Scalar term = d[j - n] / t[j] * range_sum(j, mm);
                acc += (j - n) % 2 == 0 ? term : -term;
            }
            return r[n] * acc;
        },
        "E");

    // Row sums of W vanish once m passes the support bound; the last row of
    // the table is in that regime by the precondition.
    Scalar tail_limit = zero;
    for (std::size_t k = 0; k < table_size; ++k)
        tail_limit += remainder.entry(table_size - 1, k);

    return DualDerived{a,
                       support,
                       SeqPrefix(std::move(coeffs), Tail::Zero),
                       std::move(remainder),
                       std::move(pairing),
                       std::move(tail_limit)};
}

PairingCheck pairing_identity_check(const ParamTriple& p, const SeqPrefix& a, const SeqPrefix& z) {
    if (a.tail() != Tail::Zero)
        throw std::invalid_argument("pairing check needs a finitely supported (tail = Zero)");
    const auto support = a.support_bound();
    if (support && z.length() <= *support)
        throw std::invalid_argument("pairing check: z prefix shorter than the support of a");

    const std::size_t n = z.length();
    DualDerived dd = dual_derived(p, a, n);

    Scalar direct = Scalar::zero(p.mode());
    for (std::size_t k = 0; k < std::min(a.length(), n); ++k) direct += a[k] * z[k];

    SeqPrefix tz = forward_transform(p, z);
    Scalar transformed = Scalar::zero(p.mode());
    for (std::size_t k = 0; k < n; ++k) transformed += dd.dual_coeffs[k] * tz[k];

    return PairingCheck{std::move(direct), std::move(transformed), dd.tail_limit};
}

namespace battery {

namespace {

std::vector<Scalar> row_abs_sums(const Rows& rows) {
    std::vector<Scalar> v;
    v.reserve(rows.size());
    for (const auto& row : rows) {
        Scalar acc = Scalar::zero(rows_mode(rows));
        for (const Scalar& e : row) acc += e.abs();
        v.push_back(std::move(acc));
    }
    return v;
}

std::vector<Scalar> row_sums(const Rows& rows) {
    std::vector<Scalar> v;
    v.reserve(rows.size());
    for (const auto& row : rows) {
        Scalar acc = Scalar::zero(rows_mode(rows));
        for (const Scalar& e : row) acc += e;
        v.push_back(std::move(acc));
    }
    return v;
}

std::vector<Scalar> column(const Rows& rows, std::size_t k) {
    std::vector<Scalar> v;
    v.reserve(rows.size());
    for (const auto& row : rows) v.push_back(row[k]);
    return v;
}

Verdict per_column(const Rows& rows, const TrendOptions& opts,
                   Verdict (*eval)(const std::vector<Scalar>&, const TrendOptions&)) {
    validate_rows(rows);
    std::vector<Verdict> parts;
    parts.reserve(rows.front().size());
    for (std::size_t k = 0; k < rows.front().size(); ++k) {
        Verdict v = eval(column(rows, k), opts);
        if (v.note.empty()) v.note = "column " + std::to_string(k);
        parts.push_back(std::move(v));
    }
    return trend::conjunction(parts);
}

}  // namespace

Verdict subset_sup(const Rows& rows, const BatteryOptions& opts) {
    validate_rows(rows);
    if (opts.subset_max_col > 12)
        throw std::invalid_argument("condition 4.4: subset column window capped at K_max = 12");
    const Mode m = rows_mode(rows);
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = std::min(rows.front().size(), opts.subset_max_col + 1);
    const std::size_t n_masks = std::size_t{1} << n_cols;

    // Per-subset row sums, each mask built from the mask without its lowest
    // column.
    std::vector<std::vector<Scalar>> sums(n_masks);
    sums[0].assign(n_rows, Scalar::zero(m));
    for (std::size_t mask = 1; mask < n_masks; ++mask) {
        std::size_t col = static_cast<std::size_t>(std::countr_zero(mask));
        const auto& prev = sums[mask & (mask - 1)];
        auto& cur = sums[mask];
        cur.reserve(n_rows);
        for (std::size_t row = 0; row < n_rows; ++row) cur.push_back(prev[row] + rows[row][col]);
    }

    // Running sup over subsets as rows accumulate; nondecreasing in the
    // truncation size by construction.
    std::vector<Scalar> sup_at(n_rows, Scalar::zero(m));
    for (std::size_t mask = 1; mask < n_masks; ++mask) {
        Scalar cum = Scalar::zero(m);
        for (std::size_t row = 0; row < n_rows; ++row) {
            cum += sums[mask][row].abs();
            sup_at[row] = max(sup_at[row], cum);
        }
    }

    TrendOptions topt{opts.tol, opts.window};
    Verdict v;
    v.estimate = sup_at.back();
    std::size_t win = std::min(std::max<std::size_t>(opts.window, 1), n_rows);
    v.trend.assign(sup_at.end() - static_cast<std::ptrdiff_t>(win), sup_at.end());
    v.note = "subsets of columns 0.." + std::to_string(n_cols - 1) + "; truncation lower bound";
    if (trend::near_zero(v.trend.back() - v.trend.front(), topt)) {
        v.state = VerdictState::HoldsAtTruncation;
        v.stabilized = true;
    } else if (!v.estimate.is_exact() && v.estimate.value() > 1.0 / opts.tol) {
        v.state = VerdictState::Fails;
        v.witness = n_rows - 1;
        v.note = "subset sup diverging beyond 1/tol";
    } else {
        v.state = VerdictState::Inconclusive;
    }
    return v;
}

Verdict sup_row_abs_sums(const Rows& rows, const TrendOptions& opts) {
    validate_rows(rows);
    return trend::sup_finite(row_abs_sums(rows), opts);
}

Verdict row_abs_sums_to_zero(const Rows& rows, const TrendOptions& opts) {
    validate_rows(rows);
    return trend::limit_zero(row_abs_sums(rows), opts);
}

Verdict columns_to_zero(const Rows& rows, const TrendOptions& opts) {
    return per_column(rows, opts, trend::limit_zero);
}

Verdict row_sums_to_zero(const Rows& rows, const TrendOptions& opts) {
    validate_rows(rows);
    return trend::limit_zero(row_sums(rows), opts);
}

Verdict columns_converge(const Rows& rows, const TrendOptions& opts) {
    return per_column(rows, opts, trend::limit_exists);
}

Verdict deviation_sums_to_zero(const Rows& rows, const TrendOptions& opts) {
    validate_rows(rows);
    const std::size_t n_cols = rows.front().size();
    std::vector<Verdict> col_verdicts;
    std::vector<Scalar> limits;
    col_verdicts.reserve(n_cols), limits.reserve(n_cols);
    for (std::size_t k = 0; k < n_cols; ++k) {
        Verdict v = trend::limit_exists(column(rows, k), opts);
        if (v.note.empty()) v.note = "column " + std::to_string(k);
        limits.push_back(v.estimate);
        col_verdicts.push_back(std::move(v));
    }
    for (const Verdict& v : col_verdicts)
        if (v.state != VerdictState::HoldsAtTruncation) {
            Verdict out = trend::conjunction(col_verdicts);
            out.note = "column limits not settled: " + out.note;
            return out;
        }
    std::vector<Scalar> dev;
    dev.reserve(rows.size());
    for (const auto& row : rows) {
        Scalar acc = Scalar::zero(rows_mode(rows));
        for (std::size_t k = 0; k < n_cols; ++k) acc += (row[k] - limits[k]).abs();
        dev.push_back(std::move(acc));
    }
    Verdict out = trend::limit_zero(dev, opts);
    if (out.note.empty()) out.note = "column limits estimated at truncation";
    return out;
}

Verdict row_sums_converge(const Rows& rows, const TrendOptions& opts) {
    validate_rows(rows);
    return trend::limit_exists(row_sums(rows), opts);
}

}  // namespace battery

const std::vector<std::string>& battery_condition_ids() {
    static const std::vector<std::string> ids = {"4.4", "4.5", "4.6",  "4.7",
                                                 "4.8", "4.9", "4.10", "4.11"};
    return ids;
}

ConditionReport st_battery(const Rows& rows, const std::vector<std::string>& which,
                           const BatteryOptions& opts) {
    validate_rows(rows);
    const std::vector<std::string>& ids = which.empty() ? battery_condition_ids() : which;
    TrendOptions topt{opts.tol, opts.window};
    ConditionReport report("matrix condition battery");
    for (const std::string& id : ids) {
        if (id == "4.4")
            report.add(id, battery::subset_sup(rows, opts));
        else if (id == "4.5")
            report.add(id, battery::sup_row_abs_sums(rows, topt));
        else if (id == "4.6")
            report.add(id, battery::row_abs_sums_to_zero(rows, topt));
        else if (id == "4.7")
            report.add(id, battery::columns_to_zero(rows, topt));
        else if (id == "4.8")
            report.add(id, battery::row_sums_to_zero(rows, topt));
        else if (id == "4.9")
            report.add(id, battery::columns_converge(rows, topt));
        else if (id == "4.10")
            report.add(id, battery::deviation_sums_to_zero(rows, topt));
        else if (id == "4.11")
            report.add(id, battery::row_sums_converge(rows, topt));
        else
            throw std::invalid_argument("unknown battery condition '" + id +
                                        "' (expected 4.4 .. 4.11)");
    }
    return report;
}

DualKind dual_kind_from_name(std::string_view name) {
    if (name == "alpha") return DualKind::Alpha;
    if (name == "beta_c0") return DualKind::BetaC0;
    if (name == "beta_c") return DualKind::BetaC;
    if (name == "beta_linf") return DualKind::BetaLInf;
    if (name == "gamma") return DualKind::Gamma;
    throw std::invalid_argument("unknown dual kind '" + std::string(name) +
                                "' (expected alpha|beta_c0|beta_c|beta_linf|gamma)");
}

std::string_view dual_kind_name(DualKind kind) {
    switch (kind) {
        case DualKind::Alpha: return "alpha";
        case DualKind::BetaC0: return "beta_c0";
        case DualKind::BetaC: return "beta_c";
        case DualKind::BetaLInf: return "beta_linf";
        case DualKind::Gamma: return "gamma";
    }
    return "?";
}

ConditionReport dual_membership(const ParamTriple& p, const SeqPrefix& a, DualKind kind,
                                std::size_t table_size, const BatteryOptions& opts) {
    TrendOptions topt{opts.tol, opts.window};

    if (kind == DualKind::Alpha) {
        // Columns j of the inverse triangle, scaled per row by a_n; the
        // alpha-dual condition is the subset sup over its columns.
        if (a.tail() != Tail::Zero)
            throw std::invalid_argument("dual membership needs a finitely supported sequence");
        if (auto bound = a.support_bound(); bound && *bound >= table_size)
            throw std::invalid_argument(
                "dual membership: table size must exceed the support bound of a");
        Triangle s = build_triangle(p, TriangleKind::MeanDifferenceInverse, table_size);
        Rows rows(table_size);
        for (std::size_t n = 0; n < table_size; ++n) {
            rows[n].reserve(table_size);
            for (std::size_t j = 0; j < table_size; ++j)
                rows[n].push_back(s.at(n, j) * a.get(n));
        }
        ConditionReport report("alpha-dual membership");
        report.add("4.4", battery::subset_sup(rows, opts));
        return report;
    }

    DualDerived dd = dual_derived(p, a, table_size);

    if (kind == DualKind::Gamma) {
        ConditionReport report("gamma-dual membership");
        Verdict v = battery::sup_row_abs_sums(dd.partial_pairing.dense_rows(), topt);
        v.note = v.note.empty() ? "rows of the partial pairing table" : v.note;
        report.add("4.5", std::move(v));
        return report;
    }

    Rows w_rows = dd.tail_remainder.dense_rows();
    auto b1 = [&] {
        // Partial sums of |R_k|; finitely supported inputs stabilize them
        // exactly past the support bound.
        std::vector<Scalar> partial;
        partial.reserve(table_size);
        Scalar acc = Scalar::zero(p.mode());
        for (std::size_t k = 0; k < table_size; ++k) {
            acc += dd.dual_coeffs[k].abs();
            partial.push_back(acc);
        }
        return trend::sup_finite(partial, topt);
    };

    ConditionReport report(std::string(dual_kind_name(kind)) + "-dual membership");
    switch (kind) {
        case DualKind::BetaC0:
            report.add("B1", b1());
            report.add("B2", battery::columns_to_zero(w_rows, topt));
            report.add("B3", battery::sup_row_abs_sums(w_rows, topt));
            break;
        case DualKind::BetaC:
            report.add("B1", b1());
            report.add("B3", battery::sup_row_abs_sums(w_rows, topt));
            report.add("B5", battery::columns_converge(w_rows, topt));
            report.add("B6", battery::row_sums_converge(w_rows, topt));
            break;
        case DualKind::BetaLInf:
            report.add("B1", b1());
            report.add("B4", battery::row_abs_sums_to_zero(w_rows, topt));
            break;
        default:
            throw std::logic_error("unreachable dual kind");
    }
    return report;
}

}  // namespace seqspace
