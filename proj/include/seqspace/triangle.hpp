#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "seqspace/scalar.hpp"
#include "seqspace/sequence.hpp"

namespace seqspace {

/// Finite truncation of an infinite lower-triangular table. Only entries
/// with k <= n are stored; everything above the diagonal is a structural
/// zero. No constraint on the diagonal (see Triangle for that).
class LowerTable {
public:
    using EntryFn = std::function<Scalar(std::size_t n, std::size_t k)>;

    LowerTable(std::size_t size, std::vector<Scalar> lower, std::string label = "");
    static LowerTable build(std::size_t size, const EntryFn& f, std::string label = "");
    static LowerTable zero(std::size_t size, Mode mode, std::string label = "");

    std::size_t size() const { return size_; }
    Mode mode() const { return data_.front().mode(); }
    const std::string& label() const { return label_; }

    /// Stored entry, requires k <= n.
    const Scalar& entry(std::size_t n, std::size_t k) const;
    /// Entry including the structural zeros above the diagonal.
    Scalar at(std::size_t n, std::size_t k) const;

    /// Row n padded with zeros to the full size.
    std::vector<Scalar> dense_row(std::size_t n) const;
    /// All rows, rectangular.
    std::vector<std::vector<Scalar>> dense_rows() const;

    bool operator==(const LowerTable& o) const;

private:
    std::size_t index(std::size_t n, std::size_t k) const { return n * (n + 1) / 2 + k; }

    std::size_t size_;
    std::vector<Scalar> data_;  // row-major, row n holds n+1 entries
    std::string label_;
};

/// A lower-triangular truncation with nonzero diagonal — the triangle
/// property that guarantees a unique triangular inverse.
class Triangle {
public:
    using EntryFn = LowerTable::EntryFn;

    /// Validates the diagonal; the error names the first offending row.
    explicit Triangle(LowerTable table);
    static Triangle build(std::size_t size, const EntryFn& f, std::string label = "");
    static Triangle identity(std::size_t size, Mode mode);

    std::size_t size() const { return table_.size(); }
    Mode mode() const { return table_.mode(); }
    const std::string& label() const { return table_.label(); }
    const Scalar& entry(std::size_t n, std::size_t k) const { return table_.entry(n, k); }
    Scalar at(std::size_t n, std::size_t k) const { return table_.at(n, k); }
    const LowerTable& table() const { return table_; }

    bool operator==(const Triangle& o) const { return table_ == o.table_; }

private:
    LowerTable table_;
};

/// The transform (Tx)_n = sum_{k<=n} T_{nk} x_k. Requires x.length >= T.size;
/// the result has length T.size and inherits x's tail flag only when it is
/// structurally safe (always Unknown here: a triangle image of a finitely
/// supported sequence need not be finitely supported).
SeqPrefix apply(const Triangle& t, const SeqPrefix& x);

/// Triangle product (equal sizes). The result diagonal is the product of the
/// diagonals, hence again a triangle.
Triangle product(const Triangle& a, const Triangle& b);

/// Inverse by forward substitution, column by column; Exact mode only so the
/// identity product(t, invert(t)) == identity holds entrywise. This is the
/// independent route used to validate every closed-form inverse.
Triangle invert(const Triangle& t);

}  // namespace seqspace
