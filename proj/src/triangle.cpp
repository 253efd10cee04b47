#include "seqspace/triangle.hpp"

#include <stdexcept>

namespace seqspace {

LowerTable::LowerTable(std::size_t size, std::vector<Scalar> lower, std::string label)
    : size_(size), data_(std::move(lower)), label_(std::move(label)) {
    if (size_ == 0) throw std::invalid_argument("table size must be >= 1");
    if (data_.size() != size_ * (size_ + 1) / 2)
        throw std::invalid_argument("lower-triangular storage has wrong length");
    Mode m = data_.front().mode();
    for (const Scalar& e : data_)
        if (e.mode() != m) throw std::invalid_argument("table mixes exact and float entries");
}

LowerTable LowerTable::build(std::size_t size, const EntryFn& f, std::string label) {
    std::vector<Scalar> data;
    data.reserve(size * (size + 1) / 2);
    for (std::size_t n = 0; n < size; ++n)
        for (std::size_t k = 0; k <= n; ++k) data.push_back(f(n, k));
    return LowerTable(size, std::move(data), std::move(label));
}

LowerTable LowerTable::zero(std::size_t size, Mode mode, std::string label) {
    return LowerTable(size, std::vector<Scalar>(size * (size + 1) / 2, Scalar::zero(mode)),
                      std::move(label));
}

const Scalar& LowerTable::entry(std::size_t n, std::size_t k) const {
    if (n >= size_ || k > n) throw std::out_of_range("table entry outside lower triangle");
    return data_[index(n, k)];
}

Scalar LowerTable::at(std::size_t n, std::size_t k) const {
    if (n >= size_ || k >= size_) throw std::out_of_range("table entry outside truncation");
    return k <= n ? data_[index(n, k)] : Scalar::zero(mode());
}

std::vector<Scalar> LowerTable::dense_row(std::size_t n) const {
    std::vector<Scalar> row;
    row.reserve(size_);
    for (std::size_t k = 0; k < size_; ++k) row.push_back(at(n, k));
    return row;
}

std::vector<std::vector<Scalar>> LowerTable::dense_rows() const {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(size_);
    for (std::size_t n = 0; n < size_; ++n) rows.push_back(dense_row(n));
    return rows;
}

bool LowerTable::operator==(const LowerTable& o) const {
    if (size_ != o.size_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

Triangle::Triangle(LowerTable table) : table_(std::move(table)) {
    for (std::size_t n = 0; n < table_.size(); ++n)
        if (table_.entry(n, n).is_zero())
            throw std::invalid_argument("zero diagonal entry at row " + std::to_string(n) +
                                        ": not a triangle");
}

Triangle Triangle::build(std::size_t size, const EntryFn& f, std::string label) {
    return Triangle(LowerTable::build(size, f, std::move(label)));
}

Triangle Triangle::identity(std::size_t size, Mode mode) {
    return build(
        size, [&](std::size_t n, std::size_t k) { return n == k ? Scalar::one(mode) : Scalar::zero(mode); },
        "identity");
}

SeqPrefix apply(const Triangle& t, const SeqPrefix& x) {
    if (x.length() < t.size())
        throw std::invalid_argument("apply: input shorter than the triangle truncation");
    if (x.mode() != t.mode()) throw std::invalid_argument("apply: triangle/input mode mismatch");
    std::vector<Scalar> out;
    out.reserve(t.size());
    for (std::size_t n = 0; n < t.size(); ++n) {
        Scalar acc = Scalar::zero(t.mode());
        for (std::size_t k = 0; k <= n; ++k) acc += t.entry(n, k) * x[k];
        out.push_back(std::move(acc));
    }
    return SeqPrefix(std::move(out));
}

Triangle product(const Triangle& a, const Triangle& b) {
    if (a.size() != b.size()) throw std::invalid_argument("product: size mismatch");
    if (a.mode() != b.mode()) throw std::invalid_argument("product: mode mismatch");
    return Triangle::build(
        a.size(),
        [&](std::size_t n, std::size_t k) {
            Scalar acc = Scalar::zero(a.mode());
            for (std::size_t j = k; j <= n; ++j) acc += a.entry(n, j) * b.entry(j, k);
            return acc;
        },
        a.label().empty() || b.label().empty() ? "" : a.label() + "*" + b.label());
}

Triangle invert(const Triangle& t) {
    if (t.mode() != Mode::Exact)
        throw std::invalid_argument("invert: exact mode required for the substitution oracle");
    const std::size_t n = t.size();
    // inv is filled column by column: solve t * col_j = e_j top-down.
    std::vector<std::vector<Scalar>> cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto& col = cols[j];
        col.assign(n, Scalar::zero(Mode::Exact));
        for (std::size_t row = j; row < n; ++row) {
            if (t.entry(row, row).is_zero())
                throw std::domain_error("zero diagonal entry at row " + std::to_string(row));
            Scalar rhs = row == j ? Scalar::one(Mode::Exact) : Scalar::zero(Mode::Exact);
            for (std::size_t k = j; k < row; ++k) rhs -= t.entry(row, k) * col[k];
            col[row] = rhs / t.entry(row, row);
        }
    }
    return Triangle::build(
        n, [&](std::size_t row, std::size_t k) { return cols[k][row]; },
        t.label().empty() ? "" : t.label() + "^-1");
}

}  // namespace seqspace
