#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "seqspace/scalar.hpp"

namespace seqspace {

/// What is known about the entries beyond a stored prefix.
enum class Tail { Zero, Unknown };

/// A finite prefix (x_0, ..., x_{N-1}) of a sequence, N >= 1, all entries in
/// one Scalar mode. tail = Zero declares the sequence finitely supported
/// within the prefix, which makes every tail sum a finite sum.
class SeqPrefix {
public:
    explicit SeqPrefix(std::vector<Scalar> entries, Tail tail = Tail::Unknown);

    static SeqPrefix zeros(std::size_t n, Mode mode, Tail tail = Tail::Unknown);
    /// Unit sequence e_j of length n.
    static SeqPrefix unit(std::size_t n, std::size_t j, Mode mode, Tail tail = Tail::Unknown);
    static SeqPrefix ones(std::size_t n, Mode mode, Tail tail = Tail::Unknown);

    std::size_t length() const { return entries_.size(); }
    Mode mode() const { return entries_.front().mode(); }
    Tail tail() const { return tail_; }

    const Scalar& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    /// Entry with tail semantics: stored value for i < length, zero beyond
    /// the prefix when tail = Zero. Throws when the tail is Unknown.
    Scalar get(std::size_t i) const;

    /// Index of the last nonzero entry; nullopt for the zero prefix.
    std::optional<std::size_t> support_bound() const;

    /// max_i |x_i| over the prefix.
    Scalar sup_abs() const;

    SeqPrefix with_tail(Tail tail) const { return SeqPrefix(entries_, tail); }
    SeqPrefix truncated(std::size_t n) const;

    bool operator==(const SeqPrefix& o) const;

private:
    std::vector<Scalar> entries_;
    Tail tail_;
};

// Entrywise linear operations (equal lengths and modes; the result tail is
// Zero only when both operands declare zero tails).
SeqPrefix add(const SeqPrefix& a, const SeqPrefix& b);
SeqPrefix sub(const SeqPrefix& a, const SeqPrefix& b);
SeqPrefix scale(const Scalar& c, const SeqPrefix& x);

}  // namespace seqspace
