#include "seqspace/sequence.hpp"

#include <stdexcept>

namespace seqspace {

SeqPrefix::SeqPrefix(std::vector<Scalar> entries, Tail tail)
    : entries_(std::move(entries)), tail_(tail) {
    if (entries_.empty()) throw std::invalid_argument("sequence prefix must have length >= 1");
    Mode m = entries_.front().mode();
    for (const Scalar& e : entries_)
        if (e.mode() != m)
            throw std::invalid_argument("sequence prefix mixes exact and float entries");
}

SeqPrefix SeqPrefix::zeros(std::size_t n, Mode mode, Tail tail) {
    return SeqPrefix(std::vector<Scalar>(n, Scalar::zero(mode)), tail);
}

SeqPrefix SeqPrefix::unit(std::size_t n, std::size_t j, Mode mode, Tail tail) {
    if (j >= n) throw std::invalid_argument("unit index outside prefix");
    std::vector<Scalar> e(n, Scalar::zero(mode));
    e[j] = Scalar::one(mode);
    return SeqPrefix(std::move(e), tail);
}

SeqPrefix SeqPrefix::ones(std::size_t n, Mode mode, Tail tail) {
    return SeqPrefix(std::vector<Scalar>(n, Scalar::one(mode)), tail);
}

Scalar SeqPrefix::get(std::size_t i) const {
    if (i < entries_.size()) return entries_[i];
    if (tail_ == Tail::Zero) return Scalar::zero(mode());
    throw std::out_of_range("entry beyond prefix of a sequence with unknown tail");
}

std::optional<std::size_t> SeqPrefix::support_bound() const {
    for (std::size_t i = entries_.size(); i-- > 0;)
        if (!entries_[i].is_zero()) return i;
    return std::nullopt;
}

Scalar SeqPrefix::sup_abs() const {
    Scalar best = entries_.front().abs();
    for (std::size_t i = 1; i < entries_.size(); ++i) best = max(best, entries_[i].abs());
    return best;
}

SeqPrefix SeqPrefix::truncated(std::size_t n) const {
    if (n == 0 || n > entries_.size()) throw std::invalid_argument("bad truncation length");
    return SeqPrefix(std::vector<Scalar>(entries_.begin(), entries_.begin() + n), tail_);
}

bool SeqPrefix::operator==(const SeqPrefix& o) const {
    if (entries_.size() != o.entries_.size() || tail_ != o.tail_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

namespace {

Tail combined_tail(const SeqPrefix& a, const SeqPrefix& b) {
    return a.tail() == Tail::Zero && b.tail() == Tail::Zero ? Tail::Zero : Tail::Unknown;
}

}  // namespace

SeqPrefix add(const SeqPrefix& a, const SeqPrefix& b) {
    if (a.length() != b.length()) throw std::invalid_argument("add: length mismatch");
    std::vector<Scalar> e;
    e.reserve(a.length());
    for (std::size_t i = 0; i < a.length(); ++i) e.push_back(a[i] + b[i]);
    return SeqPrefix(std::move(e), combined_tail(a, b));
}

SeqPrefix sub(const SeqPrefix& a, const SeqPrefix& b) {
    if (a.length() != b.length()) throw std::invalid_argument("sub: length mismatch");
    std::vector<Scalar> e;
    e.reserve(a.length());
    for (std::size_t i = 0; i < a.length(); ++i) e.push_back(a[i] - b[i]);
    return SeqPrefix(std::move(e), combined_tail(a, b));
}

SeqPrefix scale(const Scalar& c, const SeqPrefix& x) {
    std::vector<Scalar> e;
    e.reserve(x.length());
    for (std::size_t i = 0; i < x.length(); ++i) e.push_back(c * x[i]);
    return SeqPrefix(std::move(e), x.tail());
}

}  // namespace seqspace
