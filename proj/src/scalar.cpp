#include "seqspace/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace seqspace {

std::string_view mode_name(Mode m) {
    return m == Mode::Exact ? "exact" : "float";
}

Mode mode_from_name(std::string_view name) {
    if (name == "exact") return Mode::Exact;
    if (name == "float") return Mode::Float;
    throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected exact|float)");
}

Scalar Scalar::exact(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::exact(mpq_class q) {
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::zero(Mode m) { return m == Mode::Exact ? Scalar(mpq_class(0)) : Scalar(0.0); }
Scalar Scalar::one(Mode m) { return m == Mode::Exact ? Scalar(mpq_class(1)) : Scalar(1.0); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Exact value of a decimal literal: sign, digits, optional fraction and
// power-of-ten exponent.
mpq_class decimal_to_rational(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }

    long exp10 = 0;
    if (auto epos = rest.find_first_of("eE"); epos != std::string_view::npos) {
        std::string_view etext = rest.substr(epos + 1);
        rest = rest.substr(0, epos);
        bool eneg = false;
        if (!etext.empty() && (etext.front() == '+' || etext.front() == '-')) {
            eneg = etext.front() == '-';
            etext.remove_prefix(1);
        }
        if (!all_digits(etext) || etext.size() > 6)
            throw std::invalid_argument("bad exponent in numeric literal '" + std::string(text) + "'");
        for (char c : etext) exp10 = exp10 * 10 + (c - '0');
        if (eneg) exp10 = -exp10;
    }

    std::string digits;
    if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        std::string_view intpart = rest.substr(0, dot);
        std::string_view fracpart = rest.substr(dot + 1);
        if (intpart.empty() && fracpart.empty())
            throw std::invalid_argument("bad numeric literal '" + std::string(text) + "'");
        if (!intpart.empty() && !all_digits(intpart))
            throw std::invalid_argument("bad numeric literal '" + std::string(text) + "'");
        if (!fracpart.empty() && !all_digits(fracpart))
            throw std::invalid_argument("bad numeric literal '" + std::string(text) + "'");
        digits = std::string(intpart) + std::string(fracpart);
        exp10 -= static_cast<long>(fracpart.size());
    } else {
        if (!all_digits(rest))
            throw std::invalid_argument("bad numeric literal '" + std::string(text) + "'");
        digits = std::string(rest);
    }

    mpz_class num(digits, 10);
    mpz_class den(1);
    mpz_class ten(10);
    if (exp10 >= 0) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(exp10));
        num *= scale;
    } else {
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-exp10));
    }
    if (negative) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpz_class integer_from(std::string_view text, std::string_view whole) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    if (!all_digits(rest))
        throw std::invalid_argument("bad rational literal '" + std::string(whole) + "'");
    mpz_class z(std::string(rest), 10);
    return negative ? mpz_class(-z) : z;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Scalar Scalar::parse(std::string_view text, Mode mode) {
    std::string_view body = trim(text);
    if (body.empty()) throw std::invalid_argument("empty numeric literal");

    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view ntext = trim(body.substr(0, slash));
        std::string_view dtext = trim(body.substr(slash + 1));
        if (mode == Mode::Exact) {
            mpz_class num = integer_from(ntext, body);
            mpz_class den = integer_from(dtext, body);
            if (den == 0) throw std::domain_error("rational with zero denominator: '" + std::string(body) + "'");
            mpq_class q(num, den);
            q.canonicalize();
            return Scalar(std::move(q));
        }
        Scalar n = parse(ntext, Mode::Float);
        Scalar d = parse(dtext, Mode::Float);
        return n / d;
    }

    if (mode == Mode::Exact) return Scalar(decimal_to_rational(body));

    std::size_t used = 0;
    double d = std::stod(std::string(body), &used);
    if (used != body.size())
        throw std::invalid_argument("bad numeric literal '" + std::string(body) + "'");
    return Scalar(d);
}

const mpq_class& Scalar::rational() const {
    if (!is_exact()) throw std::logic_error("rational() on a Float-mode scalar");
    return std::get<mpq_class>(v_);
}

double Scalar::value() const {
    return is_exact() ? std::get<mpq_class>(v_).get_d() : std::get<double>(v_);
}

bool Scalar::is_zero() const {
    return is_exact() ? sgn(std::get<mpq_class>(v_)) == 0 : std::get<double>(v_) == 0.0;
}

int Scalar::sign() const {
    if (is_exact()) return sgn(std::get<mpq_class>(v_));
    double d = std::get<double>(v_);
    return d > 0.0 ? 1 : d < 0.0 ? -1 : 0;
}

Scalar Scalar::abs() const {
    if (is_exact()) return Scalar(mpq_class(::abs(std::get<mpq_class>(v_))));
    return Scalar(std::fabs(std::get<double>(v_)));
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(mpq_class(-std::get<mpq_class>(v_)));
    return Scalar(-std::get<double>(v_));
}

void Scalar::require_same_mode(const Scalar& o, const char* op) const {
    if (mode() != o.mode())
        throw std::invalid_argument(std::string("scalar mode mismatch in ") + op +
                                    " (exact and float values never mix)");
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_mode(o, "+");
    if (is_exact())
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    else
        std::get<double>(v_) += std::get<double>(o.v_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_mode(o, "-");
    if (is_exact())
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    else
        std::get<double>(v_) -= std::get<double>(o.v_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_mode(o, "*");
    if (is_exact())
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    else
        std::get<double>(v_) *= std::get<double>(o.v_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_mode(o, "/");
    if (o.is_zero()) throw std::domain_error("scalar division by zero");
    if (is_exact())
        std::get<mpq_class>(v_) /= std::get<mpq_class>(o.v_);
    else
        std::get<double>(v_) /= std::get<double>(o.v_);
    return *this;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_mode(o, "==");
    if (is_exact()) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    return std::get<double>(v_) == std::get<double>(o.v_);
}

bool Scalar::operator<(const Scalar& o) const {
    require_same_mode(o, "<");
    if (is_exact()) return std::get<mpq_class>(v_) < std::get<mpq_class>(o.v_);
    return std::get<double>(v_) < std::get<double>(o.v_);
}

bool Scalar::operator<=(const Scalar& o) const {
    require_same_mode(o, "<=");
    if (is_exact()) return std::get<mpq_class>(v_) <= std::get<mpq_class>(o.v_);
    return std::get<double>(v_) <= std::get<double>(o.v_);
}

std::string Scalar::str() const {
    if (is_exact()) return std::get<mpq_class>(v_).get_str();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v_));
    return buf;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

}  // namespace seqspace
