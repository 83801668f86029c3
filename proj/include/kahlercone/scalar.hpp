#pragma once

// Coefficient scalars for the two arithmetic modes.
//
// Exact mode works over the Gaussian rationals Q(i): every identity we verify
// is algebraic over Q(i) at rational cone points, so residuals are either
// literally zero or a genuine bug. Float mode uses complex<double> and is a
// cross-check with explicit tolerances, never the source of truth.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace kcone {

using Rational = mpq_class;
using Cx = std::complex<double>;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
class ParseError : public Error {
public:
    using Error::Error;
};
class InvariantError : public Error {
public:
    using Error::Error;
};
class NotPolarizedError : public Error {
public:
    using Error::Error;
};
class InvalidArgument : public Error {
public:
    using Error::Error;
};

inline Rational rational_of(long num, long den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q", "p", or "-p/q". Throws ParseError on malformed input.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational string");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw ParseError("malformed rational string: '" + s + "'");
    }
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0) {
        mpq_clear(q);
        throw ParseError("malformed rational string: '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw ParseError("rational with zero denominator: '" + s + "'");
    }
    mpq_canonicalize(q);
    Rational r(q);
    mpq_clear(q);
    return r;
}

// Always prints an explicit denominator ("3/1", "-2/5") so machine outputs
// round-trip with one fixed grammar.
inline std::string rational_pq_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double rational_to_double(const Rational& r) { return r.get_d(); }

// a + b*i with a, b arbitrary-precision rationals.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
    static GaussianRational from_parts(long re_num, long re_den, long im_num, long im_den) {
        return GaussianRational(rational_of(re_num, re_den), rational_of(im_num, im_den));
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    GaussianRational inverse() const {
        Rational n = re_ * re_ + im_ * im_;
        if (n == 0) throw InvalidArgument("division by zero Gaussian rational");
        return GaussianRational(re_ / n, -im_ / n);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    Cx to_complex() const { return Cx(re_.get_d(), im_.get_d()); }

    std::string str() const {
        if (im_ == 0) return rational_pq_string(re_);
        std::string s = rational_pq_string(re_);
        s += (im_ < 0) ? "-" : "+";
        Rational a = abs(im_);
        s += rational_pq_string(a) + "i";
        return s;
    }

private:
    Rational re_, im_;
};

// One trait bundle per coefficient ring. Linear algebra and the algebra
// operations are written against this interface so the same code runs over
// exact scalars, doubles, and second-order jets of either.
template <class K>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool is_exact = true;
    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational imag_unit() { return GaussianRational::i(); }
    static GaussianRational from_exact(const GaussianRational& x) { return x; }
    static GaussianRational conj(const GaussianRational& x) { return x.conj(); }
    static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
    static bool is_unit(const GaussianRational& x) { return !x.is_zero(); }
    // Rough magnitude, only used for pivot preference and report output.
    static double mag(const GaussianRational& x) { return std::abs(x.to_complex()); }
    static double pivot_mag(const GaussianRational& x) { return is_unit(x) ? 1.0 : 0.0; }
    static GaussianRational inverse(const GaussianRational& x) { return x.inverse(); }
};

template <>
struct scalar_traits<Cx> {
    static constexpr bool is_exact = false;
    static Cx zero() { return Cx(0.0, 0.0); }
    static Cx one() { return Cx(1.0, 0.0); }
    static Cx imag_unit() { return Cx(0.0, 1.0); }
    static Cx from_exact(const GaussianRational& x) { return x.to_complex(); }
    static Cx conj(const Cx& x) { return std::conj(x); }
    static bool is_zero(const Cx& x) { return x == Cx(0.0, 0.0); }
    static bool is_unit(const Cx& x) { return std::abs(x) > 0.0; }
    static double mag(const Cx& x) { return std::abs(x); }
    static double pivot_mag(const Cx& x) { return std::abs(x); }
    static Cx inverse(const Cx& x) {
        if (x == Cx(0.0, 0.0)) throw InvalidArgument("division by zero");
        return Cx(1.0, 0.0) / x;
    }
};

template <class K>
K scalar_from_int(long n) {
    return scalar_traits<K>::from_exact(GaussianRational(n));
}

template <class K>
K scalar_from_rational(const Rational& r) {
    return scalar_traits<K>::from_exact(GaussianRational(r));
}

}  // namespace kcone
