#pragma once

// Order-2 truncated Taylor arithmetic in up to two formal directions.
//
// A Jet2 value represents f + f1*e1 + f2*e2 + f11*e1^2 + f12*e1*e2 + f22*e2^2
// truncated past total order 2. Evaluating a rational-function pipeline with
// Jet2<GaussianRational> coordinates yields exact first and second
// derivatives; there is no step size and nothing to tune. Division is defined
// whenever the value part is invertible, which is all the linear solves need.

#include "kahlercone/scalar.hpp"

namespace kcone {

template <class K>
struct Jet2 {
    using Base = K;
    K f{scalar_traits<K>::zero()};
    K f1{scalar_traits<K>::zero()};
    K f2{scalar_traits<K>::zero()};
    K f11{scalar_traits<K>::zero()};
    K f12{scalar_traits<K>::zero()};
    K f22{scalar_traits<K>::zero()};

    Jet2() = default;
    explicit Jet2(K value) : f(std::move(value)) {}
    Jet2(K value, K d1, K d2) : f(std::move(value)), f1(std::move(d1)), f2(std::move(d2)) {}

    static Jet2 constant(const K& v) { return Jet2(v); }
    // Coordinate value with the given rates along the two formal directions.
    static Jet2 variable(const K& v, const K& rate1, const K& rate2) { return Jet2(v, rate1, rate2); }

    const K& value() const { return f; }
    const K& d1() const { return f1; }
    const K& d2() const { return f2; }
    K d11() const { return scalar_from_int<K>(2) * f11; }  // second derivative, not coefficient
    K d22() const { return scalar_from_int<K>(2) * f22; }
    const K& d12() const { return f12; }

    Jet2 operator-() const {
        Jet2 r;
        r.f = -f; r.f1 = -f1; r.f2 = -f2; r.f11 = -f11; r.f12 = -f12; r.f22 = -f22;
        return r;
    }
    friend Jet2 operator+(const Jet2& a, const Jet2& b) {
        Jet2 r;
        r.f = a.f + b.f; r.f1 = a.f1 + b.f1; r.f2 = a.f2 + b.f2;
        r.f11 = a.f11 + b.f11; r.f12 = a.f12 + b.f12; r.f22 = a.f22 + b.f22;
        return r;
    }
    friend Jet2 operator-(const Jet2& a, const Jet2& b) {
        Jet2 r;
        r.f = a.f - b.f; r.f1 = a.f1 - b.f1; r.f2 = a.f2 - b.f2;
        r.f11 = a.f11 - b.f11; r.f12 = a.f12 - b.f12; r.f22 = a.f22 - b.f22;
        return r;
    }
    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        Jet2 r;
        r.f = a.f * b.f;
        r.f1 = a.f * b.f1 + a.f1 * b.f;
        r.f2 = a.f * b.f2 + a.f2 * b.f;
        r.f11 = a.f * b.f11 + a.f1 * b.f1 + a.f11 * b.f;
        r.f12 = a.f * b.f12 + a.f1 * b.f2 + a.f2 * b.f1 + a.f12 * b.f;
        r.f22 = a.f * b.f22 + a.f2 * b.f2 + a.f22 * b.f;
        return r;
    }
    Jet2 inverse() const {
        using T = scalar_traits<K>;
        if (!T::is_unit(f)) throw InvalidArgument("jet inverse with non-invertible value part");
        K g0 = T::inverse(f);
        K g0sq = g0 * g0;
        K g0cu = g0sq * g0;
        Jet2 r;
        r.f = g0;
        r.f1 = -(f1 * g0sq);
        r.f2 = -(f2 * g0sq);
        r.f11 = f1 * f1 * g0cu - f11 * g0sq;
        r.f12 = scalar_from_int<K>(2) * f1 * f2 * g0cu - f12 * g0sq;
        r.f22 = f2 * f2 * g0cu - f22 * g0sq;
        return r;
    }
    friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * b.inverse(); }
    Jet2& operator+=(const Jet2& o) { *this = *this + o; return *this; }
    Jet2& operator-=(const Jet2& o) { *this = *this - o; return *this; }
    Jet2& operator*=(const Jet2& o) { *this = *this * o; return *this; }

    friend bool operator==(const Jet2& a, const Jet2& b) {
        return a.f == b.f && a.f1 == b.f1 && a.f2 == b.f2 && a.f11 == b.f11 &&
               a.f12 == b.f12 && a.f22 == b.f22;
    }
    friend bool operator!=(const Jet2& a, const Jet2& b) { return !(a == b); }
};

// Directions are real coordinate directions, so conjugation acts on each
// coefficient independently.
template <class K>
struct scalar_traits<Jet2<K>> {
    using B = scalar_traits<K>;
    static constexpr bool is_exact = B::is_exact;
    static Jet2<K> zero() { return Jet2<K>(); }
    static Jet2<K> one() { return Jet2<K>(B::one()); }
    static Jet2<K> imag_unit() { return Jet2<K>(B::imag_unit()); }
    static Jet2<K> from_exact(const GaussianRational& x) { return Jet2<K>(B::from_exact(x)); }
    static Jet2<K> conj(const Jet2<K>& x) {
        Jet2<K> r;
        r.f = B::conj(x.f); r.f1 = B::conj(x.f1); r.f2 = B::conj(x.f2);
        r.f11 = B::conj(x.f11); r.f12 = B::conj(x.f12); r.f22 = B::conj(x.f22);
        return r;
    }
    static bool is_zero(const Jet2<K>& x) {
        return B::is_zero(x.f) && B::is_zero(x.f1) && B::is_zero(x.f2) && B::is_zero(x.f11) &&
               B::is_zero(x.f12) && B::is_zero(x.f22);
    }
    static bool is_unit(const Jet2<K>& x) { return B::is_unit(x.f); }
    static double mag(const Jet2<K>& x) {
        double m = B::mag(x.f);
        m = std::max(m, B::mag(x.f1));
        m = std::max(m, B::mag(x.f2));
        m = std::max(m, B::mag(x.f11));
        m = std::max(m, B::mag(x.f12));
        m = std::max(m, B::mag(x.f22));
        return m;
    }
    static double pivot_mag(const Jet2<K>& x) { return B::pivot_mag(x.f); }
    static Jet2<K> inverse(const Jet2<K>& x) { return x.inverse(); }
};

}  // namespace kcone
