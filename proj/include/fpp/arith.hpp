#ifndef FPP_ARITH_HPP
#define FPP_ARITH_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "fpp/util.hpp"

namespace fpp {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail(errc::internal, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

// max(|num|, den), the usual naive height
inline Int rat_height(const Rat& r) {
    Int n = abs(r.get_num());
    Int d = r.get_den();
    return n > d ? n : d;
}

// Element of Q(sqrt(-7)), written a + b*w with w^2 = -7.
struct QuadElt {
    Rat a{0};
    Rat b{0};

    QuadElt() = default;
    QuadElt(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit QuadElt(long v) : a(v), b(0) {}
    explicit QuadElt(const Rat& v) : a(v), b(0) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    QuadElt conj() const { return {a, -b}; }
    // x * conj(x) = a^2 + 7 b^2
    Rat norm() const { return a * a + 7 * b * b; }

    Int height() const {
        Int ha = rat_height(a), hb = rat_height(b);
        return ha > hb ? ha : hb;
    }

    friend QuadElt operator+(const QuadElt& x, const QuadElt& y) { return {x.a + y.a, x.b + y.b}; }
    friend QuadElt operator-(const QuadElt& x, const QuadElt& y) { return {x.a - y.a, x.b - y.b}; }
    friend QuadElt operator-(const QuadElt& x) { return {-x.a, -x.b}; }
    friend QuadElt operator*(const QuadElt& x, const QuadElt& y) {
        // (a1 + b1 w)(a2 + b2 w) = a1 a2 - 7 b1 b2 + (a1 b2 + a2 b1) w
        return {x.a * y.a - 7 * x.b * y.b, x.a * y.b + y.a * x.b};
    }
    friend QuadElt operator/(const QuadElt& x, const QuadElt& y) {
        if (y.is_zero()) fail(errc::internal, "division by zero in Q(sqrt(-7))");
        Rat n = y.norm();
        QuadElt t = x * y.conj();
        return {t.a / n, t.b / n};
    }
    QuadElt& operator+=(const QuadElt& y) { a += y.a; b += y.b; return *this; }
    QuadElt& operator-=(const QuadElt& y) { a -= y.a; b -= y.b; return *this; }
    QuadElt& operator*=(const QuadElt& y) { *this = *this * y; return *this; }
    friend bool operator==(const QuadElt& x, const QuadElt& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const QuadElt& x, const QuadElt& y) { return !(x == y); }
};

inline QuadElt quad_of(long a) { return QuadElt(a); }
inline QuadElt quad_w() { return {Rat(0), Rat(1)}; }

// Serialized as "(a_num/a_den, b_num/b_den)" per the report format.
inline std::string to_string(const QuadElt& q) {
    return "(" + q.a.get_str() + ", " + q.b.get_str() + ")";
}

}  // namespace fpp

#endif
