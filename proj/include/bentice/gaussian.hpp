#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace bentice {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Element of Z[i].
struct GaussInt {
    BigInt re, im;

    GaussInt() = default;
    GaussInt(long long r, long long i = 0) : re(r), im(i) {}
    GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    static GaussInt i() { return {0, 1}; }
    static GaussInt i_pow(long long k);

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return re == 1 && im.is_zero(); }
    bool is_unit() const;

    GaussInt conj() const { return {re, -im}; }
    BigInt norm() const { return re * re + im * im; }

    GaussInt& operator+=(const GaussInt& o) { re += o.re; im += o.im; return *this; }
    GaussInt& operator-=(const GaussInt& o) { re -= o.re; im -= o.im; return *this; }
    GaussInt& operator*=(const GaussInt& o);

    // q with q*d == *this, if it exists in Z[i]
    std::optional<GaussInt> div_exact(const GaussInt& d) const;

    std::string str() const;

    friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
    friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
    friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
    friend GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }
};

// Element of Q(i); only used by evaluation.
struct GaussRat {
    BigRat re, im;

    GaussRat() = default;
    GaussRat(long long r, long long i = 0) : re(r), im(i) {}
    GaussRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(const GaussInt& g) : re(g.re), im(g.im) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussRat inverse() const;
    std::string str() const;

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

GaussRat pow(const GaussRat& base, long long e);

}  // namespace bentice
