#include "bentice/gaussian.hpp"

#include <stdexcept>

namespace bentice {

GaussInt GaussInt::i_pow(long long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

bool GaussInt::is_unit() const {
    return (im.is_zero() && (re == 1 || re == -1)) || (re.is_zero() && (im == 1 || im == -1));
}

GaussInt& GaussInt::operator*=(const GaussInt& o) {
    if (o.im.is_zero()) {
        re *= o.re;
        im *= o.re;
        return *this;
    }
    BigInt r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

std::optional<GaussInt> GaussInt::div_exact(const GaussInt& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero Gaussian integer");
    if (d.im.is_zero()) {
        if (re % d.re != 0 || im % d.re != 0) return std::nullopt;
        return GaussInt{re / d.re, im / d.re};
    }
    GaussInt num = *this * d.conj();
    BigInt n = d.norm();
    if (num.re % n != 0 || num.im % n != 0) return std::nullopt;
    return GaussInt{num.re / n, num.im / n};
}

std::string GaussInt::str() const {
    if (im.is_zero()) return re.str();
    std::string ims;
    if (im == 1) ims = "i";
    else if (im == -1) ims = "-i";
    else ims = im.str() + "i";
    if (re.is_zero()) return ims;
    if (im > 0) return re.str() + "+" + ims;
    return re.str() + ims;
}

GaussRat GaussRat::inverse() const {
    BigRat n = re * re + im * im;
    if (n.is_zero()) throw std::domain_error("division by zero in evaluation");
    return {re / n, -im / n};
}

std::string GaussRat::str() const {
    auto s = [](const BigRat& r) { return r.str(); };
    if (im.is_zero()) return s(re);
    if (re.is_zero()) return s(im) + "i";
    return s(re) + (im > 0 ? "+" : "") + s(im) + "i";
}

GaussRat pow(const GaussRat& base, long long e) {
    GaussRat b = e < 0 ? base.inverse() : base;
    unsigned long long k = e < 0 ? -e : e;
    GaussRat r(1);
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

}  // namespace bentice
