#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace asympt {

// Exact complex number with rational real and imaginary parts.
// mpq_class keeps every value in canonical reduced form (gcd(num,den)=1,
// positive denominator), so equality is plain component comparison and no
// operation ever rounds.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(const mpq_class& re) : re_(re), im_(0) { canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        canonicalize();
    }
    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }
    static GaussianRational from_ratio(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        a += b;
        return a;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        a -= b;
        return a;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        a *= b;
        return a;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
        a /= b;
        return a;
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
    // Total order used only for canonical sorting, not for magnitude.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    // re^2 + im^2, a nonnegative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    // Square root within Q(i) if one exists.
    std::optional<GaussianRational> sqrt() const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    // Canonical rendering: "3", "-1/2", "i", "2*i", "1/2-3/4*i".
    std::string str() const;

private:
    void canonicalize() {
        re_.canonicalize();
        im_.canonicalize();
    }
    mpq_class re_, im_;
};

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

std::string rational_str(const mpq_class& q);

} // namespace asympt
