#include "asympt/rational.hpp"

#include <stdexcept>

namespace asympt {

GaussianRational GaussianRational::from_ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero GaussianRational");
    mpq_class n = norm();
    return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    *this *= o.inverse();
    return *this;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(sn, sd);
    r.canonicalize();
    return r;
}

std::optional<GaussianRational> GaussianRational::sqrt() const {
    // x = u + v*i with u^2 - v^2 = re, 2uv = im. Needs |z| rational and
    // (re + |z|)/2 a rational square.
    if (is_zero()) return GaussianRational();
    auto r = rational_sqrt(norm());
    if (!r) return std::nullopt;
    mpq_class half_sum = (re_ + *r) / 2;
    auto u = rational_sqrt(half_sum);
    if (u) {
        if (*u != 0) {
            mpq_class v = im_ / (2 * (*u));
            return GaussianRational(*u, v);
        }
        // re + |z| == 0: purely imaginary square root.
    }
    mpq_class half_diff = (*r - re_) / 2;
    auto v = rational_sqrt(half_diff);
    if (v && *v != 0) {
        mpq_class u2 = im_ / (2 * (*v));
        GaussianRational cand(u2, *v);
        if (cand * cand == *this) return cand;
    }
    return std::nullopt;
}

std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

std::string GaussianRational::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rational_str(im_) + "*i";
    if (re_ == 0) return imag;
    std::string s = rational_str(re_);
    if (im_ > 0)
        s += "+" + imag;
    else
        s += imag; // already carries the minus sign
    return s;
}

} // namespace asympt
