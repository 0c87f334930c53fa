#include "asympt/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace asympt {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    // Same degree: lexicographic with x1 weighted heaviest.
    for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
        if (a[k] != b[k]) return a[k] < b[k];
    }
    return a.size() < b.size();
}

Polynomial Polynomial::constant(std::size_t num_vars, const GaussianRational& c) {
    Polynomial p(num_vars);
    if (!c.is_zero()) p.terms_.emplace(Exponents(num_vars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw std::invalid_argument("variable index out of range");
    Polynomial p(num_vars);
    Exponents e(num_vars, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), GaussianRational(1));
    return p;
}

Polynomial Polynomial::monomial(std::size_t num_vars, Exponents exps, const GaussianRational& c) {
    if (exps.size() != num_vars) throw std::invalid_argument("exponent vector length mismatch");
    Polynomial p(num_vars);
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](std::uint32_t e) { return e == 0; });
}

GaussianRational Polynomial::constant_value() const {
    if (terms_.empty()) return GaussianRational();
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    const Exponents& lead = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(lead.begin(), lead.end(), std::uint64_t{0}));
}

int Polynomial::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

void Polynomial::add_term(const Exponents& exps, const GaussianRational& c) {
    if (exps.size() != num_vars_) throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_vars(const Polynomial& o) const {
    if (num_vars_ != o.num_vars_)
        throw std::invalid_argument("polynomial variable-count mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_vars(b);
    Polynomial r(a.num_vars_);
    Exponents e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    Polynomial r(num_vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(num_vars_, GaussianRational(1));
    for (unsigned k = 0; k < e; ++k) r *= *this;
    return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * GaussianRational(static_cast<long>(e[var])));
    }
    return r;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> point) const {
    if (point.size() != num_vars_) throw std::invalid_argument("evaluation point length mismatch");
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (std::size_t k = 0; k < num_vars_; ++k)
            for (std::uint32_t j = 0; j < e[k]; ++j) t *= point[k];
        acc += t;
    }
    return acc;
}

GaussianRational Polynomial::evaluate_exact(std::span<const GaussianRational> point) const {
    if (point.size() != num_vars_) throw std::invalid_argument("evaluation point length mismatch");
    GaussianRational acc;
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (std::size_t k = 0; k < num_vars_; ++k)
            for (std::uint32_t j = 0; j < e[k]; ++j) t *= point[k];
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& values) const {
    if (values.size() != num_vars_) throw std::invalid_argument("compose arity mismatch");
    std::size_t out_vars = values.empty() ? 0 : values[0].num_vars();
    Polynomial acc(out_vars);
    for (const auto& [e, c] : terms_) {
        Polynomial t = Polynomial::constant(out_vars, c);
        for (std::size_t k = 0; k < num_vars_; ++k)
            if (e[k] > 0) t *= values[k].pow(e[k]);
        acc += t;
    }
    return acc;
}

const Exponents& Polynomial::leading_exponents() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const GaussianRational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    check_vars(divisor);
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial rem = *this;
    Polynomial quot(num_vars_);
    const Exponents& dl = divisor.leading_exponents();
    const GaussianRational& dc = divisor.leading_coefficient();
    while (!rem.is_zero()) {
        const Exponents& rl = rem.leading_exponents();
        Exponents q(num_vars_);
        for (std::size_t k = 0; k < num_vars_; ++k) {
            if (rl[k] < dl[k]) return std::nullopt;
            q[k] = rl[k] - dl[k];
        }
        GaussianRational qc = rem.leading_coefficient() / dc;
        Polynomial t = Polynomial::monomial(num_vars_, q, qc);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

std::optional<Polynomial> Polynomial::sqrt() const {
    if (is_zero()) return Polynomial(num_vars_);
    // Root of the leading term first; then peel remaining terms greedily.
    const Exponents& le = leading_exponents();
    Exponents half(num_vars_);
    for (std::size_t k = 0; k < num_vars_; ++k) {
        if (le[k] % 2 != 0) return std::nullopt;
        half[k] = le[k] / 2;
    }
    auto lc_root = leading_coefficient().sqrt();
    if (!lc_root) return std::nullopt;
    Polynomial s = Polynomial::monomial(num_vars_, half, *lc_root);
    GaussianRational two_lc = *lc_root * GaussianRational(2);
    Polynomial rem = *this - s * s;
    std::size_t guard = 4 * terms_.size() + 16;
    while (!rem.is_zero()) {
        if (guard-- == 0) return std::nullopt;
        const Exponents& rl = rem.leading_exponents();
        Exponents q(num_vars_);
        for (std::size_t k = 0; k < num_vars_; ++k) {
            if (rl[k] < half[k]) return std::nullopt;
            q[k] = rl[k] - half[k];
        }
        Polynomial t = Polynomial::monomial(num_vars_, q, rem.leading_coefficient() / two_lc);
        Polynomial next = s + t;
        rem = *this - next * next;
        s = std::move(next);
    }
    return s;
}

Exponents Polynomial::monomial_content() const {
    Exponents m(num_vars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (std::size_t k = 0; k < num_vars_; ++k) m[k] = std::min(m[k], e[k]);
        }
    }
    return m;
}

Polynomial Polynomial::shift_down(const Exponents& m) const {
    Polynomial r(num_vars_);
    for (const auto& [e, c] : terms_) {
        Exponents d(num_vars_);
        for (std::size_t k = 0; k < num_vars_; ++k) {
            if (e[k] < m[k]) throw std::logic_error("monomial does not divide term");
            d[k] = e[k] - m[k];
        }
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

std::string default_var_name(std::size_t index) {
    return "x" + std::to_string(index + 1);
}

namespace {

std::string coefficient_body(const GaussianRational& c, bool has_vars) {
    // Caller has already pulled out the sign for real or pure-imaginary
    // coefficients; mixed ones are parenthesized verbatim.
    if (c.is_real()) {
        if (c.re() == 1 && has_vars) return "";
        return rational_str(c.re()) + (has_vars ? "*" : "");
    }
    if (c.re() == 0) {
        if (c.im() == 1) return has_vars ? "i*" : "i";
        return rational_str(c.im()) + "*i" + (has_vars ? "*" : "");
    }
    return "(" + c.str() + ")" + (has_vars ? "*" : "");
}

} // namespace

std::string Polynomial::str(std::span<const std::string> var_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exponents& e = it->first;
        GaussianRational c = it->second;
        bool has_vars = std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x > 0; });

        bool negate = false;
        if (c.is_real()) {
            negate = c.re() < 0;
        } else if (c.re() == 0) {
            negate = c.im() < 0;
        }
        if (negate) c = -c;

        if (out.empty()) {
            if (negate) out += "-";
        } else {
            out += negate ? " - " : " + ";
        }
        out += coefficient_body(c, has_vars);
        bool first_var = true;
        for (std::size_t k = 0; k < num_vars_; ++k) {
            if (e[k] == 0) continue;
            if (!first_var) out += "*";
            first_var = false;
            out += k < var_names.size() ? var_names[k] : default_var_name(k);
            if (e[k] > 1) out += "^" + std::to_string(e[k]);
        }
    }
    return out;
}

} // namespace asympt
