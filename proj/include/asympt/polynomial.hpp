#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asympt/rational.hpp"

namespace asympt {

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order with x1 > x2 > ... > xn.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Gaussian rationals. All arithmetic is
// exact; zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponents, GaussianRational, GradedLexLess>;

    explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}
    static Polynomial constant(std::size_t num_vars, const GaussianRational& c);
    static Polynomial variable(std::size_t num_vars, std::size_t index); // 0-based
    static Polynomial monomial(std::size_t num_vars, Exponents exps, const GaussianRational& c);

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussianRational constant_value() const; // requires is_constant()

    // Total degree; nullopt is the minus-infinity sentinel of the zero polynomial.
    std::optional<int> degree() const;
    int degree_in(std::size_t var) const; // 0 for the zero polynomial

    void add_term(const Exponents& exps, const GaussianRational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const GaussianRational& c) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative(std::size_t var) const;

    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
    GaussianRational evaluate_exact(std::span<const GaussianRational> point) const;

    // Substitute a polynomial for each variable (values share a num_vars).
    Polynomial compose(const std::vector<Polynomial>& values) const;

    // Leading term in graded-lex order.
    const Exponents& leading_exponents() const;
    const GaussianRational& leading_coefficient() const;

    // Exact quotient, or nullopt when the division leaves a remainder.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
    // Exact polynomial square root if one exists.
    std::optional<Polynomial> sqrt() const;

    // Exponent-wise gcd of all monomials (the largest monomial dividing
    // every term); all-zero for the zero polynomial.
    Exponents monomial_content() const;
    Polynomial shift_down(const Exponents& m) const; // divide by monomial m

    // Canonical rendering, graded-lex descending: "x1^2 - 1/2*i*x2*x3".
    std::string str(std::span<const std::string> var_names = {}) const;

private:
    void check_vars(const Polynomial& o) const;
    std::size_t num_vars_;
    TermMap terms_;
};

std::string default_var_name(std::size_t index);

} // namespace asympt
