#include "asympt/mapping.hpp"

#include <stdexcept>

namespace asympt {

PolynomialMapping::PolynomialMapping(std::vector<Polynomial> components)
    : components_(std::move(components)) {
    for (const Polynomial& p : components_) {
        if (p.num_vars() != components_.size())
            throw std::invalid_argument("mapping components must use n variables");
    }
}

std::optional<int> PolynomialMapping::degree() const {
    std::optional<int> d;
    for (const Polynomial& p : components_) {
        auto pd = p.degree();
        if (pd && (!d || *pd > *d)) d = pd;
    }
    return d;
}

std::vector<std::vector<Polynomial>> jacobian(const PolynomialMapping& f) {
    std::size_t n = f.dim();
    std::vector<std::vector<Polynomial>> j(n, std::vector<Polynomial>(n, Polynomial(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) j[i][k] = f.component(i).derivative(k);
    return j;
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    std::size_t vars = m[0][0].num_vars();
    if (n == 1) return m[0][0];
    Polynomial acc(vars);
    std::vector<std::vector<Polynomial>> minor(n - 1, std::vector<Polynomial>(n - 1, Polynomial(vars)));
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor[i - 1][jc++] = m[i][j];
            }
        }
        Polynomial cof = m[0][c] * poly_det(minor);
        if (c % 2 == 0)
            acc += cof;
        else
            acc -= cof;
    }
    return acc;
}

bool is_dominant(const PolynomialMapping& f) {
    if (f.dim() == 0) return false;
    return !poly_det(jacobian(f)).is_zero();
}

} // namespace asympt
