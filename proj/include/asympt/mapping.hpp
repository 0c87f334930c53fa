#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asympt/polynomial.hpp"

namespace asympt {

// A square polynomial mapping C^n -> C^n.
class PolynomialMapping {
public:
    PolynomialMapping() = default;
    explicit PolynomialMapping(std::vector<Polynomial> components);

    std::size_t dim() const { return components_.size(); }
    const Polynomial& component(std::size_t i) const { return components_.at(i); }
    const std::vector<Polynomial>& components() const { return components_; }

    // Highest total degree over the components; nullopt for the zero mapping.
    std::optional<int> degree() const;

    friend bool operator==(const PolynomialMapping& a, const PolynomialMapping& b) {
        return a.components_ == b.components_;
    }

private:
    std::vector<Polynomial> components_;
};

// Entry (i,j) is dF_i/dx_j, by exact formal differentiation.
std::vector<std::vector<Polynomial>> jacobian(const PolynomialMapping& f);

// Exact symbolic determinant (cofactor expansion; the mappings here are tiny).
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

// Dominant iff det(Jacobian) is not the zero polynomial.
bool is_dominant(const PolynomialMapping& f);

} // namespace asympt
