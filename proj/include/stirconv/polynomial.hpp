#pragma once

#include "stirconv/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace stirconv {

/// Dense polynomial with exact rational coefficients in ascending degree.
/// The trailing coefficient is nonzero unless the polynomial is zero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    const std::vector<ExactRational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    ExactRational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : ExactRational(0);
    }

    /// Horner evaluation at x.
    ExactRational operator()(const ExactRational& x) const {
        ExactRational value(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            value = value * x + coeffs_[i];
        }
        return value;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  private:
    std::vector<ExactRational> coeffs_;
};

}  // namespace stirconv
