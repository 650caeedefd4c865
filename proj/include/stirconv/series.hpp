#pragma once

#include "stirconv/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stirconv {

/// How a coefficient vector is read as a sequence: for an EGF the sequence
/// term is a_n = c_n * n!, for an OGF it is the raw coefficient c_n.
enum class Flavor { EGF, OGF };

inline const char* flavor_name(Flavor f) { return f == Flavor::EGF ? "EGF" : "OGF"; }

/// Truncated power series over ExactRational.
///
/// The representation always stores raw power-series coefficients c_0..c_N;
/// the factorial weight of the EGF view is applied only at the sequence-view
/// boundary, so a single multiplication kernel serves both flavors. All
/// operations are exact through the truncation order: truncation only ever
/// drops degrees above N. Values are immutable after construction.
class Series {
  public:
    /// Builds a series from sequence terms a_0..a_order (EGF: c_n = a_n/n!).
    Series(Flavor flavor, std::size_t order, const std::vector<ExactRational>& sequence)
        : flavor_(flavor), coeffs_(order + 1) {
        if (sequence.size() < order + 1) {
            throw std::invalid_argument("Series: sequence shorter than order + 1");
        }
        for (std::size_t n = 0; n <= order; ++n) {
            coeffs_[n] = flavor == Flavor::EGF ? sequence[n] / ExactRational(factorial(n)) : sequence[n];
        }
    }

    /// Builds a series directly from raw power-series coefficients.
    static Series from_coeffs(Flavor flavor, std::vector<ExactRational> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("Series: empty coefficient vector");
        Series s;
        s.flavor_ = flavor;
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    static Series zero(Flavor flavor, std::size_t order) {
        return constant(flavor, order, ExactRational(0));
    }
    static Series one(Flavor flavor, std::size_t order) {
        return constant(flavor, order, ExactRational(1));
    }
    static Series constant(Flavor flavor, std::size_t order, const ExactRational& value) {
        std::vector<ExactRational> c(order + 1);
        c[0] = value;
        return from_coeffs(flavor, std::move(c));
    }

    Flavor flavor() const { return flavor_; }
    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<ExactRational>& coeffs() const { return coeffs_; }

    const ExactRational& coeff(std::size_t n) const {
        static const ExactRational kZero;
        return n < coeffs_.size() ? coeffs_[n] : kZero;
    }

    /// a_n in the flavor's sequence view.
    ExactRational sequence_term(std::size_t n) const {
        return flavor_ == Flavor::EGF ? coeff(n) * ExactRational(factorial(n)) : coeff(n);
    }

    std::vector<ExactRational> sequence() const {
        std::vector<ExactRational> out(coeffs_.size());
        for (std::size_t n = 0; n < coeffs_.size(); ++n) out[n] = sequence_term(n);
        return out;
    }

    Series truncated(std::size_t new_order) const {
        std::vector<ExactRational> c(new_order + 1);
        for (std::size_t n = 0; n <= new_order; ++n) c[n] = coeff(n);
        return from_coeffs(flavor_, std::move(c));
    }

    Series scaled(const ExactRational& factor) const {
        std::vector<ExactRational> c(coeffs_.size());
        for (std::size_t n = 0; n < coeffs_.size(); ++n) c[n] = coeffs_[n] * factor;
        return from_coeffs(flavor_, std::move(c));
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.flavor_ == b.flavor_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    friend Series operator+(const Series& a, const Series& b) {
        require_same_flavor(a, b, "addition");
        std::size_t order = std::min(a.order(), b.order());
        std::vector<ExactRational> c(order + 1);
        for (std::size_t n = 0; n <= order; ++n) c[n] = a.coeffs_[n] + b.coeffs_[n];
        return from_coeffs(a.flavor_, std::move(c));
    }

    friend Series operator-(const Series& a, const Series& b) {
        require_same_flavor(a, b, "subtraction");
        std::size_t order = std::min(a.order(), b.order());
        std::vector<ExactRational> c(order + 1);
        for (std::size_t n = 0; n <= order; ++n) c[n] = a.coeffs_[n] - b.coeffs_[n];
        return from_coeffs(a.flavor_, std::move(c));
    }

    /// Cauchy product, exact through min(a.order, b.order).
    friend Series operator*(const Series& a, const Series& b) {
        require_same_flavor(a, b, "multiplication");
        std::size_t order = std::min(a.order(), b.order());
        std::vector<ExactRational> c(order + 1);
        for (std::size_t i = 0; i <= order; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= order; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return from_coeffs(a.flavor_, std::move(c));
    }

  private:
    Series() = default;

    static void require_same_flavor(const Series& a, const Series& b, const char* op) {
        if (a.flavor_ != b.flavor_) {
            throw std::invalid_argument(std::string("Series: flavor mismatch in ") + op);
        }
    }

    Flavor flavor_ = Flavor::EGF;
    std::vector<ExactRational> coeffs_;
};

/// f^p by repeated multiplication; f^0 = 1 at the same order.
inline Series series_pow(const Series& f, std::size_t p) {
    Series acc = Series::one(f.flavor(), f.order());
    for (std::size_t i = 0; i < p; ++i) acc = acc * f;
    return acc;
}

/// exp(f) = sum_k f^k / k!; requires f(0) = 0, so the sum is finite through
/// the truncation order.
inline Series series_exp(const Series& f) {
    if (!f.coeff(0).is_zero()) throw std::invalid_argument("series_exp: nonzero constant term");
    Series result = Series::one(f.flavor(), f.order());
    Series term = Series::one(f.flavor(), f.order());
    for (std::size_t k = 1; k <= f.order(); ++k) {
        term = (term * f).scaled(ExactRational(1, static_cast<long long>(k)));
        result = result + term;
    }
    return result;
}

/// log(1 + f) = sum_k (-1)^(k-1) f^k / k; requires f(0) = 0.
inline Series series_log1p(const Series& f) {
    if (!f.coeff(0).is_zero()) throw std::invalid_argument("series_log1p: nonzero constant term");
    Series result = Series::zero(f.flavor(), f.order());
    Series fpow = f;
    for (std::size_t k = 1; k <= f.order(); ++k) {
        long long sign = (k & 1) ? 1 : -1;
        result = result + fpow.scaled(ExactRational(sign, static_cast<long long>(k)));
        if (k < f.order()) fpow = fpow * f;
    }
    return result;
}

/// f(g(t)) by Horner's scheme; requires g(0) = 0. Exact through
/// min(f.order, g.order).
inline Series series_compose(const Series& f, const Series& g) {
    if (!g.coeff(0).is_zero()) throw std::invalid_argument("series_compose: inner constant term nonzero");
    if (f.flavor() != g.flavor()) throw std::invalid_argument("Series: flavor mismatch in composition");
    std::size_t order = std::min(f.order(), g.order());
    Series inner = g.truncated(order);
    Series result = Series::constant(f.flavor(), order, f.coeff(order));
    for (std::size_t i = order; i-- > 0;) {
        result = result * inner + Series::constant(f.flavor(), order, f.coeff(i));
    }
    return result;
}

/// The four column generating functions, as EGFs truncated at `order`:
/// Stirling2: (e^t - 1)^p / p!     -> sequence S(n, p)
/// Stirling1: log^p(1 + t) / p!    -> sequence s(n, p)
/// Lah:       (t/(1 - t))^p / p!   -> sequence L(n, p)
/// BinomCol:  t^p e^t / p!         -> sequence C(n, p)
enum class KernelKind { Stirling2, Stirling1, Lah, BinomCol };

inline Series kernel_gf(KernelKind kind, std::size_t p, std::size_t order) {
    std::vector<ExactRational> base(order + 1);
    switch (kind) {
        case KernelKind::Stirling2:
            for (std::size_t n = 1; n <= order; ++n) base[n] = ExactRational(1) / ExactRational(factorial(n));
            break;
        case KernelKind::Stirling1:
            for (std::size_t n = 1; n <= order; ++n) {
                base[n] = ExactRational((n & 1) ? 1 : -1, static_cast<long long>(n));
            }
            break;
        case KernelKind::Lah:
            for (std::size_t n = 1; n <= order; ++n) base[n] = ExactRational(1);
            break;
        case KernelKind::BinomCol: {
            std::vector<ExactRational> c(order + 1);
            for (std::size_t n = p; n <= order; ++n) {
                c[n] = ExactRational(1) / ExactRational(factorial(p) * factorial(n - p));
            }
            return Series::from_coeffs(Flavor::EGF, std::move(c));
        }
    }
    Series b = Series::from_coeffs(Flavor::EGF, std::move(base));
    return series_pow(b, p).scaled(ExactRational(1) / ExactRational(factorial(p)));
}

// Closed-form coefficient vectors used as building blocks throughout; every
// construction that would need series division is expressed with one of
// these instead.

/// e^{lambda t}: c_n = lambda^n / n!.
inline Series exp_series(const ExactRational& lambda, std::size_t order, Flavor flavor = Flavor::EGF) {
    std::vector<ExactRational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = lambda.pow(n) / ExactRational(factorial(n));
    return Series::from_coeffs(flavor, std::move(c));
}

/// e^{mu t} - 1.
inline Series expm1_series(const ExactRational& mu, std::size_t order, Flavor flavor = Flavor::EGF) {
    std::vector<ExactRational> c(order + 1);
    for (std::size_t n = 1; n <= order; ++n) c[n] = mu.pow(n) / ExactRational(factorial(n));
    return Series::from_coeffs(flavor, std::move(c));
}

/// 1/(1 - lambda t): c_n = lambda^n.
inline Series geometric_series(const ExactRational& lambda, std::size_t order, Flavor flavor = Flavor::OGF) {
    std::vector<ExactRational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = lambda.pow(n);
    return Series::from_coeffs(flavor, std::move(c));
}

/// mu t/(1 - lambda t): c_n = mu lambda^(n-1) for n >= 1.
inline Series scaled_geometric_argument(const ExactRational& mu, const ExactRational& lambda,
                                        std::size_t order, Flavor flavor) {
    std::vector<ExactRational> c(order + 1);
    for (std::size_t n = 1; n <= order; ++n) c[n] = mu * lambda.pow(n - 1);
    return Series::from_coeffs(flavor, std::move(c));
}

/// log(1 + t): c_n = (-1)^(n-1)/n.
inline Series log1p_series(std::size_t order, Flavor flavor = Flavor::EGF) {
    std::vector<ExactRational> c(order + 1);
    for (std::size_t n = 1; n <= order; ++n) c[n] = ExactRational((n & 1) ? 1 : -1, static_cast<long long>(n));
    return Series::from_coeffs(flavor, std::move(c));
}

/// log(1 + t)/t: c_n = (-1)^n/(n + 1).
inline Series log1p_over_t_series(std::size_t order, Flavor flavor = Flavor::OGF) {
    std::vector<ExactRational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = ExactRational((n & 1) ? -1 : 1, static_cast<long long>(n + 1));
    return Series::from_coeffs(flavor, std::move(c));
}

/// (1 + t)^mu: c_n = C(mu, n).
inline Series binomial_power_series(const ExactRational& mu, std::size_t order, Flavor flavor = Flavor::OGF) {
    std::vector<ExactRational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = generalized_binomial(mu, n);
    return Series::from_coeffs(flavor, std::move(c));
}

/// (1 - (1 - t)^mu)^p / p! as an EGF. For 0 < mu < 1 every sequence term of
/// the p = 1 kernel is the strictly positive product mu(1-mu)...(n-1-mu).
inline Series todorov_series(const ExactRational& mu, std::size_t p, std::size_t order) {
    std::vector<ExactRational> c(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        c[n] = generalized_binomial(mu, n) * minus_one_pow(n + 1);
    }
    Series base = Series::from_coeffs(Flavor::EGF, std::move(c));
    return series_pow(base, p).scaled(ExactRational(1) / ExactRational(factorial(p)));
}

}  // namespace stirconv
