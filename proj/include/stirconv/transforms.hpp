#pragma once

#include "stirconv/rational.hpp"
#include "stirconv/series.hpp"
#include "stirconv/triangles.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stirconv {

/// One of the sequence transforms. Each has a direct definition as a weighted
/// coefficient sum over a number triangle, and (except GeomSum/LogDivide) an
/// equivalent construction by substitution or multiplication at the series
/// level. The sequence term of the result is:
///
///   Stirling2(l, m): b_n = sum_k S(n,k) l^(n-k) m^k a_k          (EGF)
///   Stirling1(l, m): b_n = sum_k s(n,k) l^(n-k) m^k a_k          (EGF)
///   Lah(l, m):       b_n = sum_k L(n,k) l^(n-k) m^k a_k          (EGF)
///   Binomial(l):     b_n = sum_k C(n,k) l^(n-k) a_k              (EGF)
///   EulerOGF(l, m):  b_n = sum_k C(n,k) l^(n-k) m^k a_k          (OGF)
///   GeomSum(l):      b_n = sum_k l^(n-k) a_k                     (OGF)
///   LogDivide:       b_n = sum_k a_k (-1)^(n-k)/(n-k+1)          (OGF)
///
/// l^(n-k) is taken with 0^0 = 1, so lambda = 0 degenerates Stirling2/
/// Stirling1/Lah to b_n = m^n a_n and Binomial to the identity.
class TransformKind {
  public:
    enum class Family { Stirling2, Stirling1, Lah, Binomial, EulerOGF, GeomSum, LogDivide };

    static TransformKind stirling2(ExactRational lambda, ExactRational mu) {
        return {Family::Stirling2, std::move(lambda), std::move(mu)};
    }
    static TransformKind stirling1(ExactRational lambda, ExactRational mu) {
        return {Family::Stirling1, std::move(lambda), std::move(mu)};
    }
    static TransformKind lah(ExactRational lambda, ExactRational mu) {
        return {Family::Lah, std::move(lambda), std::move(mu)};
    }
    static TransformKind binomial(ExactRational lambda) {
        return {Family::Binomial, std::move(lambda), ExactRational(0)};
    }
    static TransformKind euler_ogf(ExactRational lambda, ExactRational mu) {
        return {Family::EulerOGF, std::move(lambda), std::move(mu)};
    }
    static TransformKind geom_sum(ExactRational lambda) {
        return {Family::GeomSum, std::move(lambda), ExactRational(0)};
    }
    static TransformKind log_divide() { return {Family::LogDivide, ExactRational(0), ExactRational(0)}; }

    Family family() const { return family_; }
    const ExactRational& lambda() const { return lambda_; }
    const ExactRational& mu() const { return mu_; }

    Flavor required_flavor() const {
        switch (family_) {
            case Family::Stirling2:
            case Family::Stirling1:
            case Family::Lah:
            case Family::Binomial:
                return Flavor::EGF;
            default:
                return Flavor::OGF;
        }
    }

    /// GeomSum and LogDivide are plain products; everything else has a
    /// substitution/multiplication construction.
    bool has_composition_path() const {
        return family_ != Family::GeomSum && family_ != Family::LogDivide;
    }

    std::string name() const {
        switch (family_) {
            case Family::Stirling2: return "stirling2";
            case Family::Stirling1: return "stirling1";
            case Family::Lah: return "lah";
            case Family::Binomial: return "binomial";
            case Family::EulerOGF: return "euler";
            case Family::GeomSum: return "geomsum";
            case Family::LogDivide: return "logdivide";
        }
        return "?";
    }

  private:
    TransformKind(Family family, ExactRational lambda, ExactRational mu)
        : family_(family), lambda_(std::move(lambda)), mu_(std::move(mu)) {}

    Family family_;
    ExactRational lambda_;
    ExactRational mu_;
};

namespace detail {

inline void require_transform_flavor(const TransformKind& kind, const Series& a) {
    if (a.flavor() != kind.required_flavor()) {
        throw std::invalid_argument("transform '" + kind.name() + "' requires " +
                                    flavor_name(kind.required_flavor()) + " input");
    }
}

}  // namespace detail

/// Direct evaluation of the transform as weighted coefficient sums.
inline Series apply_transform(const TransformKind& kind, const Series& a) {
    detail::require_transform_flavor(kind, a);
    const std::size_t order = a.order();
    const ExactRational& l = kind.lambda();
    const ExactRational& m = kind.mu();
    std::vector<ExactRational> seq(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        ExactRational b(0);
        for (std::size_t k = 0; k <= n; ++k) {
            ExactRational a_k = a.sequence_term(k);
            if (a_k.is_zero()) continue;
            switch (kind.family()) {
                case TransformKind::Family::Stirling2:
                    b += ExactRational(stirling2(n, k)) * l.pow(n - k) * m.pow(k) * a_k;
                    break;
                case TransformKind::Family::Stirling1:
                    b += ExactRational(stirling1_signed(n, k)) * l.pow(n - k) * m.pow(k) * a_k;
                    break;
                case TransformKind::Family::Lah:
                    b += ExactRational(lah(n, k)) * l.pow(n - k) * m.pow(k) * a_k;
                    break;
                case TransformKind::Family::Binomial:
                    b += ExactRational(binom_int(n, k)) * l.pow(n - k) * a_k;
                    break;
                case TransformKind::Family::EulerOGF:
                    b += ExactRational(binom_int(n, k)) * l.pow(n - k) * m.pow(k) * a_k;
                    break;
                case TransformKind::Family::GeomSum:
                    b += l.pow(n - k) * a_k;
                    break;
                case TransformKind::Family::LogDivide:
                    b += a_k * ExactRational(((n - k) & 1) ? -1 : 1, static_cast<long long>(n - k + 1));
                    break;
            }
        }
        seq[n] = std::move(b);
    }
    return Series(a.flavor(), order, seq);
}

/// The same transform built from the series side: substitution of the kernel
/// argument (and a kernel factor where one appears) for the triangle
/// transforms, a plain product for GeomSum/LogDivide. Stirling2/Stirling1
/// divide by lambda in the substituted argument, so lambda = 0 is rejected
/// there; the direct path has no such restriction.
inline Series transform_via_construction(const TransformKind& kind, const Series& a) {
    detail::require_transform_flavor(kind, a);
    const std::size_t order = a.order();
    const ExactRational& l = kind.lambda();
    const ExactRational& m = kind.mu();
    switch (kind.family()) {
        case TransformKind::Family::Stirling2: {
            if (l.is_zero()) throw std::domain_error("stirling2 transform: construction path needs lambda != 0");
            // (mu/lambda)(e^{lambda t} - 1): c_j = mu lambda^(j-1)/j!.
            std::vector<ExactRational> c(order + 1);
            for (std::size_t j = 1; j <= order; ++j) c[j] = m * l.pow(j - 1) / ExactRational(factorial(j));
            return series_compose(a, Series::from_coeffs(a.flavor(), std::move(c)));
        }
        case TransformKind::Family::Stirling1: {
            if (l.is_zero()) throw std::domain_error("stirling1 transform: construction path needs lambda != 0");
            // (mu/lambda) log(1 + lambda t): c_j = mu (-1)^(j-1) lambda^(j-1)/j.
            std::vector<ExactRational> c(order + 1);
            for (std::size_t j = 1; j <= order; ++j) {
                c[j] = m * l.pow(j - 1) * ExactRational((j & 1) ? 1 : -1, static_cast<long long>(j));
            }
            return series_compose(a, Series::from_coeffs(a.flavor(), std::move(c)));
        }
        case TransformKind::Family::Lah:
            return series_compose(a, scaled_geometric_argument(m, l, order, a.flavor()));
        case TransformKind::Family::Binomial:
            return a * exp_series(l, order, a.flavor());
        case TransformKind::Family::EulerOGF: {
            Series inner = series_compose(a, scaled_geometric_argument(m, l, order, a.flavor()));
            return inner * geometric_series(l, order, a.flavor());
        }
        case TransformKind::Family::GeomSum:
            return a * geometric_series(l, order, a.flavor());
        case TransformKind::Family::LogDivide:
            return a * log1p_over_t_series(order, a.flavor());
    }
    throw std::logic_error("transform_via_construction: bad family");
}

/// True iff the direct coefficient sums and the series-side construction
/// agree exactly through the full order.
inline bool dual_path_check(const TransformKind& kind, const Series& a) {
    return apply_transform(kind, a) == transform_via_construction(kind, a);
}

}  // namespace stirconv
