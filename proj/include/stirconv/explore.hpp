#pragma once

#include "stirconv/rational.hpp"
#include "stirconv/series.hpp"
#include "stirconv/triangles.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace stirconv {

/// Open convolutions with no known closed form. The emitters compute values
/// only; each is still cross-checked against its series-side formulation,
/// which is where any closed form would have to come from:
///
///   X_BINOM_S1    sum_k C(n,k) s(k,p)              ~ e^t log^p(1+t)/p!
///   X_BINOM_S2_MU sum_k C(n,k) S(k,p) mu^k         ~ e^t (e^{mu t}-1)^p/p!
///   X_BINOM_LAH   sum_k C(n,k) L(k,p) lambda^(n-k) ~ e^{lambda t} (t/(1-t))^p/p!
///   X_S2_LAH      sum_k S(n,k) L(k,p)              ~ ((e^t-1)/(2-e^t))^p/p!
///   X_LAH_S2      sum_k L(n,k) S(k,p)              ~ (e^{t/(1-t)}-1)^p/p!
///   X_S1_LAH      sum_k s(n,k) L(k,p)              ~ (log(1+t)/(1-log(1+t)))^p/p!
///   X_POLY_F      f_{n,p}(z) = sum_k S(n,k) s(k,p) z^k ~ log^p(1+z(e^t-1))/p!
enum class ExploreId {
    X_BINOM_S1,
    X_BINOM_S2_MU,
    X_BINOM_LAH,
    X_S2_LAH,
    X_LAH_S2,
    X_S1_LAH,
    X_POLY_F,
};

inline const std::vector<std::pair<ExploreId, std::string_view>>& explore_names() {
    static const std::vector<std::pair<ExploreId, std::string_view>> names = {
        {ExploreId::X_BINOM_S1, "X_BINOM_S1"},       {ExploreId::X_BINOM_S2_MU, "X_BINOM_S2_MU"},
        {ExploreId::X_BINOM_LAH, "X_BINOM_LAH"},     {ExploreId::X_S2_LAH, "X_S2_LAH"},
        {ExploreId::X_LAH_S2, "X_LAH_S2"},           {ExploreId::X_S1_LAH, "X_S1_LAH"},
        {ExploreId::X_POLY_F, "X_POLY_F"},
    };
    return names;
}

inline std::string_view explore_name(ExploreId id) {
    for (const auto& [eid, name] : explore_names()) {
        if (eid == id) return name;
    }
    return "?";
}

inline std::optional<ExploreId> parse_explore_id(std::string_view name) {
    for (const auto& [eid, n] : explore_names()) {
        if (n == name) return eid;
    }
    return std::nullopt;
}

/// Scalar parameter of the convolution, where one appears: mu for
/// X_BINOM_S2_MU, lambda for X_BINOM_LAH, z for X_POLY_F. Ignored elsewhere.
struct ExploreParams {
    ExactRational scalar{1};
};

/// One emitted row. For X_POLY_F `values` holds the z-coefficient vector of
/// f_{n,p}; for every other id it holds the single convolution value. The
/// oracle column is the matching series-side sequence term (for X_POLY_F:
/// the polynomial evaluated at z must reproduce it).
struct ExploreRow {
    long long n = 0;
    std::vector<ExactRational> values;
    ExactRational oracle;
    bool oracle_match = false;
};

namespace detail {

inline Series explore_oracle_series(ExploreId id, std::size_t p, std::size_t order,
                                    const ExactRational& scalar) {
    switch (id) {
        case ExploreId::X_BINOM_S1:
            return kernel_gf(KernelKind::Stirling1, p, order) * exp_series(ExactRational(1), order);
        case ExploreId::X_BINOM_S2_MU: {
            Series base = expm1_series(scalar, order);
            return series_pow(base, p).scaled(ExactRational(1) / ExactRational(factorial(p))) *
                   exp_series(ExactRational(1), order);
        }
        case ExploreId::X_BINOM_LAH:
            return kernel_gf(KernelKind::Lah, p, order) * exp_series(scalar, order);
        case ExploreId::X_S2_LAH:
            return series_compose(kernel_gf(KernelKind::Lah, p, order),
                                  expm1_series(ExactRational(1), order));
        case ExploreId::X_LAH_S2:
            return series_compose(kernel_gf(KernelKind::Stirling2, p, order),
                                  scaled_geometric_argument(ExactRational(1), ExactRational(1), order,
                                                            Flavor::EGF));
        case ExploreId::X_S1_LAH:
            return series_compose(kernel_gf(KernelKind::Lah, p, order), log1p_series(order));
        case ExploreId::X_POLY_F:
            return series_compose(kernel_gf(KernelKind::Stirling1, p, order),
                                  expm1_series(ExactRational(1), order).scaled(scalar));
    }
    throw std::logic_error("explore_oracle_series: bad id");
}

}  // namespace detail

/// Emits the convolution values for p <= n <= n_max together with the
/// series-oracle column.
inline std::vector<ExploreRow> explore(ExploreId id, long long n_max, long long p,
                                       const ExploreParams& params = {}) {
    if (p < 0 || n_max < p) throw std::invalid_argument("explore: requires 0 <= p <= n_max");
    const std::size_t order = static_cast<std::size_t>(n_max);
    Series oracle = detail::explore_oracle_series(id, static_cast<std::size_t>(p), order, params.scalar);

    std::vector<ExploreRow> rows;
    for (long long n = p; n <= n_max; ++n) {
        ExploreRow row;
        row.n = n;
        row.oracle = oracle.sequence_term(static_cast<std::size_t>(n));
        auto nn = static_cast<std::size_t>(n);
        auto pp = static_cast<std::size_t>(p);
        ExactRational value(0);
        switch (id) {
            case ExploreId::X_BINOM_S1:
                for (std::size_t k = 0; k <= nn; ++k) {
                    value += ExactRational(binom_int(nn, k) * stirling1_signed(k, pp));
                }
                break;
            case ExploreId::X_BINOM_S2_MU:
                for (std::size_t k = 0; k <= nn; ++k) {
                    value += ExactRational(binom_int(nn, k) * stirling2(k, pp)) * params.scalar.pow(k);
                }
                break;
            case ExploreId::X_BINOM_LAH:
                for (std::size_t k = 0; k <= nn; ++k) {
                    value += ExactRational(binom_int(nn, k) * lah(k, pp)) * params.scalar.pow(nn - k);
                }
                break;
            case ExploreId::X_S2_LAH:
                for (std::size_t k = 0; k <= nn; ++k) {
                    value += ExactRational(stirling2(nn, k) * lah(k, pp));
                }
                break;
            case ExploreId::X_LAH_S2:
                for (std::size_t k = 0; k <= nn; ++k) {
                    value += ExactRational(lah(nn, k) * stirling2(k, pp));
                }
                break;
            case ExploreId::X_S1_LAH:
                for (std::size_t k = 0; k <= nn; ++k) {
                    value += ExactRational(stirling1_signed(nn, k) * lah(k, pp));
                }
                break;
            case ExploreId::X_POLY_F: {
                row.values.resize(nn + 1);
                ExactRational at_z(0);
                for (std::size_t k = 0; k <= nn; ++k) {
                    row.values[k] = ExactRational(stirling2(nn, k) * stirling1_signed(k, pp));
                    at_z += row.values[k] * params.scalar.pow(k);
                }
                row.oracle_match = at_z == row.oracle;
                rows.push_back(std::move(row));
                continue;
            }
        }
        row.values = {value};
        row.oracle_match = value == row.oracle;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace stirconv
