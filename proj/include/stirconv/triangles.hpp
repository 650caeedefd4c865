#pragma once

#include "stirconv/polynomial.hpp"
#include "stirconv/rational.hpp"
#include "stirconv/series.hpp"

#include <cstddef>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace stirconv {

enum class TriangleKind { StirlingSigned, StirlingUnsigned, Stirling2, Lah };

/// How triangle rows are produced. Recurrence is the default working route
/// (for Lah the direct route is its closed form); GeneratingFunction extracts
/// every entry from the column EGFs instead and exists so the two routes can
/// be played against each other.
enum class TriangleSource { Recurrence, GeneratingFunction };

/// Lazily grown lower-triangular table for one number family. Rows are grown
/// whole and never evicted; row n holds entries k = 0..n.
class TriangleCache {
  public:
    explicit TriangleCache(TriangleKind kind, TriangleSource source = TriangleSource::Recurrence)
        : kind_(kind), source_(source) {}

    TriangleKind kind() const { return kind_; }
    TriangleSource source() const { return source_; }
    std::size_t rows_built() const { return rows_.size(); }

    /// Entry (n, k); 0 when k > n.
    ExactInt value(std::size_t n, std::size_t k) {
        if (k > n) return ExactInt(0);
        grow_to(n);
        return rows_[n][k];
    }

    std::vector<ExactInt> row(std::size_t n) {
        grow_to(n);
        return rows_[n];
    }

  private:
    void grow_to(std::size_t n) {
        if (n < rows_.size()) return;
        if (source_ == TriangleSource::GeneratingFunction) {
            rebuild_from_gf(n);
            return;
        }
        while (rows_.size() <= n) {
            rows_.push_back(next_row());
        }
    }

    std::vector<ExactInt> next_row() const {
        std::size_t n = rows_.size();
        std::vector<ExactInt> row(n + 1);
        if (n == 0) {
            row[0] = 1;
            return row;
        }
        if (kind_ == TriangleKind::Lah) {
            // L(n, k) = (n!/k!) C(n-1, k-1), expanded through factorials so
            // the cache has no dependency on the binomial table.
            for (std::size_t k = 1; k <= n; ++k) {
                row[k] = (factorial(n) * factorial(n - 1)) /
                         (factorial(k) * factorial(k - 1) * factorial(n - k));
            }
            return row;
        }
        const std::vector<ExactInt>& prev = rows_[n - 1];
        ExactInt n_minus_1(static_cast<unsigned long long>(n - 1));
        for (std::size_t k = 1; k <= n; ++k) {
            const ExactInt& diag = prev[k - 1];
            ExactInt above = k < prev.size() ? prev[k] : ExactInt(0);
            switch (kind_) {
                case TriangleKind::Stirling2:
                    row[k] = diag + ExactInt(static_cast<unsigned long long>(k)) * above;
                    break;
                case TriangleKind::StirlingSigned:
                    row[k] = diag - n_minus_1 * above;
                    break;
                case TriangleKind::StirlingUnsigned:
                    row[k] = diag + n_minus_1 * above;
                    break;
                case TriangleKind::Lah:
                    break;  // handled above
            }
        }
        return row;
    }

    void rebuild_from_gf(std::size_t n_max) {
        KernelKind kernel = KernelKind::Stirling2;
        bool flip_sign = false;
        switch (kind_) {
            case TriangleKind::Stirling2: kernel = KernelKind::Stirling2; break;
            case TriangleKind::StirlingSigned: kernel = KernelKind::Stirling1; break;
            case TriangleKind::StirlingUnsigned:
                kernel = KernelKind::Stirling1;
                flip_sign = true;
                break;
            case TriangleKind::Lah: kernel = KernelKind::Lah; break;
        }
        rows_.clear();
        for (std::size_t n = 0; n <= n_max; ++n) rows_.emplace_back(n + 1);
        for (std::size_t p = 0; p <= n_max; ++p) {
            Series column = kernel_gf(kernel, p, n_max);
            for (std::size_t n = p; n <= n_max; ++n) {
                ExactRational term = column.sequence_term(n);
                if (flip_sign) term = term * minus_one_pow(n - p);
                rows_[n][p] = term.as_integer();
            }
        }
    }

    TriangleKind kind_;
    TriangleSource source_;
    std::deque<std::vector<ExactInt>> rows_;
};

namespace detail {

/// Pascal's triangle with the same two build routes as TriangleCache.
class BinomialCache {
  public:
    explicit BinomialCache(TriangleSource source = TriangleSource::Recurrence) : source_(source) {}

    ExactInt value(std::size_t n, std::size_t k) {
        if (k > n) return ExactInt(0);
        grow_to(n);
        return rows_[n][k];
    }

  private:
    void grow_to(std::size_t n) {
        if (n < rows_.size()) return;
        if (source_ == TriangleSource::GeneratingFunction) {
            rows_.clear();
            for (std::size_t m = 0; m <= n; ++m) rows_.emplace_back(m + 1);
            for (std::size_t p = 0; p <= n; ++p) {
                Series column = kernel_gf(KernelKind::BinomCol, p, n);
                for (std::size_t m = p; m <= n; ++m) {
                    rows_[m][p] = column.sequence_term(m).as_integer();
                }
            }
            return;
        }
        while (rows_.size() <= n) {
            std::size_t m = rows_.size();
            std::vector<ExactInt> row(m + 1);
            row[0] = 1;
            row[m] = 1;
            for (std::size_t k = 1; k < m; ++k) row[k] = rows_[m - 1][k - 1] + rows_[m - 1][k];
            rows_.push_back(std::move(row));
        }
    }

    TriangleSource source_;
    std::deque<std::vector<ExactInt>> rows_;
};

struct TriangleStore {
    std::mutex mutex;
    TriangleSource source = TriangleSource::Recurrence;
    TriangleCache stirling2{TriangleKind::Stirling2};
    TriangleCache stirling_signed{TriangleKind::StirlingSigned};
    TriangleCache stirling_unsigned{TriangleKind::StirlingUnsigned};
    TriangleCache lah{TriangleKind::Lah};
    BinomialCache binomial;

    static TriangleStore& instance() {
        static TriangleStore store;
        return store;
    }

    void reset(TriangleSource new_source) {
        source = new_source;
        stirling2 = TriangleCache(TriangleKind::Stirling2, new_source);
        stirling_signed = TriangleCache(TriangleKind::StirlingSigned, new_source);
        stirling_unsigned = TriangleCache(TriangleKind::StirlingUnsigned, new_source);
        lah = TriangleCache(TriangleKind::Lah, new_source);
        binomial = BinomialCache(new_source);
    }
};

}  // namespace detail

/// Switches the process-wide triangle tables between the recurrence route and
/// generating-function extraction, dropping anything already built. Meant for
/// cross-validation harnesses; results must not depend on the choice.
inline void set_triangle_source(TriangleSource source) {
    auto& store = detail::TriangleStore::instance();
    std::lock_guard<std::mutex> lock(store.mutex);
    store.reset(source);
}

inline TriangleSource triangle_source() {
    auto& store = detail::TriangleStore::instance();
    std::lock_guard<std::mutex> lock(store.mutex);
    return store.source;
}

/// S(n, k), partitions of an n-set into k nonempty blocks.
inline ExactInt stirling2(std::size_t n, std::size_t k) {
    auto& store = detail::TriangleStore::instance();
    std::lock_guard<std::mutex> lock(store.mutex);
    return store.stirling2.value(n, k);
}

/// Signed Stirling numbers of the first kind s(n, k).
inline ExactInt stirling1_signed(std::size_t n, std::size_t k) {
    auto& store = detail::TriangleStore::instance();
    std::lock_guard<std::mutex> lock(store.mutex);
    return store.stirling_signed.value(n, k);
}

/// Unsigned Stirling numbers of the first kind, |s(n, k)| = (-1)^(n-k) s(n, k);
/// grown from their own recurrence so the sign relation is a real cross-check.
inline ExactInt stirling1_unsigned(std::size_t n, std::size_t k) {
    auto& store = detail::TriangleStore::instance();
    std::lock_guard<std::mutex> lock(store.mutex);
    return store.stirling_unsigned.value(n, k);
}

/// Lah numbers L(n, k).
inline ExactInt lah(std::size_t n, std::size_t k) {
    auto& store = detail::TriangleStore::instance();
    std::lock_guard<std::mutex> lock(store.mutex);
    return store.lah.value(n, k);
}

/// Binomial coefficient C(n, k); 0 when k > n.
inline ExactInt binom_int(std::size_t n, std::size_t k) {
    auto& store = detail::TriangleStore::instance();
    std::lock_guard<std::mutex> lock(store.mutex);
    return store.binomial.value(n, k);
}

inline std::vector<ExactInt> triangle_row(TriangleKind kind, std::size_t n) {
    auto& store = detail::TriangleStore::instance();
    std::lock_guard<std::mutex> lock(store.mutex);
    switch (kind) {
        case TriangleKind::Stirling2: return store.stirling2.row(n);
        case TriangleKind::StirlingSigned: return store.stirling_signed.row(n);
        case TriangleKind::StirlingUnsigned: return store.stirling_unsigned.row(n);
        case TriangleKind::Lah: return store.lah.row(n);
    }
    throw std::logic_error("triangle_row: bad kind");
}

inline std::vector<ExactInt> binomial_row(std::size_t n) {
    std::vector<ExactInt> row(n + 1);
    for (std::size_t k = 0; k <= n; ++k) row[k] = binom_int(n, k);
    return row;
}

/// Bell number b_n = phi_n(1) = sum_k S(n, k).
inline ExactInt bell(std::size_t n) {
    std::vector<ExactInt> row = triangle_row(TriangleKind::Stirling2, n);
    ExactInt sum(0);
    for (const ExactInt& entry : row) sum += entry;
    return sum;
}

/// Exponential polynomial phi_n(x) = sum_k S(n, k) x^k.
inline Polynomial exp_poly(std::size_t n) {
    std::vector<ExactInt> row = triangle_row(TriangleKind::Stirling2, n);
    std::vector<ExactRational> coeffs(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) coeffs[k] = ExactRational(row[k]);
    return Polynomial(std::move(coeffs));
}

inline ExactRational exp_poly_eval(std::size_t n, const ExactRational& x) {
    std::vector<ExactInt> row = triangle_row(TriangleKind::Stirling2, n);
    ExactRational value(0);
    for (std::size_t k = row.size(); k-- > 0;) {
        value = value * x + ExactRational(row[k]);
    }
    return value;
}

/// Laguerre polynomial L_n^{(q)}(x) = sum_{i=0..n} (-1)^i C(n+q, n-i) x^i / i!
/// for integer order q >= -1.
inline ExactRational laguerre(std::size_t n, int q, const ExactRational& x) {
    if (q < -1) throw std::domain_error("laguerre: order q < -1 is not supported");
    ExactRational upper(static_cast<long long>(n) + q);
    ExactRational sum(0);
    for (std::size_t i = 0; i <= n; ++i) {
        ExactRational term = generalized_binomial(upper, n - i) * x.pow(i) / ExactRational(factorial(i));
        sum += (i & 1) ? -term : term;
    }
    return sum;
}

}  // namespace stirconv
