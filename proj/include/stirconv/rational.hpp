#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stirconv {

/// Arbitrary-precision signed integer. Every integer-valued quantity in the
/// library (triangle entries, factorials, Bell numbers) lives in ExactInt;
/// there is no overflow and no rounding anywhere.
using ExactInt = boost::multiprecision::cpp_int;

/// n!, memoized per thread. Returned by value: the cache may grow (and
/// relocate) on any later call in the same expression.
inline ExactInt factorial(std::size_t n) {
    thread_local std::vector<ExactInt> cache{ExactInt(1)};
    while (cache.size() <= n) {
        ExactInt next = cache.back() * ExactInt(static_cast<unsigned long long>(cache.size()));
        cache.push_back(std::move(next));
    }
    return cache[n];
}

/// Normalized arbitrary-precision fraction: den > 0 and gcd(|num|, den) = 1.
/// This is the universal scalar of the library: series coefficients, identity
/// values and all transform parameters are ExactRational.
class ExactRational {
  public:
    ExactRational() : num_(0), den_(1) {}
    ExactRational(long long value) : num_(value), den_(1) {}
    ExactRational(ExactInt value) : num_(std::move(value)), den_(1) {}
    ExactRational(long long num, long long den) : num_(num), den_(den) { normalize(); }
    ExactRational(ExactInt num, ExactInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const ExactInt& num() const { return num_; }
    const ExactInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    /// Exact integer value; valid only when is_integer().
    const ExactInt& as_integer() const {
        if (den_ != 1) throw std::domain_error("ExactRational: not an integer: " + str());
        return num_;
    }

    ExactRational operator-() const {
        ExactRational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    ExactRational& operator+=(const ExactRational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    ExactRational& operator-=(const ExactRational& o) { return *this += -o; }
    ExactRational& operator*=(const ExactRational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    ExactRational& operator/=(const ExactRational& o) {
        if (o.num_ == 0) throw std::domain_error("ExactRational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExactRational& a, const ExactRational& b) { return !(a == b); }
    friend bool operator<(const ExactRational& a, const ExactRational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const ExactRational& a, const ExactRational& b) { return b < a; }
    friend bool operator<=(const ExactRational& a, const ExactRational& b) { return !(b < a); }
    friend bool operator>=(const ExactRational& a, const ExactRational& b) { return !(a < b); }

    /// Nonnegative integer power; 0^0 = 1.
    ExactRational pow(std::size_t e) const {
        ExactRational r;
        r.num_ = boost::multiprecision::pow(num_, static_cast<unsigned>(e));
        r.den_ = boost::multiprecision::pow(den_, static_cast<unsigned>(e));
        return r;
    }

    /// Canonical form: "num" when den == 1, otherwise "num/den".
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Inverse of str(). Accepts "[+-]digits" optionally followed by
    /// "/digits". Anything else (including a zero denominator) is rejected.
    static ExactRational parse(std::string_view text) {
        auto fail = [&] { throw std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
        std::size_t i = 0;
        bool negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            negative = text[i] == '-';
            ++i;
        }
        std::size_t num_start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == num_start) fail();
        ExactInt num(std::string(text.substr(num_start, i - num_start)));
        if (negative) num = -num;
        ExactInt den(1);
        if (i < text.size()) {
            if (text[i] != '/') fail();
            ++i;
            std::size_t den_start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == den_start || i != text.size()) fail();
            den = ExactInt(std::string(text.substr(den_start)));
            if (den == 0) fail();
        }
        return ExactRational(std::move(num), std::move(den));
    }

  private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("ExactRational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        ExactInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    ExactInt num_;
    ExactInt den_;
};

inline std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

/// (-1)^k as an exact scalar.
inline ExactRational minus_one_pow(std::size_t k) { return (k & 1) ? ExactRational(-1) : ExactRational(1); }

/// Generalized binomial coefficient C(x, n) = x(x-1)...(x-n+1)/n! for an
/// arbitrary rational upper argument. C(x, 0) = 1 for every x.
inline ExactRational generalized_binomial(const ExactRational& x, std::size_t n) {
    ExactRational product(1);
    for (std::size_t i = 0; i < n; ++i) {
        product *= x - ExactRational(static_cast<long long>(i));
    }
    return product / ExactRational(factorial(n));
}

}  // namespace stirconv
