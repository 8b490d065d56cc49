#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chancalc {

/// Exact non-negative rational probability/weight value.
///
/// Always stored reduced to lowest terms with a positive denominator.
/// All arithmetic is exact; there is no rounding anywhere in the library.
/// Decimal input such as "0.43" is parsed as the exact rational 43/100.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n);
    Scalar(long num, long den);

    /// Parses "p/q", "p", or a decimal string like "0.43". Rejects
    /// negative values and zero denominators.
    static Scalar parse(std::string_view text);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Division; the divisor must be nonzero.
    Scalar operator/(const Scalar& o) const;
    /// Checked subtraction; the result must stay non-negative.
    Scalar operator-(const Scalar& o) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// this^n with n >= 0 (0^0 = 1).
    Scalar pow(unsigned long n) const;

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }
    bool operator<(const Scalar& o) const { return v_ < o.v_; }
    bool operator<=(const Scalar& o) const { return v_ <= o.v_; }
    bool operator>(const Scalar& o) const { return v_ > o.v_; }
    bool operator>=(const Scalar& o) const { return v_ >= o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    static Scalar abs_diff(const Scalar& a, const Scalar& b);

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_fraction_string() const;

    /// Fixed number of significant digits, round-half-even, computed in
    /// integer arithmetic. Used for human-readable tables only.
    std::string to_decimal_string(int significant_digits = 4) const;

    double to_double() const { return v_.get_d(); }

    const mpq_class& raw() const { return v_; }

private:
    explicit Scalar(mpq_class v);
    mpq_class v_;
};

} // namespace chancalc
