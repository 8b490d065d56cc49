#include "chancalc/scalar.hpp"

#include <cctype>

#include "chancalc/errors.hpp"

namespace chancalc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Scalar::Scalar(mpq_class v) : v_(std::move(v)) {
    v_.canonicalize();
    if (sgn(v_) < 0) {
        throw ValidationError("scalar value must be non-negative: " + v_.get_str());
    }
}

Scalar::Scalar(long n) : Scalar(mpq_class(n)) {}

Scalar::Scalar(long num, long den) {
    if (den == 0) throw ValidationError("scalar denominator must be nonzero");
    mpq_class v(num, den);
    v.canonicalize();
    if (sgn(v) < 0) {
        throw ValidationError("scalar value must be non-negative: " + v.get_str());
    }
    v_ = v;
}

Scalar Scalar::parse(std::string_view text) {
    std::string s(text);
    auto bad = [&]() -> ValidationError {
        return ValidationError("cannot parse scalar: \"" + s + "\"");
    };
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw bad();
        mpz_class d(den);
        if (sgn(d) == 0) throw ValidationError("zero denominator in scalar: \"" + s + "\"");
        return Scalar(mpq_class(mpz_class(num), d));
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot);
        std::string fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || (!fp.empty() && !all_digits(fp))) throw bad();
        mpz_class num(ip);
        mpz_class den(1);
        for (char c : fp) {
            num *= 10;
            num += c - '0';
            den *= 10;
        }
        return Scalar(mpq_class(num, den));
    }
    if (!all_digits(s)) throw bad();
    return Scalar(mpq_class(mpz_class(s)));
}

Scalar Scalar::operator+(const Scalar& o) const { return Scalar(mpq_class(v_ + o.v_)); }

Scalar Scalar::operator*(const Scalar& o) const { return Scalar(mpq_class(v_ * o.v_)); }

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw ValidationError("division of scalar by zero");
    return Scalar(mpq_class(v_ / o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (v_ < o.v_) {
        throw ValidationError("scalar subtraction would be negative: " + v_.get_str() +
                              " - " + o.v_.get_str());
    }
    return Scalar(mpq_class(v_ - o.v_));
}

Scalar Scalar::pow(unsigned long n) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), n);
    return Scalar(mpq_class(num, den));
}

Scalar Scalar::abs_diff(const Scalar& a, const Scalar& b) {
    return a.v_ >= b.v_ ? a - b : b - a;
}

std::string Scalar::to_fraction_string() const { return v_.get_str(); }

std::string Scalar::to_decimal_string(int significant_digits) const {
    if (significant_digits < 1) significant_digits = 1;
    if (is_zero()) return "0";

    const mpz_class& num = v_.get_num();
    const mpz_class& den = v_.get_den();

    // Decimal exponent of the leading significant digit: the value lies in
    // [10^exp10, 10^(exp10+1)).
    long exp10 = 0;
    {
        mpz_class lo = den, hi = den * 10;
        if (num >= den) {
            while (num >= hi) {
                lo = hi;
                hi *= 10;
                ++exp10;
            }
        } else {
            mpz_class scaled = num * 10;
            --exp10;
            while (scaled < den) {
                scaled *= 10;
                --exp10;
            }
        }
    }

    // Round num/den * 10^shift to an integer, half to even.
    long shift = significant_digits - 1 - exp10;
    mpz_class n = num, d = den;
    if (shift >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        n *= p;
    } else {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        d *= p;
    }
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class twice = r * 2;
    if (twice > d || (twice == d && mpz_odd_p(q.get_mpz_t()))) q += 1;

    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) > significant_digits) {
        // Rounding carried into a new leading digit (e.g. 9.99 -> 10.0).
        digits.pop_back();
        ++exp10;
    }

    std::string out;
    if (exp10 >= significant_digits - 1) {
        out = digits + std::string(exp10 - significant_digits + 1, '0');
    } else if (exp10 >= 0) {
        out = digits.substr(0, exp10 + 1) + "." + digits.substr(exp10 + 1);
    } else {
        out = "0." + std::string(-exp10 - 1, '0') + digits;
    }
    return out;
}

} // namespace chancalc
