#ifndef STRATQUANT_RATIONAL_HPP
#define STRATQUANT_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace stratquant {

/// Parse "p" or "p/q" into a canonical (gcd-reduced, positive denominator)
/// rational. Throws std::invalid_argument on malformed input or q == 0.
mpq_class rational_from_string(const std::string& text);

/// Canonical "p" / "p/q" form (never "p/1").
std::string rational_to_string(const mpq_class& value);

/// Exact Gaussian rational re + im*i. All arithmetic is exact; the
/// components stay canonical because mpq_class arithmetic canonicalizes.
struct Scalar {
    mpq_class re;
    mpq_class im;

    Scalar() : re(0), im(0) {}
    Scalar(long value) : re(value), im(0) {}  // NOLINT: implicit by design
    Scalar(mpq_class real) : re(std::move(real)), im(0) {}
    Scalar(mpq_class real, mpq_class imag) : re(std::move(real)), im(std::move(imag)) {}

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }

    Scalar conj() const { return Scalar(re, -im); }
    /// Squared modulus re^2 + im^2 (a nonnegative rational).
    mpq_class norm() const { return re * re + im * im; }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    /// Exact field division; throws std::domain_error on division by zero.
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Human-readable form: "3/4", "2i", "(1-2i)", ...
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace stratquant

#endif
