// Exact scalar types: arbitrary-precision integers, rationals, and
// Gaussian rationals (a + bi with rational a, b) for the complex weight mode.

#ifndef FOCKSHIFT_SCALAR_HPP
#define FOCKSHIFT_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fockshift {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with the "/q" omitted when q == 1. Parsing accepts both forms and
// rejects anything else (floats in particular).
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

double rational_to_double(const Rational& q);

// Floor square root test: returns r with r*r == n, if one exists.
std::optional<Integer> exact_integer_sqrt(const Integer& n);

// sqrt(q) when q is the square of a rational.
std::optional<Rational> exact_rational_sqrt(const Rational& q);

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    // |z|^2, always an exact rational.
    Rational norm_sq() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const Rational& d) {
        if (d == 0) throw std::domain_error("division by zero");
        return {a.re / d, a.im / d};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    std::complex<double> to_complex_double() const {
        return {rational_to_double(re), rational_to_double(im)};
    }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        return os << z.str();
    }
};

// |z| when it is exactly rational (z on an axis, or |z|^2 a rational square).
std::optional<Rational> exact_modulus(const GaussianRational& z);

// Scalar concept hooks used by the generic sparse operator.
inline Rational conj_value(const Rational& x) { return x; }
inline GaussianRational conj_value(const GaussianRational& z) { return z.conj(); }
inline std::complex<double> conj_value(const std::complex<double>& z) { return std::conj(z); }

inline bool is_zero_value(const Rational& x) { return x == 0; }
inline bool is_zero_value(const GaussianRational& z) { return z.is_zero(); }
inline bool is_zero_value(const std::complex<double>& z) { return z == std::complex<double>{}; }

inline double conj_value(double x) { return x; }
inline bool is_zero_value(double x) { return x == 0.0; }

std::string value_to_string(const Rational& x);
std::string value_to_string(const GaussianRational& z);
std::string value_to_string(const std::complex<double>& z);

}  // namespace fockshift

#endif  // FOCKSHIFT_SCALAR_HPP
