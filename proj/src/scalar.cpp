#include "fockshift/scalar.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <sstream>

namespace fockshift {

std::string rational_to_string(const Rational& q) {
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("not an exact rational: \"" + text + "\"");
    };
    if (text.empty()) fail();
    const auto slash = text.find('/');
    auto check_int = [&](const std::string& part, bool allow_sign) {
        if (part.empty()) fail();
        std::size_t start = 0;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) start = 1;
        if (start == part.size()) fail();
        for (std::size_t p = start; p < part.size(); ++p)
            if (!std::isdigit(static_cast<unsigned char>(part[p]))) fail();
    };
    if (slash == std::string::npos) {
        check_int(text, true);
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    check_int(num, true);
    check_int(den, false);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: \"" + text + "\"");
    return Rational(Integer(num), d);
}

double rational_to_double(const Rational& q) {
    return q.convert_to<double>();
}

std::optional<Integer> exact_integer_sqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rational> exact_rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto num = exact_integer_sqrt(numerator(q));
    if (!num) return std::nullopt;
    auto den = exact_integer_sqrt(denominator(q));
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

std::optional<Rational> exact_modulus(const GaussianRational& z) {
    if (z.im == 0) return z.re < 0 ? -z.re : z.re;
    if (z.re == 0) return z.im < 0 ? -z.im : z.im;
    return exact_rational_sqrt(z.norm_sq());
}

std::string GaussianRational::str() const {
    if (im == 0) return rational_to_string(re);
    std::ostringstream os;
    if (re != 0) os << rational_to_string(re);
    if (im > 0 && re != 0) os << "+";
    if (im == -1)
        os << "-";
    else if (im != 1)
        os << rational_to_string(im);
    os << "i";
    return os.str();
}

std::string value_to_string(const Rational& x) { return rational_to_string(x); }
std::string value_to_string(const GaussianRational& z) { return z.str(); }
std::string value_to_string(const std::complex<double>& z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

}  // namespace fockshift
