#include "stratquant/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace stratquant {

mpq_class rational_from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    if (sgn(q.get_den()) == 0) {
        throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& value) {
    return value.get_str();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class new_re = re * o.re - im * o.im;
    mpq_class new_im = re * o.im + im * o.re;
    re = std::move(new_re);
    im = std::move(new_im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    mpq_class n = o.norm();
    if (sgn(n) == 0) {
        throw std::domain_error("Scalar division by zero");
    }
    // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
    mpq_class new_re = (re * o.re + im * o.im) / n;
    mpq_class new_im = (im * o.re - re * o.im) / n;
    re = std::move(new_re);
    im = std::move(new_im);
    return *this;
}

std::string Scalar::str() const {
    if (is_real()) {
        return rational_to_string(re);
    }
    if (sgn(re) == 0) {
        if (im == 1) return "i";
        if (im == -1) return "-i";
        return rational_to_string(im) + "i";
    }
    std::string imag = rational_to_string(im);
    std::string body;
    if (im == 1) {
        body = "+i";
    } else if (im == -1) {
        body = "-i";
    } else if (sgn(im) > 0) {
        body = "+" + imag + "i";
    } else {
        body = imag + "i";
    }
    return "(" + rational_to_string(re) + body + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

}  // namespace stratquant
