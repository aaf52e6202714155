#include "stabcsa/gaussian.hpp"

#include <ostream>
#include <sstream>

#include "stabcsa/errors.hpp"

namespace stabcsa {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Gaussian Gaussian::operator/(const Gaussian& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero in Q(i)");
    Rational n = o.norm();
    Gaussian prod = *this * o.conj();
    return Gaussian(prod.re() / n, prod.im() / n);
}

Gaussian Gaussian::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(i)");
    Rational n = norm();
    return Gaussian(re_ / n, -im_ / n);
}

namespace {

std::string rat_str(const Rational& r) {
    return r.get_str();
}

}  // namespace

std::string Gaussian::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (im_ == 0) {
        os << rat_str(re_);
        return os.str();
    }
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = rat_str(im_) + "*i";
    }
    if (re_ == 0) return imag;
    os << rat_str(re_);
    if (im_ > 0) os << "+";
    os << imag;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rational(0);
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational out(sn, sd);
    out.canonicalize();
    return out;
}

std::optional<Gaussian> gaussian_sqrt(const Gaussian& g) {
    const Rational& a = g.re();
    const Rational& b = g.im();
    if (b == 0) {
        if (auto c = rational_sqrt(a)) return Gaussian(*c, Rational(0));
        if (auto d = rational_sqrt(-a)) return Gaussian(Rational(0), *d);
        return std::nullopt;
    }
    // w = c + d*i with w^2 = a + b*i forces c^2 = (a + sqrt(a^2+b^2))/2, d = b/(2c).
    auto q = rational_sqrt(a * a + b * b);
    if (!q) return std::nullopt;
    auto c = rational_sqrt((a + *q) / 2);
    if (!c || *c == 0) return std::nullopt;
    Rational d = b / (2 * (*c));
    Gaussian w(*c, d);
    if (w * w == g) return w;
    return std::nullopt;
}

}  // namespace stabcsa
