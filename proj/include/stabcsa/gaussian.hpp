#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace stabcsa {

using Rational = mpq_class;

// mpq_class(n, d) does not canonicalize; this does.
Rational make_rational(long num, long den = 1);

// Element a + b*i of Q(i).  All arithmetic is exact; fractions are kept in
// canonical reduced form by GMP.
class Gaussian {
public:
    Gaussian() : re_(0), im_(0) {}
    Gaussian(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    Gaussian(Rational re, Rational im = Rational(0))
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    Gaussian operator-() const { return Gaussian(-re_, -im_); }
    Gaussian operator+(const Gaussian& o) const { return Gaussian(re_ + o.re_, im_ + o.im_); }
    Gaussian operator-(const Gaussian& o) const { return Gaussian(re_ - o.re_, im_ - o.im_); }
    Gaussian operator*(const Gaussian& o) const {
        return Gaussian(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Gaussian operator/(const Gaussian& o) const;

    Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
    Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
    Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }

    bool operator==(const Gaussian& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Gaussian& o) const { return !(*this == o); }

    Gaussian conj() const { return Gaussian(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Gaussian inverse() const;

    // Deterministic ordering for canonical printing and map keys.
    bool operator<(const Gaussian& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

    std::string str() const;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Gaussian& g);

// Square root within Q, if one exists.
std::optional<Rational> rational_sqrt(const Rational& r);

// Square root within Q(i), if one exists.  Used to decide square classes of
// unit ratios when normalizing diagonal-form coefficients.
std::optional<Gaussian> gaussian_sqrt(const Gaussian& g);

inline bool is_square(const Gaussian& g) { return gaussian_sqrt(g).has_value(); }

}  // namespace stabcsa
