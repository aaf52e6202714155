#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stabcsa/tower.hpp"

namespace stabcsa {

// Square matrix over the tower field K.
class SqMatrix {
public:
    SqMatrix() = default;
    explicit SqMatrix(std::size_t dim)
        : dim_(dim), entries_(dim * dim, TowerElement()) {}

    static SqMatrix identity(std::size_t dim);
    static SqMatrix diag(const std::vector<TowerElement>& d);
    // Row-major construction from integer literals, for small fixtures.
    static SqMatrix from_rows(const std::vector<std::vector<TowerElement>>& rows);

    std::size_t dim() const { return dim_; }

    TowerElement& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const TowerElement& at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

    SqMatrix operator-() const;
    SqMatrix operator+(const SqMatrix& o) const;
    SqMatrix operator-(const SqMatrix& o) const;
    SqMatrix operator*(const SqMatrix& o) const;
    SqMatrix scaled(const TowerElement& c) const;

    std::vector<TowerElement> apply(const std::vector<TowerElement>& v) const;

    bool operator==(const SqMatrix& o) const { return dim_ == o.dim_ && entries_ == o.entries_; }
    bool operator!=(const SqMatrix& o) const { return !(*this == o); }

    SqMatrix transpose() const;
    bool is_zero() const;
    bool is_diagonal() const;

    // Exact inverse by Gaussian elimination; throws NonInvertible if singular.
    SqMatrix inverse() const;

    std::string str() const;

private:
    std::size_t dim_ = 0;
    std::vector<TowerElement> entries_;
};

// Kronecker product; satisfies kron(a,b)*kron(c,d) = kron(a*c, b*d).
SqMatrix kron(const SqMatrix& a, const SqMatrix& b);

}  // namespace stabcsa
