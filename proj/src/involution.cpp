#include "stabcsa/involution.hpp"

#include "stabcsa/errors.hpp"

namespace stabcsa {

GramMatrix::GramMatrix(SqMatrix matrix, GramKind kind)
    : matrix_(std::move(matrix)), kind_(kind) {
    SqMatrix t = matrix_.transpose();
    if (kind_ == GramKind::Symmetric) {
        if (t != matrix_) throw InputError("symmetric Gram matrix is not symmetric");
    } else {
        if (t != -matrix_) throw InputError("skew Gram matrix is not skew");
    }
}

InvolutionSpec::InvolutionSpec(GramMatrix gram)
    : gram_(std::move(gram)), gram_inverse_(gram_.matrix().inverse()) {}

SqMatrix InvolutionSpec::apply(const SqMatrix& m) const {
    if (m.dim() != gram_.dim())
        throw DimensionMismatch("involution applied to a matrix of the wrong dimension");
    return gram_inverse_ * m.transpose() * gram_.matrix();
}

InvolutionKind classify_involution(const GramMatrix& gram) {
    return gram.kind() == GramKind::Symmetric ? InvolutionKind::Orthogonal
                                              : InvolutionKind::Symplectic;
}

TowerElement bilinear(const GramMatrix& gram, const std::vector<TowerElement>& u,
                      const std::vector<TowerElement>& v) {
    const std::size_t n = gram.dim();
    if (u.size() != n || v.size() != n)
        throw DimensionMismatch("bilinear form applied to vectors of the wrong length");
    TowerElement acc;
    for (std::size_t r = 0; r < n; ++r) {
        if (u[r].is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c) {
            const TowerElement& g = gram.matrix().at(r, c);
            if (g.is_zero() || v[c].is_zero()) continue;
            acc += u[r] * g * v[c];
        }
    }
    return acc;
}

GramMatrix kron(const GramMatrix& a, const GramMatrix& b) {
    GramKind kind = a.kind() == b.kind() ? GramKind::Symmetric : GramKind::Skew;
    return GramMatrix(kron(a.matrix(), b.matrix()), kind);
}

QuaternionGenerators quaternion_split(std::uint32_t l) {
    TowerElement s = TowerElement::sqrt_x(l);
    SqMatrix mi = SqMatrix::diag({s, -s});
    SqMatrix mj(2);
    mj.at(0, 1) = TowerElement(1);
    mj.at(1, 0) = TowerElement::variable(var_y(l));
    return QuaternionGenerators{l, mi, mj};
}

GramMatrix gram_sigma_inv() {
    SqMatrix m(2);
    m.at(0, 1) = TowerElement(-1);
    m.at(1, 0) = TowerElement(1);
    return GramMatrix(m, GramKind::Skew);
}

GramMatrix gram_t_inv(std::uint32_t l) {
    TowerElement s = TowerElement::sqrt_x(l);
    TowerElement y = TowerElement::variable(var_y(l));
    SqMatrix m = SqMatrix::diag({-(TowerElement(1) / s), -(TowerElement(1) / (y * s))});
    return GramMatrix(m, GramKind::Symmetric);
}

GramMatrix gram_delta() {
    SqMatrix m(2);
    m.at(0, 1) = TowerElement(1);
    m.at(1, 0) = TowerElement(1);
    return GramMatrix(m, GramKind::Symmetric);
}

GramMatrix gram_identity(std::size_t n) {
    return GramMatrix(SqMatrix::identity(n), GramKind::Symmetric);
}

}  // namespace stabcsa
