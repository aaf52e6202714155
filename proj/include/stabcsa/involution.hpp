#pragma once

#include "stabcsa/matrix.hpp"

namespace stabcsa {

enum class GramKind { Symmetric, Skew };
enum class InvolutionKind { Orthogonal, Symplectic };

// Gram matrix of a nondegenerate bilinear form; symmetric or skew.
class GramMatrix {
public:
    GramMatrix(SqMatrix matrix, GramKind kind);

    const SqMatrix& matrix() const { return matrix_; }
    GramKind kind() const { return kind_; }
    std::size_t dim() const { return matrix_.dim(); }

    bool operator==(const GramMatrix& o) const {
        return kind_ == o.kind_ && matrix_ == o.matrix_;
    }

private:
    SqMatrix matrix_;
    GramKind kind_;
};

// The adjoint involution m -> G^{-1} m^t G of a Gram matrix G.
class InvolutionSpec {
public:
    explicit InvolutionSpec(GramMatrix gram);

    const GramMatrix& gram() const { return gram_; }
    SqMatrix apply(const SqMatrix& m) const;

private:
    GramMatrix gram_;
    SqMatrix gram_inverse_;
};

InvolutionKind classify_involution(const GramMatrix& gram);

// u^t G v.
TowerElement bilinear(const GramMatrix& gram, const std::vector<TowerElement>& u,
                      const std::vector<TowerElement>& v);

// Kind bookkeeping under tensor products: the product form is skew exactly
// when an odd number of factors is skew.
GramMatrix kron(const GramMatrix& a, const GramMatrix& b);

// Split images of the quaternion generators of (x_l, y_l):
// i_l = diag(sqrt(x_l), -sqrt(x_l)), j_l = [[0,1],[y_l,0]].
struct QuaternionGenerators {
    std::uint32_t index;
    SqMatrix Mi;
    SqMatrix Mj;
};

QuaternionGenerators quaternion_split(std::uint32_t l);

// Adjoint Gram matrices of the three reference involutions on a split
// quaternion algebra, and the identity form on the matrix factor.
GramMatrix gram_sigma_inv();             // [[0,-1],[1,0]], skew
GramMatrix gram_t_inv(std::uint32_t l);  // diag(-1/sqrt(x_l), -1/(y_l sqrt(x_l)))
GramMatrix gram_delta();                 // [[0,1],[1,0]], symmetric
GramMatrix gram_identity(std::size_t n);

}  // namespace stabcsa
