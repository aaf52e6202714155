#include "stabcsa/matrix.hpp"

#include <sstream>

#include "stabcsa/errors.hpp"

namespace stabcsa {

SqMatrix SqMatrix::identity(std::size_t dim) {
    SqMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = TowerElement(1);
    return m;
}

SqMatrix SqMatrix::diag(const std::vector<TowerElement>& d) {
    SqMatrix m(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m.at(k, k) = d[k];
    return m;
}

SqMatrix SqMatrix::from_rows(const std::vector<std::vector<TowerElement>>& rows) {
    SqMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) throw DimensionMismatch("matrix rows are not square");
        for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

SqMatrix SqMatrix::operator-() const {
    SqMatrix out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
}

SqMatrix SqMatrix::operator+(const SqMatrix& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("matrix addition dimension mismatch");
    SqMatrix out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] + o.entries_[k];
    return out;
}

SqMatrix SqMatrix::operator-(const SqMatrix& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("matrix subtraction dimension mismatch");
    SqMatrix out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] - o.entries_[k];
    return out;
}

SqMatrix SqMatrix::operator*(const SqMatrix& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("matrix product dimension mismatch");
    SqMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const TowerElement& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < dim_; ++c) {
                const TowerElement& b = o.at(k, c);
                if (b.is_zero()) continue;
                out.at(r, c) += a * b;
            }
        }
    }
    return out;
}

SqMatrix SqMatrix::scaled(const TowerElement& c) const {
    SqMatrix out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * c;
    return out;
}

std::vector<TowerElement> SqMatrix::apply(const std::vector<TowerElement>& v) const {
    if (v.size() != dim_) throw DimensionMismatch("matrix-vector dimension mismatch");
    std::vector<TowerElement> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) {
            if (at(r, c).is_zero() || v[c].is_zero()) continue;
            out[r] += at(r, c) * v[c];
        }
    return out;
}

SqMatrix SqMatrix::transpose() const {
    SqMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out.at(c, r) = at(r, c);
    return out;
}

bool SqMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool SqMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            if (r != c && !at(r, c).is_zero()) return false;
    return true;
}

SqMatrix SqMatrix::inverse() const {
    SqMatrix a = *this;
    SqMatrix inv = identity(dim_);
    for (std::size_t col = 0; col < dim_; ++col) {
        std::size_t pivot = col;
        while (pivot < dim_ && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == dim_) throw NonInvertible("singular matrix");
        if (pivot != col) {
            for (std::size_t c = 0; c < dim_; ++c) {
                std::swap(a.at(pivot, c), a.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        TowerElement scale = a.at(col, col).inverse();
        for (std::size_t c = 0; c < dim_; ++c) {
            a.at(col, c) = a.at(col, c) * scale;
            inv.at(col, c) = inv.at(col, c) * scale;
        }
        for (std::size_t r = 0; r < dim_; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            TowerElement f = a.at(r, col);
            for (std::size_t c = 0; c < dim_; ++c) {
                a.at(r, c) = a.at(r, c) - f * a.at(col, c);
                inv.at(r, c) = inv.at(r, c) - f * inv.at(col, c);
            }
        }
    }
    return inv;
}

std::string SqMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < dim_; ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < dim_; ++c) {
            if (c) os << ", ";
            os << at(r, c).str();
        }
    }
    os << "]";
    return os.str();
}

SqMatrix kron(const SqMatrix& a, const SqMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    SqMatrix out(da * db);
    for (std::size_t ra = 0; ra < da; ++ra)
        for (std::size_t ca = 0; ca < da; ++ca) {
            if (a.at(ra, ca).is_zero()) continue;
            for (std::size_t rb = 0; rb < db; ++rb)
                for (std::size_t cb = 0; cb < db; ++cb) {
                    if (b.at(rb, cb).is_zero()) continue;
                    out.at(ra * db + rb, ca * db + cb) = a.at(ra, ca) * b.at(rb, cb);
                }
        }
    return out;
}

}  // namespace stabcsa
