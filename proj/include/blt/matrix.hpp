#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "blt/fp.hpp"

namespace blt {

/// Column vector over F_p with canonical entries.
class FpVector {
public:
    FpVector(PrimeField F, std::size_t dim) : F_(F), e_(dim, 0) {}

    FpVector(PrimeField F, std::initializer_list<long long> xs) : F_(F) {
        e_.reserve(xs.size());
        for (long long x : xs) e_.push_back(F.from_int(x));
    }

    static FpVector basis(PrimeField F, std::size_t dim, std::size_t i) {
        FpVector v(F, dim);
        v.e_[i] = 1;
        return v;
    }

    std::size_t dim() const noexcept { return e_.size(); }
    PrimeField field() const noexcept { return F_; }

    Res operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, Res v) { e_[i] = v % F_.p(); }

    const std::vector<Res>& entries() const noexcept { return e_; }

    bool operator==(const FpVector& o) const noexcept {
        return F_ == o.F_ && e_ == o.e_;
    }
    bool operator!=(const FpVector& o) const noexcept { return !(*this == o); }

    bool is_zero() const noexcept {
        for (Res x : e_)
            if (x != 0) return false;
        return true;
    }

    FpVector operator+(const FpVector& o) const {
        if (F_ != o.F_ || dim() != o.dim()) throw dim_mismatch("vector addition");
        FpVector r(F_, dim());
        for (std::size_t i = 0; i < dim(); ++i) r.e_[i] = F_.add(e_[i], o.e_[i]);
        return r;
    }

    FpVector operator-() const {
        FpVector r(F_, dim());
        for (std::size_t i = 0; i < dim(); ++i) r.e_[i] = F_.neg(e_[i]);
        return r;
    }

private:
    PrimeField F_;
    std::vector<Res> e_;
};

/// Dense row-major matrix over F_p with canonical entries.
class FpMatrix {
public:
    FpMatrix(PrimeField F, std::size_t rows, std::size_t cols)
        : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    FpMatrix(PrimeField F, std::initializer_list<std::initializer_list<long long>> rows)
        : F_(F), rows_(rows.size()), cols_(0) {
        for (const auto& r : rows) cols_ = r.size() > cols_ ? r.size() : cols_;
        a_.assign(rows_ * cols_, 0);
        std::size_t i = 0;
        for (const auto& r : rows) {
            std::size_t j = 0;
            for (long long x : r) a_[i * cols_ + j++] = F.from_int(x);
            ++i;
        }
    }

    static FpMatrix identity(PrimeField F, std::size_t n) {
        FpMatrix m(F, n, n);
        for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    PrimeField field() const noexcept { return F_; }

    Res operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Res v) { a_[i * cols_ + j] = v % F_.p(); }
    void set_signed(std::size_t i, std::size_t j, long long v) {
        a_[i * cols_ + j] = F_.from_int(v);
    }

    const std::vector<Res>& entries() const noexcept { return a_; }

    bool operator==(const FpMatrix& o) const noexcept {
        return F_ == o.F_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const FpMatrix& o) const noexcept { return !(*this == o); }

    bool is_zero() const noexcept {
        for (Res x : a_)
            if (x != 0) return false;
        return true;
    }

    FpMatrix transposed() const {
        FpMatrix r(F_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.a_[j * rows_ + i] = a_[i * cols_ + j];
        return r;
    }

    FpMatrix operator+(const FpMatrix& o) const {
        if (F_ != o.F_ || rows_ != o.rows_ || cols_ != o.cols_)
            throw shape_mismatch("matrix addition");
        FpMatrix r(F_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = F_.add(a_[k], o.a_[k]);
        return r;
    }

    FpMatrix operator-() const {
        FpMatrix r(F_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = F_.neg(a_[k]);
        return r;
    }

private:
    PrimeField F_;
    std::size_t rows_, cols_;
    std::vector<Res> a_;
};

inline FpMatrix mul(const FpMatrix& A, const FpMatrix& B) {
    if (A.field() != B.field() || A.cols() != B.rows()) throw shape_mismatch("matrix product");
    const PrimeField F = A.field();
    FpMatrix C(F, A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const Res aik = A(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                C.set(i, j, F.add(C(i, j), F.mul(aik, B(k, j))));
        }
    return C;
}

inline FpVector mul(const FpMatrix& A, const FpVector& x) {
    if (A.field() != x.field() || A.cols() != x.dim()) throw shape_mismatch("matrix-vector product");
    const PrimeField F = A.field();
    FpVector y(F, A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Res s = 0;
        for (std::size_t j = 0; j < A.cols(); ++j) s = F.add(s, F.mul(A(i, j), x[j]));
        y.set(i, s);
    }
    return y;
}

namespace detail {

inline Res det2(const PrimeField& F, Res a, Res b, Res c, Res d) {
    return F.sub(F.mul(a, d), F.mul(b, c));
}

inline Res det3(const PrimeField& F, const FpMatrix& M) {
    Res s = 0;
    s = F.add(s, F.mul(M(0, 0), det2(F, M(1, 1), M(1, 2), M(2, 1), M(2, 2))));
    s = F.sub(s, F.mul(M(0, 1), det2(F, M(1, 0), M(1, 2), M(2, 0), M(2, 2))));
    s = F.add(s, F.mul(M(0, 2), det2(F, M(1, 0), M(1, 1), M(2, 0), M(2, 1))));
    return s;
}

inline Res det3_entries(const PrimeField& F, Res m00, Res m01, Res m02, Res m10, Res m11,
                        Res m12, Res m20, Res m21, Res m22) {
    Res s = 0;
    s = F.add(s, F.mul(m00, det2(F, m11, m12, m21, m22)));
    s = F.sub(s, F.mul(m01, det2(F, m10, m12, m20, m22)));
    s = F.add(s, F.mul(m02, det2(F, m10, m11, m20, m21)));
    return s;
}

inline Res det4(const PrimeField& F, const FpMatrix& M) {
    Res s = 0;
    s = F.add(s, F.mul(M(0, 0), det3_entries(F, M(1, 1), M(1, 2), M(1, 3), M(2, 1), M(2, 2),
                                             M(2, 3), M(3, 1), M(3, 2), M(3, 3))));
    s = F.sub(s, F.mul(M(0, 1), det3_entries(F, M(1, 0), M(1, 2), M(1, 3), M(2, 0), M(2, 2),
                                             M(2, 3), M(3, 0), M(3, 2), M(3, 3))));
    s = F.add(s, F.mul(M(0, 2), det3_entries(F, M(1, 0), M(1, 1), M(1, 3), M(2, 0), M(2, 1),
                                             M(2, 3), M(3, 0), M(3, 1), M(3, 3))));
    s = F.sub(s, F.mul(M(0, 3), det3_entries(F, M(1, 0), M(1, 1), M(1, 2), M(2, 0), M(2, 1),
                                             M(2, 2), M(3, 0), M(3, 1), M(3, 2))));
    return s;
}

/// Determinant by fraction-free-ish Gaussian elimination with division.
inline Res det_eliminate(const PrimeField& F, FpMatrix M) {
    const std::size_t n = M.rows();
    Res det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                Res t = M(col, j);
                M.set(col, j, M(piv, j));
                M.set(piv, j, t);
            }
            det = F.neg(det);
        }
        const Res pivval = M(col, col);
        det = F.mul(det, pivval);
        const Res pivinv = F.inv(pivval);
        for (std::size_t i = col + 1; i < n; ++i) {
            const Res factor = F.mul(M(i, col), pivinv);
            if (factor == 0) continue;
            for (std::size_t j = col; j < n; ++j)
                M.set(i, j, F.sub(M(i, j), F.mul(factor, M(col, j))));
        }
    }
    return det;
}

} // namespace detail

/// Exact determinant over F_p. Hardcoded cofactor expansion up to 4x4
/// (the proof machinery evaluates millions of 4x4 determinants), Gaussian
/// elimination beyond.
inline Res det(const FpMatrix& M) {
    if (M.rows() != M.cols()) throw non_square();
    const PrimeField F = M.field();
    switch (M.rows()) {
        case 0: return 1;
        case 1: return M(0, 0);
        case 2: return detail::det2(F, M(0, 0), M(0, 1), M(1, 0), M(1, 1));
        case 3: return detail::det3(F, M);
        case 4: return detail::det4(F, M);
        default: return detail::det_eliminate(F, M);
    }
}

/// Row rank over F_p by Gaussian elimination.
inline std::size_t rank(const FpMatrix& Min) {
    const PrimeField F = Min.field();
    FpMatrix M = Min;
    const std::size_t rows = M.rows(), cols = M.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && M(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) {
                Res t = M(r, j);
                M.set(r, j, M(piv, j));
                M.set(piv, j, t);
            }
        const Res pivinv = F.inv(M(r, col));
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Res factor = F.mul(M(i, col), pivinv);
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                M.set(i, j, F.sub(M(i, j), F.mul(factor, M(r, j))));
        }
        ++r;
    }
    return r;
}

/// det of the 2x2 submatrix with rows {i,j} and columns {k,l}:
/// M(i,k)M(j,l) - M(i,l)M(j,k).
inline Res minor2(const FpMatrix& M, std::size_t i, std::size_t j, std::size_t k,
                  std::size_t l) {
    if (i >= M.rows() || j >= M.rows() || k >= M.cols() || l >= M.cols() || i == j || k == l)
        throw index_out_of_range("minor2 needs two distinct rows and two distinct columns in range");
    const PrimeField F = M.field();
    return F.sub(F.mul(M(i, k), M(j, l)), F.mul(M(i, l), M(j, k)));
}

/// Inverse by Gauss-Jordan; nullopt when singular.
inline std::optional<FpMatrix> inverse(const FpMatrix& Min) {
    if (Min.rows() != Min.cols()) throw non_square();
    const PrimeField F = Min.field();
    const std::size_t n = Min.rows();
    FpMatrix M = Min;
    FpMatrix I = FpMatrix::identity(F, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                Res t = M(col, j); M.set(col, j, M(piv, j)); M.set(piv, j, t);
                t = I(col, j); I.set(col, j, I(piv, j)); I.set(piv, j, t);
            }
        const Res pivinv = F.inv(M(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            M.set(col, j, F.mul(M(col, j), pivinv));
            I.set(col, j, F.mul(I(col, j), pivinv));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            const Res factor = M(i, col);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                M.set(i, j, F.sub(M(i, j), F.mul(factor, M(col, j))));
                I.set(i, j, F.sub(I(i, j), F.mul(factor, I(col, j))));
            }
        }
    }
    return I;
}

} // namespace blt
