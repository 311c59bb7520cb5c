#pragma once

#include "gradiv/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace gradiv {

/// Dense matrix with exact cyclotomic entries.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n);
    static Mat zero(int n, int m) { return Mat(n, m); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Cyclotomic& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Cyclotomic& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator-() const;
    friend Mat operator*(const Cyclotomic& s, const Mat& m);
    friend Mat operator*(const Rational& s, const Mat& m);

    Mat transpose() const;
    Mat conj() const;
    Mat conj_transpose() const { return conj().transpose(); }
    Mat pow(long e) const;

    Cyclotomic trace() const;

    /// Kronecker product, this ⊗ o (this outer).
    Mat kron(const Mat& o) const;

    /// If the matrix equals c * other for a single cyclotomic scalar c, return c.
    std::optional<Cyclotomic> scalar_ratio(const Mat& other) const;
    /// If the matrix equals c * I, return c.
    std::optional<Cyclotomic> scalar_of_identity() const;

    /// Exact inverse; throws std::domain_error when singular.
    Mat inverse() const;

    /// Characteristic polynomial coefficients p[0..n], p[n] = 1
    /// (Faddeev–LeVerrier).
    std::vector<Cyclotomic> char_poly() const;

    Cyclotomic det() const;

private:
    int rows_, cols_;
    std::vector<Cyclotomic> a_;
};

/// Signature (#positive - #negative eigenvalues) of a hermitian matrix with
/// cyclotomic entries, computed exactly via Descartes' rule on the
/// characteristic polynomial. Throws when the matrix is singular.
int hermitian_signature(const Mat& h);

/// Row echelon solver over Q for systems whose unknowns are rational.
/// Columns are generators; each generator is a rational vector.
/// Supports repeated solves against the same basis.
class RationalSpan {
public:
    explicit RationalSpan(std::vector<std::vector<Rational>> columns);

    int dimension() const { return rank_; }
    size_t ambient() const { return nrows_; }

    /// Coordinates of v in the column span, if representable.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& v) const;

    /// Basis (as coordinate vectors in terms of the original columns) of the
    /// nullspace of the column map.
    std::vector<std::vector<Rational>> nullspace() const;

private:
    size_t nrows_;
    size_t ncols_;
    int rank_;
    std::vector<std::vector<Rational>> rref_;   // echelon rows over the ambient space
    std::vector<std::vector<Rational>> exprs_;  // each row as a combination of columns
    std::vector<int> pivot_col_;
    std::vector<std::vector<Rational>> null_exprs_;
    std::vector<std::vector<Rational>> cols_;
};

/// Flatten a matrix into a rational coordinate vector with respect to a fixed
/// conductor (each entry contributes phi(conductor) rational slots).
std::vector<Rational> mat_to_rational_vector(const Mat& m, int conductor);

}  // namespace gradiv
