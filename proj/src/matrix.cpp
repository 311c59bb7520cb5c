#include "gradiv/matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace gradiv {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one();
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != o.a_[k]) return false;
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat+: shape mismatch");
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat-: shape mismatch");
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat*: shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Cyclotomic& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    }
    return r;
}

Mat operator*(const Cyclotomic& s, const Mat& m) {
    Mat r = m;
    for (auto& x : r.a_) x *= s;
    return r;
}

Mat operator*(const Rational& s, const Mat& m) {
    Mat r = m;
    for (auto& x : r.a_) x = s * x;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::conj() const {
    Mat r = *this;
    for (auto& x : r.a_) x = x.conj();
    return r;
}

Mat Mat::pow(long e) const {
    if (rows_ != cols_) throw std::invalid_argument("Mat::pow: square required");
    if (e < 0) return inverse().pow(-e);
    Mat acc = Mat::identity(rows_);
    Mat base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Cyclotomic Mat::trace() const {
    Cyclotomic t;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

Mat Mat::kron(const Mat& o) const {
    Mat r(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (int p = 0; p < o.rows_; ++p)
                for (int q = 0; q < o.cols_; ++q) {
                    if (o.at(p, q).is_zero()) continue;
                    r.at(i * o.rows_ + p, j * o.cols_ + q) = at(i, j) * o.at(p, q);
                }
        }
    return r;
}

std::optional<Cyclotomic> Mat::scalar_ratio(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return std::nullopt;
    // find first nonzero entry of other
    for (size_t k = 0; k < a_.size(); ++k) {
        if (other.a_[k].is_zero()) continue;
        Cyclotomic c = a_[k] * other.a_[k].inverse();
        Mat test = c * other;
        if (test == *this) return c;
        return std::nullopt;
    }
    return is_zero() ? std::optional<Cyclotomic>(Cyclotomic::zero()) : std::nullopt;
}

std::optional<Cyclotomic> Mat::scalar_of_identity() const {
    if (rows_ != cols_) return std::nullopt;
    return scalar_ratio(Mat::identity(rows_));
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: square required");
    int n = rows_;
    Mat aug = *this;
    Mat inv = Mat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!aug.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(aug.at(piv, j), aug.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Cyclotomic d = aug.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            aug.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || aug.at(r, col).is_zero()) continue;
            Cyclotomic f = aug.at(r, col);
            for (int j = 0; j < n; ++j) {
                aug.at(r, j) -= f * aug.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<Cyclotomic> Mat::char_poly() const {
    if (rows_ != cols_) throw std::invalid_argument("char_poly: square required");
    const int n = rows_;
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_{k+1} = A (M_k + c_{n-k} I), c_{n-k-1} = -tr(M_{k+1}) / (k+1)
    std::vector<Cyclotomic> c(n + 1);
    c[n] = Cyclotomic::one();
    Mat m = *this;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            Mat shifted = m;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
            m = (*this) * shifted;
        }
        Cyclotomic t = m.trace();
        c[n - k] = Rational(-1, k) * t;
    }
    return c;
}

Cyclotomic Mat::det() const {
    auto cp = char_poly();
    Cyclotomic d = cp[0];
    if (rows_ % 2 == 1) d = -d;
    return d;
}

int hermitian_signature(const Mat& h) {
    if (h != h.conj_transpose()) throw std::invalid_argument("hermitian_signature: not hermitian");
    auto cp = h.char_poly();
    const int n = h.rows();
    if (cp[0].is_zero()) throw std::domain_error("hermitian_signature: singular matrix");
    // All roots are real and nonzero. Descartes is exact for real-rooted
    // polynomials: #positive roots = sign changes of p(x).
    std::vector<int> signs;
    for (int k = 0; k <= n; ++k) {
        if (cp[k].is_zero()) continue;
        signs.push_back(cp[k].real_sign());
    }
    int pos = 0;
    for (size_t k = 1; k < signs.size(); ++k)
        if (signs[k] != signs[k - 1]) ++pos;
    return pos - (n - pos);
}

std::vector<Rational> mat_to_rational_vector(const Mat& m, int conductor) {
    const size_t deg = static_cast<size_t>(euler_phi(conductor));
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(m.rows()) * m.cols() * deg);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Cyclotomic z = m.at(i, j).lifted(conductor);
            const auto& c = z.coeffs();
            for (size_t k = 0; k < deg; ++k) out.push_back(k < c.size() ? c[k] : Rational(0));
        }
    return out;
}

RationalSpan::RationalSpan(std::vector<std::vector<Rational>> columns) : cols_(std::move(columns)) {
    ncols_ = cols_.size();
    nrows_ = ncols_ ? cols_[0].size() : 0;
    // Gaussian elimination on the transpose-augmented system: we store, for
    // each pivot row of the echelon form, the row itself together with the
    // expression of that row as a combination of the original columns.
    // Work with the matrix whose COLUMNS are the generators: eliminate rows.
    // rref_ rows: [row values (nrows_) | coefficients? ] -- instead reduce the
    // transposed matrix and keep track to answer solve() by forward reduction.
    // Simpler scheme: build echelon basis of the column space with expression
    // vectors.
    struct EchRow {
        std::vector<Rational> v;      // vector in ambient space
        std::vector<Rational> expr;   // coordinates in terms of original columns
        int pivot;
    };
    std::vector<EchRow> ech;
    for (size_t c = 0; c < ncols_; ++c) {
        std::vector<Rational> v = cols_[c];
        std::vector<Rational> expr(ncols_, Rational(0));
        expr[c] = 1;
        for (const auto& e : ech) {
            if (v[static_cast<size_t>(e.pivot)] == 0) continue;
            Rational f = v[static_cast<size_t>(e.pivot)];
            for (size_t j = 0; j < nrows_; ++j) v[j] -= f * e.v[j];
            for (size_t j = 0; j < ncols_; ++j) expr[j] -= f * e.expr[j];
        }
        int piv = -1;
        for (size_t j = 0; j < nrows_; ++j)
            if (v[j] != 0) {
                piv = static_cast<int>(j);
                break;
            }
        if (piv < 0) {
            // dependent column: expr is a nullspace vector (v reduced to 0)
            null_exprs_.push_back(std::move(expr));
            continue;
        }
        Rational inv = Rational(1) / v[static_cast<size_t>(piv)];
        for (auto& x : v) x *= inv;
        for (auto& x : expr) x *= inv;
        ech.push_back({std::move(v), std::move(expr), piv});
    }
    rank_ = static_cast<int>(ech.size());
    for (auto& e : ech) {
        rref_.push_back(std::move(e.v));
        pivot_col_.push_back(e.pivot);
        exprs_.push_back(std::move(e.expr));
    }
}

std::optional<std::vector<Rational>> RationalSpan::solve(const std::vector<Rational>& v) const {
    if (v.size() != nrows_) throw std::invalid_argument("RationalSpan::solve: size mismatch");
    std::vector<Rational> w = v;
    std::vector<Rational> coeff(ncols_, Rational(0));
    for (size_t r = 0; r < rref_.size(); ++r) {
        Rational f = w[static_cast<size_t>(pivot_col_[r])];
        if (f == 0) continue;
        for (size_t j = 0; j < nrows_; ++j) w[j] -= f * rref_[r][j];
        for (size_t j = 0; j < ncols_; ++j) coeff[j] += f * exprs_[r][j];
    }
    for (const auto& x : w)
        if (x != 0) return std::nullopt;
    return coeff;
}

std::vector<std::vector<Rational>> RationalSpan::nullspace() const { return null_exprs_; }

}  // namespace gradiv
