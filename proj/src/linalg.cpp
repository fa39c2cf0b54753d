#include "mu/linalg.hpp"

namespace mu {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows, int cols) {
    int c = cols >= 0 ? cols : (rows.empty() ? 0 : int(rows[0].size()));
    QMatrix m(int(rows.size()), c);
    for (int i = 0; i < m.r_; ++i) {
        if (int(rows[i].size()) != c) throw MuError("ragged rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (c_ != o.r_) throw MuError("shape mismatch in product");
    QMatrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.c_; ++j)
                if (o(k, j) != 0) m(i, j) += x * o(k, j);
        }
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw MuError("shape mismatch");
    QMatrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const { return *this + o * Rational(-1); }

QMatrix QMatrix::operator*(const Rational& s) const {
    QMatrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
}

QVec QMatrix::operator*(const QVec& v) const {
    if (int(v.size()) != c_) throw MuError("shape mismatch in mat-vec");
    QVec out(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (v[j] != 0 && (*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool QMatrix::is_zero() const {
    for (auto& x : a_)
        if (x != 0) return false;
    return true;
}

QVec QMatrix::row(int i) const { return QVec(a_.begin() + size_t(i) * c_, a_.begin() + size_t(i + 1) * c_); }

QVec QMatrix::col(int j) const {
    QVec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<int> rref(QMatrix& m) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

int rank(QMatrix m) { return int(rref(m).size()); }

std::vector<QVec> nullspace(const QMatrix& m0) {
    QMatrix m = m0;
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (int c : piv) is_piv[c] = true;
    std::vector<QVec> out;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        QVec v(m.cols());
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(int(i), f);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<QVec> row_basis(const std::vector<QVec>& rows, int cols) {
    QMatrix m = QMatrix::from_rows(rows, cols);
    auto piv = rref(m);
    std::vector<QVec> out;
    for (size_t i = 0; i < piv.size(); ++i) out.push_back(m.row(int(i)));
    return out;
}

bool in_span(const std::vector<QVec>& basis, const QVec& v) {
    int c = int(v.size());
    int r0 = rank(QMatrix::from_rows(basis, c));
    auto b = basis;
    b.push_back(v);
    return rank(QMatrix::from_rows(b, c)) == r0;
}

bool same_span(const std::vector<QVec>& a, const std::vector<QVec>& b, int cols) {
    return row_basis(a, cols) == row_basis(b, cols);
}

bool proportional(const QVec& a, const QVec& b, Rational* s) {
    if (a.size() != b.size()) return false;
    Rational k = 0;
    bool have = false;
    for (size_t i = 0; i < a.size(); ++i) {
        if ((a[i] == 0) != (b[i] == 0)) return false;
        if (a[i] == 0) continue;
        Rational q = a[i] / b[i];
        if (have && q != k) return false;
        k = q;
        have = true;
    }
    if (!have) return false;
    if (s) *s = k;
    return true;
}

bool is_zero(const QVec& v) {
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace mu
