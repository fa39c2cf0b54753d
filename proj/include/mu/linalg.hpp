#pragma once
// Dense exact linear algebra over Q.

#include <vector>

#include "mu/poly.hpp"

namespace mu {

using QVec = std::vector<Rational>;

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int r, int c) : r_(r), c_(c), a_(size_t(r) * c) {}
    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<QVec>& rows, int cols = -1);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rational& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const Rational& s) const;
    QVec operator*(const QVec& v) const;
    QMatrix transpose() const;
    bool operator==(const QMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool is_zero() const;
    QVec row(int i) const;
    QVec col(int j) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(QMatrix& m);
int rank(QMatrix m);
// basis of {x : m x = 0}
std::vector<QVec> nullspace(const QMatrix& m);
// basis of the row space in echelon form
std::vector<QVec> row_basis(const std::vector<QVec>& rows, int cols);
bool in_span(const std::vector<QVec>& basis, const QVec& v);
bool same_span(const std::vector<QVec>& a, const std::vector<QVec>& b, int cols);
// a = s*b for a unique scalar s (both nonzero)
bool proportional(const QVec& a, const QVec& b, Rational* s = nullptr);
bool is_zero(const QVec& v);

}  // namespace mu
