#include "bisetkit/qmatrix.hpp"

#include <algorithm>

#include "bisetkit/errors.hpp"

namespace bisetkit {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Rat(1);
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        m.set_row(i, rows[i]);
    return m;
}

QVec QMatrix::row(std::size_t r) const {
    return QVec(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

void QMatrix::set_row(std::size_t r, const QVec& v) {
    if (v.size() != cols_)
        throw DimensionMismatch("set_row size mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<long>(r * cols_));
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_)
        throw DimensionMismatch("matrix product shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rat& b = o.at(k, j);
                if (!b.is_zero())
                    r.at(i, j) += a * b;
            }
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] + o.data_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] - o.data_[i];
    return r;
}

QMatrix QMatrix::scaled(const Rat& c) const {
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] * c;
    return r;
}

QMatrix QMatrix::transposed() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

QVec QMatrix::apply(const QVec& v) const {
    if (v.size() != cols_)
        throw DimensionMismatch("matrix apply shape mismatch");
    QVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat s;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rat& a = at(i, j);
            if (!a.is_zero() && !v[j].is_zero())
                s += a * v[j];
        }
        r[i] = s;
    }
    return r;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

Rat QMatrix::trace() const {
    Rat s;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        s += at(i, i);
    return s;
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (rows_ != cols_)
        return std::nullopt;
    std::size_t n = rows_;
    QMatrix work(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            work.at(i, j) = at(i, j);
        work.at(i, n + i) = Rat(1);
    }
    std::vector<std::size_t> pivots;
    QMatrix red = rref(work, &pivots);
    for (std::size_t i = 0; i < n; ++i)
        if (i >= pivots.size() || pivots[i] != i)
            return std::nullopt;
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = red.at(i, n + j);
    return inv;
}

QVec Subspace::reduce(const QVec& v) const {
    if (v.size() != ambient_)
        throw DimensionMismatch("subspace reduce ambient mismatch");
    QVec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rat& c = r[pivots_[i]];
        if (c.is_zero())
            continue;
        Rat f = c;  // basis rows have pivot entry 1
        for (std::size_t j = pivots_[i]; j < ambient_; ++j)
            if (!basis_[i][j].is_zero())
                r[j] -= f * basis_[i][j];
    }
    return r;
}

bool Subspace::absorb(const QVec& v) {
    QVec r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && r[p].is_zero())
        ++p;
    if (p == ambient_)
        return false;
    Rat inv = Rat(1) / r[p];
    for (auto& x : r)
        x *= inv;
    // back-substitute into existing rows
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Rat c = basis_[i][p];
        if (c.is_zero())
            continue;
        for (std::size_t j = p; j < ambient_; ++j)
            if (!r[j].is_zero())
                basis_[i][j] -= c * r[j];
    }
    auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    basis_.insert(basis_.begin() + static_cast<long>(idx), std::move(r));
    return true;
}

bool Subspace::contains(const QVec& v) const {
    return is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b))
            return false;
    return true;
}

std::optional<QVec> Subspace::coordinates(const QVec& v) const {
    QVec coeff(basis_.size());
    QVec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Rat c = r[pivots_[i]];  // copy: the elimination below clears r[pivot]
        if (c.is_zero())
            continue;
        coeff[i] = c;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j)
            if (!basis_[i][j].is_zero())
                r[j] -= c * basis_[i][j];
    }
    if (!is_zero(r))
        return std::nullopt;
    return coeff;
}

QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots) {
    QMatrix a = m;
    std::size_t r = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t sel = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i)
            if (!a.at(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel == a.rows())
            continue;
        if (sel != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(sel, j), a.at(r, j));
        Rat inv = Rat(1) / a.at(r, c);
        for (std::size_t j = c; j < a.cols(); ++j)
            a.at(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r)
                continue;
            Rat f = a.at(i, c);
            if (f.is_zero())
                continue;
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a.at(r, j).is_zero())
                    a.at(i, j) -= f * a.at(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots)
        *pivots = piv;
    return a;
}

std::size_t rank(const QMatrix& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

std::vector<QVec> kernel(const QMatrix& m) {
    std::vector<std::size_t> piv;
    QMatrix red = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv)
        is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        QVec v(m.cols());
        v[c] = Rat(1);
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -red.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(const QMatrix& m, const QVec& b) {
    if (b.size() != m.rows())
        throw DimensionMismatch("solve: rhs size mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> piv;
    QMatrix red = rref(aug, &piv);
    for (auto p : piv)
        if (p == m.cols())
            return std::nullopt;  // inconsistent
    QVec x(m.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
        x[piv[i]] = red.at(i, m.cols());
    return x;
}

Subspace span_of(const std::vector<QVec>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    for (const auto& v : vectors)
        s.absorb(v);
    return s;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    Subspace s = a;
    for (const auto& v : b.basis())
        s.absorb(v);
    return s;
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    // Zassenhaus-style: kernel of [A; B] pairing. Solve x in span(A) with x in span(B):
    // write x = sum c_i a_i = sum d_j b_j; kernel of [A^T | -B^T].
    std::size_t n = a.ambient();
    if (b.ambient() != n)
        throw DimensionMismatch("intersection ambient mismatch");
    std::size_t ka = a.dim(), kb = b.dim();
    QMatrix m(n, ka + kb);
    for (std::size_t j = 0; j < ka; ++j)
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, j) = a.basis()[j][i];
    for (std::size_t j = 0; j < kb; ++j)
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, ka + j) = -b.basis()[j][i];
    Subspace s(n);
    for (const auto& k : kernel(m)) {
        QVec v(n);
        for (std::size_t j = 0; j < ka; ++j)
            if (!k[j].is_zero())
                for (std::size_t i = 0; i < n; ++i)
                    v[i] += k[j] * a.basis()[j][i];
        s.absorb(v);
    }
    return s;
}

Subspace spin(const std::vector<QVec>& seeds, const std::vector<QMatrix>& action, std::size_t ambient) {
    Subspace s(ambient);
    std::vector<QVec> frontier;
    for (const auto& v : seeds)
        if (s.absorb(v))
            frontier.push_back(v);
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const auto& v : frontier)
            for (const auto& m : action) {
                QVec w = m.apply(v);
                if (s.absorb(w))
                    next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return s;
}

QVec operator+(const QVec& a, const QVec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vector sum size mismatch");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

QVec operator-(const QVec& a, const QVec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vector difference size mismatch");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

QVec scaled(const QVec& v, const Rat& c) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i] * c;
    return r;
}

bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

}  // namespace bisetkit
