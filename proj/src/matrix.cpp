#include "entlab/matrix.hpp"

#include "entlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

namespace entlab {

namespace {

    bool finite(const Complex &z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

    void require_finite(std::span<const Complex> data) {
        if(!std::all_of(data.begin(), data.end(), finite))
            throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
    }

    void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b) {
        if(a.rows() != b.rows() || a.cols() != b.cols())
            throw Error(ErrorKind::DimensionMismatch,
                        std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                            "x" + std::to_string(b.cols()));
    }

    double off_diagonal_norm(const ComplexMatrix &m) noexcept {
        double acc = 0.0;
        for(std::size_t i = 0; i < m.rows(); ++i)
            for(std::size_t j = 0; j < m.cols(); ++j)
                if(i != j) acc += std::norm(m(i, j));
        return std::sqrt(acc);
    }

    // Jacobi rotation J = [[c, s e], [-s conj(e), c]] on the (p, q) plane, e = a_pq / |a_pq|.
    // a <- J^dagger a J and, when present, v <- v J.
    void rotate(ComplexMatrix &a, ComplexMatrix *v, std::size_t p, std::size_t q) {
        const Complex apq = a(p, q);
        const double  mag = std::abs(apq);
        if(mag == 0.0) return;
        const Complex e     = apq / mag;
        const double  theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        double        t;
        if(std::abs(theta) > 1e150)
            t = 0.5 / theta;
        else
            t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double  c   = 1.0 / std::sqrt(1.0 + t * t);
        const double  s   = t * c;
        const Complex se  = s * e;
        const Complex sec = s * std::conj(e);
        const double  app = a(p, p).real();
        const double  aqq = a(q, q).real();

        const std::size_t n = a.rows();
        for(std::size_t k = 0; k < n; ++k) {
            const Complex hp = a(k, p);
            const Complex hq = a(k, q);
            a(k, p)          = c * hp - sec * hq;
            a(k, q)          = se * hp + c * hq;
        }
        for(std::size_t k = 0; k < n; ++k) {
            const Complex xp = a(p, k);
            const Complex xq = a(q, k);
            a(p, k)          = c * xp - se * xq;
            a(q, k)          = sec * xp + c * xq;
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        if(v != nullptr) {
            for(std::size_t k = 0; k < n; ++k) {
                const Complex hp = (*v)(k, p);
                const Complex hq = (*v)(k, q);
                (*v)(k, p)       = c * hp - sec * hq;
                (*v)(k, q)       = se * hp + c * hq;
            }
        }
    }

    std::vector<double> jacobi(ComplexMatrix a, ComplexMatrix *v) {
        const std::size_t n         = a.rows();
        const double      threshold = kJacobiOffDiagRelTol * a.frobenius_norm();
        int               sweep     = 0;
        while(off_diagonal_norm(a) > threshold) {
            if(sweep++ >= kJacobiMaxSweeps)
                throw Error(ErrorKind::NoConvergence, "Jacobi iteration exceeded " +
                                                          std::to_string(kJacobiMaxSweeps) + " sweeps");
            for(std::size_t p = 0; p + 1 < n; ++p)
                for(std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        }
        std::vector<double> values(n);
        for(std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
        return values;
    }

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if(data_.size() != rows_ * cols_)
        throw Error(ErrorKind::DimensionMismatch, "entries length " + std::to_string(data_.size()) + " != " +
                                                      std::to_string(rows_) + "x" + std::to_string(cols_));
    require_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for(const auto &row : rows) {
        if(row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged initializer list");
        data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for(std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for(std::size_t i = 0; i < values.size(); ++i) {
        if(!std::isfinite(values[i])) throw Error(ErrorKind::NonFinite, "diagonal entry must be finite");
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
    ComplexMatrix m(u.size(), v.size());
    for(std::size_t i = 0; i < u.size(); ++i)
        for(std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
    require_finite(m.data_);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for(std::size_t i = 0; i < rows_; ++i)
        for(std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex ComplexMatrix::trace() const {
    if(!is_square()) throw Error(ErrorKind::NotSquare, "trace of non-square matrix");
    Complex acc = 0.0;
    for(std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
    return acc;
}

double ComplexMatrix::frobenius_norm() const noexcept {
    double acc = 0.0;
    for(const auto &z : data_) acc += std::norm(z);
    return std::sqrt(acc);
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_shape(*this, rhs);
    for(std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_shape(*this, rhs);
    for(std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) noexcept {
    for(auto &z : data_) z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    if(lhs.cols() != rhs.rows())
        throw Error(ErrorKind::DimensionMismatch, "inner dimensions " + std::to_string(lhs.cols()) + " and " +
                                                      std::to_string(rhs.rows()));
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for(std::size_t i = 0; i < lhs.rows(); ++i)
        for(std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(i, k);
            if(a == Complex{}) continue;
            for(std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

namespace {

    // Visits (i, j) with i <= j in cache-sized tiles so that m(j, i) stays hot.
    template <class F> void for_each_upper_pair(std::size_t n, F &&f) {
        constexpr std::size_t tile = 32;
        for(std::size_t ib = 0; ib < n; ib += tile)
            for(std::size_t jb = ib; jb < n; jb += tile)
                for(std::size_t i = ib; i < std::min(ib + tile, n); ++i)
                    for(std::size_t j = std::max(jb, i); j < std::min(jb + tile, n); ++j) f(i, j);
    }

} // namespace

double hermiticity_defect(const ComplexMatrix &m) {
    if(!m.is_square()) throw Error(ErrorKind::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    double acc = 0.0;
    for_each_upper_pair(m.rows(), [&](std::size_t i, std::size_t j) {
        const double d = std::norm(m(i, j) - std::conj(m(j, i)));
        acc += i == j ? d : 2.0 * d;
    });
    return std::sqrt(acc) / std::max(1.0, m.frobenius_norm());
}

ComplexMatrix symmetrized(const ComplexMatrix &m, double hermiticity_tol) {
    const double defect = hermiticity_defect(m);
    if(defect > hermiticity_tol)
        throw Error(ErrorKind::NotHermitian, "relative defect " + std::to_string(defect) + " exceeds tolerance");
    ComplexMatrix out = m;
    for_each_upper_pair(m.rows(), [&](std::size_t i, std::size_t j) {
        out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        out(j, i) = std::conj(out(i, j));
    });
    return out;
}

HermitianEigen hermitian_eigen(const ComplexMatrix &m, double hermiticity_tol) {
    ComplexMatrix       v      = ComplexMatrix::identity(m.rows());
    std::vector<double> values = jacobi(symmetrized(m, hermiticity_tol), &v);

    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    HermitianEigen result{std::vector<double>(values.size()), ComplexMatrix(m.rows(), m.rows())};
    for(std::size_t col = 0; col < order.size(); ++col) {
        result.eigenvalues[col] = values[order[col]];
        for(std::size_t row = 0; row < m.rows(); ++row) result.eigenvectors(row, col) = v(row, order[col]);
    }
    return result;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, double hermiticity_tol) {
    auto values = jacobi(symmetrized(m, hermiticity_tol), nullptr);
    std::sort(values.begin(), values.end());
    return values;
}

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap) {
    std::size_t result = 1;
    for(std::size_t i = 0; i < exponent; ++i) {
        if(base != 0 && result > cap / base)
            throw Error(ErrorKind::SizeOverflow, std::to_string(base) + "^" + std::to_string(exponent) +
                                                     " exceeds dimension cap " + std::to_string(cap));
        result *= base;
    }
    if(result > cap)
        throw Error(ErrorKind::SizeOverflow, std::to_string(result) + " exceeds dimension cap " + std::to_string(cap));
    return result;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b, std::size_t dim_cap) {
    const auto too_big = [dim_cap](std::size_t x, std::size_t y) { return y != 0 && x > dim_cap / y; };
    if(too_big(a.rows(), b.rows()) || too_big(a.cols(), b.cols()))
        throw Error(ErrorKind::SizeOverflow, "Kronecker product exceeds dimension cap " + std::to_string(dim_cap));
    const std::size_t rb = b.rows();
    const std::size_t cb = b.cols();
    ComplexMatrix     out(a.rows() * rb, a.cols() * cb);
    for(std::size_t i = 0; i < a.rows(); ++i)
        for(std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if(aij == Complex{}) continue;
            for(std::size_t k = 0; k < rb; ++k)
                for(std::size_t l = 0; l < cb; ++l) out(i * rb + k, j * cb + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix partial_trace_keep(const ComplexMatrix &m, std::size_t local_dim, std::size_t n, std::size_t k) {
    if(!m.is_square()) throw Error(ErrorKind::NotSquare, "partial trace of non-square matrix");
    if(k < 1 || k > n)
        throw Error(ErrorKind::IndexOutOfRange, "keep index " + std::to_string(k) + " not in 1.." + std::to_string(n));
    std::size_t total = 0;
    try {
        total = checked_power(local_dim, n, m.rows());
    } catch(const Error &) {
        throw Error(ErrorKind::DimensionMismatch, "matrix dimension " + std::to_string(m.rows()) + " != " +
                                                      std::to_string(local_dim) + "^" + std::to_string(n));
    }
    if(total != m.rows())
        throw Error(ErrorKind::DimensionMismatch, "matrix dimension " + std::to_string(m.rows()) + " != " +
                                                      std::to_string(local_dim) + "^" + std::to_string(n));

    const std::size_t right = checked_power(local_dim, n - k, total);
    const std::size_t left  = total / (right * local_dim);
    ComplexMatrix     out(local_dim, local_dim);
    for(std::size_t a = 0; a < local_dim; ++a)
        for(std::size_t b = 0; b < local_dim; ++b) {
            Complex acc = 0.0;
            for(std::size_t l = 0; l < left; ++l)
                for(std::size_t r = 0; r < right; ++r)
                    acc += m((l * local_dim + a) * right + r, (l * local_dim + b) * right + r);
            out(a, b) = acc;
        }
    return out;
}

ComplexMatrix embed_local(const ComplexMatrix &op, std::size_t n, std::size_t k, std::size_t dim_cap) {
    if(!op.is_square()) throw Error(ErrorKind::NotSquare, "local operator must be square");
    if(k < 1 || k > n)
        throw Error(ErrorKind::IndexOutOfRange, "site index " + std::to_string(k) + " not in 1.." + std::to_string(n));
    const std::size_t d     = op.rows();
    const std::size_t total = checked_power(d, n, dim_cap);
    const std::size_t right = checked_power(d, n - k, dim_cap);
    const std::size_t left  = total / (right * d);
    ComplexMatrix     out(total, total);
    for(std::size_t l = 0; l < left; ++l)
        for(std::size_t a = 0; a < d; ++a)
            for(std::size_t b = 0; b < d; ++b) {
                const Complex v = op(a, b);
                if(v == Complex{}) continue;
                for(std::size_t r = 0; r < right; ++r) out((l * d + a) * right + r, (l * d + b) * right + r) = v;
            }
    return out;
}

double trace_norm(const ComplexMatrix &m, double hermiticity_tol) {
    const auto values = hermitian_eigenvalues(m, hermiticity_tol);
    double     acc    = 0.0;
    for(double v : values) acc += std::abs(v);
    return acc;
}

ComplexMatrix spectral_apply(const ComplexMatrix &m, const std::function<double(double)> &f, double support_floor) {
    const auto    eig = hermitian_eigen(m);
    const auto    n   = m.rows();
    ComplexMatrix out(n, n);
    for(std::size_t c = 0; c < n; ++c) {
        const double lambda = eig.eigenvalues[c];
        if(lambda <= support_floor) continue;
        const double fl = f(lambda);
        if(!std::isfinite(fl)) throw Error(ErrorKind::NonFinite, "spectral function returned a non-finite value");
        for(std::size_t i = 0; i < n; ++i) {
            const Complex vi = fl * eig.eigenvectors(i, c);
            if(vi == Complex{}) continue;
            for(std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(eig.eigenvectors(j, c));
        }
    }
    return out;
}

Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if(a.cols() != b.rows() || a.rows() != b.cols())
        throw Error(ErrorKind::DimensionMismatch, "Tr(AB) requires A m x n and B n x m");
    Complex acc = 0.0;
    for(std::size_t i = 0; i < a.rows(); ++i)
        for(std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * b(j, i);
    return acc;
}

} // namespace entlab
