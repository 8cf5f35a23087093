#include "superwalk/spectral.hpp"

#include <cmath>

namespace superwalk {

FloatMatrix::FloatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
        throw std::out_of_range("matrix dimensions must be nonnegative");
    }
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0);
}

FloatMatrix FloatMatrix::identity(int n) {
    FloatMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

std::size_t FloatMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
}

FloatMatrix FloatMatrix::transpose() const {
    FloatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

double FloatMatrix::trace() const {
    if (rows_ != cols_) {
        throw MatrixError(MatrixError::Code::NotSquare, "trace: matrix is not square");
    }
    double sum = 0.0;
    for (int i = 0; i < rows_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

void FloatMatrix::scale(double factor) {
    for (double& e : entries_) {
        e *= factor;
    }
}

FloatMatrix& FloatMatrix::operator+=(const FloatMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw MatrixError(MatrixError::Code::DimensionMismatch, "operator+=: shape mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

std::vector<double> FloatMatrix::apply(std::span<const double> v) const {
    if (static_cast<std::size_t>(cols_) != v.size()) {
        throw MatrixError(MatrixError::Code::DimensionMismatch,
                          "apply: vector length does not match columns");
    }
    std::vector<double> out(static_cast<std::size_t>(rows_), 0.0);
    for (int r = 0; r < rows_; ++r) {
        double acc = 0.0;
        for (int c = 0; c < cols_; ++c) {
            acc += (*this)(r, c) * v[static_cast<std::size_t>(c)];
        }
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

bool FloatMatrix::all_finite() const {
    for (double e : entries_) {
        if (!std::isfinite(e)) {
            return false;
        }
    }
    return true;
}

FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b) {
    if (a.cols() != b.rows()) {
        throw MatrixError(MatrixError::Code::DimensionMismatch, "operator*: shape mismatch");
    }
    FloatMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int k = 0; k < a.cols(); ++k) {
            double ark = a(r, k);
            if (ark == 0.0) {
                continue;
            }
            for (int c = 0; c < b.cols(); ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw MatrixError(MatrixError::Code::DimensionMismatch, "max_abs_diff: shape mismatch");
    }
    double best = 0.0;
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            best = std::max(best, std::abs(a(r, c) - b(r, c)));
        }
    }
    return best;
}

FloatMatrix to_float(const IntMatrix& m) {
    FloatMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            out(r, c) = m(r, c).convert_to<double>();
        }
    }
    return out;
}

namespace {

double max_abs_row_sum(const IntMatrix& m) {
    BigInt best = 0;
    for (int r = 0; r < m.rows(); ++r) {
        BigInt sum = 0;
        for (int c = 0; c < m.cols(); ++c) {
            sum += abs(m(r, c));
        }
        if (sum > best) {
            best = sum;
        }
    }
    return best.convert_to<double>();
}

}  // namespace

HeatKernel matrix_exponential(const IntMatrix& m, double t, double tol,
                              const ExpOptions& options) {
    if (!m.square()) {
        throw MatrixError(MatrixError::Code::NotSquare,
                          "matrix exponential needs a square matrix");
    }
    if (t < 0.0) {
        throw std::out_of_range("time must be nonnegative");
    }
    if (!(tol > 0.0)) {
        throw std::out_of_range("tolerance must be positive");
    }

    // Pick the smallest truncation order whose certified remainder fits.
    const double tb = t * max_abs_row_sum(m);
    const double growth = std::exp(tb);
    int order = 0;
    double tail = growth * tb;  // e^{tb} * (tb)^{N+1}/(N+1)! at N = 0
    while (tail > tol) {
        if (order >= options.order_cap) {
            throw ToleranceError("tolerance " + std::to_string(tol) +
                                 " unreachable within truncation-order cap " +
                                 std::to_string(options.order_cap));
        }
        ++order;
        tail *= tb / (order + 1);
    }

    const int n = m.rows();
    FloatMatrix scaled = to_float(m);
    FloatMatrix sum = FloatMatrix::identity(n);
    FloatMatrix term = FloatMatrix::identity(n);
    for (int k = 1; k <= order; ++k) {
        term = term * scaled;
        term.scale(-t / k);
        sum += term;
    }

    // Symmetrize: exp of a symmetric matrix is symmetric, rounding is not.
    FloatMatrix transposed = sum.transpose();
    sum += transposed;
    sum.scale(0.5);

    if (!sum.all_finite()) {
        throw ToleranceError("matrix exponential produced non-finite entries");
    }
    return HeatKernel{std::move(sum), t, order, tail};
}

SuperKernel super_heat_kernel(const Graph& g, double t, double tol, const ExpOptions& options) {
    return SuperKernel{matrix_exponential(even_laplacian(g), t, tol, options),
                       matrix_exponential(odd_laplacian(g), t, tol, options)};
}

double supertrace(const Graph& g, double t, double tol, const ExpOptions& options) {
    SuperKernel kernel = super_heat_kernel(g, t, tol, options);
    return kernel.even.matrix.trace() - kernel.odd.matrix.trace();
}

std::vector<double> apply_super_kernel(const SuperKernel& kernel, std::span<const double> psi) {
    const std::size_t nv = static_cast<std::size_t>(kernel.even.matrix.rows());
    const std::size_t ne = static_cast<std::size_t>(kernel.odd.matrix.rows());
    if (psi.size() != nv + ne) {
        throw MatrixError(MatrixError::Code::DimensionMismatch,
                          "state length " + std::to_string(psi.size()) + " != |V|+|E| = " +
                              std::to_string(nv + ne));
    }
    std::vector<double> out;
    out.reserve(nv + ne);
    std::vector<double> vertex_block = kernel.even.matrix.apply(psi.subspan(0, nv));
    std::vector<double> edge_block = kernel.odd.matrix.apply(psi.subspan(nv));
    out.insert(out.end(), vertex_block.begin(), vertex_block.end());
    out.insert(out.end(), edge_block.begin(), edge_block.end());
    return out;
}

std::vector<double> evolve_state(const Graph& g, std::span<const double> psi, double t,
                                 double tol, const ExpOptions& options) {
    return apply_super_kernel(super_heat_kernel(g, t, tol, options), psi);
}

}  // namespace superwalk
