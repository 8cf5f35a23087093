#include "superwalk/int_matrix.hpp"

namespace superwalk {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
        throw std::out_of_range("matrix dimensions must be nonnegative");
    }
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), BigInt(0));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

std::size_t IntMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw std::out_of_range("matrix index (" + std::to_string(r) + ", " +
                                std::to_string(c) + ") out of range for " +
                                std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

BigInt IntMatrix::trace() const {
    if (!square()) {
        throw MatrixError(MatrixError::Code::NotSquare, "trace: matrix is not square");
    }
    BigInt sum = 0;
    for (int i = 0; i < rows_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

BigInt IntMatrix::max_abs_entry() const {
    BigInt best = 0;
    for (const BigInt& e : entries_) {
        BigInt a = abs(e);
        if (a > best) {
            best = a;
        }
    }
    return best;
}

bool IntMatrix::is_symmetric() const {
    if (!square()) {
        return false;
    }
    for (int r = 0; r < rows_; ++r) {
        for (int c = r + 1; c < cols_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<BigInt> IntMatrix::apply(std::span<const BigInt> v) const {
    if (static_cast<std::size_t>(cols_) != v.size()) {
        throw MatrixError(MatrixError::Code::DimensionMismatch,
                          "apply: vector length " + std::to_string(v.size()) +
                              " does not match " + std::to_string(cols_) + " columns");
    }
    std::vector<BigInt> out(static_cast<std::size_t>(rows_), BigInt(0));
    for (int r = 0; r < rows_; ++r) {
        BigInt acc = 0;
        for (int c = 0; c < cols_; ++c) {
            acc += (*this)(r, c) * v[static_cast<std::size_t>(c)];
        }
        out[static_cast<std::size_t>(r)] = std::move(acc);
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) {
        throw MatrixError(MatrixError::Code::DimensionMismatch,
                          "mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                              " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    IntMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int k = 0; k < a.cols(); ++k) {
            const BigInt& ark = a(r, k);
            if (ark == 0) {
                continue;
            }
            for (int c = 0; c < b.cols(); ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

IntMatrix pow(const IntMatrix& m, unsigned k) {
    if (!m.square()) {
        throw MatrixError(MatrixError::Code::NotSquare, "pow: matrix is not square");
    }
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (k > 0) {
        if (k & 1u) {
            result = result * base;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

}  // namespace superwalk
