#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace superwalk {

using BigInt = boost::multiprecision::cpp_int;

class MatrixError : public std::invalid_argument {
public:
    enum class Code { DimensionMismatch, NotSquare };

    MatrixError(Code code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

/// Dense matrix over arbitrary-precision integers. All arithmetic is exact;
/// entries never overflow or wrap.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    BigInt& operator()(int r, int c) { return entries_[index(r, c)]; }
    const BigInt& operator()(int r, int c) const { return entries_[index(r, c)]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix transpose() const;
    BigInt trace() const;
    BigInt max_abs_entry() const;
    bool is_symmetric() const;

    /// Matrix-vector product.
    std::vector<BigInt> apply(std::span<const BigInt> v) const;

private:
    std::size_t index(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// k-th power by binary exponentiation; pow(m, 0) is the identity.
IntMatrix pow(const IntMatrix& m, unsigned k);

}  // namespace superwalk
