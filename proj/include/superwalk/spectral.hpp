#pragma once

#include <span>
#include <vector>

#include "superwalk/graph.hpp"
#include "superwalk/int_matrix.hpp"

namespace superwalk {

/// Requested tolerance cannot be certified within the truncation-order cap.
class ToleranceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FloatMatrix {
public:
    FloatMatrix() = default;
    FloatMatrix(int rows, int cols);

    static FloatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return entries_[index(r, c)]; }
    const double& operator()(int r, int c) const { return entries_[index(r, c)]; }

    bool operator==(const FloatMatrix&) const = default;

    FloatMatrix transpose() const;
    double trace() const;
    void scale(double factor);
    FloatMatrix& operator+=(const FloatMatrix& other);
    std::vector<double> apply(std::span<const double> v) const;
    bool all_finite() const;

private:
    std::size_t index(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> entries_;
};

FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b);
double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b);
FloatMatrix to_float(const IntMatrix& m);

/// exp(-t*m) truncated after `truncation_order` terms. The remainder bound
/// certifies the truncation error in max-entry norm:
///     e^{t*B} * (t*B)^{N+1} / (N+1)!   with B the max absolute row sum of m.
struct HeatKernel {
    FloatMatrix matrix;
    double time = 0.0;
    int truncation_order = 0;
    double remainder_bound = 0.0;
};

struct ExpOptions {
    int order_cap = 200;
};

/// Truncated Taylor series for exp(-t*m), t >= 0, with the truncation order
/// chosen so the certified remainder bound is at most `tol`. The input must
/// be symmetric; the output is symmetrized after summation.
HeatKernel matrix_exponential(const IntMatrix& m, double t, double tol,
                              const ExpOptions& options = {});

/// Heat kernels of both graph Laplacians. The combined operator acts on
/// vertex states with the even block and on edge states with the odd block;
/// the blocks never couple, so the full (|V|+|E|)^2 matrix is never formed.
struct SuperKernel {
    HeatKernel even;  // |V| x |V|
    HeatKernel odd;   // |E| x |E|
};

SuperKernel super_heat_kernel(const Graph& g, double t, double tol,
                              const ExpOptions& options = {});

/// trace(exp(-t * even Laplacian)) - trace(exp(-t * odd Laplacian)).
/// Equals |V| - |E| for every t: the nonzero spectra of the two Laplacians
/// coincide with multiplicity, so their heat traces cancel.
double supertrace(const Graph& g, double t, double tol, const ExpOptions& options = {});

/// Applies the kernel blocks to a vertex+edge state vector.
std::vector<double> apply_super_kernel(const SuperKernel& kernel, std::span<const double> psi);

/// Evolves a state on vertices+edges: the vertex block by exp(-t * even
/// Laplacian), the edge block by exp(-t * odd Laplacian).
std::vector<double> evolve_state(const Graph& g, std::span<const double> psi, double t,
                                 double tol, const ExpOptions& options = {});

}  // namespace superwalk
