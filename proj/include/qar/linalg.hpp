// linalg.hpp - Dense complex kernel for three-qubit operators
//
// Basis convention: |c r h> with the cold qubit most significant, so the
// computational index is k = 4c + 2r + h. Everything else in the library
// inherits this ordering.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string_view>

#include "qar/errors.hpp"

namespace qar::linalg {

using cplx = std::complex<double>;

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Operator2 = Eigen::Matrix<cplx, 2, 2>;
using Operator4 = Eigen::Matrix<cplx, 4, 4>;
using Operator = Eigen::Matrix<cplx, 8, 8>;   // three-qubit operator / density matrix

inline constexpr Eigen::Index kDim = 8;
inline constexpr Eigen::Index kMaxDim = 64;

enum class Qubit { cold = 0, room = 1, hot = 2 };

// 'c', 'r' or 'h'; anything else throws InvalidInput.
Qubit qubit_from_label(char label);
char qubit_label(Qubit q) noexcept;

// Basis ket index for bits (c, r, h).
constexpr int basis_index(int c, int r, int h) noexcept { return 4 * c + 2 * r + h; }

// Kronecker product, left factor most significant. Rejects non-square
// operands and results wider than kMaxDim.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
Operator tensor3(const Operator2& a, const Operator2& b, const Operator2& c);

// Trace out one qubit; the two remaining keep their relative (c, r, h) order.
Operator4 partial_trace(const Operator& rho, Qubit which);

// Inverse placement of partial_trace: single-qubit factor at `slot`, the
// two-qubit operator on the other two qubits in (c, r, h) order.
Operator embed(const Operator2& single, const Operator4& pair, Qubit slot);

// Reduce a two-qubit operator onto one of its factors (0 = first, 1 = second).
Operator2 partial_trace_pair(const Operator4& pair, int keep);

// |a><b| on three qubits.
Operator ket_bra(int a, int b);

namespace detail {
template <class A, class B>
void require_same_shape(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
                        std::string_view what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidInput(std::string(what) + ": dimension mismatch");
    }
}
} // namespace detail

template <class A, class B>
auto commutator(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    detail::require_same_shape(a, b, "commutator");
    using Result = typename A::PlainObject;
    Result out = a * b - b * a;
    return out;
}

// Hilbert-Schmidt inner product tr(A^dagger B).
template <class A, class B>
cplx hs_inner(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    detail::require_same_shape(a, b, "hs_inner");
    return (a.adjoint() * b).trace();
}

// sqrt(tr(A^dagger A)), equal to the Frobenius norm.
template <class A>
double hs_norm(const Eigen::MatrixBase<A>& a) {
    return a.norm();
}

// tr(A B) without conjugation.
template <class A, class B>
cplx trace_product(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    detail::require_same_shape(a, b, "trace_product");
    return (a * b).trace();
}

double hermiticity_residual(const Operator& a);
double min_eigenvalue(const Operator& hermitian);
double trace_distance(const Operator& a, const Operator& b);

// Column-stacking vectorization: vec(A)[i + 8 j] = A(i, j).
ComplexVector vec(const Operator& a);
Operator unvec(const ComplexVector& v);

struct NullSpaceResult {
    Operator state;
    double smallest_singular{0.0};   // relative to the largest
    double second_singular{0.0};     // relative to the largest
    double residual{0.0};            // ||L vec(state)||
};

// Kernel of a 64x64 vectorized Liouvillian, reshaped to 8x8, Hermitized and
// normalized to unit trace. Throws DegenerateKernel unless the kernel is
// one-dimensional (smallest singular value <= 1e-10, second >= 1e-4, both
// relative to the largest).
NullSpaceResult null_space_1d(const ComplexMatrix& liouvillian);

} // namespace qar::linalg
