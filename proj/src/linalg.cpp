// linalg.cpp - Dense complex kernel for three-qubit operators

#include "qar/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <array>
#include <cmath>
#include <string>

namespace qar::linalg {

namespace {

// Bits of a basis index in (c, r, h) order.
std::array<int, 3> bits_of(int k) { return {(k >> 2) & 1, (k >> 1) & 1, k & 1}; }

// Index of the two-qubit basis state made of the bits other than `skip`.
int pair_index(const std::array<int, 3>& bits, int skip) {
    int out = 0;
    for (int i = 0; i < 3; ++i) {
        if (i != skip) out = 2 * out + bits[i];
    }
    return out;
}

} // namespace

Qubit qubit_from_label(char label) {
    switch (label) {
        case 'c': return Qubit::cold;
        case 'r': return Qubit::room;
        case 'h': return Qubit::hot;
        default:
            throw InvalidInput(std::string("unknown qubit label '") + label + "' (expected c, r or h)");
    }
}

char qubit_label(Qubit q) noexcept {
    switch (q) {
        case Qubit::cold: return 'c';
        case Qubit::room: return 'r';
        case Qubit::hot: return 'h';
    }
    return '?';
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols()) {
        throw InvalidInput("tensor: operands must be square");
    }
    const Eigen::Index n = a.rows() * b.rows();
    if (n > kMaxDim) {
        throw InvalidInput("tensor: result dimension " + std::to_string(n) + " exceeds " +
                           std::to_string(kMaxDim));
    }
    ComplexMatrix out(n, n);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Operator tensor3(const Operator2& a, const Operator2& b, const Operator2& c) {
    Operator out;
    for (int i = 0; i < 8; ++i) {
        const auto bi = bits_of(i);
        for (int j = 0; j < 8; ++j) {
            const auto bj = bits_of(j);
            out(i, j) = a(bi[0], bj[0]) * b(bi[1], bj[1]) * c(bi[2], bj[2]);
        }
    }
    return out;
}

Operator4 partial_trace(const Operator& rho, Qubit which) {
    const int skip = static_cast<int>(which);
    if (skip < 0 || skip > 2) throw InvalidInput("partial_trace: invalid subsystem");
    Operator4 out = Operator4::Zero();
    for (int i = 0; i < 8; ++i) {
        const auto bi = bits_of(i);
        for (int j = 0; j < 8; ++j) {
            const auto bj = bits_of(j);
            if (bi[skip] != bj[skip]) continue;
            out(pair_index(bi, skip), pair_index(bj, skip)) += rho(i, j);
        }
    }
    return out;
}

Operator embed(const Operator2& single, const Operator4& pair, Qubit slot) {
    const int s = static_cast<int>(slot);
    if (s < 0 || s > 2) throw InvalidInput("embed: invalid subsystem");
    Operator out;
    for (int i = 0; i < 8; ++i) {
        const auto bi = bits_of(i);
        for (int j = 0; j < 8; ++j) {
            const auto bj = bits_of(j);
            out(i, j) = single(bi[s], bj[s]) * pair(pair_index(bi, s), pair_index(bj, s));
        }
    }
    return out;
}

Operator2 partial_trace_pair(const Operator4& pair, int keep) {
    if (keep != 0 && keep != 1) throw InvalidInput("partial_trace_pair: keep must be 0 or 1");
    Operator2 out = Operator2::Zero();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const int ik = keep == 0 ? i >> 1 : i & 1;
            const int jk = keep == 0 ? j >> 1 : j & 1;
            const int io = keep == 0 ? i & 1 : i >> 1;
            const int jo = keep == 0 ? j & 1 : j >> 1;
            if (io == jo) out(ik, jk) += pair(i, j);
        }
    }
    return out;
}

Operator ket_bra(int a, int b) {
    if (a < 0 || a >= 8 || b < 0 || b >= 8) throw InvalidInput("ket_bra: index out of range");
    Operator out = Operator::Zero();
    out(a, b) = 1.0;
    return out;
}

double hermiticity_residual(const Operator& a) { return (a - a.adjoint()).cwiseAbs().maxCoeff(); }

double min_eigenvalue(const Operator& hermitian) {
    const Operator h = 0.5 * (hermitian + hermitian.adjoint());
    Eigen::SelfAdjointEigenSolver<Operator> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double trace_distance(const Operator& a, const Operator& b) {
    const Operator d = a - b;
    Eigen::SelfAdjointEigenSolver<Operator> solver(0.5 * (d + d.adjoint()), Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

ComplexVector vec(const Operator& a) {
    return Eigen::Map<const ComplexVector>(a.data(), kDim * kDim);
}

Operator unvec(const ComplexVector& v) {
    if (v.size() != kDim * kDim) throw InvalidInput("unvec: expected a 64-vector");
    return Eigen::Map<const Operator>(v.data());
}

NullSpaceResult null_space_1d(const ComplexMatrix& liouvillian) {
    if (liouvillian.rows() != kDim * kDim || liouvillian.cols() != kDim * kDim) {
        throw InvalidInput("null_space_1d: expected a 64x64 superoperator");
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(liouvillian, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();   // descending
    const double largest = s(0);
    if (!(largest > 0.0)) throw DegenerateKernel("null_space_1d: zero superoperator");

    NullSpaceResult out;
    out.smallest_singular = s(s.size() - 1) / largest;
    out.second_singular = s(s.size() - 2) / largest;
    if (out.smallest_singular > 1e-10 || out.second_singular < 1e-4) {
        throw DegenerateKernel("null_space_1d: kernel is not one-dimensional (relative singular values " +
                               std::to_string(out.second_singular) + ", " +
                               std::to_string(out.smallest_singular) + ")");
    }

    const ComplexVector kernel = svd.matrixV().col(s.size() - 1);
    Operator rho = unvec(kernel);
    const cplx tr = rho.trace();
    if (std::abs(tr) < 1e-300) throw DegenerateKernel("null_space_1d: kernel vector is traceless");
    rho /= tr;
    rho = 0.5 * (rho + rho.adjoint());
    out.state = rho;
    out.residual = (liouvillian * vec(rho)).norm();
    return out;
}

} // namespace qar::linalg
