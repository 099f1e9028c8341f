#pragma once

// Minimal dense complex matrix arithmetic for two-qubit systems. Everything
// here is fixed-size (2x2 and 4x4), row-major, and dependency-free.

#include <array>
#include <complex>

namespace qgt {

using cplx = std::complex<double>;

using Mat2 = std::array<cplx, 4>;   // row-major 2x2
using Mat4 = std::array<cplx, 16>;  // row-major 4x4

constexpr int mat4_index(int row, int col) { return 4 * row + col; }

inline constexpr Mat2 kIdentity2{cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};

/// Pauli X, the bit-flip operator swapping |0> and |1>.
inline constexpr Mat2 kPauliX{cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0}};

/// Kronecker product of two single-qubit operators, basis (|00>,|01>,|10>,|11>).
inline Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out[mat4_index(2 * i + k, 2 * j + l)] = a[2 * i + j] * b[2 * k + l];
    return out;
}

inline Mat4 matmul(const Mat4& a, const Mat4& b) {
    Mat4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cplx acc{0, 0};
            for (int k = 0; k < 4; ++k) acc += a[mat4_index(r, k)] * b[mat4_index(k, c)];
            out[mat4_index(r, c)] = acc;
        }
    return out;
}

inline Mat4 adjoint(const Mat4& a) {
    Mat4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[mat4_index(r, c)] = std::conj(a[mat4_index(c, r)]);
    return out;
}

/// a * rho * a^dagger
inline Mat4 conjugate_by(const Mat4& a, const Mat4& rho) {
    return matmul(matmul(a, rho), adjoint(a));
}

inline cplx trace(const Mat4& a) {
    return a[mat4_index(0, 0)] + a[mat4_index(1, 1)] + a[mat4_index(2, 2)] + a[mat4_index(3, 3)];
}

} // namespace qgt
