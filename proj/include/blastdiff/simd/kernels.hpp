#pragma once

// Dense arithmetic kernels used by the policy network, the MLP and the
// factorization machine. Each kernel has a portable scalar reference in
// `scalar::` and an AVX2/FMA variant in `avx2::`; the unqualified entry
// points dispatch once, at first use, to the best variant the CPU supports.
//
// All matrices are row-major and densely packed.

#include <cstddef>
#include <span>
#include <string_view>

namespace blastdiff::simd {

enum class Isa { Scalar, Avx2 };

/// ISA selected for the unqualified kernels. Honours BLASTDIFF_SIMD=scalar.
Isa active_isa();
/// Override the dispatch target (tests and benchmarks). Ignored if the CPU
/// cannot run the requested ISA; returns the ISA actually in effect.
Isa set_isa(Isa isa);
bool cpu_supports(Isa isa);
std::string_view isa_name(Isa isa);

template <typename T>
struct KernelTable {
    T (*dot)(const T* a, const T* b, std::size_t n);
    void (*axpy)(T alpha, const T* x, T* y, std::size_t n);
    // C[m x n] (+)= A[m x k] * B[k x n]
    void (*gemm_nn)(std::size_t m, std::size_t n, std::size_t k, const T* a, const T* b, T* c,
                    bool accumulate);
    // C[m x n] (+)= A^T * B where A is [k x m] and B is [k x n]
    void (*gemm_tn)(std::size_t m, std::size_t n, std::size_t k, const T* a, const T* b, T* c,
                    bool accumulate);
};

namespace scalar {
float dot(const float* a, const float* b, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
void axpy(float alpha, const float* x, float* y, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void gemm_nn(std::size_t m, std::size_t n, std::size_t k, const float* a, const float* b, float* c,
             bool accumulate);
void gemm_nn(std::size_t m, std::size_t n, std::size_t k, const double* a, const double* b,
             double* c, bool accumulate);
void gemm_tn(std::size_t m, std::size_t n, std::size_t k, const float* a, const float* b, float* c,
             bool accumulate);
void gemm_tn(std::size_t m, std::size_t n, std::size_t k, const double* a, const double* b,
             double* c, bool accumulate);
}  // namespace scalar

namespace avx2 {
float dot(const float* a, const float* b, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
void axpy(float alpha, const float* x, float* y, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void gemm_nn(std::size_t m, std::size_t n, std::size_t k, const float* a, const float* b, float* c,
             bool accumulate);
void gemm_nn(std::size_t m, std::size_t n, std::size_t k, const double* a, const double* b,
             double* c, bool accumulate);
void gemm_tn(std::size_t m, std::size_t n, std::size_t k, const float* a, const float* b, float* c,
             bool accumulate);
void gemm_tn(std::size_t m, std::size_t n, std::size_t k, const double* a, const double* b,
             double* c, bool accumulate);
}  // namespace avx2

template <typename T>
const KernelTable<T>& kernels();

template <typename T>
inline T dot(std::span<const T> a, std::span<const T> b) {
    return kernels<T>().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

template <typename T>
inline void axpy(T alpha, std::span<const T> x, std::span<T> y) {
    kernels<T>().axpy(alpha, x.data(), y.data(), x.size() < y.size() ? x.size() : y.size());
}

template <typename T>
inline void gemm_nn(std::size_t m, std::size_t n, std::size_t k, const T* a, const T* b, T* c,
                    bool accumulate = false) {
    kernels<T>().gemm_nn(m, n, k, a, b, c, accumulate);
}

template <typename T>
inline void gemm_tn(std::size_t m, std::size_t n, std::size_t k, const T* a, const T* b, T* c,
                    bool accumulate = false) {
    kernels<T>().gemm_tn(m, n, k, a, b, c, accumulate);
}

}  // namespace blastdiff::simd
