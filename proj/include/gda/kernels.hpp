#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gda/algebra.hpp"

namespace gda {

// Sign data of an elementary abelian 2-group presentation with real
// coefficients, bit-packed: exponent vectors are words with bit i = a_i.
// X_a^2 = (-1)^q(a) I with q(a) = sum_{j<i} c_ij a_i a_j + sum_i s_i a_i.
struct F2Form {
  int bits = 0;
  std::vector<uint64_t> lower;  // lower[i] bit j set iff j < i and x_i x_j = -x_j x_i
  std::vector<uint64_t> full;   // symmetric commutation rows
  uint64_t sign_mask = 0;       // bit i set iff x_i^2 = -I
};

// Available when every generator has order 2 and all scalars are real.
std::optional<F2Form> f2_form(const Presentation& p);

enum class KernelIsa { Scalar, Avx2, Neon };

const char* kernel_name(KernelIsa isa);
bool kernel_supported(KernelIsa isa);
KernelIsa active_kernel();
// Forces a kernel (tests); reset with std::nullopt.
void set_kernel_override(std::optional<KernelIsa> isa);

// out[t] = q(a[t]) mod 2.
void square_parity(const F2Form& f, const uint64_t* a, uint8_t* out, size_t n);
void square_parity_with(KernelIsa isa, const F2Form& f, const uint64_t* a, uint8_t* out, size_t n);

// out[t] = 1 iff X_a and X_b[t] anticommute.
void commute_parity(const F2Form& f, uint64_t a, const uint64_t* b, uint8_t* out, size_t n);
void commute_parity_with(KernelIsa isa, const F2Form& f, uint64_t a, const uint64_t* b, uint8_t* out, size_t n);

}  // namespace gda
