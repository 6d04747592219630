#include "gda/kernels.hpp"

#include <atomic>
#include <bit>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define GDA_X86 1
#endif

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#define GDA_NEON 1
#endif

namespace gda {

std::optional<F2Form> f2_form(const Presentation& p) {
  if (p.kind != IdentityKind::OneDim || p.rank() > 64) return std::nullopt;
  F2Form f;
  f.bits = p.rank();
  f.lower.assign(static_cast<size_t>(f.bits), 0);
  f.full.assign(static_cast<size_t>(f.bits), 0);
  const int half = p.root_order / 2;
  for (int i = 0; i < f.bits; ++i) {
    const auto& g = p.gens[static_cast<size_t>(i)];
    if (g.power != 2) return std::nullopt;
    if (g.sign < 0) f.sign_mask |= uint64_t{1} << i;
    for (int j = 0; j < f.bits; ++j) {
      int c = static_cast<int>(mod(g.comm[static_cast<size_t>(j)], p.root_order));
      if (c == 0) continue;
      if (c != half) return std::nullopt;
      f.full[static_cast<size_t>(i)] |= uint64_t{1} << j;
      if (j < i) f.lower[static_cast<size_t>(i)] |= uint64_t{1} << j;
    }
  }
  return f;
}

namespace {

std::atomic<int> g_override{-1};

void square_parity_scalar(const F2Form& f, const uint64_t* a, uint8_t* out, size_t n) {
  for (size_t t = 0; t < n; ++t) {
    uint64_t x = a[t];
    uint64_t acc = x & f.sign_mask;
    for (uint64_t m = x; m != 0; m &= m - 1) acc ^= f.lower[static_cast<size_t>(std::countr_zero(m))] & x;
    out[t] = static_cast<uint8_t>(std::popcount(acc) & 1);
  }
}

uint64_t commute_row(const F2Form& f, uint64_t a) {
  uint64_t row = 0;
  for (uint64_t m = a; m != 0; m &= m - 1) row ^= f.full[static_cast<size_t>(std::countr_zero(m))];
  return row;
}

void commute_parity_scalar(const F2Form& f, uint64_t a, const uint64_t* b, uint8_t* out, size_t n) {
  const uint64_t row = commute_row(f, a);
  for (size_t t = 0; t < n; ++t) out[t] = static_cast<uint8_t>(std::popcount(row & b[t]) & 1);
}

#ifdef GDA_X86

__attribute__((target("avx2"))) inline __m256i fold_parity(__m256i x) {
  x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 32));
  x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 16));
  x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 8));
  x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 4));
  x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 2));
  x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 1));
  return _mm256_and_si256(x, _mm256_set1_epi64x(1));
}

__attribute__((target("avx2"))) void store_parity(__m256i p, uint8_t* out) {
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), p);
  for (int i = 0; i < 4; ++i) out[i] = static_cast<uint8_t>(lanes[i]);
}

__attribute__((target("avx2"))) void square_parity_avx2(const F2Form& f, const uint64_t* a, uint8_t* out, size_t n) {
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i sign = _mm256_set1_epi64x(static_cast<long long>(f.sign_mask));
  size_t t = 0;
  for (; t + 4 <= n; t += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + t));
    __m256i acc = _mm256_and_si256(x, sign);
    for (int i = 0; i < f.bits; ++i) {
      uint64_t li = f.lower[static_cast<size_t>(i)];
      if (li == 0) continue;
      __m256i bit = _mm256_and_si256(_mm256_srl_epi64(x, _mm_cvtsi32_si128(i)), one);
      __m256i sel = _mm256_sub_epi64(_mm256_setzero_si256(), bit);
      __m256i row = _mm256_and_si256(_mm256_set1_epi64x(static_cast<long long>(li)), x);
      acc = _mm256_xor_si256(acc, _mm256_and_si256(row, sel));
    }
    store_parity(fold_parity(acc), out + t);
  }
  square_parity_scalar(f, a + t, out + t, n - t);
}

__attribute__((target("avx2"))) void commute_parity_avx2(const F2Form& f, uint64_t a, const uint64_t* b, uint8_t* out,
                                                          size_t n) {
  const __m256i row = _mm256_set1_epi64x(static_cast<long long>(commute_row(f, a)));
  size_t t = 0;
  for (; t + 4 <= n; t += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + t));
    store_parity(fold_parity(_mm256_and_si256(x, row)), out + t);
  }
  commute_parity_scalar(f, a, b + t, out + t, n - t);
}

#endif

#ifdef GDA_NEON

inline uint8_t lane_parity(uint64x2_t v, int lane) {
  uint64_t x = lane == 0 ? vgetq_lane_u64(v, 0) : vgetq_lane_u64(v, 1);
  return static_cast<uint8_t>(std::popcount(x) & 1);
}

void square_parity_neon(const F2Form& f, const uint64_t* a, uint8_t* out, size_t n) {
  const uint64x2_t sign = vdupq_n_u64(f.sign_mask);
  const uint64x2_t one = vdupq_n_u64(1);
  size_t t = 0;
  for (; t + 2 <= n; t += 2) {
    uint64x2_t x = vld1q_u64(a + t);
    uint64x2_t acc = vandq_u64(x, sign);
    for (int i = 0; i < f.bits; ++i) {
      uint64_t li = f.lower[static_cast<size_t>(i)];
      if (li == 0) continue;
      uint64x2_t bit = vandq_u64(vshlq_u64(x, vdupq_n_s64(-i)), one);
      uint64x2_t sel = vsubq_u64(vdupq_n_u64(0), bit);
      acc = veorq_u64(acc, vandq_u64(vandq_u64(vdupq_n_u64(li), x), sel));
    }
    out[t] = lane_parity(acc, 0);
    out[t + 1] = lane_parity(acc, 1);
  }
  square_parity_scalar(f, a + t, out + t, n - t);
}

void commute_parity_neon(const F2Form& f, uint64_t a, const uint64_t* b, uint8_t* out, size_t n) {
  const uint64x2_t row = vdupq_n_u64(commute_row(f, a));
  size_t t = 0;
  for (; t + 2 <= n; t += 2) {
    uint64x2_t x = vandq_u64(vld1q_u64(b + t), row);
    out[t] = lane_parity(x, 0);
    out[t + 1] = lane_parity(x, 1);
  }
  commute_parity_scalar(f, a, b + t, out + t, n - t);
}

#endif

}  // namespace

const char* kernel_name(KernelIsa isa) {
  switch (isa) {
    case KernelIsa::Scalar: return "scalar";
    case KernelIsa::Avx2: return "avx2";
    case KernelIsa::Neon: return "neon";
  }
  return "?";
}

bool kernel_supported(KernelIsa isa) {
  switch (isa) {
    case KernelIsa::Scalar: return true;
    case KernelIsa::Avx2:
#ifdef GDA_X86
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case KernelIsa::Neon:
#ifdef GDA_NEON
      return true;
#else
      return false;
#endif
  }
  return false;
}

KernelIsa active_kernel() {
  int o = g_override.load(std::memory_order_relaxed);
  if (o >= 0) return static_cast<KernelIsa>(o);
  static const KernelIsa detected = [] {
    if (kernel_supported(KernelIsa::Avx2)) return KernelIsa::Avx2;
    if (kernel_supported(KernelIsa::Neon)) return KernelIsa::Neon;
    return KernelIsa::Scalar;
  }();
  return detected;
}

void set_kernel_override(std::optional<KernelIsa> isa) {
  if (isa && !kernel_supported(*isa)) throw std::invalid_argument("kernel not supported on this machine");
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void square_parity_with(KernelIsa isa, const F2Form& f, const uint64_t* a, uint8_t* out, size_t n) {
  switch (isa) {
#ifdef GDA_X86
    case KernelIsa::Avx2: square_parity_avx2(f, a, out, n); return;
#endif
#ifdef GDA_NEON
    case KernelIsa::Neon: square_parity_neon(f, a, out, n); return;
#endif
    default: square_parity_scalar(f, a, out, n); return;
  }
}

void commute_parity_with(KernelIsa isa, const F2Form& f, uint64_t a, const uint64_t* b, uint8_t* out, size_t n) {
  switch (isa) {
#ifdef GDA_X86
    case KernelIsa::Avx2: commute_parity_avx2(f, a, b, out, n); return;
#endif
#ifdef GDA_NEON
    case KernelIsa::Neon: commute_parity_neon(f, a, b, out, n); return;
#endif
    default: commute_parity_scalar(f, a, b, out, n); return;
  }
}

void square_parity(const F2Form& f, const uint64_t* a, uint8_t* out, size_t n) {
  square_parity_with(active_kernel(), f, a, out, n);
}

void commute_parity(const F2Form& f, uint64_t a, const uint64_t* b, uint8_t* out, size_t n) {
  commute_parity_with(active_kernel(), f, a, b, out, n);
}

}  // namespace gda
