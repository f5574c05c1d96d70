#include <atomic>
#include <cstdlib>
#include <cstring>

#include "kernels_internal.hpp"

namespace coldrec::kernels {

namespace {

std::atomic<const Ops*> g_active{nullptr};
std::atomic<Isa> g_active_isa{Isa::scalar};

const Ops* ops_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &scalar_ops();
    case Isa::avx2:
#if defined(COLDREC_HAVE_AVX2)
      if (cpu_has_avx2()) return &avx2_ops();
#endif
      return nullptr;
    case Isa::neon:
#if defined(COLDREC_HAVE_NEON)
      return &neon_ops();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

Isa initial_isa() {
  if (const char* env = std::getenv("COLDREC_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
    if (std::strcmp(env, "avx2") == 0 && ops_for(Isa::avx2)) return Isa::avx2;
    if (std::strcmp(env, "neon") == 0 && ops_for(Isa::neon)) return Isa::neon;
  }
  if (ops_for(Isa::avx2)) return Isa::avx2;
  if (ops_for(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

const Ops& active() {
  const Ops* ops = g_active.load(std::memory_order_acquire);
  if (!ops) {
    Isa isa = initial_isa();
    ops = ops_for(isa);
    g_active_isa.store(isa, std::memory_order_relaxed);
    g_active.store(ops, std::memory_order_release);
  }
  return *ops;
}

}  // namespace

bool isa_available(Isa isa) { return ops_for(isa) != nullptr; }

bool select(Isa isa) {
  const Ops* ops = ops_for(isa);
  if (!ops) return false;
  g_active_isa.store(isa, std::memory_order_relaxed);
  g_active.store(ops, std::memory_order_release);
  return true;
}

Isa active_isa() {
  active();
  return g_active_isa.load(std::memory_order_relaxed);
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "?";
}

double dot(const double* x, const double* y, std::size_t n) { return active().dot(x, y, n); }
void axpy(double a, const double* x, double* y, std::size_t n) { active().axpy(a, x, y, n); }
double sum(const double* x, std::size_t n) { return active().sum(x, n); }
double sumsq(const double* x, std::size_t n) { return active().sumsq(x, n); }

}  // namespace coldrec::kernels
