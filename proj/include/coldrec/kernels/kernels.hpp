#pragma once

#include <cstddef>

namespace coldrec::kernels {

// Vector kernels behind every dense matrix operation. One scalar reference
// implementation plus SIMD variants; the fastest variant supported by the
// running CPU is selected once at startup. COLDREC_KERNEL=scalar|avx2|neon
// overrides the selection, and tests force variants explicitly to check that
// they agree with the scalar reference.
enum class Isa { scalar, avx2, neon };

struct Ops {
  double (*dot)(const double* x, const double* y, std::size_t n);
  void (*axpy)(double a, const double* x, double* y, std::size_t n);  // y += a*x
  double (*sum)(const double* x, std::size_t n);
  double (*sumsq)(const double* x, std::size_t n);
};

const Ops& scalar_ops();

bool isa_available(Isa isa);
// Switches the active variant; returns false (and keeps the current one)
// when the requested ISA is not compiled in or not supported by the CPU.
bool select(Isa isa);
Isa active_isa();
const char* isa_name(Isa isa);

double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);

}  // namespace coldrec::kernels
