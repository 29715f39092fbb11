#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace morrey {

using cd = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// Knuth two-sum: s + e == a + b exactly.
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bp = s - a;
  e = (a - bp) + (b - (s - bp));
}

// Kahan-compensated accumulator. Summation order is whatever the caller
// uses; all library loops run left to right so results are reproducible.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double s, e;
    two_sum(sum, x, s, e);
    sum = s;
    comp += e;
  }
  double value() const { return sum + comp; }
};

struct KahanSumComplex {
  KahanSum re, im;
  void add(cd x) {
    re.add(x.real());
    im.add(x.imag());
  }
  cd value() const { return {re.value(), im.value()}; }
};

// Runs body(i) for i in [0, n). Each index writes only its own outputs, so
// results are identical for any worker count; reductions stay with the
// caller in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Worker cap for parallel_for (0 = hardware concurrency). Set once at
// startup by the CLI; tests may lower it.
void set_max_threads(unsigned n);
unsigned max_threads();

}  // namespace morrey
