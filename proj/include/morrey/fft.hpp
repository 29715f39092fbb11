#pragma once

#include <vector>

#include "morrey/numeric.hpp"

namespace morrey {

// Thin FFTW front end. Plans are cached per size behind a mutex; execution
// is reentrant, so polar sweeps can transform from many threads at once.

// out[k] = sum_n in[n] * exp(+i 2*pi*n*k / m), in zero-padded to m.
// Evaluates a polynomial with coefficients `in` at the m-th roots of unity
// (times a radius already folded into `in`).
std::vector<cd> fft_eval_circle(const std::vector<cd>& in, std::size_t m);

// Forward real-to-complex DFT normalized by 1/m: returns coefficients
// k = 0..m/2 of the trigonometric interpolant of `samples`.
std::vector<cd> fft_real_coeffs(const std::vector<double>& samples);

}  // namespace morrey
