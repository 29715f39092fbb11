#include "morrey/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace morrey {

namespace {

std::mutex g_plan_mutex;

fftw_plan backward_plan(std::size_t m) {
  static std::map<std::size_t, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<fftw_complex> a(m), b(m);
  fftw_plan p = fftw_plan_dft_1d(static_cast<int>(m), a.data(), b.data(),
                                 FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw std::runtime_error("fftw plan creation failed");
  cache.emplace(m, p);
  return p;
}

fftw_plan r2c_plan(std::size_t m) {
  static std::map<std::size_t, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<double> a(m);
  std::vector<fftw_complex> b(m / 2 + 1);
  fftw_plan p = fftw_plan_dft_r2c_1d(static_cast<int>(m), a.data(), b.data(),
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw std::runtime_error("fftw plan creation failed");
  cache.emplace(m, p);
  return p;
}

}  // namespace

std::vector<cd> fft_eval_circle(const std::vector<cd>& in, std::size_t m) {
  if (in.size() > m)
    throw std::invalid_argument("fft_eval_circle: series degree exceeds grid size");
  fftw_plan p = backward_plan(m);
  std::vector<cd> padded(m, cd{0.0, 0.0});
  std::copy(in.begin(), in.end(), padded.begin());
  std::vector<cd> out(m);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(padded.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

std::vector<cd> fft_real_coeffs(const std::vector<double>& samples) {
  const std::size_t m = samples.size();
  fftw_plan p = r2c_plan(m);
  std::vector<double> in(samples);
  std::vector<cd> out(m / 2 + 1);
  fftw_execute_dft_r2c(p, in.data(), reinterpret_cast<fftw_complex*>(out.data()));
  const double inv = 1.0 / static_cast<double>(m);
  for (auto& c : out) c *= inv;
  return out;
}

}  // namespace morrey
