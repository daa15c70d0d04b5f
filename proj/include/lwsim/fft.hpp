#ifndef LWSIM_FFT_HPP
#define LWSIM_FFT_HPP

#include <complex>
#include <vector>

namespace lwsim::fft {

// Unnormalized forward DFT.
std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& in);

// Inverse DFT including the 1/N factor.
std::vector<std::complex<double>> inverse(const std::vector<std::complex<double>>& in);

// Signed frequency of DFT bin k for an N-point transform at rate fs.
// Bins above N/2 map to negative frequencies; for even N, bin N/2 is -fs/2.
double bin_frequency(std::size_t k, std::size_t n, double fs);

} // namespace lwsim::fft

#endif
