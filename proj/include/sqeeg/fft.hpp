#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sqeeg/types.hpp"

namespace sqeeg::fft {

using Complex = std::complex<double>;

/// Real-to-complex forward transform; returns the n/2 + 1 non-negative bins.
std::vector<Complex> rfft(std::span<const double> x);

/// Inverse of rfft, normalized by n.
Series irfft(std::span<const Complex> spectrum, std::size_t n);

/// Complex transform in place. The inverse is normalized by n.
void transform(std::vector<Complex>& data, bool inverse);

/// Smallest size >= n whose prime factors are all in {2, 3, 5, 7}.
std::size_t good_size(std::size_t n);

}  // namespace sqeeg::fft
