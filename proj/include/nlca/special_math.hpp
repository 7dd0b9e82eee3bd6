#pragma once

#include <span>

namespace nlca {

/// Modified Bessel function of the first kind, order 0. Relative error is
/// below 1e-8 over |x| <= 700; arguments whose result would overflow a
/// double throw std::range_error.
double bessel_i0(double x);

/// Modified Bessel function of the first kind, order 1 (odd in x).
double bessel_i1(double x);

/// Exponentially scaled variants exp(-|x|) * I0(x) and exp(-|x|) * I1(x),
/// finite for any finite argument.
double bessel_i0e(double x);
double bessel_i1e(double x);

/// SNR-dependent factor mapping the magnitude-domain noise variance of a
/// Rician sample to the variance of its underlying Gaussian components:
///
///   xi(theta) = 2 + theta^2
///             - (pi/8) exp(-theta^2/2)
///               [ (2 + theta^2) I0(theta^2/4) + theta^2 I1(theta^2/4) ]^2
///
/// Evaluated through the scaled Bessel functions, which cancels the
/// exponential factor algebraically, so it neither overflows nor switches
/// branches at large theta. xi(0) = 2 - pi/2 and xi -> 1 as theta -> inf.
double xi_correction(double theta);

/// Robust scale estimate median(|x_i|) / 0.6745. The empty input throws;
/// an even count uses the mean of the two central order statistics.
double mad_sigma(std::span<const float> samples);
double mad_sigma(std::span<const double> samples);

} // namespace nlca
