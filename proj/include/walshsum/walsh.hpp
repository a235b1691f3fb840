#pragma once

// Walsh-Paley functions on the dyadic grid, the fast Walsh-Hadamard
// transform in Paley order, partial sums, Dirichlet/Fejer kernels and
// dyadic convolution.

#include "walshsum/dyadic.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace walshsum {

/// A function constant on each cell [l/2^K, (l+1)/2^K).
class GridFunction1D {
public:
	explicit GridFunction1D(GridSpec spec);
	GridFunction1D(GridSpec spec, std::vector<double> samples);

	static GridFunction1D constant(GridSpec spec, double c);
	/// Indicator of the dyadic interval (depth <= K).
	static GridFunction1D indicator(GridSpec spec, const DyadicInterval& interval);

	const GridSpec& spec() const { return spec_; }
	std::size_t size() const { return samples_.size(); }

	double operator[](std::size_t l) const { return samples_[l]; }
	double& operator[](std::size_t l) { return samples_[l]; }

	std::span<const double> samples() const { return samples_; }
	std::span<double> samples() { return samples_; }

	/// Integral over [0,1).
	double integral() const;
	double l1_norm() const;
	double max_abs() const;

	GridFunction1D abs() const;

	GridFunction1D& operator+=(const GridFunction1D& o);
	GridFunction1D& operator-=(const GridFunction1D& o);
	GridFunction1D& operator*=(double c);

	friend GridFunction1D operator+(GridFunction1D a, const GridFunction1D& b) { return a += b; }
	friend GridFunction1D operator-(GridFunction1D a, const GridFunction1D& b) { return a -= b; }
	friend GridFunction1D operator*(GridFunction1D a, double c) { return a *= c; }
	friend GridFunction1D operator*(double c, GridFunction1D a) { return a *= c; }
	/// Pointwise product.
	friend GridFunction1D operator*(const GridFunction1D& a, const GridFunction1D& b);

	friend bool operator==(const GridFunction1D&, const GridFunction1D&) = default;

private:
	GridSpec spec_;
	std::vector<double> samples_;
};

/// max_l |a(l) - b(l)|.
double max_abs_diff(const GridFunction1D& a, const GridFunction1D& b);

/// Walsh-Fourier coefficients in Paley order: entry i is the integral of f w_i.
struct WalshSpectrum {
	GridSpec spec;
	std::vector<double> coefficients;
};

/// K-bit reversal of i; maps Paley index n to its natural (Hadamard) row.
std::uint64_t reverse_bits(std::uint64_t i, unsigned K);

/// In-place unnormalized Hadamard transform in natural order; size is a power of two.
void hadamard_in_place(std::span<double> data);

/// w_n sampled on the grid. Throws std::out_of_range for n >= 2^K.
GridFunction1D walsh_sample(BinaryIndex n, const GridSpec& spec);

/// w_n at grid point l: (-1)^{popcount(rev(n) & l)}.
int walsh_value(std::uint64_t n, std::uint64_t l, const GridSpec& spec);

WalshSpectrum fwht(const GridFunction1D& f);
GridFunction1D inverse_fwht(const WalshSpectrum& spectrum);

/// Multiply coefficient i by weights[i] (missing weights count as 0) and reconstruct.
GridFunction1D spectral_multiply(const GridFunction1D& f, std::span<const double> weights);

/// S_m(f) = sum_{i<m} f^(i) w_i; S_0 = 0.
GridFunction1D partial_sum(const GridFunction1D& f, std::uint64_t m);

/// D_n = sum_{k<n} w_k; D_0 = 0.
GridFunction1D dirichlet_kernel(std::uint64_t n, const GridSpec& spec);

/// K_n = (1/n) sum_{k=1}^{n} D_k; K_0 = 0.
GridFunction1D fejer_kernel(std::uint64_t n, const GridSpec& spec);

/// (f * g)(x) = integral of f(t) g(x (+) t), via the spectra.
GridFunction1D dyadic_convolve(const GridFunction1D& f, const GridFunction1D& g);

}  // namespace walshsum
