#include "walshsum/walsh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace walshsum {

GridFunction1D::GridFunction1D(GridSpec spec) : spec_(spec), samples_(spec.size(), 0.0) {}

GridFunction1D::GridFunction1D(GridSpec spec, std::vector<double> samples)
    : spec_(spec), samples_(std::move(samples)) {
	if (samples_.size() != spec_.size())
		throw std::invalid_argument("grid function needs 2^K samples, got " +
		                            std::to_string(samples_.size()));
}

GridFunction1D GridFunction1D::constant(GridSpec spec, double c) {
	return GridFunction1D(spec, std::vector<double>(spec.size(), c));
}

GridFunction1D GridFunction1D::indicator(GridSpec spec, const DyadicInterval& interval) {
	GridFunction1D f(spec);
	const auto [first, last] = interval.cells(spec);
	std::fill(f.samples_.begin() + static_cast<std::ptrdiff_t>(first),
	          f.samples_.begin() + static_cast<std::ptrdiff_t>(last), 1.0);
	return f;
}

double GridFunction1D::integral() const {
	double s = 0.0;
	for (double v : samples_)
		s += v;
	return s * spec_.cell_width();
}

double GridFunction1D::l1_norm() const {
	double s = 0.0;
	for (double v : samples_)
		s += std::abs(v);
	return s * spec_.cell_width();
}

double GridFunction1D::max_abs() const {
	double m = 0.0;
	for (double v : samples_)
		m = std::max(m, std::abs(v));
	return m;
}

GridFunction1D GridFunction1D::abs() const {
	GridFunction1D r = *this;
	for (double& v : r.samples_)
		v = std::abs(v);
	return r;
}

GridFunction1D& GridFunction1D::operator+=(const GridFunction1D& o) {
	if (!(spec_ == o.spec_))
		throw std::invalid_argument("grid resolutions differ");
	for (std::size_t l = 0; l < samples_.size(); ++l)
		samples_[l] += o.samples_[l];
	return *this;
}

GridFunction1D& GridFunction1D::operator-=(const GridFunction1D& o) {
	if (!(spec_ == o.spec_))
		throw std::invalid_argument("grid resolutions differ");
	for (std::size_t l = 0; l < samples_.size(); ++l)
		samples_[l] -= o.samples_[l];
	return *this;
}

GridFunction1D& GridFunction1D::operator*=(double c) {
	for (double& v : samples_)
		v *= c;
	return *this;
}

GridFunction1D operator*(const GridFunction1D& a, const GridFunction1D& b) {
	if (!(a.spec() == b.spec()))
		throw std::invalid_argument("grid resolutions differ");
	GridFunction1D r = a;
	for (std::size_t l = 0; l < r.size(); ++l)
		r[l] *= b[l];
	return r;
}

double max_abs_diff(const GridFunction1D& a, const GridFunction1D& b) {
	if (!(a.spec() == b.spec()))
		throw std::invalid_argument("grid resolutions differ");
	double m = 0.0;
	for (std::size_t l = 0; l < a.size(); ++l)
		m = std::max(m, std::abs(a[l] - b[l]));
	return m;
}

std::uint64_t reverse_bits(std::uint64_t i, unsigned K) {
	std::uint64_t r = 0;
	for (unsigned b = 0; b < K; ++b, i >>= 1)
		r = (r << 1) | (i & 1U);
	return r;
}

void hadamard_in_place(std::span<double> data) {
	const std::size_t n = data.size();
	if (!std::has_single_bit(n))
		throw std::invalid_argument("Hadamard transform needs a power-of-two length");
	for (std::size_t h = 1; h < n; h <<= 1) {
		for (std::size_t i = 0; i < n; i += h << 1) {
			for (std::size_t j = i; j < i + h; ++j) {
				const double a = data[j];
				const double b = data[j + h];
				data[j] = a + b;
				data[j + h] = a - b;
			}
		}
	}
}

int walsh_value(std::uint64_t n, std::uint64_t l, const GridSpec& spec) {
	const std::uint64_t r = reverse_bits(n, spec.resolution());
	return (std::popcount(r & l) & 1) ? -1 : 1;
}

GridFunction1D walsh_sample(BinaryIndex n, const GridSpec& spec) {
	if (n.value() >= spec.size())
		throw std::out_of_range("Walsh index " + std::to_string(n.value()) +
		                        " not representable at resolution " +
		                        std::to_string(spec.resolution()));
	GridFunction1D w(spec);
	const std::uint64_t r = reverse_bits(n.value(), spec.resolution());
	for (std::size_t l = 0; l < w.size(); ++l)
		w[l] = (std::popcount(r & l) & 1) ? -1.0 : 1.0;
	return w;
}

// Paley coefficient i sits at natural Hadamard row reverse_bits(i).
WalshSpectrum fwht(const GridFunction1D& f) {
	const GridSpec& spec = f.spec();
	std::vector<double> buf(f.samples().begin(), f.samples().end());
	hadamard_in_place(buf);
	const unsigned K = spec.resolution();
	const double scale = spec.cell_width();
	std::vector<double> coeffs(buf.size());
	for (std::size_t i = 0; i < buf.size(); ++i)
		coeffs[i] = buf[reverse_bits(i, K)] * scale;
	return {spec, std::move(coeffs)};
}

GridFunction1D inverse_fwht(const WalshSpectrum& spectrum) {
	const GridSpec& spec = spectrum.spec;
	if (spectrum.coefficients.size() != spec.size())
		throw std::invalid_argument("spectrum length does not match its resolution");
	const unsigned K = spec.resolution();
	std::vector<double> buf(spectrum.coefficients.size());
	for (std::size_t i = 0; i < buf.size(); ++i)
		buf[reverse_bits(i, K)] = spectrum.coefficients[i];
	hadamard_in_place(buf);
	return GridFunction1D(spec, std::move(buf));
}

GridFunction1D spectral_multiply(const GridFunction1D& f, std::span<const double> weights) {
	WalshSpectrum s = fwht(f);
	for (std::size_t i = 0; i < s.coefficients.size(); ++i)
		s.coefficients[i] *= i < weights.size() ? weights[i] : 0.0;
	return inverse_fwht(s);
}

GridFunction1D partial_sum(const GridFunction1D& f, std::uint64_t m) {
	if (m > f.size())
		throw std::out_of_range("partial sum index exceeds 2^K");
	const std::vector<double> ones(m, 1.0);
	return spectral_multiply(f, ones);
}

GridFunction1D dirichlet_kernel(std::uint64_t n, const GridSpec& spec) {
	if (n > spec.size())
		throw std::out_of_range("Dirichlet index exceeds 2^K");
	WalshSpectrum s{spec, std::vector<double>(spec.size(), 0.0)};
	std::fill(s.coefficients.begin(), s.coefficients.begin() + static_cast<std::ptrdiff_t>(n), 1.0);
	return inverse_fwht(s);
}

GridFunction1D fejer_kernel(std::uint64_t n, const GridSpec& spec) {
	if (n > spec.size())
		throw std::out_of_range("Fejer index exceeds 2^K");
	// K_n^(j) = (n - j) / n for j < n.
	WalshSpectrum s{spec, std::vector<double>(spec.size(), 0.0)};
	for (std::uint64_t j = 0; j < n; ++j)
		s.coefficients[j] = static_cast<double>(n - j) / static_cast<double>(n);
	return inverse_fwht(s);
}

GridFunction1D dyadic_convolve(const GridFunction1D& f, const GridFunction1D& g) {
	if (!(f.spec() == g.spec()))
		throw std::invalid_argument("dyadic_convolve: mismatched resolutions");
	WalshSpectrum a = fwht(f);
	const WalshSpectrum b = fwht(g);
	for (std::size_t i = 0; i < a.coefficients.size(); ++i)
		a.coefficients[i] *= b.coefficients[i];
	return inverse_fwht(a);
}

}  // namespace walshsum
