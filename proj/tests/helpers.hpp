#pragma once

#include "walshsum/maximal.hpp"

#include <vector>

namespace walshsum::testing {

/// Uniform random samples in [-1, 1) from the deterministic generator.
inline GridFunction1D random_signed(const GridSpec& spec, std::uint64_t seed) {
	SplitMix rng(seed);
	std::vector<double> v(spec.size());
	for (auto& x : v)
		x = 2.0 * rng.uniform() - 1.0;
	return GridFunction1D(spec, std::move(v));
}

/// Fourier coefficients by direct inner products against walsh_sample; O(4^K).
inline std::vector<double> naive_coefficients(const GridFunction1D& f) {
	const GridSpec& spec = f.spec();
	std::vector<double> c(spec.size(), 0.0);
	for (std::uint64_t n = 0; n < spec.size(); ++n) {
		const auto w = walsh_sample(BinaryIndex(n), spec);
		double s = 0.0;
		for (std::size_t l = 0; l < spec.size(); ++l)
			s += f[l] * w[l];
		c[n] = s * spec.cell_width();
	}
	return c;
}

}  // namespace walshsum::testing
