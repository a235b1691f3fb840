#include "helpers.hpp"
#include "walshsum/tensor2d.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace walshsum;
using walshsum::testing::random_signed;

namespace {

GridFunction2D random_2d(const GridSpec& spec, std::uint64_t seed) {
	SplitMix rng(seed);
	std::vector<double> v(spec.size() * spec.size());
	for (auto& x : v)
		x = 2.0 * rng.uniform() - 1.0;
	return GridFunction2D(spec, std::move(v));
}

// (F * (V0 (x) V1))(x) by a direct quadruple sum.
GridFunction2D kernel_path(const TransformationMatrix& T0, std::uint64_t n0, const TransformationMatrix& T1,
                           std::uint64_t n1, const GridFunction2D& F) {
	const GridSpec& spec = F.spec();
	const auto V0 = kernel_V(T0, n0, spec);
	const auto V1 = kernel_V(T1, n1, spec);
	const std::size_t N = spec.size();
	GridFunction2D out(spec);
	for (std::size_t x0 = 0; x0 < N; ++x0)
		for (std::size_t x1 = 0; x1 < N; ++x1) {
			double s = 0.0;
			for (std::size_t t0 = 0; t0 < N; ++t0)
				for (std::size_t t1 = 0; t1 < N; ++t1)
					s += F(t0, t1) * V0[x0 ^ t0] * V1[x1 ^ t1];
			out(x0, x1) = s * F.cell_area();
		}
	return out;
}

}  // namespace

TEST_CASE("grid functions in two variables") {
	const GridSpec spec(3);
	const auto f = random_signed(spec, 1);
	const auto g = random_signed(spec, 2);
	const auto F = GridFunction2D::separable(f, g);
	CHECK(F(2, 5) == f[2] * g[5]);
	CHECK(F.slice(0, 5) == f * g[5]);
	CHECK(F.slice(1, 2) == g * f[2]);
	CHECK(F.l1_norm() == doctest::Approx(f.l1_norm() * g.l1_norm()));
	CHECK_THROWS_AS(GridFunction2D(spec, std::vector<double>(10)), std::invalid_argument);
}

TEST_CASE("axis means") {
	const GridSpec spec(5);
	const auto L = matrices::nlog();
	const auto c = GridFunction2D::constant(spec, 3.0);
	CHECK(max_abs_diff(apply_axis(L, 9, c, 0), GridFunction2D::constant(spec, 3.0 * (1 - L.entry(9, 9)))) < 1e-12);
	const auto f = random_signed(spec, 3);
	const auto g = random_signed(spec, 4);
	const auto F = GridFunction2D::separable(f, g);
	CHECK(max_abs_diff(apply_axis(L, 9, F, 0), GridFunction2D::separable(apply_mean(L, 9, f), g)) < 1e-12);
	CHECK(max_abs_diff(apply_axis(L, 9, F, 1), GridFunction2D::separable(f, apply_mean(L, 9, g))) < 1e-12);
	CHECK(max_abs_diff(apply_axis(matrices::identity(), 32, F, 0), F) < 1e-12);
	CHECK_THROWS(apply_axis(L, 9, F, 2));
}

TEST_CASE("tensor means") {
	const GridSpec k6(6);
	const auto F = matrices::fejer();
	const auto L = matrices::nlog();
	const auto R = random_2d(k6, 10);
	CHECK(max_abs_diff(tensor_mean(F, 13, L, 40, R, AxisOrder::first_axis_first),
	                   tensor_mean(F, 13, L, 40, R, AxisOrder::second_axis_first)) <= 1e-10);

	const auto c = GridFunction2D::constant(k6, 2.0);
	const double expected = 2.0 * (1 - F.entry(13, 13)) * (1 - L.entry(40, 40));
	CHECK(max_abs_diff(tensor_mean(F, 13, L, 40, c), GridFunction2D::constant(k6, expected)) < 1e-12);

	const std::uint64_t a = 5, b = 22;
	const auto W = GridFunction2D::separable(walsh_sample(BinaryIndex(a), k6), walsh_sample(BinaryIndex(b), k6));
	const double lambda = mean_weights(F, 13)[a] * mean_weights(L, 40)[b];
	CHECK(max_abs_diff(tensor_mean(F, 13, L, 40, W), lambda * W) < 1e-12);

	const GridSpec k4(4);
	const auto small = random_2d(k4, 11);
	CHECK(max_abs_diff(tensor_mean(L, 7, F, 11, small), kernel_path(L, 7, F, 11, small)) < 1e-12);

	const auto coeffs = fwht2d(R);
	const auto w0 = mean_weights(F, 13);
	const auto w1 = mean_weights(L, 40);
	const auto full = tensor_mean(F, 13, L, 40, R);
	for (std::size_t x0 : {0u, 17u, 63u})
		for (std::size_t x1 : {3u, 40u})
			CHECK(tensor_mean_at(coeffs, k6, w0, w1, x0, x1) == doctest::Approx(full(x0, x1)).epsilon(1e-12));
}

TEST_CASE("tensor maximal operator") {
	const GridSpec k5(5);
	const auto F = matrices::fejer();
	const auto L = matrices::nlog();
	const auto R = random_2d(k5, 12);
	const auto one0 = IndexSubsequence::parse("list:7");
	const auto one1 = IndexSubsequence::parse("list:19");
	CHECK(max_abs_diff(tensor_maximal(F, one0, L, one1, R), tensor_mean(F, 7, L, 19, R).abs()) < 1e-12);
	CHECK(tensor_maximal(F, one0, L, one1, GridFunction2D(k5)) == GridFunction2D(k5));

	const auto s0 = IndexSubsequence::all(32);
	const auto s1 = IndexSubsequence::powers(0, 5);
	const auto m = tensor_maximal(L, s0, F, s1, R);
	GridFunction2D brute(k5);
	for (std::uint64_t a : s0.indices())
		for (std::uint64_t b : s1.indices())
			brute = pointwise_max(brute, tensor_mean(L, a, F, b, R).abs());
	CHECK(max_abs_diff(m, brute) < 1e-12);

	const auto major = iterated_majorant(L, s0, F, s1, R);
	for (std::size_t k = 0; k < m.samples().size(); ++k)
		CHECK(m.samples()[k] <= major.samples()[k] + 1e-10);
	CHECK(max_abs_diff(tensor_maximal(L, s0, F, s1, 2.5 * R), 2.5 * m) < 1e-11);
}

TEST_CASE("two-dimensional norms and the hybrid maximal function") {
	const GridSpec k4(4);
	const auto half = GridFunction1D::indicator(k4, DyadicInterval(1, 0));
	CHECK(weak_quasinorm_2d(GridFunction2D::separable(half, half)) == 0.25);
	CHECK(llogl_2d(random_2d(k4, 1)) == 0.0);
	CHECK(llogl_2d(GridFunction2D::constant(k4, std::numbers::e)) == doctest::Approx(std::numbers::e));

	CHECK(max_abs_diff(hybrid_maximal(GridFunction2D::constant(k4, -4.0)), GridFunction2D::constant(k4, 4.0)) < 1e-15);
	const auto g = random_signed(k4, 5);
	const auto H = hybrid_maximal(GridFunction2D::separable(half, g));
	for (std::size_t x0 = 0; x0 < 8; ++x0)
		for (std::size_t x1 = 0; x1 < 16; ++x1)
			CHECK(H(x0, x1) == doctest::Approx(std::abs(g[x1])));
	const auto R = random_2d(k4, 6);
	const auto HR = hybrid_maximal(R);
	for (std::size_t k = 0; k < R.samples().size(); ++k)
		CHECK(HR.samples()[k] >= std::abs(R.samples()[k]));
}

TEST_CASE("llogl experiment") {
	const auto F = matrices::fejer();
	const auto p = IndexSubsequence::powers(0, 4);
	const auto r = llogl_weak_type_experiment(F, p, F, p, 6, 4, 3);
	CHECK(r.ratios.size() == 6);
	CHECK(std::isfinite(r.max_ratio));
	CHECK(llogl_weak_type_experiment(F, p, F, p, 6, 4, 3).ratios == r.ratios);
	const GridSpec k4(4);
	const auto m = tensor_maximal(F, p, F, p, GridFunction2D::constant(k4, 1.0));
	CHECK(weak_quasinorm_2d(m) <= 1.0 + 1e-12);
	for (std::uint64_t t = 0; t < 5; ++t)
		for (double v : random_test_function_2d(k4, 9, t).samples())
			CHECK(v >= 0.0);
}
