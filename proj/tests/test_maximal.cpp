#include "helpers.hpp"
#include "walshsum/maximal.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace walshsum;

TEST_CASE("subsequence specs") {
	CHECK(IndexSubsequence::parse("powers:1..3").indices() == std::vector<std::uint64_t>{2, 4, 8});
	CHECK(IndexSubsequence::parse("alternating:0..2").indices() == std::vector<std::uint64_t>{1, 5, 21});
	CHECK(IndexSubsequence::parse("list:1,3,7").indices() == std::vector<std::uint64_t>{1, 3, 7});
	CHECK(IndexSubsequence::parse("all:1..4").size() == 4);
	CHECK(IndexSubsequence::parse("powers:2..4").label() == "powers:2..4");
	CHECK_THROWS_AS(IndexSubsequence::parse("list:3,1"), std::invalid_argument);
	CHECK_THROWS_AS(IndexSubsequence::parse("powers"), std::invalid_argument);
	CHECK_THROWS_AS(IndexSubsequence::parse("weird:1..2"), std::invalid_argument);
	CHECK_THROWS_AS(IndexSubsequence::powers(1, 5).check_fits(GridSpec(4)), std::out_of_range);
}

TEST_CASE("maximal means") {
	const GridSpec spec(4);
	const auto F = matrices::fejer();
	const auto half = GridFunction1D::indicator(spec, DyadicInterval(1, 0));
	const auto s = IndexSubsequence::parse("list:2,4,8");
	CHECK(maximal_mean(F, s, GridFunction1D(spec)) == GridFunction1D(spec));

	GridFunction1D expected(spec);
	for (std::uint64_t n : s.indices()) {
		const auto m = apply_mean(F, n, half).abs();
		for (std::size_t l = 0; l < 16; ++l)
			expected[l] = std::max(expected[l], m[l]);
	}
	CHECK(max_abs_diff(maximal_mean(F, s, half), expected) < 1e-12);

	const auto L = matrices::nlog();
	const auto single = IndexSubsequence::parse("list:7");
	const auto f = walshsum::testing::random_signed(spec, 5);
	CHECK(max_abs_diff(maximal_mean(L, single, f), apply_mean(L, 7, f).abs()) < 1e-12);
}

TEST_CASE("maximal means over absolute kernels") {
	const GridSpec spec(6);
	const auto L = matrices::nlog();
	const auto F = matrices::fejer();
	const auto all = IndexSubsequence::all(40);
	for (std::uint64_t trial = 0; trial < 4; ++trial) {
		const auto f = random_test_function(spec, 3, trial);
		const auto plain = maximal_mean(L, all, f);
		const auto tilde = maximal_abs_mean(L, all, f);
		for (std::size_t l = 0; l < spec.size(); ++l)
			CHECK(tilde[l] >= plain[l] - 1e-10);
		const auto powers = IndexSubsequence::powers(0, 6);
		CHECK(max_abs_diff(maximal_abs_mean(F, powers, f), maximal_mean(F, powers, f)) < 1e-9);
	}
	const auto one = GridFunction1D::constant(spec, 1.0);
	double sup_norm = 0.0;
	for (std::uint64_t n : all.indices())
		sup_norm = std::max(sup_norm, kernel_V(L, n, spec).l1_norm());
	const auto m = maximal_abs_mean(L, all, one);
	for (double v : m.samples())
		CHECK(v == doctest::Approx(sup_norm).epsilon(1e-12));
}

TEST_CASE("dyadic maximal function") {
	const GridSpec k3(3);
	CHECK(max_abs_diff(dyadic_maximal(GridFunction1D::constant(k3, -2.0)), GridFunction1D::constant(k3, 2.0)) <
	      1e-15);
	CHECK(max_abs_diff(dyadic_maximal(walsh_sample(BinaryIndex(5), k3)), GridFunction1D::constant(k3, 1.0)) <
	      1e-15);
	const GridSpec k7(7);
	const auto f = walshsum::testing::random_signed(k7, 8);
	const auto e = dyadic_maximal(f);
	for (std::size_t l = 0; l < k7.size(); ++l)
		CHECK(e[l] >= std::abs(f.integral()) - 1e-15);
	// Agrees with the supremum of partial sums S_{2^n}.
	GridFunction1D sup(k7);
	for (unsigned n = 0; n <= 7; ++n) {
		const auto s = partial_sum(f, std::uint64_t{1} << n).abs();
		for (std::size_t l = 0; l < k7.size(); ++l)
			sup[l] = std::max(sup[l], s[l]);
	}
	CHECK(max_abs_diff(e, sup) < 1e-12);
}

TEST_CASE("norms") {
	const GridSpec spec(4);
	const auto half = GridFunction1D::indicator(spec, DyadicInterval(1, 0));
	CHECK(weak_quasinorm(half) == 0.5);
	CHECK(weak_quasinorm(GridFunction1D(spec)) == 0.0);
	CHECK(weak_quasinorm(-3.0 * GridFunction1D::indicator(spec, DyadicInterval(2, 3))) == 0.75);
	const auto f = walshsum::testing::random_signed(spec, 1);
	CHECK(weak_quasinorm(f) <= f.l1_norm() + 1e-15);
	CHECK(weak_quasinorm(3.0 * f) == doctest::Approx(3.0 * weak_quasinorm(f)));

	const double e = std::numbers::e;
	CHECK(llogl_norm(walshsum::testing::random_signed(spec, 2)) == 0.0);
	CHECK(llogl_norm(GridFunction1D::constant(spec, e)) == doctest::Approx(e));
	CHECK(llogl_norm(e * e * GridFunction1D::indicator(spec, DyadicInterval(2, 0))) == doctest::Approx(e * e / 2));

	CHECK(h1_norm(GridFunction1D::constant(spec, 1.0)) == doctest::Approx(1.0));
	CHECK(h1_norm(walsh_sample(BinaryIndex(1), spec)) == doctest::Approx(1.0));
	CHECK(h1_norm(f) >= f.l1_norm() - 1e-15);
}

TEST_CASE("random test functions are deterministic and nonnegative") {
	const GridSpec spec(8);
	for (std::uint64_t t = 0; t < 10; ++t) {
		const auto a = random_test_function(spec, 42, t);
		CHECK(a == random_test_function(spec, 42, t));
		for (double v : a.samples())
			CHECK(v >= 0.0);
		CHECK(a.l1_norm() > 0.0);
	}
	CHECK_FALSE(random_test_function(spec, 42, 0) == random_test_function(spec, 43, 0));
	const auto q = quantiles({4, 1, 3, 2});
	CHECK(q.size() == 3);
	CHECK(q[0].level == 0.5);
}

TEST_CASE("weak-type experiment") {
	const auto F = matrices::fejer();
	const auto r = weak_type_experiment(F, IndexSubsequence::powers(0, 6), 8, 6, 7);
	CHECK(r.trials == 8);
	CHECK(r.ratios.size() == 8);
	CHECK(r.max_ratio == *std::max_element(r.ratios.begin(), r.ratios.end()));
	CHECK(std::isfinite(r.max_ratio));
	const auto again = weak_type_experiment(F, IndexSubsequence::powers(0, 6), 8, 6, 7);
	CHECK(again.ratios == r.ratios);

	// f = 1 gives sup_a ||V_{n_a}||_1.
	const GridSpec spec(6);
	const auto one_op = make_abs_mean_operator(F, IndexSubsequence::all(64), spec);
	const auto out = one_op(GridFunction1D::constant(spec, 1.0));
	double sup_norm = 0.0;
	for (std::uint64_t n = 1; n <= 64; ++n)
		sup_norm = std::max(sup_norm, fejer_kernel(n, spec).l1_norm());
	CHECK(weak_quasinorm(out) == doctest::Approx(sup_norm).epsilon(1e-12));
}
