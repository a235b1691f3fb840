#include "helpers.hpp"
#include "walshsum/summability.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

using namespace walshsum;
using walshsum::testing::random_signed;

namespace {

bool rows_equal(const std::vector<double>& a, const std::vector<double>& b, double tol) {
	if (a.size() != b.size())
		return false;
	for (std::size_t i = 0; i < a.size(); ++i)
		if (std::abs(a[i] - b[i]) > tol)
			return false;
	return true;
}

}  // namespace

TEST_CASE("row validation rejects bad rows") {
	CHECK_NOTHROW(validate_row(std::vector<double>{0.5, 0.5}, 1));
	CHECK_THROWS_AS(validate_row(std::vector<double>{0.6, 0.5}, 1), MatrixValidationError);
	CHECK_THROWS_AS(validate_row(std::vector<double>{0.25, 0.75}, 1), MatrixValidationError);
	CHECK_THROWS_AS(validate_row(std::vector<double>{1.5, -0.5}, 1), MatrixValidationError);
	CHECK_THROWS_AS(validate_row(std::vector<double>{1.0}, 1), MatrixValidationError);
	CHECK_THROWS_AS(matrices::custom({{1.0}, {0.2, 0.8}}, "bad").row(1), MatrixValidationError);
}

TEST_CASE("built-in rows") {
	CHECK(rows_equal(*matrices::fejer().row(4), {0.25, 0.25, 0.25, 0.25, 0.0}, 0.0));
	CHECK(rows_equal(*matrices::fejer().row(0), {1.0}, 0.0));
	CHECK(rows_equal(*matrices::nlog().row(2), {6.0 / 11, 3.0 / 11, 2.0 / 11}, 1e-15));
	CHECK(rows_equal(*matrices::identity().row(3), {1.0, 0.0, 0.0, 0.0}, 0.0));
	// (C,1) weights A_{n-k}^0 / A_n^1 = 1/(n+1).
	CHECK(rows_equal(*matrices::cesaro(1.0).row(3), {0.25, 0.25, 0.25, 0.25}, 1e-15));
	const auto half = matrices::cesaro(0.5).row(2);
	CHECK((*half)[0] == doctest::Approx(8.0 / 15.0));
	CHECK((*half)[2] == doctest::Approx(cesaro_A(-0.5, 2) / cesaro_A(0.5, 2)));

	for (const char* spec : {"fejer", "cesaro:0.25", "cesaro:0.5", "cesaro:0.75", "nlog", "identity"}) {
		const auto T = parse_matrix(spec);
		for (std::uint64_t n = 0; n <= (std::uint64_t{1} << 14); n += (n < 300 ? 1 : 997))
			CHECK_NOTHROW(validate_row(*T.row(n), n));
	}
}

TEST_CASE("Cesaro numbers") {
	CHECK(cesaro_A(0.5, 0) == 1.0);
	CHECK(cesaro_A(0.5, 2) == doctest::Approx(15.0 / 8.0));
	for (std::uint64_t n = 0; n < 50; ++n)
		CHECK(cesaro_A(1.0, n) == doctest::Approx(static_cast<double>(n + 1)));
}

TEST_CASE("matrix spec grammar") {
	CHECK(parse_matrix("fejer").name() == "fejer");
	CHECK_THROWS_AS(parse_matrix("fejer:2"), std::invalid_argument);
	CHECK_THROWS_AS(parse_matrix("cesaro"), std::invalid_argument);
	CHECK_THROWS_AS(parse_matrix("cesaro:abc"), std::invalid_argument);
	CHECK_THROWS_AS(parse_matrix("cesaro:1.5"), std::invalid_argument);
	CHECK_THROWS_AS(parse_matrix("bogus"), std::invalid_argument);

	const std::string rows_path = "summability_custom_rows.csv";
	{
		std::ofstream out(rows_path);
		out << "# rows 0..2\n1\n0.5,0.5\n0.5,0.25,0.25\n";
	}
	const auto custom = parse_matrix("custom:" + rows_path);
	CHECK(custom.entry(1, 2) == 0.25);
	CHECK_THROWS_AS(custom.row(3), std::out_of_range);

	const std::string seq_path = "summability_alpha_seq.csv";
	{
		std::ofstream out(seq_path);
		for (int i = 0; i < 10; ++i)
			out << (i % 2 ? "0.5\n" : "1\n");
	}
	const auto cs = parse_matrix("cesaro-seq:" + seq_path);
	CHECK(rows_equal(*cs.row(3), *matrices::cesaro(0.5).row(3), 1e-15));
	CHECK(rows_equal(*cs.row(4), *matrices::cesaro(1.0).row(4), 1e-15));
	std::remove(rows_path.c_str());
	std::remove(seq_path.c_str());
}

TEST_CASE("tau and upsilon") {
	const auto F = matrices::fejer();
	const auto L = matrices::nlog();
	CHECK(tau(F, 2, 4) == doctest::Approx(0.75));
	CHECK(tau(L, 1, 2) == doctest::Approx(9.0 / 11.0));
	for (std::uint64_t n = 1; n < 40; ++n) {
		CHECK(tau(L, n, n) == doctest::Approx(1.0));
		for (std::uint64_t s = 0; s < n; ++s)
			CHECK(tau(L, s, n) <= tau(L, s + 1, n) + 1e-15);
	}
	CHECK(upsilon(F, BinaryIndex(4)) == doctest::Approx(1.75));
	CHECK(upsilon(F, BinaryIndex(7)) == doctest::Approx(5.0 / 7.0));
	for (const char* spec : {"fejer", "cesaro:0.5", "nlog", "identity"})
		CHECK(upsilon(parse_matrix(spec), BinaryIndex(1)) == doctest::Approx(1.0));
	CHECK_THROWS_AS(upsilon(F, BinaryIndex(0)), std::invalid_argument);
}

TEST_CASE("kernels") {
	const GridSpec spec(7);
	const auto F = matrices::fejer();
	const auto I = matrices::identity();
	const auto L = matrices::nlog();
	for (std::uint64_t n : {1u, 2u, 3u, 17u, 64u, 100u, 128u}) {
		CHECK(max_abs_diff(kernel_V(F, n, spec), fejer_kernel(n, spec)) < 1e-12);
		CHECK(max_abs_diff(kernel_V(I, n, spec), dirichlet_kernel(n, spec)) < 1e-12);
		const auto V = kernel_V(L, n, spec);
		CHECK(V.integral() == doctest::Approx(1.0 - L.entry(n, n)).epsilon(1e-12));
	}
}

TEST_CASE("kernel decomposition") {
	const GridSpec k4(4);
	auto check = [](const TransformationMatrix& T, std::uint64_t n, const GridSpec& spec, double tol) {
		const auto parts = kernel_decomposition(T, n, spec);
		CHECK(max_abs_diff(parts.first + parts.second, kernel_V(T, n, spec)) <= tol);
	};
	check(matrices::fejer(), 3, k4, 1e-12);
	const GridSpec k8(8);
	for (const char* s : {"fejer", "cesaro:0.5", "nlog", "identity", "cesaro:1"})
		for (std::uint64_t n : {1u, 2u, 4u, 5u, 64u, 77u, 170u, 255u, 256u})
			check(parse_matrix(s), n, k8, 1e-10);
}

TEST_CASE("apply_mean") {
	const GridSpec spec(6);
	const auto F = matrices::fejer();
	const auto L = matrices::nlog();
	const auto c = GridFunction1D::constant(spec, 2.5);
	for (std::uint64_t n : {1u, 5u, 33u}) {
		const double expected = 2.5 * (1.0 - L.entry(n, n));
		CHECK(max_abs_diff(apply_mean(L, n, c), GridFunction1D::constant(spec, expected)) < 1e-12);
	}
	const auto f = random_signed(spec, 9);
	for (std::uint64_t n : {0u, 1u, 13u, 64u})
		CHECK(max_abs_diff(apply_mean(matrices::identity(), n, f), partial_sum(f, n)) < 1e-12);
	const auto w1 = walsh_sample(BinaryIndex(1), spec);
	CHECK(max_abs_diff(apply_mean(F, 2, w1), 0.5 * w1) < 1e-15);
	for (std::uint64_t n : {3u, 31u, 50u})
		CHECK(max_abs_diff(apply_mean(L, n, f), apply_mean_via_kernel(L, n, f)) < 1e-10);
}

TEST_CASE("c2 quantity") {
	for (double alpha : {0.1, 0.5, 1.0})
		for (unsigned m = 1; m <= 20; ++m)
			CHECK(c2_quantity(alpha, BinaryIndex(std::uint64_t{1} << m)) == std::exp2(-alpha) + 1.0);
	for (unsigned m = 1; m < 10; ++m)
		CHECK(c2_quantity(0.3, BinaryIndex((std::uint64_t{2} << m) - 1)) == 1.0);
	double prev = 0.0;
	for (unsigned a = 2; a <= 8; ++a) {
		std::uint64_t n = 0;
		for (unsigned j = 0; j <= a; ++j)
			n += std::uint64_t{1} << (2 * j);
		const double c = c2_quantity(0.1, BinaryIndex(n));
		CHECK(c > prev);
		prev = c;
	}
	CHECK_THROWS_AS(c2_quantity(0.0, BinaryIndex(4)), std::invalid_argument);
}
