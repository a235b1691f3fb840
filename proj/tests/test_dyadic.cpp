#include "walshsum/dyadic.hpp"

#include <doctest.h>

using namespace walshsum;

TEST_CASE("binary digits and order") {
	CHECK(BinaryIndex(0).bits().empty());
	CHECK_FALSE(BinaryIndex(0).order().has_value());
	CHECK(BinaryIndex(5).bits() == std::vector<int>{1, 0, 1});
	CHECK(BinaryIndex(5).order() == 2u);
	CHECK(BinaryIndex(12).bits() == std::vector<int>{0, 0, 1, 1});
	CHECK(BinaryIndex(12).order() == 3u);
	for (std::uint64_t n = 1; n < 2000; ++n) {
		const unsigned o = *BinaryIndex(n).order();
		CHECK((std::uint64_t{1} << o) <= n);
		CHECK(n < (std::uint64_t{2} << o));
		CHECK(BinaryIndex(n).bit(o + 1) == 0);
	}
}

TEST_CASE("prefix sums of binary digits") {
	CHECK(BinaryIndex(13).prefix(0) == 1);
	CHECK(BinaryIndex(13).prefix(2) == 5);
	CHECK(BinaryIndex(13).prefix(9) == 13);
	for (std::uint64_t n = 1; n < 600; ++n) {
		const BinaryIndex b(n);
		CHECK(b.prefix(*b.order()) == n);
		for (unsigned s = 0; s < 12; ++s)
			CHECK(b.prefix(s) <= b.prefix(s + 1));
	}
}

TEST_CASE("grid spec bounds") {
	CHECK_THROWS_AS(GridSpec(0), std::invalid_argument);
	CHECK_THROWS_AS(GridSpec(31), std::invalid_argument);
	CHECK(GridSpec(4).size() == 16);
	CHECK_THROWS_AS(GridSpec(3).check_index(8), std::out_of_range);
}

TEST_CASE("dyadic addition is exclusive or") {
	const GridSpec k2(2), k3(3), k6(6);
	CHECK(dyadic_add(2, 1, k2) == 3);
	CHECK(dyadic_add(5, 3, k3) == 6);
	for (std::uint64_t i = 0; i < 64; ++i) {
		CHECK(dyadic_add(i, i, k6) == 0);
		CHECK(dyadic_add(0, i, k6) == i);
		for (std::uint64_t j = 0; j < 64; j += 7)
			CHECK(dyadic_add(dyadic_add(i, j, k6), j, k6) == i);
	}
	CHECK_THROWS_AS(dyadic_add(8, 0, k3), std::out_of_range);
}

TEST_CASE("digits of grid points and toggling") {
	const GridSpec spec(4);
	// 5/16 = 0.0101
	CHECK(point_digit(5, 0, spec) == 0);
	CHECK(point_digit(5, 1, spec) == 1);
	CHECK(point_digit(5, 3, spec) == 1);
	CHECK(point_digit(5, 7, spec) == 0);
	CHECK(toggle_digit(5, 0, spec) == 13);
	CHECK(toggle_digit(5, 4, spec) == 5);
}

TEST_CASE("dyadic rationals") {
	const auto half = DyadicRational::power_of_two(-1);
	const auto quarter = DyadicRational::power_of_two(-2);
	CHECK((half + quarter).str() == "3/2^2");
	CHECK((half - half).is_zero());
	CHECK((half * quarter) == DyadicRational::power_of_two(-3));
	CHECK(DyadicRational::from_integer(6).str() == "6/2^0");
	CHECK(DyadicRational::from_integer(6).to_double() == 6.0);
	CHECK(DyadicRational(BigInt(6), 2) == DyadicRational(BigInt(3), 1));
	CHECK(quarter < half);
	CHECK((-half).abs() == half);
	CHECK((half + quarter).decimal(4) == "0.7500");
	CHECK(DyadicRational::power_of_two(-70).to_double() == std::ldexp(1.0, -70));
	const auto x = DyadicRational(BigInt(5), 4);  // 0.0101
	CHECK(x.digit(0) == 0);
	CHECK(x.digit(1) == 1);
	CHECK(x.digit(2) == 0);
	CHECK(x.digit(3) == 1);
	CHECK(x.digit(10) == 0);
}

TEST_CASE("dyadic intervals") {
	const GridSpec spec(4);
	CHECK(interval_of(0, 3, spec) == DyadicInterval(3, 0));
	CHECK(interval_of(12, 1, spec) == DyadicInterval(1, 1));  // x = 3/4
	CHECK(interval_of(5, 2, spec) == DyadicInterval(2, 1));   // x = 5/16
	CHECK(interval_of(DyadicRational(BigInt(5), 4), 2) == DyadicInterval(2, 1));
	for (std::uint64_t l = 0; l < 16; ++l)
		for (unsigned k = 0; k < 4; ++k)
			CHECK(interval_of(l, k, spec).contains(interval_of(l, k + 1, spec)));

	const DyadicInterval a(2, 1), b(3, 2), c(3, 5);
	CHECK(a.contains(b));
	CHECK(a.disjoint(c));
	CHECK(a.overlap(b) == DyadicRational::power_of_two(-3));
	CHECK(a.overlap(c).is_zero());
	CHECK(a.cells(spec) == std::pair<std::uint64_t, std::uint64_t>{4, 8});
	CHECK(a.contains(DyadicRational::power_of_two(-2)));
	CHECK_FALSE(a.contains(DyadicRational::power_of_two(-1)));
}
