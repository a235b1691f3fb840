#pragma once

// Binary-expansion arithmetic on [0,1): bits of indices, dyadic group
// addition on grid points, dyadic intervals and dyadic rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace walshsum {

using BigInt = boost::multiprecision::cpp_int;

/// A natural number viewed through its binary coefficients eps_k(n).
class BinaryIndex {
public:
	constexpr BinaryIndex() = default;
	constexpr explicit BinaryIndex(std::uint64_t value) : value_(value) {}

	constexpr std::uint64_t value() const { return value_; }

	/// eps_k(n); zero for k >= 64.
	constexpr int bit(unsigned k) const {
		return k < 64 ? static_cast<int>((value_ >> k) & 1U) : 0;
	}

	/// |n| with 2^|n| <= n < 2^(|n|+1); empty for n = 0.
	std::optional<unsigned> order() const;

	/// eps_0(n), ..., eps_|n|(n); empty for n = 0.
	std::vector<int> bits() const;

	/// n(s) = sum_{j<=s} eps_j(n) 2^j. Saturates at n for s >= |n|.
	std::uint64_t prefix(unsigned s) const;

	friend constexpr bool operator==(BinaryIndex, BinaryIndex) = default;

private:
	std::uint64_t value_ = 0;
};

/// Resolution K of the dyadic grid: 2^K cells of width 2^-K.
class GridSpec {
public:
	static constexpr unsigned max_resolution = 30;

	explicit GridSpec(unsigned resolution);

	unsigned resolution() const { return resolution_; }
	std::size_t size() const { return std::size_t{1} << resolution_; }
	double cell_width() const { return 1.0 / static_cast<double>(size()); }

	/// Throws std::out_of_range unless i < 2^K.
	void check_index(std::uint64_t i) const;

	friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
	unsigned resolution_;
};

/// x digit m (the coefficient of 2^-(m+1)) of the grid point l / 2^K.
inline int point_digit(std::uint64_t l, unsigned m, const GridSpec& spec) {
	const unsigned K = spec.resolution();
	return m < K ? static_cast<int>((l >> (K - 1 - m)) & 1U) : 0;
}

/// Grid index of x + 2^-(m+1) under dyadic addition (digit m toggled).
/// Shifts finer than the grid leave the point unchanged.
inline std::uint64_t toggle_digit(std::uint64_t l, unsigned m, const GridSpec& spec) {
	const unsigned K = spec.resolution();
	return m < K ? (l ^ (std::uint64_t{1} << (K - 1 - m))) : l;
}

/// x (+) y on grid points: bitwise exclusive-or.
std::uint64_t dyadic_add(std::uint64_t i, std::uint64_t j, const GridSpec& spec);

/// numerator / 2^scale, canonical: odd numerator or (0, 0).
class DyadicRational {
public:
	DyadicRational() = default;
	DyadicRational(BigInt numerator, unsigned scale);

	static DyadicRational from_integer(long long v) { return DyadicRational(BigInt(v), 0); }
	/// 2^e for any integer e.
	static DyadicRational power_of_two(int e);
	/// The grid point l / 2^K.
	static DyadicRational grid_point(std::uint64_t l, const GridSpec& spec);

	const BigInt& numerator() const { return numerator_; }
	unsigned scale() const { return scale_; }

	bool is_zero() const { return numerator_ == 0; }
	int sign() const { return numerator_.sign(); }
	double to_double() const;
	/// "numerator/2^scale".
	std::string str() const;
	/// Decimal rendering with the given number of fractional digits.
	std::string decimal(unsigned digits = 20) const;

	/// Binary digit m of x in [0,1): coefficient of 2^-(m+1), terminating expansion.
	int digit(unsigned m) const;

	DyadicRational abs() const;

	friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
	friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
	friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);
	DyadicRational operator-() const;
	DyadicRational& operator+=(const DyadicRational& o) { return *this = *this + o; }
	DyadicRational& operator-=(const DyadicRational& o) { return *this = *this - o; }
	DyadicRational& operator*=(const DyadicRational& o) { return *this = *this * o; }

	/// Multiply by 2^e.
	DyadicRational scaled(int e) const;

	friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
		return a.scale_ == b.scale_ && a.numerator_ == b.numerator_;
	}
	friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

private:
	void canonicalize();

	BigInt numerator_ = 0;
	unsigned scale_ = 0;
};

/// I(l, k) = [l / 2^k, (l+1) / 2^k).
struct DyadicInterval {
	unsigned depth = 0;
	BigInt offset = 0;

	DyadicInterval() = default;
	DyadicInterval(unsigned depth, BigInt offset);

	DyadicRational left() const { return DyadicRational(offset, depth); }
	DyadicRational right() const { return DyadicRational(offset + 1, depth); }
	DyadicRational length() const { return DyadicRational::power_of_two(-static_cast<int>(depth)); }

	bool contains(const DyadicRational& x) const;
	/// True if other is a subset of *this.
	bool contains(const DyadicInterval& other) const;
	bool disjoint(const DyadicInterval& other) const;
	/// Measure of the intersection; dyadic intervals nest or are disjoint.
	DyadicRational overlap(const DyadicInterval& other) const;

	/// Grid cell range [first, last) covered at resolution K (requires depth <= K).
	std::pair<std::uint64_t, std::uint64_t> cells(const GridSpec& spec) const;

	friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

/// I_k(x) for a grid point.
DyadicInterval interval_of(std::uint64_t l, unsigned k, const GridSpec& spec);
/// I_k(x) for x in [0,1).
DyadicInterval interval_of(const DyadicRational& x, unsigned k);

}  // namespace walshsum
