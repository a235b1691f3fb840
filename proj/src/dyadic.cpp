#include "walshsum/dyadic.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace walshsum {

namespace {
BigInt abs_bigint(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }
}  // namespace

std::optional<unsigned> BinaryIndex::order() const {
	if (value_ == 0)
		return std::nullopt;
	return static_cast<unsigned>(std::bit_width(value_) - 1);
}

std::vector<int> BinaryIndex::bits() const {
	std::vector<int> out;
	for (std::uint64_t v = value_; v != 0; v >>= 1)
		out.push_back(static_cast<int>(v & 1U));
	return out;
}

std::uint64_t BinaryIndex::prefix(unsigned s) const {
	if (s >= 63)
		return value_;
	return value_ & ((std::uint64_t{1} << (s + 1)) - 1);
}

GridSpec::GridSpec(unsigned resolution) : resolution_(resolution) {
	if (resolution < 1 || resolution > max_resolution)
		throw std::invalid_argument("grid resolution must lie in [1, " +
		                            std::to_string(max_resolution) + "], got " +
		                            std::to_string(resolution));
}

void GridSpec::check_index(std::uint64_t i) const {
	if (i >= size())
		throw std::out_of_range("grid index " + std::to_string(i) + " outside [0, 2^" +
		                        std::to_string(resolution_) + ")");
}

std::uint64_t dyadic_add(std::uint64_t i, std::uint64_t j, const GridSpec& spec) {
	spec.check_index(i);
	spec.check_index(j);
	return i ^ j;
}

// ---------------------------------------------------------------------------
// DyadicRational

DyadicRational::DyadicRational(BigInt numerator, unsigned scale)
    : numerator_(std::move(numerator)), scale_(scale) {
	canonicalize();
}

void DyadicRational::canonicalize() {
	if (numerator_ == 0) {
		scale_ = 0;
		return;
	}
	const unsigned tz = static_cast<unsigned>(boost::multiprecision::lsb(abs_bigint(numerator_)));
	const unsigned shift = tz < scale_ ? tz : scale_;
	numerator_ >>= shift;
	scale_ -= shift;
}

DyadicRational DyadicRational::power_of_two(int e) {
	if (e >= 0)
		return DyadicRational(BigInt(1) << e, 0);
	return DyadicRational(BigInt(1), static_cast<unsigned>(-e));
}

DyadicRational DyadicRational::grid_point(std::uint64_t l, const GridSpec& spec) {
	spec.check_index(l);
	return DyadicRational(BigInt(l), spec.resolution());
}

double DyadicRational::to_double() const {
	// ldexp keeps large scales finite where converting 2^scale would overflow.
	const auto msb = numerator_ == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(abs_bigint(numerator_)));
	if (msb < 60)
		return std::ldexp(numerator_.convert_to<double>(), -static_cast<int>(scale_));
	const unsigned drop = msb - 60;
	const BigInt top = numerator_ >> drop;
	return std::ldexp(top.convert_to<double>(), static_cast<int>(drop) - static_cast<int>(scale_));
}

std::string DyadicRational::str() const {
	std::ostringstream os;
	os << numerator_ << "/2^" << scale_;
	return os.str();
}

std::string DyadicRational::decimal(unsigned digits) const {
	// round(|x| * 10^digits), printed with a decimal point.
	BigInt pow10 = 1;
	for (unsigned i = 0; i < digits; ++i)
		pow10 *= 10;
	const BigInt mag = abs_bigint(numerator_);
	BigInt scaled = mag * pow10;
	const BigInt half = scale_ == 0 ? BigInt(0) : (BigInt(1) << (scale_ - 1));
	scaled = (scaled + half) >> scale_;
	std::string s = scaled.str();
	if (s.size() <= digits)
		s.insert(0, digits + 1 - s.size(), '0');
	if (digits > 0)
		s.insert(s.size() - digits, ".");
	if (numerator_ < 0)
		s.insert(0, "-");
	return s;
}

int DyadicRational::digit(unsigned m) const {
	if (numerator_ < 0 || numerator_ >= (BigInt(1) << scale_))
		throw std::domain_error("digit() requires a point of [0,1)");
	// x = N / 2^s; digit m is bit (s - 1 - m) of N.
	if (m + 1 > scale_)
		return 0;
	return boost::multiprecision::bit_test(numerator_, scale_ - 1 - m) ? 1 : 0;
}

DyadicRational DyadicRational::abs() const {
	return DyadicRational(abs_bigint(numerator_), scale_);
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
	if (a.scale_ >= b.scale_)
		return DyadicRational(a.numerator_ + (b.numerator_ << (a.scale_ - b.scale_)), a.scale_);
	return DyadicRational((a.numerator_ << (b.scale_ - a.scale_)) + b.numerator_, b.scale_);
}

DyadicRational DyadicRational::operator-() const {
	DyadicRational r = *this;
	r.numerator_ = -r.numerator_;
	return r;
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) { return a + (-b); }

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
	return DyadicRational(a.numerator_ * b.numerator_, a.scale_ + b.scale_);
}

DyadicRational DyadicRational::scaled(int e) const {
	if (e >= 0) {
		const unsigned u = static_cast<unsigned>(e);
		if (u <= scale_)
			return DyadicRational(numerator_, scale_ - u);
		return DyadicRational(numerator_ << (u - scale_), 0);
	}
	return DyadicRational(numerator_, scale_ + static_cast<unsigned>(-e));
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
	const unsigned s = a.scale_ > b.scale_ ? a.scale_ : b.scale_;
	const BigInt lhs = a.numerator_ << (s - a.scale_);
	const BigInt rhs = b.numerator_ << (s - b.scale_);
	if (lhs < rhs)
		return std::strong_ordering::less;
	if (lhs > rhs)
		return std::strong_ordering::greater;
	return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// DyadicInterval

DyadicInterval::DyadicInterval(unsigned depth_, BigInt offset_)
    : depth(depth_), offset(std::move(offset_)) {
	if (offset < 0 || offset >= (BigInt(1) << depth))
		throw std::out_of_range("dyadic interval offset outside [0, 2^depth)");
}

bool DyadicInterval::contains(const DyadicRational& x) const {
	return left() <= x && x < right();
}

bool DyadicInterval::contains(const DyadicInterval& other) const {
	if (other.depth < depth)
		return false;
	return (other.offset >> (other.depth - depth)) == offset;
}

bool DyadicInterval::disjoint(const DyadicInterval& other) const {
	return !contains(other) && !other.contains(*this);
}

DyadicRational DyadicInterval::overlap(const DyadicInterval& other) const {
	if (contains(other))
		return other.length();
	if (other.contains(*this))
		return length();
	return {};
}

std::pair<std::uint64_t, std::uint64_t> DyadicInterval::cells(const GridSpec& spec) const {
	const unsigned K = spec.resolution();
	if (depth > K)
		throw std::invalid_argument("interval finer than the grid");
	const std::uint64_t first = offset.convert_to<std::uint64_t>() << (K - depth);
	return {first, first + (std::uint64_t{1} << (K - depth))};
}

DyadicInterval interval_of(std::uint64_t l, unsigned k, const GridSpec& spec) {
	spec.check_index(l);
	const unsigned K = spec.resolution();
	if (k <= K)
		return DyadicInterval(k, BigInt(l >> (K - k)));
	return DyadicInterval(k, BigInt(l) << (k - K));
}

DyadicInterval interval_of(const DyadicRational& x, unsigned k) {
	if (x.sign() < 0 || x >= DyadicRational::from_integer(1))
		throw std::domain_error("interval_of requires x in [0,1)");
	// floor(x * 2^k) = N * 2^k / 2^s.
	const unsigned s = x.scale();
	const BigInt offset = k >= s ? BigInt(x.numerator() << (k - s)) : BigInt(x.numerator() >> (s - k));
	return DyadicInterval(k, offset);
}

}  // namespace walshsum
