#pragma once

// Exact reproduction of the divergence example: a sparse step function built
// from a fast-growing index sequence, whose Fejer means at 0 blow up although
// 0 is a classical Lebesgue point. Everything here is exact dyadic arithmetic.

#include "walshsum/dyadic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace walshsum {

struct NSeqVerdict {
	bool ok = true;
	std::vector<std::string> violations;
};

/// Checks n_k > 3 n_{k-1} and n_k > 4^k for every k (n_0 = 0).
NSeqVerdict validate_nseq(const std::vector<std::uint64_t>& seq);

struct StepPiece {
	DyadicInterval interval;
	DyadicRational value;
};

/// Finite sum of values on pairwise disjoint dyadic intervals; zero elsewhere.
struct SparseStepFunction {
	std::vector<StepPiece> pieces;

	DyadicRational value_at(const DyadicRational& x) const;
	DyadicRational integral() const;
};

/// f = sum_k f_k / 2^k with f_k = sum_{a=n_{k-1}+1}^{n_k} 2^{n_k-a} 1_[2^-a, 2^-a + 2^-n_k).
/// Throws std::invalid_argument on a sequence rejected by validate_nseq.
SparseStepFunction build_example1(const std::vector<std::uint64_t>& seq);

/// sigma_{2^m}(f, 0) = integral of f K_{2^m}, walking the plateaus of K_{2^m}.
DyadicRational exact_fejer_at_zero(const SparseStepFunction& f, unsigned m);

/// 2^depth * integral over [0, 2^-depth) of |f - f(0)|.
DyadicRational exact_avg_at_zero(const SparseStepFunction& f, unsigned depth);

/// Mass of the omitted terms k > seq.size() inside any window [0, eps) with eps >= 2^-n_last,
/// relative to eps. Always 2^-seq.size().
DyadicRational truncation_tail_bound(const std::vector<std::uint64_t>& seq);

struct DivergenceRow {
	unsigned k = 0;
	std::uint64_t n_k = 0;
	DyadicRational sigma;
	/// (n_k - n_{k-1}) / 2^{k+1}, the bound as originally stated.
	DyadicRational printed_bound;
	/// (n_k - n_{k-1}) / 2^{k+2}, the bound the plateau computation actually supports.
	DyadicRational corrected_bound;
	double ratio = 0.0;  // sigma / printed_bound
	bool meets_printed = false;
	bool meets_corrected = false;
};

struct LebesgueSweepRow {
	unsigned k = 0;
	unsigned depth = 0;
	DyadicRational average;
	/// 2^k (average + tail bound), compared against the a priori constant.
	double scaled = 0.0;
};

struct DivergenceReport {
	std::vector<std::uint64_t> seq;
	NSeqVerdict verdict;
	std::vector<DivergenceRow> rows;
	std::vector<LebesgueSweepRow> sweep;
	DyadicRational tail_bound;
	double fitted_constant = 0.0;  // max of the scaled column
	double constant_bound = 2.0;
	bool sweep_bounded = false;
};

/// Rows for every k plus the Lebesgue-average sweep over depths in (n_{k-1}, n_k].
DivergenceReport divergence_report(const std::vector<std::uint64_t>& seq);

}  // namespace walshsum
