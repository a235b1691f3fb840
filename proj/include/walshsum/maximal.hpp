#pragma once

// Maximal operators along index subsequences, the dyadic maximal function
// E*, the weak L_{1,infty} quasi-norm, the L log L and H_1 functionals, and
// the randomized weak-type experiment.

#include "walshsum/summability.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace walshsum {

/// A nonempty strictly increasing list of indices {n_a}.
class IndexSubsequence {
public:
	explicit IndexSubsequence(std::vector<std::uint64_t> indices, std::string label = {});

	/// 2^a, ..., 2^b.
	static IndexSubsequence powers(unsigned a, unsigned b);
	/// sum_{j<=a} 4^j for a in [first, last]: indices with alternating binary digits.
	static IndexSubsequence alternating(unsigned first, unsigned last);
	/// 1, 2, ..., N.
	static IndexSubsequence all(std::uint64_t N);
	/// `powers:a..b`, `alternating:a..b`, `list:1,3,7`, `all:1..N`.
	static IndexSubsequence parse(std::string_view spec);

	const std::vector<std::uint64_t>& indices() const { return indices_; }
	std::uint64_t max() const { return indices_.back(); }
	std::size_t size() const { return indices_.size(); }
	const std::string& label() const { return label_; }

	/// Throws std::out_of_range if an index exceeds 2^K.
	void check_fits(const GridSpec& spec) const;

private:
	std::vector<std::uint64_t> indices_;
	std::string label_;
};

/// sup_a |T_{n_a} f|.
GridFunction1D maximal_mean(const TransformationMatrix& T, const IndexSubsequence& subseq,
                            const GridFunction1D& f);

/// sup_a f * |V_{n_a}|, the kernel's absolute value taken before convolving.
GridFunction1D maximal_abs_mean(const TransformationMatrix& T, const IndexSubsequence& subseq,
                                const GridFunction1D& f);

/// E*(f) = sup_{0<=n<=K} |S_{2^n} f|, the dyadic martingale maximal function.
GridFunction1D dyadic_maximal(const GridFunction1D& f);

/// sup_t t mu(|g| > t), exact for step functions: max over values v of v mu(|g| >= v).
double weak_quasinorm(const GridFunction1D& g);
/// Same functional for raw cell values with a common cell measure.
double weak_quasinorm(std::span<const double> values, double cell_measure);

/// integral of |f| ln+ |f|.
double llogl_norm(const GridFunction1D& f);

/// ||E* f||_1.
double h1_norm(const GridFunction1D& f);

/// Deterministic nonnegative test function: a few point masses (mass fixed
/// in continuous units, so their height grows like 2^K) plus dyadic blocks.
/// The same (seed, trial) yields discretizations of one measure at every K.
GridFunction1D random_test_function(const GridSpec& spec, std::uint64_t seed, std::uint64_t trial);

struct Quantile {
	double level;
	double value;
};

/// Empirical quantiles at levels 0.5, 0.9, 0.99 (nearest rank).
std::vector<Quantile> quantiles(std::vector<double> values);

struct WeakTypeReport {
	std::string family;
	std::string subsequence;
	unsigned resolution = 0;
	std::size_t trials = 0;
	double max_ratio = 0.0;
	std::vector<Quantile> quantiles;
	std::vector<double> ratios;  // per trial
};

/// A sublinear operator on grid functions, for the weak-type harness.
using MaximalOperator = std::function<GridFunction1D(const GridFunction1D&)>;

/// ||op f||_{1,infty} / ||f||_1 over `trials` random nonnegative f at resolution K.
WeakTypeReport weak_type_experiment(const MaximalOperator& op, std::string family,
                                    std::string subsequence, std::size_t trials, unsigned K,
                                    std::uint64_t seed);

/// The harness applied to maximal_abs_mean(T, subseq, .).
WeakTypeReport weak_type_experiment(const TransformationMatrix& T, const IndexSubsequence& subseq,
                                    std::size_t trials, unsigned K, std::uint64_t seed);

}  // namespace walshsum

namespace walshsum {

/// sup_a |T_{n_a} f| with the coefficient weights precomputed for one resolution.
MaximalOperator make_mean_operator(const TransformationMatrix& T, const IndexSubsequence& subseq,
                                   const GridSpec& spec);

/// sup_a f * |V_{n_a}| with the spectra of |V_{n_a}| precomputed for one resolution.
MaximalOperator make_abs_mean_operator(const TransformationMatrix& T, const IndexSubsequence& subseq,
                                       const GridSpec& spec);

/// Uniform draws in [0,1) from a SplitMix64 stream; identical on every platform.
class SplitMix {
public:
	explicit SplitMix(std::uint64_t seed) : state_(seed) {}
	std::uint64_t next();
	double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
	/// Uniform integer in [0, bound).
	std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
	std::uint64_t state_;
};

}  // namespace walshsum
