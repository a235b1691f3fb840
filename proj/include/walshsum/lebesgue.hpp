#pragma once

// Walsh-Lebesgue point functionals W_n (1D), W_{n0,n1}, H^(0), H^(1) (2D),
// finite-depth point classification, the classical Lebesgue average, and
// the pointwise convergence experiment for tensor means.

#include "walshsum/tensor2d.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace walshsum {

struct GridPoint {
	std::size_t x0 = 0;
	std::size_t x1 = 0;
	friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// W_n f(x) = sum_{k=0}^{n} 2^k integral over I_n(x (+) 2^{-k-1}) of |f - f(x)|. Requires n <= K.
double w1(const GridFunction1D& f, std::size_t x, unsigned n);

/// W_{n0,n1} F(x0, x1), the product-rectangle analogue of w1.
double w2d(const GridFunction2D& F, GridPoint x, unsigned n0, unsigned n1);

/// H^(0)_{n0}: shifted strips I_{n0}(x0 (+) 2^{-i-1}) x [0,1).
double h0(const GridFunction2D& F, GridPoint x, unsigned n0);
/// H^(1)_{n1}: shifted strips [0,1) x I_{n1}(x1 (+) 2^{-i-1}).
double h1(const GridFunction2D& F, GridPoint x, unsigned n1);

enum class WlpVerdict { passes, fails_wl1, fails_wl2, fails_wl3 };
std::string to_string(WlpVerdict v);

struct WlpThresholds {
	/// W on the diagonal must shrink by at least this factor from the first to the last depth.
	double decay_factor = 4.0;
	/// An H sup counts as bounded if it stays within this factor of its first-depth value.
	double h_growth = 4.0;
	/// Absolute floor below which a functional counts as zero.
	double zero_floor = 1e-12;
};

struct DepthRange {
	unsigned first = 1;
	unsigned last = 1;
};

/// Finite-depth diagnostic; the verdict only describes the tested range.
struct WlpDiagnostic {
	GridPoint point;
	DepthRange depths;
	/// w_table[a][b] = W_{first+a, first+b}.
	std::vector<std::vector<double>> w_table;
	std::vector<double> h0_values;  // per depth
	std::vector<double> h1_values;
	double h0_sup = 0.0;
	double h1_sup = 0.0;
	WlpVerdict verdict = WlpVerdict::passes;
	WlpThresholds thresholds;
};

WlpDiagnostic classify_wlp(const GridFunction2D& F, GridPoint point, DepthRange depths,
                           const WlpThresholds& thresholds = {});

/// (1/eps) integral over [0, eps] of |f(x+t) - f(x)| with eps = 2^{-depth}.
/// Throws std::out_of_range if the window leaves [0,1) or depth > K.
double classical_lebesgue_avg(const GridFunction1D& f, std::size_t x, unsigned depth);

struct Mt2PointResult {
	GridPoint point;
	WlpVerdict verdict = WlpVerdict::passes;
	double value = 0.0;  // F at the point
	/// errors[a][b] = |(T0_{n_a} (x) T1_{n_b}) F (point) - F(point)|.
	std::vector<std::vector<double>> errors;
	/// tail_max[m] = max error over pairs whose subsequence positions are both >= m.
	std::vector<double> tail_max;
	/// Whether the last tail maximum is strictly below the first (or both vanish).
	bool decreasing = false;
};

struct Mt2Report {
	std::string family0;
	std::string family1;
	std::vector<std::uint64_t> indices0;
	std::vector<std::uint64_t> indices1;
	std::vector<double> t0_column0;  // t_{0, n_a} for T0
	std::vector<double> t0_column1;
	std::vector<Mt2PointResult> points;
};

/// Pointwise error table of the tensor means at each point, each point classified over depths [1, K].
Mt2Report mt2_convergence_experiment(const TransformationMatrix& T0, const TransformationMatrix& T1,
                                     const IndexSubsequence& subseq0, const IndexSubsequence& subseq1,
                                     const GridFunction2D& F, const std::vector<GridPoint>& points,
                                     const WlpThresholds& thresholds = {});

}  // namespace walshsum
