#pragma once

// Functions on the square dyadic grid and tensor-product means computed by
// applying one-dimensional means along each axis in turn.

#include "walshsum/maximal.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace walshsum {

/// 2^K x 2^K samples, row-major; entry (i, j) is the value at (i / 2^K, j / 2^K).
/// Axis 0 is the first variable x0 (the row index).
class GridFunction2D {
public:
	explicit GridFunction2D(GridSpec spec);
	GridFunction2D(GridSpec spec, std::vector<double> samples);

	static GridFunction2D constant(GridSpec spec, double c);
	/// F(x0, x1) = f(x0) g(x1).
	static GridFunction2D separable(const GridFunction1D& f, const GridFunction1D& g);

	const GridSpec& spec() const { return spec_; }
	std::size_t side() const { return spec_.size(); }
	double cell_area() const { return spec_.cell_width() * spec_.cell_width(); }

	double operator()(std::size_t i, std::size_t j) const { return samples_[i * side() + j]; }
	double& operator()(std::size_t i, std::size_t j) { return samples_[i * side() + j]; }

	std::span<const double> samples() const { return samples_; }
	std::span<double> samples() { return samples_; }

	/// The slice through (., j) for axis 0 or (i, .) for axis 1.
	GridFunction1D slice(unsigned axis, std::size_t fixed) const;
	void set_slice(unsigned axis, std::size_t fixed, const GridFunction1D& values);

	double l1_norm() const;
	GridFunction2D abs() const;

	GridFunction2D& operator+=(const GridFunction2D& o);
	GridFunction2D& operator*=(double c);
	friend GridFunction2D operator+(GridFunction2D a, const GridFunction2D& b) { return a += b; }
	friend GridFunction2D operator*(double c, GridFunction2D a) { return a *= c; }

	friend bool operator==(const GridFunction2D&, const GridFunction2D&) = default;

private:
	GridSpec spec_;
	std::vector<double> samples_;
};

double max_abs_diff(const GridFunction2D& a, const GridFunction2D& b);

/// Pointwise max(a, b).
GridFunction2D pointwise_max(const GridFunction2D& a, const GridFunction2D& b);

/// 2D Walsh-Paley coefficients, row-major: entry (p, q) = integral of F w_p(x0) w_q(x1).
std::vector<double> fwht2d(const GridFunction2D& F);

/// T_n applied along one axis, the other variable held fixed.
GridFunction2D apply_axis(const TransformationMatrix& T, std::uint64_t n, const GridFunction2D& F,
                          unsigned axis);

enum class AxisOrder { first_axis_first, second_axis_first };

/// (T0_{n0} (x) T1_{n1}) F by iteration; the two orders agree up to round-off.
GridFunction2D tensor_mean(const TransformationMatrix& T0, std::uint64_t n0,
                           const TransformationMatrix& T1, std::uint64_t n1, const GridFunction2D& F,
                           AxisOrder order = AxisOrder::first_axis_first);

/// The tensor mean evaluated at one grid point from precomputed 2D coefficients.
double tensor_mean_at(const std::vector<double>& coefficients, const GridSpec& spec,
                      std::span<const double> weights0, std::span<const double> weights1,
                      std::size_t x0, std::size_t x1);

/// sup_{a,b} |(T0_{n_a} (x) T1_{n_b}) F|.
GridFunction2D tensor_maximal(const TransformationMatrix& T0, const IndexSubsequence& subseq0,
                              const TransformationMatrix& T1, const IndexSubsequence& subseq1,
                              const GridFunction2D& F);

/// sup_a (sup_b |T1_{n_b} F| along axis 1) * |V^{T0}_{n_a}| along axis 0.
GridFunction2D iterated_majorant(const TransformationMatrix& T0, const IndexSubsequence& subseq0,
                                 const TransformationMatrix& T1, const IndexSubsequence& subseq1,
                                 const GridFunction2D& F);

double weak_quasinorm_2d(const GridFunction2D& G);
double llogl_2d(const GridFunction2D& F);

/// f-natural: sup_n |average of F over I_n(x0) in the first variable|, x1 fixed.
GridFunction2D hybrid_maximal(const GridFunction2D& F);

/// 2D analogue of random_test_function: point masses of fixed mass plus dyadic rectangles.
GridFunction2D random_test_function_2d(const GridSpec& spec, std::uint64_t seed, std::uint64_t trial);

/// ||tensor_maximal F||_{1,infty} / (1 + integral |F| ln+ |F|) over random F.
WeakTypeReport llogl_weak_type_experiment(const TransformationMatrix& T0, const IndexSubsequence& subseq0,
                                          const TransformationMatrix& T1, const IndexSubsequence& subseq1,
                                          std::size_t trials, unsigned K, std::uint64_t seed);

}  // namespace walshsum
