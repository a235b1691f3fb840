#pragma once

// Matrices of transformation t_{k,n}, their means T_n f = sum_k t_{n-k,n} S_k f,
// the kernels V_n = sum_{k=1}^{n} t_{n-k,n} D_k and the boundedness functional
// upsilon(n, T).

#include "walshsum/walsh.hpp"

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace walshsum {

/// Raised when a row violates nonnegativity, monotonicity or unit sum.
class MatrixValidationError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Checks conditions (a)-(c) on row n: t >= 0, nonincreasing in k, sum 1 within 1e-12.
void validate_row(std::span<const double> row, std::uint64_t n);

/// A lower-triangular weight array, generated row by row and cached.
/// Copies share the cache; all members are safe to call concurrently.
class TransformationMatrix {
public:
	using Row = std::shared_ptr<const std::vector<double>>;
	using RowGenerator = std::function<std::vector<double>(std::uint64_t n)>;

	TransformationMatrix(std::string name, RowGenerator generator);

	const std::string& name() const;

	/// (t_{0,n}, ..., t_{n,n}), validated on first use.
	Row row(std::uint64_t n) const;
	double entry(std::uint64_t k, std::uint64_t n) const;

private:
	struct State;
	std::shared_ptr<State> state_;
};

/// A_k^alpha via A_0 = 1, A_k = A_{k-1} (k + alpha) / k. Requires alpha > -1.
double cesaro_A(double alpha, std::uint64_t k);

namespace matrices {

/// t_{0,n} = 1, so T_n = S_n.
TransformationMatrix identity();
/// t_{k,n} = 1/n for k < n and t_{n,n} = 0, so T_n = (1/n) sum_{k=1}^{n} S_k.
TransformationMatrix fejer();
/// (C, alpha): t_{k,n} = A_k^{alpha-1} / A_n^alpha, alpha in (0, 1].
TransformationMatrix cesaro(double alpha);
/// (C, alpha_n) with a per-row order; every alpha_n must lie in (0, 1].
TransformationMatrix cesaro_sequence(std::function<double(std::uint64_t)> alpha, std::string label);
/// Norlund logarithmic: t_{k,n} = 1 / (l_n (k+1)), l_n = sum_{k<=n} 1/(k+1).
TransformationMatrix nlog();
/// Explicit rows; row n must have n+1 entries. Rows past the end are an error.
TransformationMatrix custom(std::vector<std::vector<double>> rows, std::string label);

}  // namespace matrices

/// Parses `fejer`, `cesaro:<alpha>`, `cesaro-seq:<file>`, `nlog`, `identity`, `custom:<rows.csv>`.
TransformationMatrix parse_matrix(std::string_view spec);

/// tau_{s,n} = sum_{l<=s} t_{l,n}. Throws std::out_of_range for s > n.
double tau(const TransformationMatrix& T, std::uint64_t s, std::uint64_t n);

/// upsilon(n, T) = sum_{k=0}^{|n|} |eps_k(n) - eps_{k+1}(n)| tau_{2^k, n}. Requires n >= 1.
double upsilon(const TransformationMatrix& T, BinaryIndex n);

/// Coefficient multipliers of T_n: entry j < n is tau_{n-1-j, n}, zero beyond.
std::vector<double> mean_weights(const TransformationMatrix& T, std::uint64_t n);

/// V_n as a weighted sum of Dirichlet kernels. Requires n <= 2^K.
GridFunction1D kernel_V(const TransformationMatrix& T, std::uint64_t n, const GridSpec& spec);

struct KernelParts {
	GridFunction1D first;   // V_{n,1}: dyadic blocks weighted by tau
	GridFunction1D second;  // V_{n,2}: Fejer kernels weighted by row differences
};

/// V_n = V_{n,1} + V_{n,2}, built from the binary prefixes n(s). Requires 1 <= n <= 2^K.
KernelParts kernel_decomposition(const TransformationMatrix& T, std::uint64_t n, const GridSpec& spec);

/// T_n f computed on the Walsh coefficients.
GridFunction1D apply_mean(const TransformationMatrix& T, std::uint64_t n, const GridFunction1D& f);

/// T_n f computed as f * V_n.
GridFunction1D apply_mean_via_kernel(const TransformationMatrix& T, std::uint64_t n,
                                     const GridFunction1D& f);

/// 2^{-|n| alpha} sum_{k=0}^{|n|} |eps_k(n) - eps_{k+1}(n)| 2^{k alpha}; alpha in (0,1], n >= 1.
double c2_quantity(double alpha, BinaryIndex n);

struct MeanReport {
	std::uint64_t n = 0;
	double upsilon = 0.0;
	double l1_kernel_norm = 0.0;
	double t0 = 0.0;
};

MeanReport mean_report(const TransformationMatrix& T, std::uint64_t n, const GridSpec& spec);

}  // namespace walshsum
