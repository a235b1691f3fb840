#include "walshsum/tensor2d.hpp"

#include "walshsum/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace walshsum {

GridFunction2D::GridFunction2D(GridSpec spec) : spec_(spec), samples_(spec.size() * spec.size(), 0.0) {}

GridFunction2D::GridFunction2D(GridSpec spec, std::vector<double> samples)
    : spec_(spec), samples_(std::move(samples)) {
	if (samples_.size() != spec_.size() * spec_.size())
		throw std::invalid_argument("2D grid function needs 4^K samples");
}

GridFunction2D GridFunction2D::constant(GridSpec spec, double c) {
	return GridFunction2D(spec, std::vector<double>(spec.size() * spec.size(), c));
}

GridFunction2D GridFunction2D::separable(const GridFunction1D& f, const GridFunction1D& g) {
	if (!(f.spec() == g.spec()))
		throw std::invalid_argument("separable: factors have different resolutions");
	GridFunction2D F(f.spec());
	for (std::size_t i = 0; i < F.side(); ++i)
		for (std::size_t j = 0; j < F.side(); ++j)
			F(i, j) = f[i] * g[j];
	return F;
}

GridFunction1D GridFunction2D::slice(unsigned axis, std::size_t fixed) const {
	GridFunction1D s(spec_);
	for (std::size_t k = 0; k < side(); ++k)
		s[k] = axis == 0 ? (*this)(k, fixed) : (*this)(fixed, k);
	return s;
}

void GridFunction2D::set_slice(unsigned axis, std::size_t fixed, const GridFunction1D& values) {
	for (std::size_t k = 0; k < side(); ++k)
		(axis == 0 ? (*this)(k, fixed) : (*this)(fixed, k)) = values[k];
}

double GridFunction2D::l1_norm() const {
	double s = 0.0;
	for (double v : samples_)
		s += std::abs(v);
	return s * cell_area();
}

GridFunction2D GridFunction2D::abs() const {
	GridFunction2D r = *this;
	for (double& v : r.samples_)
		v = std::abs(v);
	return r;
}

GridFunction2D& GridFunction2D::operator+=(const GridFunction2D& o) {
	if (!(spec_ == o.spec_))
		throw std::invalid_argument("grid resolutions differ");
	for (std::size_t i = 0; i < samples_.size(); ++i)
		samples_[i] += o.samples_[i];
	return *this;
}

GridFunction2D& GridFunction2D::operator*=(double c) {
	for (double& v : samples_)
		v *= c;
	return *this;
}

double max_abs_diff(const GridFunction2D& a, const GridFunction2D& b) {
	if (!(a.spec() == b.spec()))
		throw std::invalid_argument("grid resolutions differ");
	double m = 0.0;
	for (std::size_t i = 0; i < a.samples().size(); ++i)
		m = std::max(m, std::abs(a.samples()[i] - b.samples()[i]));
	return m;
}

GridFunction2D pointwise_max(const GridFunction2D& a, const GridFunction2D& b) {
	if (!(a.spec() == b.spec()))
		throw std::invalid_argument("grid resolutions differ");
	GridFunction2D r = a;
	for (std::size_t i = 0; i < r.samples().size(); ++i)
		r.samples()[i] = std::max(a.samples()[i], b.samples()[i]);
	return r;
}

namespace {

void check_axis(unsigned axis) {
	if (axis > 1)
		throw std::invalid_argument("axis must be 0 or 1");
}

// Hadamard transform of every row, then of every column, in place (natural order).
void hadamard_2d(std::vector<double>& data, std::size_t N) {
	for (std::size_t i = 0; i < N; ++i)
		hadamard_in_place(std::span<double>(data.data() + i * N, N));
	std::vector<double> column(N);
	for (std::size_t j = 0; j < N; ++j) {
		for (std::size_t i = 0; i < N; ++i)
			column[i] = data[i * N + j];
		hadamard_in_place(column);
		for (std::size_t i = 0; i < N; ++i)
			data[i * N + j] = column[i];
	}
}

std::vector<std::uint64_t> reversal_table(const GridSpec& spec) {
	std::vector<std::uint64_t> rev(spec.size());
	for (std::size_t i = 0; i < rev.size(); ++i)
		rev[i] = reverse_bits(i, spec.resolution());
	return rev;
}

}  // namespace

std::vector<double> fwht2d(const GridFunction2D& F) {
	const std::size_t N = F.side();
	std::vector<double> data(F.samples().begin(), F.samples().end());
	hadamard_2d(data, N);
	const auto rev = reversal_table(F.spec());
	const double area = F.cell_area();
	std::vector<double> coeffs(N * N);
	for (std::size_t p = 0; p < N; ++p)
		for (std::size_t q = 0; q < N; ++q)
			coeffs[p * N + q] = data[rev[p] * N + rev[q]] * area;
	return coeffs;
}

GridFunction2D apply_axis(const TransformationMatrix& T, std::uint64_t n, const GridFunction2D& F,
                          unsigned axis) {
	check_axis(axis);
	if (n > F.side())
		throw std::out_of_range("mean index exceeds 2^K");
	const auto weights = mean_weights(T, n);
	GridFunction2D out(F.spec());
	for (std::size_t fixed = 0; fixed < F.side(); ++fixed)
		out.set_slice(axis, fixed, spectral_multiply(F.slice(axis, fixed), weights));
	return out;
}

GridFunction2D tensor_mean(const TransformationMatrix& T0, std::uint64_t n0,
                           const TransformationMatrix& T1, std::uint64_t n1, const GridFunction2D& F,
                           AxisOrder order) {
	if (n0 > F.side() || n1 > F.side())
		throw std::out_of_range("tensor mean index exceeds 2^K");
	if (order == AxisOrder::first_axis_first)
		return apply_axis(T1, n1, apply_axis(T0, n0, F, 0), 1);
	return apply_axis(T0, n0, apply_axis(T1, n1, F, 1), 0);
}

double tensor_mean_at(const std::vector<double>& coefficients, const GridSpec& spec,
                      std::span<const double> weights0, std::span<const double> weights1,
                      std::size_t x0, std::size_t x1) {
	const std::size_t N = spec.size();
	const std::size_t n0 = std::min(weights0.size(), N);
	const std::size_t n1 = std::min(weights1.size(), N);
	double total = 0.0;
	for (std::size_t p = 0; p < n0; ++p) {
		double inner = 0.0;
		for (std::size_t q = 0; q < n1; ++q)
			inner += coefficients[p * N + q] * weights1[q] * walsh_value(q, x1, spec);
		total += inner * weights0[p] * walsh_value(p, x0, spec);
	}
	return total;
}

GridFunction2D tensor_maximal(const TransformationMatrix& T0, const IndexSubsequence& subseq0,
                              const TransformationMatrix& T1, const IndexSubsequence& subseq1,
                              const GridFunction2D& F) {
	const GridSpec& spec = F.spec();
	subseq0.check_fits(spec);
	subseq1.check_fits(spec);
	const std::size_t N = F.side();
	const auto coeffs = fwht2d(F);
	const auto rev = reversal_table(spec);

	std::vector<std::vector<double>> w1;
	for (std::uint64_t n : subseq1.indices())
		w1.push_back(mean_weights(T1, n));

	GridFunction2D result(spec);
	std::vector<double> stage(N * N);
	std::vector<double> work(N * N);
	std::vector<double> column(N);
	for (std::uint64_t na : subseq0.indices()) {
		const auto w0 = mean_weights(T0, na);
		// Weight axis 0 and invert it: stage(x0, q) in natural order along x0, Paley q.
		std::fill(stage.begin(), stage.end(), 0.0);
		for (std::size_t p = 0; p < w0.size(); ++p)
			for (std::size_t q = 0; q < N; ++q)
				stage[rev[p] * N + q] = coeffs[p * N + q] * w0[p];
		for (std::size_t q = 0; q < N; ++q) {
			for (std::size_t i = 0; i < N; ++i)
				column[i] = stage[i * N + q];
			hadamard_in_place(column);
			for (std::size_t i = 0; i < N; ++i)
				stage[i * N + q] = column[i];
		}
		for (const auto& weights : w1) {
			std::fill(work.begin(), work.end(), 0.0);
			for (std::size_t i = 0; i < N; ++i) {
				double* row = work.data() + i * N;
				for (std::size_t q = 0; q < weights.size(); ++q)
					row[rev[q]] = stage[i * N + q] * weights[q];
				hadamard_in_place(std::span<double>(row, N));
			}
			for (std::size_t k = 0; k < N * N; ++k)
				result.samples()[k] = std::max(result.samples()[k], std::abs(work[k]));
		}
	}
	return result;
}

GridFunction2D iterated_majorant(const TransformationMatrix& T0, const IndexSubsequence& subseq0,
                                 const TransformationMatrix& T1, const IndexSubsequence& subseq1,
                                 const GridFunction2D& F) {
	const GridSpec& spec = F.spec();
	const auto inner = make_mean_operator(T1, subseq1, spec);
	const auto outer = make_abs_mean_operator(T0, subseq0, spec);
	GridFunction2D G(spec);
	for (std::size_t i = 0; i < F.side(); ++i)
		G.set_slice(1, i, inner(F.slice(1, i)));
	GridFunction2D out(spec);
	for (std::size_t j = 0; j < F.side(); ++j)
		out.set_slice(0, j, outer(G.slice(0, j)));
	return out;
}

double weak_quasinorm_2d(const GridFunction2D& G) { return weak_quasinorm(G.samples(), G.cell_area()); }

double llogl_2d(const GridFunction2D& F) {
	double s = 0.0;
	for (double v : F.samples()) {
		const double a = std::abs(v);
		if (a > 1.0)
			s += a * std::log(a);
	}
	return s * F.cell_area();
}

GridFunction2D hybrid_maximal(const GridFunction2D& F) {
	GridFunction2D out(F.spec());
	for (std::size_t j = 0; j < F.side(); ++j)
		out.set_slice(0, j, dyadic_maximal(F.slice(0, j)));
	return out;
}

GridFunction2D random_test_function_2d(const GridSpec& spec, std::uint64_t seed, std::uint64_t trial) {
	SplitMix rng(SplitMix(seed ^ 0x2d2d2d2d2d2d2d2dULL).next() ^ (trial * 0xd1b54a32d192ed03ULL));
	const std::size_t N = spec.size();
	const double side = static_cast<double>(N);
	GridFunction2D F(spec);
	const std::uint64_t spikes = 1 + rng.below(4);
	for (std::uint64_t s = 0; s < spikes; ++s) {
		const double u = rng.uniform();
		const double v = rng.uniform();
		const double mass = 0.05 + 0.45 * rng.uniform();
		F(static_cast<std::size_t>(u * side), static_cast<std::size_t>(v * side)) += mass * side * side;
	}
	const std::uint64_t blocks = rng.below(3);
	for (std::uint64_t b = 0; b < blocks; ++b) {
		const unsigned d0 = std::min<unsigned>(1 + static_cast<unsigned>(rng.below(4)), spec.resolution());
		const unsigned d1 = std::min<unsigned>(1 + static_cast<unsigned>(rng.below(4)), spec.resolution());
		const std::uint64_t o0 = rng.below(std::uint64_t{1} << d0);
		const std::uint64_t o1 = rng.below(std::uint64_t{1} << d1);
		const double level = rng.uniform();
		const auto [r0, r1] = DyadicInterval(d0, o0).cells(spec);
		const auto [c0, c1] = DyadicInterval(d1, o1).cells(spec);
		for (std::uint64_t i = r0; i < r1; ++i)
			for (std::uint64_t j = c0; j < c1; ++j)
				F(i, j) += level;
	}
	return F;
}

WeakTypeReport llogl_weak_type_experiment(const TransformationMatrix& T0, const IndexSubsequence& subseq0,
                                          const TransformationMatrix& T1, const IndexSubsequence& subseq1,
                                          std::size_t trials, unsigned K, std::uint64_t seed) {
	if (trials < 1)
		throw std::invalid_argument("llogl experiment needs at least one trial");
	const GridSpec spec(K);
	WeakTypeReport report;
	report.family = T0.name() + "x" + T1.name();
	report.subsequence = subseq0.label() + "x" + subseq1.label();
	report.resolution = K;
	report.trials = trials;
	report.ratios.assign(trials, 0.0);
	parallel_for(trials, [&](std::size_t t) {
		const GridFunction2D F = random_test_function_2d(spec, seed, t);
		report.ratios[t] = weak_quasinorm_2d(tensor_maximal(T0, subseq0, T1, subseq1, F)) / (1.0 + llogl_2d(F));
	});
	report.max_ratio = *std::max_element(report.ratios.begin(), report.ratios.end());
	report.quantiles = quantiles(report.ratios);
	return report;
}

}  // namespace walshsum
