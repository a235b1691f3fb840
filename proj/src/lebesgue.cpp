#include "walshsum/lebesgue.hpp"

#include "walshsum/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace walshsum {

namespace {

void check_depth(unsigned n, const GridSpec& spec) {
	if (n > spec.resolution())
		throw std::out_of_range("depth " + std::to_string(n) + " exceeds resolution " +
		                        std::to_string(spec.resolution()));
}

void check_point(GridPoint x, const GridSpec& spec) {
	spec.check_index(x.x0);
	spec.check_index(x.x1);
}

// First cell of I_n(y) and its width in cells.
std::pair<std::size_t, std::size_t> block_of(std::uint64_t y, unsigned n, const GridSpec& spec) {
	const unsigned shift = spec.resolution() - n;
	return {static_cast<std::size_t>((y >> shift) << shift), std::size_t{1} << shift};
}

// integral over [r0, r0+h) x [c0, c0+w) of |F - v|.
double rect_deviation(const GridFunction2D& F, double v, std::size_t r0, std::size_t h, std::size_t c0,
                      std::size_t w) {
	double s = 0.0;
	for (std::size_t i = r0; i < r0 + h; ++i)
		for (std::size_t j = c0; j < c0 + w; ++j)
			s += std::abs(F(i, j) - v);
	return s * F.cell_area();
}

}  // namespace

double w1(const GridFunction1D& f, std::size_t x, unsigned n) {
	const GridSpec& spec = f.spec();
	check_depth(n, spec);
	spec.check_index(x);
	const double fx = f[x];
	double total = 0.0;
	for (unsigned k = 0; k <= n; ++k) {
		const auto [start, width] = block_of(toggle_digit(x, k, spec), n, spec);
		double s = 0.0;
		for (std::size_t l = start; l < start + width; ++l)
			s += std::abs(f[l] - fx);
		total += std::ldexp(s * spec.cell_width(), static_cast<int>(k));
	}
	return total;
}

double w2d(const GridFunction2D& F, GridPoint x, unsigned n0, unsigned n1) {
	const GridSpec& spec = F.spec();
	check_depth(n0, spec);
	check_depth(n1, spec);
	check_point(x, spec);
	const double v = F(x.x0, x.x1);
	double total = 0.0;
	for (unsigned i0 = 0; i0 <= n0; ++i0) {
		const auto [r0, h] = block_of(toggle_digit(x.x0, i0, spec), n0, spec);
		for (unsigned i1 = 0; i1 <= n1; ++i1) {
			const auto [c0, w] = block_of(toggle_digit(x.x1, i1, spec), n1, spec);
			total += std::ldexp(rect_deviation(F, v, r0, h, c0, w), static_cast<int>(i0 + i1));
		}
	}
	return total;
}

double h0(const GridFunction2D& F, GridPoint x, unsigned n0) {
	const GridSpec& spec = F.spec();
	check_depth(n0, spec);
	check_point(x, spec);
	const double v = F(x.x0, x.x1);
	double total = 0.0;
	for (unsigned i0 = 0; i0 <= n0; ++i0) {
		const auto [r0, h] = block_of(toggle_digit(x.x0, i0, spec), n0, spec);
		total += std::ldexp(rect_deviation(F, v, r0, h, 0, F.side()), static_cast<int>(i0));
	}
	return total;
}

double h1(const GridFunction2D& F, GridPoint x, unsigned n1) {
	const GridSpec& spec = F.spec();
	check_depth(n1, spec);
	check_point(x, spec);
	const double v = F(x.x0, x.x1);
	double total = 0.0;
	for (unsigned i1 = 0; i1 <= n1; ++i1) {
		const auto [c0, w] = block_of(toggle_digit(x.x1, i1, spec), n1, spec);
		total += std::ldexp(rect_deviation(F, v, 0, F.side(), c0, w), static_cast<int>(i1));
	}
	return total;
}

std::string to_string(WlpVerdict v) {
	switch (v) {
	case WlpVerdict::passes:
		return "passes";
	case WlpVerdict::fails_wl1:
		return "fails wl1";
	case WlpVerdict::fails_wl2:
		return "fails wl2";
	case WlpVerdict::fails_wl3:
		return "fails wl3";
	}
	return "unknown";
}

WlpDiagnostic classify_wlp(const GridFunction2D& F, GridPoint point, DepthRange depths,
                           const WlpThresholds& thresholds) {
	const GridSpec& spec = F.spec();
	if (depths.first > depths.last)
		throw std::invalid_argument("depth range must satisfy first <= last");
	check_depth(depths.last, spec);
	check_point(point, spec);

	WlpDiagnostic d;
	d.point = point;
	d.depths = depths;
	d.thresholds = thresholds;
	const unsigned count = depths.last - depths.first + 1;
	d.w_table.assign(count, std::vector<double>(count, 0.0));
	for (unsigned a = 0; a < count; ++a)
		for (unsigned b = 0; b < count; ++b)
			d.w_table[a][b] = w2d(F, point, depths.first + a, depths.first + b);
	for (unsigned a = 0; a < count; ++a) {
		d.h0_values.push_back(h0(F, point, depths.first + a));
		d.h1_values.push_back(h1(F, point, depths.first + a));
	}
	d.h0_sup = *std::max_element(d.h0_values.begin(), d.h0_values.end());
	d.h1_sup = *std::max_element(d.h1_values.begin(), d.h1_values.end());

	const double w_first = d.w_table.front().front();
	const double w_last = d.w_table.back().back();
	const bool decays = w_last <= thresholds.zero_floor || w_last * thresholds.decay_factor <= w_first;
	auto bounded = [&](const std::vector<double>& h, double sup) {
		return sup <= thresholds.h_growth * h.front() + thresholds.zero_floor;
	};
	if (!decays)
		d.verdict = WlpVerdict::fails_wl1;
	else if (!bounded(d.h1_values, d.h1_sup))
		d.verdict = WlpVerdict::fails_wl2;
	else if (!bounded(d.h0_values, d.h0_sup))
		d.verdict = WlpVerdict::fails_wl3;
	else
		d.verdict = WlpVerdict::passes;
	return d;
}

double classical_lebesgue_avg(const GridFunction1D& f, std::size_t x, unsigned depth) {
	const GridSpec& spec = f.spec();
	check_depth(depth, spec);
	spec.check_index(x);
	const std::size_t width = std::size_t{1} << (spec.resolution() - depth);
	if (x + width > f.size())
		throw std::out_of_range("averaging window leaves [0,1)");
	const double fx = f[x];
	double s = 0.0;
	for (std::size_t l = x; l < x + width; ++l)
		s += std::abs(f[l] - fx);
	return s / static_cast<double>(width);
}

Mt2Report mt2_convergence_experiment(const TransformationMatrix& T0, const TransformationMatrix& T1,
                                     const IndexSubsequence& subseq0, const IndexSubsequence& subseq1,
                                     const GridFunction2D& F, const std::vector<GridPoint>& points,
                                     const WlpThresholds& thresholds) {
	const GridSpec& spec = F.spec();
	subseq0.check_fits(spec);
	subseq1.check_fits(spec);
	Mt2Report report;
	report.family0 = T0.name();
	report.family1 = T1.name();
	report.indices0 = subseq0.indices();
	report.indices1 = subseq1.indices();
	std::vector<std::vector<double>> weights0;
	std::vector<std::vector<double>> weights1;
	for (std::uint64_t n : subseq0.indices()) {
		report.t0_column0.push_back(T0.entry(0, n));
		weights0.push_back(mean_weights(T0, n));
	}
	for (std::uint64_t n : subseq1.indices()) {
		report.t0_column1.push_back(T1.entry(0, n));
		weights1.push_back(mean_weights(T1, n));
	}
	const auto coeffs = fwht2d(F);

	report.points.resize(points.size());
	parallel_for(points.size(), [&](std::size_t p) {
		Mt2PointResult& r = report.points[p];
		r.point = points[p];
		r.verdict = classify_wlp(F, points[p], {1, spec.resolution()}, thresholds).verdict;
		r.value = F(points[p].x0, points[p].x1);
		r.errors.assign(weights0.size(), std::vector<double>(weights1.size(), 0.0));
		for (std::size_t a = 0; a < weights0.size(); ++a)
			for (std::size_t b = 0; b < weights1.size(); ++b)
				r.errors[a][b] = std::abs(
				    tensor_mean_at(coeffs, spec, weights0[a], weights1[b], points[p].x0, points[p].x1) - r.value);
		const std::size_t depth = std::min(weights0.size(), weights1.size());
		for (std::size_t m = 0; m < depth; ++m) {
			double worst = 0.0;
			for (std::size_t a = m; a < weights0.size(); ++a)
				for (std::size_t b = m; b < weights1.size(); ++b)
					worst = std::max(worst, r.errors[a][b]);
			r.tail_max.push_back(worst);
		}
		r.decreasing = r.tail_max.back() < r.tail_max.front() ||
		               (r.tail_max.front() <= thresholds.zero_floor && r.tail_max.back() <= thresholds.zero_floor);
	});
	return report;
}

}  // namespace walshsum
