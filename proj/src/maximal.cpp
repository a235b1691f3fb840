#include "walshsum/maximal.hpp"

#include "walshsum/io.hpp"
#include "walshsum/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace walshsum {

IndexSubsequence::IndexSubsequence(std::vector<std::uint64_t> indices, std::string label)
    : indices_(std::move(indices)), label_(std::move(label)) {
	if (indices_.empty())
		throw std::invalid_argument("index subsequence must be nonempty");
	for (std::size_t i = 1; i < indices_.size(); ++i)
		if (indices_[i] <= indices_[i - 1])
			throw std::invalid_argument("index subsequence must be strictly increasing");
	if (label_.empty()) {
		label_ = "list:";
		for (std::size_t i = 0; i < indices_.size(); ++i)
			label_ += (i ? "," : "") + std::to_string(indices_[i]);
	}
}

IndexSubsequence IndexSubsequence::powers(unsigned a, unsigned b) {
	if (a > b || b > 62)
		throw std::invalid_argument("powers:a..b needs a <= b <= 62");
	std::vector<std::uint64_t> v;
	for (unsigned m = a; m <= b; ++m)
		v.push_back(std::uint64_t{1} << m);
	return IndexSubsequence(std::move(v), "powers:" + std::to_string(a) + ".." + std::to_string(b));
}

IndexSubsequence IndexSubsequence::alternating(unsigned first, unsigned last) {
	if (first > last || last > 30)
		throw std::invalid_argument("alternating:a..b needs a <= b <= 30");
	std::vector<std::uint64_t> v;
	for (unsigned a = first; a <= last; ++a) {
		std::uint64_t n = 0;
		for (unsigned j = 0; j <= a; ++j)
			n |= std::uint64_t{1} << (2 * j);
		v.push_back(n);
	}
	return IndexSubsequence(std::move(v),
	                        "alternating:" + std::to_string(first) + ".." + std::to_string(last));
}

IndexSubsequence IndexSubsequence::all(std::uint64_t N) {
	if (N < 1)
		throw std::invalid_argument("all:1..N needs N >= 1");
	std::vector<std::uint64_t> v(N);
	for (std::uint64_t i = 0; i < N; ++i)
		v[i] = i + 1;
	return IndexSubsequence(std::move(v), "all:1.." + std::to_string(N));
}

IndexSubsequence IndexSubsequence::parse(std::string_view spec) {
	const auto colon = spec.find(':');
	if (colon == std::string_view::npos)
		throw std::invalid_argument("subsequence spec '" + std::string(spec) + "' needs a ':'");
	const std::string_view head = spec.substr(0, colon);
	const std::string_view arg = spec.substr(colon + 1);
	auto range = [&](std::string_view text) {
		const auto dots = text.find("..");
		if (dots == std::string_view::npos)
			throw std::invalid_argument("expected a..b in '" + std::string(spec) + "'");
		return std::pair{io::parse_uint(text.substr(0, dots)), io::parse_uint(text.substr(dots + 2))};
	};
	if (head == "powers") {
		const auto [a, b] = range(arg);
		return powers(static_cast<unsigned>(a), static_cast<unsigned>(b));
	}
	if (head == "alternating") {
		const auto [a, b] = range(arg);
		return alternating(static_cast<unsigned>(a), static_cast<unsigned>(b));
	}
	if (head == "all") {
		const auto [a, b] = range(arg);
		if (a != 1)
			throw std::invalid_argument("all:1..N must start at 1");
		return all(b);
	}
	if (head == "list") {
		std::vector<std::uint64_t> v;
		std::size_t start = 0;
		while (true) {
			const auto comma = arg.find(',', start);
			v.push_back(io::parse_uint(arg.substr(start, comma - start)));
			if (comma == std::string_view::npos)
				break;
			start = comma + 1;
		}
		return IndexSubsequence(std::move(v), std::string(spec));
	}
	throw std::invalid_argument("unknown subsequence spec '" + std::string(spec) + "'");
}

void IndexSubsequence::check_fits(const GridSpec& spec) const {
	if (max() > spec.size())
		throw std::out_of_range("subsequence index " + std::to_string(max()) + " exceeds 2^" +
		                        std::to_string(spec.resolution()));
}

namespace {

// sup over a bank of spectral multipliers, given the spectrum of f.
GridFunction1D sup_over_multipliers(const WalshSpectrum& fs,
                                    const std::vector<std::vector<double>>& bank, bool absolute) {
	GridFunction1D result(fs.spec);
	WalshSpectrum work{fs.spec, std::vector<double>(fs.coefficients.size())};
	bool first = true;
	for (const auto& weights : bank) {
		for (std::size_t i = 0; i < work.coefficients.size(); ++i)
			work.coefficients[i] = i < weights.size() ? fs.coefficients[i] * weights[i] : 0.0;
		const GridFunction1D g = inverse_fwht(work);
		for (std::size_t l = 0; l < g.size(); ++l) {
			const double v = absolute ? std::abs(g[l]) : g[l];
			result[l] = first ? v : std::max(result[l], v);
		}
		first = false;
	}
	return result;
}

}  // namespace

MaximalOperator make_mean_operator(const TransformationMatrix& T, const IndexSubsequence& subseq,
                                   const GridSpec& spec) {
	subseq.check_fits(spec);
	auto bank = std::make_shared<std::vector<std::vector<double>>>();
	for (std::uint64_t n : subseq.indices())
		bank->push_back(mean_weights(T, n));
	return [bank, spec](const GridFunction1D& f) {
		if (!(f.spec() == spec))
			throw std::invalid_argument("maximal operator built for another resolution");
		return sup_over_multipliers(fwht(f), *bank, true);
	};
}

MaximalOperator make_abs_mean_operator(const TransformationMatrix& T, const IndexSubsequence& subseq,
                                       const GridSpec& spec) {
	subseq.check_fits(spec);
	auto bank = std::make_shared<std::vector<std::vector<double>>>(subseq.size());
	parallel_for(subseq.size(), [&](std::size_t a) {
		(*bank)[a] = fwht(kernel_V(T, subseq.indices()[a], spec).abs()).coefficients;
	});
	return [bank, spec](const GridFunction1D& f) {
		if (!(f.spec() == spec))
			throw std::invalid_argument("maximal operator built for another resolution");
		return sup_over_multipliers(fwht(f), *bank, true);
	};
}

GridFunction1D maximal_mean(const TransformationMatrix& T, const IndexSubsequence& subseq,
                            const GridFunction1D& f) {
	return make_mean_operator(T, subseq, f.spec())(f);
}

GridFunction1D maximal_abs_mean(const TransformationMatrix& T, const IndexSubsequence& subseq,
                                const GridFunction1D& f) {
	return make_abs_mean_operator(T, subseq, f.spec())(f);
}

GridFunction1D dyadic_maximal(const GridFunction1D& f) {
	// S_{2^n} f is the average of f over I_n(x).
	const GridSpec& spec = f.spec();
	const unsigned K = spec.resolution();
	GridFunction1D result = f.abs();
	for (unsigned n = 0; n < K; ++n) {
		const std::size_t width = std::size_t{1} << (K - n);
		for (std::size_t start = 0; start < f.size(); start += width) {
			double s = 0.0;
			for (std::size_t l = start; l < start + width; ++l)
				s += f[l];
			const double avg = std::abs(s / static_cast<double>(width));
			for (std::size_t l = start; l < start + width; ++l)
				result[l] = std::max(result[l], avg);
		}
	}
	return result;
}

double weak_quasinorm(std::span<const double> values, double cell_measure) {
	std::vector<double> mags(values.size());
	std::transform(values.begin(), values.end(), mags.begin(), [](double v) { return std::abs(v); });
	std::sort(mags.begin(), mags.end(), std::greater<>());
	double best = 0.0;
	for (std::size_t i = 0; i < mags.size(); ++i)
		best = std::max(best, mags[i] * static_cast<double>(i + 1) * cell_measure);
	return best;
}

double weak_quasinorm(const GridFunction1D& g) {
	return weak_quasinorm(g.samples(), g.spec().cell_width());
}

double llogl_norm(const GridFunction1D& f) {
	double s = 0.0;
	for (double v : f.samples()) {
		const double a = std::abs(v);
		if (a > 1.0)
			s += a * std::log(a);
	}
	return s * f.spec().cell_width();
}

double h1_norm(const GridFunction1D& f) { return dyadic_maximal(f).l1_norm(); }

std::uint64_t SplitMix::next() {
	std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

GridFunction1D random_test_function(const GridSpec& spec, std::uint64_t seed, std::uint64_t trial) {
	SplitMix rng(SplitMix(seed).next() ^ (trial * 0xd1b54a32d192ed03ULL));
	const std::size_t N = spec.size();
	const double height = static_cast<double>(N);
	GridFunction1D f(spec);
	const std::uint64_t spikes = 1 + rng.below(4);
	for (std::uint64_t s = 0; s < spikes; ++s) {
		const double position = rng.uniform();
		const double mass = 0.05 + 0.45 * rng.uniform();
		f[static_cast<std::size_t>(position * height)] += mass * height;
	}
	const std::uint64_t blocks = rng.below(3);
	for (std::uint64_t b = 0; b < blocks; ++b) {
		const unsigned depth = std::min<unsigned>(1 + static_cast<unsigned>(rng.below(4)), spec.resolution());
		const std::uint64_t offset = rng.below(std::uint64_t{1} << depth);
		const double level = rng.uniform();
		const auto [first, last] = DyadicInterval(depth, offset).cells(spec);
		for (std::uint64_t l = first; l < last; ++l)
			f[l] += level;
	}
	return f;
}

std::vector<Quantile> quantiles(std::vector<double> values) {
	std::vector<Quantile> out;
	if (values.empty())
		return out;
	std::sort(values.begin(), values.end());
	for (double level : {0.5, 0.9, 0.99}) {
		auto rank = static_cast<std::size_t>(std::ceil(level * static_cast<double>(values.size())));
		rank = std::clamp<std::size_t>(rank, 1, values.size());
		out.push_back({level, values[rank - 1]});
	}
	return out;
}

WeakTypeReport weak_type_experiment(const MaximalOperator& op, std::string family,
                                    std::string subsequence, std::size_t trials, unsigned K,
                                    std::uint64_t seed) {
	if (trials < 1)
		throw std::invalid_argument("weak-type experiment needs at least one trial");
	const GridSpec spec(K);
	WeakTypeReport report;
	report.family = std::move(family);
	report.subsequence = std::move(subsequence);
	report.resolution = K;
	report.trials = trials;
	report.ratios.assign(trials, 0.0);
	parallel_for(trials, [&](std::size_t t) {
		const GridFunction1D f = random_test_function(spec, seed, t);
		report.ratios[t] = weak_quasinorm(op(f)) / f.l1_norm();
	});
	report.max_ratio = *std::max_element(report.ratios.begin(), report.ratios.end());
	report.quantiles = quantiles(report.ratios);
	return report;
}

WeakTypeReport weak_type_experiment(const TransformationMatrix& T, const IndexSubsequence& subseq,
                                    std::size_t trials, unsigned K, std::uint64_t seed) {
	const GridSpec spec(K);
	return weak_type_experiment(make_abs_mean_operator(T, subseq, spec), T.name(), subseq.label(),
	                            trials, K, seed);
}

}  // namespace walshsum
