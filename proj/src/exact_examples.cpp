#include "walshsum/exact_examples.hpp"

#include <algorithm>
#include <stdexcept>

namespace walshsum {

NSeqVerdict validate_nseq(const std::vector<std::uint64_t>& seq) {
	NSeqVerdict v;
	if (seq.empty()) {
		v.ok = false;
		v.violations.push_back("sequence is empty");
		return v;
	}
	std::uint64_t prev = 0;
	for (std::size_t i = 0; i < seq.size(); ++i) {
		const std::uint64_t k = i + 1;
		const std::uint64_t n = seq[i];
		if (!(n > 3 * prev))
			v.violations.push_back("n1 fails at k=" + std::to_string(k) + ": need n_k > " +
			                       std::to_string(3 * prev));
		const BigInt four_k = BigInt(1) << (2 * k);
		if (!(BigInt(n) > four_k))
			v.violations.push_back("n2 fails at k=" + std::to_string(k) + ": need n_k > " + four_k.str());
		prev = n;
	}
	v.ok = v.violations.empty();
	return v;
}

DyadicRational SparseStepFunction::value_at(const DyadicRational& x) const {
	for (const auto& p : pieces)
		if (p.interval.contains(x))
			return p.value;
	return {};
}

DyadicRational SparseStepFunction::integral() const {
	DyadicRational s;
	for (const auto& p : pieces)
		s += p.value * p.interval.length();
	return s;
}

SparseStepFunction build_example1(const std::vector<std::uint64_t>& seq) {
	const NSeqVerdict v = validate_nseq(seq);
	if (!v.ok)
		throw std::invalid_argument("invalid sequence: " + v.violations.front());
	SparseStepFunction f;
	std::uint64_t prev = 0;
	for (std::size_t i = 0; i < seq.size(); ++i) {
		const int k = static_cast<int>(i + 1);
		const std::uint64_t nk = seq[i];
		for (std::uint64_t a = prev + 1; a <= nk; ++a) {
			// [2^-a, 2^-a + 2^-nk) is the depth-nk interval with offset 2^(nk-a).
			DyadicInterval interval(static_cast<unsigned>(nk), BigInt(1) << (nk - a));
			f.pieces.push_back({interval, DyadicRational::power_of_two(static_cast<int>(nk - a) - k)});
		}
		prev = nk;
	}
	return f;
}

DyadicRational exact_fejer_at_zero(const SparseStepFunction& f, unsigned m) {
	struct Plateau {
		DyadicInterval interval;
		DyadicRational height;
	};
	std::vector<Plateau> plateaus;
	plateaus.push_back({DyadicInterval(m, 0), (DyadicRational::power_of_two(static_cast<int>(m)) +
	                                           DyadicRational::from_integer(1))
	                                              .scaled(-1)});
	for (unsigned j = 0; j < m; ++j)
		plateaus.push_back({DyadicInterval(m, BigInt(1) << (m - j - 1)),
		                    DyadicRational::power_of_two(static_cast<int>(j) - 1)});
	DyadicRational total;
	for (const auto& piece : f.pieces)
		for (const auto& pl : plateaus) {
			const DyadicRational len = piece.interval.overlap(pl.interval);
			if (!len.is_zero())
				total += piece.value * pl.height * len;
		}
	return total;
}

DyadicRational exact_avg_at_zero(const SparseStepFunction& f, unsigned depth) {
	const DyadicInterval window(depth, 0);
	const DyadicRational f0 = f.value_at(DyadicRational{});
	DyadicRational covered;
	DyadicRational integral;
	for (const auto& p : f.pieces) {
		const DyadicRational len = window.overlap(p.interval);
		if (len.is_zero())
			continue;
		covered += len;
		integral += (p.value - f0).abs() * len;
	}
	integral += f0.abs() * (window.length() - covered);
	return integral.scaled(static_cast<int>(depth));
}

DyadicRational truncation_tail_bound(const std::vector<std::uint64_t>& seq) {
	return DyadicRational::power_of_two(-static_cast<int>(seq.size()));
}

DivergenceReport divergence_report(const std::vector<std::uint64_t>& seq) {
	DivergenceReport r;
	r.seq = seq;
	r.verdict = validate_nseq(seq);
	if (!r.verdict.ok)
		throw std::invalid_argument("invalid sequence: " + r.verdict.violations.front());
	const SparseStepFunction f = build_example1(seq);
	r.tail_bound = truncation_tail_bound(seq);

	std::uint64_t prev = 0;
	for (std::size_t i = 0; i < seq.size(); ++i) {
		DivergenceRow row;
		row.k = static_cast<unsigned>(i + 1);
		row.n_k = seq[i];
		row.sigma = exact_fejer_at_zero(f, static_cast<unsigned>(seq[i]));
		const auto gap = DyadicRational::from_integer(static_cast<long long>(seq[i] - prev));
		row.printed_bound = gap.scaled(-static_cast<int>(row.k + 1));
		row.corrected_bound = gap.scaled(-static_cast<int>(row.k + 2));
		row.ratio = row.sigma.to_double() / row.printed_bound.to_double();
		row.meets_printed = row.sigma >= row.printed_bound;
		row.meets_corrected = row.sigma >= row.corrected_bound;
		r.rows.push_back(row);

		for (std::uint64_t d = prev + 1; d <= seq[i]; ++d) {
			LebesgueSweepRow s;
			s.k = row.k;
			s.depth = static_cast<unsigned>(d);
			s.average = exact_avg_at_zero(f, s.depth);
			s.scaled = (s.average + r.tail_bound).scaled(static_cast<int>(row.k)).to_double();
			r.fitted_constant = std::max(r.fitted_constant, s.scaled);
			r.sweep.push_back(s);
		}
		prev = seq[i];
	}
	r.sweep_bounded = r.fitted_constant <= r.constant_bound;
	return r;
}

}  // namespace walshsum
