#include "walshsum/summability.hpp"

#include "walshsum/io.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <unordered_map>

namespace walshsum {

namespace {

constexpr double row_sum_tolerance = 1e-12;
// Rows are cached until this many entries are held; then the cache is dropped.
constexpr std::size_t cache_capacity = std::size_t{1} << 22;

std::string row_label(std::uint64_t n) { return "row n=" + std::to_string(n); }

}  // namespace

void validate_row(std::span<const double> row, std::uint64_t n) {
	if (row.size() != n + 1)
		throw MatrixValidationError(row_label(n) + ": expected " + std::to_string(n + 1) +
		                            " entries, got " + std::to_string(row.size()));
	long double sum = 0.0L;
	for (std::size_t k = 0; k < row.size(); ++k) {
		if (!std::isfinite(row[k]))
			throw MatrixValidationError(row_label(n) + ": non-finite entry at k=" + std::to_string(k));
		if (row[k] < 0.0)
			throw MatrixValidationError(row_label(n) + ": negative entry at k=" + std::to_string(k) +
			                            " (condition a)");
		if (k > 0 && row[k] > row[k - 1] + 1e-15)
			throw MatrixValidationError(row_label(n) + ": entry increases at k=" + std::to_string(k) +
			                            " (condition b)");
		sum += row[k];
	}
	if (std::abs(static_cast<double>(sum - 1.0L)) > row_sum_tolerance)
		throw MatrixValidationError(row_label(n) + ": row sums to " +
		                            std::to_string(static_cast<double>(sum)) + " (condition c)");
}

struct TransformationMatrix::State {
	std::string name;
	RowGenerator generator;
	std::mutex mutex;
	std::unordered_map<std::uint64_t, Row> cache;
	std::size_t cached_entries = 0;
};

TransformationMatrix::TransformationMatrix(std::string name, RowGenerator generator)
    : state_(std::make_shared<State>()) {
	state_->name = std::move(name);
	state_->generator = std::move(generator);
}

const std::string& TransformationMatrix::name() const { return state_->name; }

TransformationMatrix::Row TransformationMatrix::row(std::uint64_t n) const {
	{
		std::lock_guard lock(state_->mutex);
		if (auto it = state_->cache.find(n); it != state_->cache.end())
			return it->second;
	}
	auto fresh = std::make_shared<const std::vector<double>>(state_->generator(n));
	try {
		validate_row(*fresh, n);
	} catch (const MatrixValidationError& e) {
		throw MatrixValidationError(state_->name + ": " + e.what());
	}
	std::lock_guard lock(state_->mutex);
	if (state_->cached_entries + fresh->size() > cache_capacity) {
		state_->cache.clear();
		state_->cached_entries = 0;
	}
	auto [it, inserted] = state_->cache.emplace(n, fresh);
	if (inserted)
		state_->cached_entries += fresh->size();
	return it->second;
}

double TransformationMatrix::entry(std::uint64_t k, std::uint64_t n) const {
	if (k > n)
		throw std::out_of_range("t_{k,n} needs k <= n");
	return (*row(n))[k];
}

double cesaro_A(double alpha, std::uint64_t k) {
	if (!(alpha > -1.0))
		throw std::invalid_argument("cesaro_A requires alpha > -1");
	double a = 1.0;
	for (std::uint64_t j = 1; j <= k; ++j)
		a *= (static_cast<double>(j) + alpha) / static_cast<double>(j);
	return a;
}

namespace matrices {

namespace {

void check_alpha(double alpha) {
	if (!(alpha > 0.0 && alpha <= 1.0))
		throw std::invalid_argument("Cesaro order must lie in (0, 1], got " + std::to_string(alpha));
}

std::vector<double> cesaro_row(double alpha, std::uint64_t n) {
	check_alpha(alpha);
	std::vector<double> row(n + 1);
	double a_prev = 1.0;  // A_k^{alpha-1}
	double a_n = 1.0;     // A_k^{alpha}
	row[0] = 1.0;
	for (std::uint64_t k = 1; k <= n; ++k) {
		const double kd = static_cast<double>(k);
		a_prev *= (kd + alpha - 1.0) / kd;
		a_n *= (kd + alpha) / kd;
		row[k] = a_prev;
	}
	for (double& v : row)
		v /= a_n;
	return row;
}

std::string format_alpha(double alpha) {
	std::string s = std::to_string(alpha);
	while (s.size() > 1 && s.back() == '0')
		s.pop_back();
	if (s.back() == '.')
		s.pop_back();
	return s;
}

}  // namespace

TransformationMatrix identity() {
	return TransformationMatrix("identity", [](std::uint64_t n) {
		std::vector<double> row(n + 1, 0.0);
		row[0] = 1.0;
		return row;
	});
}

TransformationMatrix fejer() {
	return TransformationMatrix("fejer", [](std::uint64_t n) {
		if (n == 0)
			return std::vector<double>{1.0};
		std::vector<double> row(n + 1, 1.0 / static_cast<double>(n));
		row[n] = 0.0;
		return row;
	});
}

TransformationMatrix cesaro(double alpha) {
	check_alpha(alpha);
	return TransformationMatrix("cesaro:" + format_alpha(alpha),
	                            [alpha](std::uint64_t n) { return cesaro_row(alpha, n); });
}

TransformationMatrix cesaro_sequence(std::function<double(std::uint64_t)> alpha, std::string label) {
	return TransformationMatrix("cesaro-seq:" + label, [alpha = std::move(alpha)](std::uint64_t n) {
		return cesaro_row(alpha(n), n);
	});
}

TransformationMatrix nlog() {
	return TransformationMatrix("nlog", [](std::uint64_t n) {
		double ell = 0.0;
		for (std::uint64_t k = n + 1; k-- > 0;)
			ell += 1.0 / static_cast<double>(k + 1);
		std::vector<double> row(n + 1);
		for (std::uint64_t k = 0; k <= n; ++k)
			row[k] = 1.0 / (ell * static_cast<double>(k + 1));
		return row;
	});
}

TransformationMatrix custom(std::vector<std::vector<double>> rows, std::string label) {
	for (std::size_t n = 0; n < rows.size(); ++n)
		validate_row(rows[n], n);
	auto shared = std::make_shared<const std::vector<std::vector<double>>>(std::move(rows));
	return TransformationMatrix("custom:" + label, [shared](std::uint64_t n) {
		if (n >= shared->size())
			throw std::out_of_range("custom matrix has no row " + std::to_string(n));
		return (*shared)[n];
	});
}

}  // namespace matrices

TransformationMatrix parse_matrix(std::string_view spec) {
	const auto colon = spec.find(':');
	const std::string_view head = spec.substr(0, colon);
	const std::string arg = colon == std::string_view::npos ? std::string() : std::string(spec.substr(colon + 1));
	auto require_arg = [&] {
		if (arg.empty())
			throw std::invalid_argument("matrix spec '" + std::string(spec) + "' needs an argument");
	};
	auto require_no_arg = [&] {
		if (colon != std::string_view::npos)
			throw std::invalid_argument("matrix spec '" + std::string(spec) + "' takes no argument");
	};
	if (head == "fejer") {
		require_no_arg();
		return matrices::fejer();
	}
	if (head == "nlog") {
		require_no_arg();
		return matrices::nlog();
	}
	if (head == "identity") {
		require_no_arg();
		return matrices::identity();
	}
	if (head == "cesaro") {
		require_arg();
		return matrices::cesaro(io::parse_double(arg));
	}
	if (head == "cesaro-seq") {
		require_arg();
		std::vector<double> alphas;
		for (const auto& line : io::read_data_lines(arg))
			alphas.push_back(io::parse_double(line));
		if (alphas.empty())
			throw std::invalid_argument("cesaro-seq file '" + arg + "' has no values");
		for (double a : alphas)
			if (!(a > 0.0 && a <= 1.0))
				throw std::invalid_argument("cesaro-seq file '" + arg + "': order outside (0, 1]");
		auto shared = std::make_shared<const std::vector<double>>(std::move(alphas));
		return matrices::cesaro_sequence(
		    [shared](std::uint64_t n) {
			    if (n >= shared->size())
				    throw std::out_of_range("cesaro-seq has no order for n=" + std::to_string(n));
			    return (*shared)[n];
		    },
		    arg);
	}
	if (head == "custom") {
		require_arg();
		std::vector<std::vector<double>> rows;
		for (const auto& line : io::read_data_lines(arg))
			rows.push_back(io::parse_csv_doubles(line));
		return matrices::custom(std::move(rows), arg);
	}
	throw std::invalid_argument("unknown matrix spec '" + std::string(spec) + "'");
}

double tau(const TransformationMatrix& T, std::uint64_t s, std::uint64_t n) {
	if (s > n)
		throw std::out_of_range("tau_{s,n} needs s <= n");
	const auto row = T.row(n);
	double sum = 0.0;
	for (std::uint64_t l = 0; l <= s; ++l)
		sum += (*row)[l];
	return sum;
}

double upsilon(const TransformationMatrix& T, BinaryIndex n) {
	const auto order = n.order();
	if (!order)
		throw std::invalid_argument("upsilon(n, T) is defined for n >= 1");
	const auto row = T.row(n.value());
	double result = 0.0;
	double prefix = 0.0;
	std::uint64_t summed = 0;  // entries [0, summed) are in prefix
	for (unsigned k = 0; k <= *order; ++k) {
		const std::uint64_t s = std::uint64_t{1} << k;
		while (summed <= s)
			prefix += (*row)[summed++];
		if (n.bit(k) != n.bit(k + 1))
			result += prefix;
	}
	return result;
}

std::vector<double> mean_weights(const TransformationMatrix& T, std::uint64_t n) {
	const auto row = T.row(n);
	std::vector<double> weights(n);
	double cumulative = 0.0;
	// weight of coefficient j is tau_{n-1-j, n}; fill from j = n-1 down.
	for (std::uint64_t i = 0; i < n; ++i) {
		cumulative += (*row)[i];
		weights[n - 1 - i] = cumulative;
	}
	return weights;
}

GridFunction1D kernel_V(const TransformationMatrix& T, std::uint64_t n, const GridSpec& spec) {
	if (n > spec.size())
		throw std::out_of_range("kernel index exceeds 2^K");
	const auto row = T.row(n);
	GridFunction1D dirichlet(spec);
	GridFunction1D V(spec);
	const std::size_t N = spec.size();
	for (std::uint64_t k = 1; k <= n; ++k) {
		// D_k = D_{k-1} + w_{k-1}
		const std::uint64_t r = reverse_bits(k - 1, spec.resolution());
		for (std::size_t l = 0; l < N; ++l)
			dirichlet[l] += (std::popcount(r & l) & 1) ? -1.0 : 1.0;
		const double weight = (*row)[n - k];
		if (weight != 0.0)
			for (std::size_t l = 0; l < N; ++l)
				V[l] += weight * dirichlet[l];
	}
	return V;
}

KernelParts kernel_decomposition(const TransformationMatrix& T, std::uint64_t n, const GridSpec& spec) {
	if (n == 0)
		throw std::invalid_argument("kernel decomposition needs n >= 1");
	if (n > spec.size())
		throw std::out_of_range("resolution too small for the kernel decomposition");
	const auto row = T.row(n);
	const BinaryIndex bn(n);
	const unsigned top = *bn.order();
	const unsigned K = spec.resolution();
	const std::size_t N = spec.size();

	// Prefix sums: cumulative[i] = tau_{i-1, n}.
	std::vector<double> cumulative(n + 2, 0.0);
	for (std::uint64_t i = 0; i <= n; ++i)
		cumulative[i + 1] = cumulative[i] + (*row)[i];

	auto multiply_walsh = [&](GridFunction1D& g, std::uint64_t index) {
		const std::uint64_t r = reverse_bits(index, K);
		for (std::size_t l = 0; l < N; ++l)
			if (std::popcount(r & l) & 1)
				g[l] = -g[l];
	};

	KernelParts parts{GridFunction1D(spec), GridFunction1D(spec)};
	for (unsigned s = 0; s <= top; ++s) {
		if (!bn.bit(s))
			continue;
		const std::uint64_t block = std::uint64_t{1} << s;
		const std::uint64_t ns = bn.prefix(s);
		const std::uint64_t base = s == 0 ? 0 : bn.prefix(s - 1);

		// w_n w_{2^s} D_{2^s} tau_{n(s)-1, n}
		GridFunction1D term = GridFunction1D::indicator(spec, DyadicInterval(s, 0));
		term *= static_cast<double>(block) * cumulative[ns];
		multiply_walsh(term, n ^ block);
		parts.first += term;

		if (block < 2)
			continue;
		// Abel summation of sum_{l=1}^{2^s-1} t_{n(s-1)+l, n} D_l through l K_l = sum_{i<=l} D_i.
		GridFunction1D inner(spec);
		GridFunction1D dirichlet(spec);
		GridFunction1D lk(spec);
		const std::uint64_t last = block - 1;
		for (std::uint64_t l = 1; l <= last; ++l) {
			const std::uint64_t r = reverse_bits(l - 1, K);
			for (std::size_t c = 0; c < N; ++c) {
				dirichlet[c] += (std::popcount(r & c) & 1) ? -1.0 : 1.0;
				lk[c] += dirichlet[c];
			}
			const double coeff = l < last ? (*row)[base + l] - (*row)[base + l + 1] : (*row)[base + last];
			if (coeff != 0.0)
				for (std::size_t c = 0; c < N; ++c)
					inner[c] += coeff * lk[c];
		}
		// -w_n w_{n(s)} w_{2^s - 1}
		multiply_walsh(inner, n ^ ns ^ last);
		parts.second -= inner;
	}
	return parts;
}

GridFunction1D apply_mean(const TransformationMatrix& T, std::uint64_t n, const GridFunction1D& f) {
	if (n > f.size())
		throw std::out_of_range("mean index exceeds 2^K");
	const auto weights = mean_weights(T, n);
	return spectral_multiply(f, weights);
}

GridFunction1D apply_mean_via_kernel(const TransformationMatrix& T, std::uint64_t n,
                                     const GridFunction1D& f) {
	return dyadic_convolve(f, kernel_V(T, n, f.spec()));
}

double c2_quantity(double alpha, BinaryIndex n) {
	if (!(alpha > 0.0 && alpha <= 1.0))
		throw std::invalid_argument("c2 quantity needs alpha in (0, 1]");
	const auto order = n.order();
	if (!order)
		throw std::invalid_argument("c2 quantity is defined for n >= 1");
	double sum = 0.0;
	for (unsigned k = 0; k <= *order; ++k)
		if (n.bit(k) != n.bit(k + 1))
			sum += std::exp2((static_cast<double>(k) - static_cast<double>(*order)) * alpha);
	return sum;
}

MeanReport mean_report(const TransformationMatrix& T, std::uint64_t n, const GridSpec& spec) {
	MeanReport r;
	r.n = n;
	r.upsilon = upsilon(T, BinaryIndex(n));
	r.l1_kernel_norm = kernel_V(T, n, spec).l1_norm();
	r.t0 = T.entry(0, n);
	return r;
}

}  // namespace walshsum
