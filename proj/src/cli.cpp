#include "walshsum/cli.hpp"

#include "walshsum/exact_examples.hpp"
#include "walshsum/io.hpp"
#include "walshsum/lebesgue.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace walshsum::cli {

namespace {

using nlohmann::ordered_json;

constexpr unsigned max_resolution_1d = 14;
constexpr unsigned max_resolution_2d = 8;
constexpr std::uint64_t max_row_index = std::uint64_t{1} << 24;

struct GuardRailError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct AssertionFailure : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct Options {
	std::string matrix = "fejer";
	std::string matrix1;
	std::string seq = "powers:1..6";
	std::string seq1;
	std::uint64_t n = 1;
	std::optional<std::uint64_t> n1;
	unsigned resolution = 8;
	std::size_t trials = 20;
	std::uint64_t seed = 1;
	std::uint64_t trial = 0;
	std::string out;
	bool json = false;
	std::string input;
	std::string function = "quarter";
	std::string point = "0.25,0.25";
	std::string points = "0.25,0.25;0.5,0.5";
	std::string depths;
	std::string nseq = "5,17,65";
	double alpha = 0.5;
};

void guard_1d(unsigned K) {
	if (K > max_resolution_1d)
		throw GuardRailError("resolution " + std::to_string(K) + " exceeds the 1D cap of " +
		                     std::to_string(max_resolution_1d));
}

void guard_2d(unsigned K) {
	if (K > max_resolution_2d)
		throw GuardRailError("resolution " + std::to_string(K) + " exceeds the 2D cap of " +
		                     std::to_string(max_resolution_2d));
}

void guard_row(std::uint64_t n) {
	if (n > max_row_index)
		throw GuardRailError("index " + std::to_string(n) + " exceeds the cap of 2^24");
}

// Writes text to --out when given, else to the stream.
void emit(const Options& o, std::ostream& out, const std::string& text) {
	if (o.out.empty()) {
		out << text;
		return;
	}
	std::ofstream file(o.out, std::ios::binary);
	if (!file)
		throw std::runtime_error("cannot open " + o.out + " for writing");
	file << text;
}

std::string dump(const ordered_json& j) {
	return j.dump(2) + "\n";
}

ordered_json rational_json(const DyadicRational& q) {
	return {{"exact", q.str()}, {"decimal", q.decimal(20)}};
}

ordered_json quantiles_json(const std::vector<Quantile>& qs) {
	ordered_json a = ordered_json::array();
	for (const auto& q : qs)
		a.push_back({{"level", q.level}, {"value", q.value}});
	return a;
}

ordered_json weak_report_json(const WeakTypeReport& r, std::uint64_t seed) {
	return {{"family", r.family},      {"subsequence", r.subsequence}, {"resolution", r.resolution},
	        {"trials", r.trials},      {"seed", seed},                 {"max_ratio", r.max_ratio},
	        {"quantiles", quantiles_json(r.quantiles)}, {"ratios", r.ratios}};
}

std::string weak_report_csv(const WeakTypeReport& r) {
	std::ostringstream s;
	s << "# family=" << r.family << " subsequence=" << r.subsequence << " resolution=" << r.resolution
	  << " max_ratio=" << io::format_double(r.max_ratio) << "\n";
	s << "trial,ratio\n";
	for (std::size_t i = 0; i < r.ratios.size(); ++i)
		s << i << "," << io::format_double(r.ratios[i]) << "\n";
	return s.str();
}

std::vector<std::uint64_t> parse_uint_list(std::string_view text) {
	std::vector<std::uint64_t> values;
	std::size_t start = 0;
	while (start <= text.size()) {
		const std::size_t comma = text.find(',', start);
		const std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
		values.push_back(io::parse_uint(token));
		if (comma == std::string_view::npos)
			break;
		start = comma + 1;
	}
	return values;
}

// A coordinate in [0,1) that must land on the grid.
std::size_t parse_coordinate(std::string_view text, const GridSpec& spec) {
	const double x = io::parse_double(text);
	const double scaled = x * static_cast<double>(spec.size());
	if (!(x >= 0.0 && x < 1.0) || scaled != std::floor(scaled))
		throw std::invalid_argument("coordinate " + std::string(text) + " is not a grid point at resolution " +
		                            std::to_string(spec.resolution()));
	return static_cast<std::size_t>(scaled);
}

GridPoint parse_point(std::string_view text, const GridSpec& spec) {
	const std::size_t comma = text.find(',');
	if (comma == std::string_view::npos)
		throw std::invalid_argument("point '" + std::string(text) + "' must be x0,x1");
	return {parse_coordinate(text.substr(0, comma), spec), parse_coordinate(text.substr(comma + 1), spec)};
}

std::vector<GridPoint> parse_points(std::string_view text, const GridSpec& spec) {
	std::vector<GridPoint> points;
	std::size_t start = 0;
	while (true) {
		const std::size_t semi = text.find(';', start);
		points.push_back(parse_point(text.substr(start, semi == std::string_view::npos ? text.npos : semi - start), spec));
		if (semi == std::string_view::npos)
			break;
		start = semi + 1;
	}
	return points;
}

DepthRange parse_depths(const std::string& text, unsigned K) {
	if (text.empty())
		return {1, K};
	const std::size_t dots = text.find("..");
	if (dots == std::string::npos)
		throw std::invalid_argument("depth range must be a..b");
	DepthRange r{static_cast<unsigned>(io::parse_uint(std::string_view(text).substr(0, dots))),
	             static_cast<unsigned>(io::parse_uint(std::string_view(text).substr(dots + 2)))};
	if (r.first > r.last || r.last > K)
		throw std::invalid_argument("depth range must satisfy a <= b <= resolution");
	return r;
}

// quarter | constant:c | punctured:x0,x1 | random:trial
GridFunction2D builtin_function(const Options& o, const GridSpec& spec) {
	const std::string& f = o.function;
	if (f == "quarter") {
		const auto half = GridFunction1D::indicator(spec, DyadicInterval(1, 0));
		return GridFunction2D::separable(half, half);
	}
	const std::size_t colon = f.find(':');
	const std::string kind = f.substr(0, colon);
	const std::string arg = colon == std::string::npos ? std::string() : f.substr(colon + 1);
	if (kind == "constant")
		return GridFunction2D::constant(spec, io::parse_double(arg));
	if (kind == "punctured") {
		const GridPoint p = parse_point(arg, spec);
		auto F = GridFunction2D::constant(spec, 1.0);
		F(p.x0, p.x1) = 0.0;
		return F;
	}
	if (kind == "random")
		return random_test_function_2d(spec, o.seed, io::parse_uint(arg));
	throw std::invalid_argument("unknown function '" + f + "'");
}

GridFunction2D function_2d(const Options& o) {
	if (!o.input.empty()) {
		auto F = io::load_grid2d(o.input);
		guard_2d(F.spec().resolution());
		return F;
	}
	guard_2d(o.resolution);
	return builtin_function(o, GridSpec(o.resolution));
}

GridFunction1D function_1d(const Options& o) {
	if (!o.input.empty()) {
		auto f = io::load_grid(o.input);
		guard_1d(f.spec().resolution());
		return f;
	}
	guard_1d(o.resolution);
	return random_test_function(GridSpec(o.resolution), o.seed, o.trial);
}

std::string grid_text(const GridFunction1D& f) {
	std::ostringstream s;
	io::write_grid_csv(s, f);
	return s.str();
}

std::string grid_text(const GridFunction2D& f) {
	std::ostringstream s;
	io::write_grid_csv(s, f);
	return s.str();
}

// Grid outputs: --out receives the CSV; --json prints a summary; otherwise the CSV goes to stdout.
void emit_grid(const Options& o, std::ostream& out, const std::string& csv, const ordered_json& summary) {
	if (!o.out.empty())
		emit(o, out, csv);
	if (o.json)
		out << dump(summary);
	else if (o.out.empty())
		out << csv;
}

int cmd_kernel(const Options& o, std::ostream& out) {
	guard_1d(o.resolution);
	const GridSpec spec(o.resolution);
	const auto T = parse_matrix(o.matrix);
	const auto V = kernel_V(T, o.n, spec);
	const auto parts = kernel_decomposition(T, o.n, spec);
	const double err = max_abs_diff(parts.first + parts.second, V);
	ordered_json summary = {{"matrix", T.name()},      {"n", o.n},
	                        {"resolution", o.resolution}, {"l1_norm", V.l1_norm()},
	                        {"upsilon", upsilon(T, BinaryIndex(o.n))}, {"decomposition_error", err},
	                        {"values", std::vector<double>(V.samples().begin(), V.samples().end())}};
	emit_grid(o, out, grid_text(V), summary);
	if (!(err <= 1e-9))
		throw AssertionFailure("kernel decomposition differs from the kernel by " + io::format_double(err));
	return ok;
}

int cmd_mean(const Options& o, std::ostream& out) {
	const auto f = function_1d(o);
	const auto T = parse_matrix(o.matrix);
	const auto coeff = apply_mean(T, o.n, f);
	const auto kern = apply_mean_via_kernel(T, o.n, f);
	const double err = max_abs_diff(coeff, kern);
	ordered_json summary = {{"matrix", T.name()},
	                        {"n", o.n},
	                        {"resolution", f.spec().resolution()},
	                        {"path_difference", err},
	                        {"input_l1", f.l1_norm()},
	                        {"output_l1", coeff.l1_norm()}};
	emit_grid(o, out, grid_text(coeff), summary);
	if (!(err <= 1e-10))
		throw AssertionFailure("coefficient and kernel paths differ by " + io::format_double(err));
	return ok;
}

int cmd_upsilon(const Options& o, std::ostream& out) {
	const auto T = parse_matrix(o.matrix);
	const auto subseq = IndexSubsequence::parse(o.seq);
	guard_row(subseq.max());
	ordered_json rows = ordered_json::array();
	std::ostringstream csv;
	csv << "n,upsilon,t0\n";
	for (std::uint64_t n : subseq.indices()) {
		const double u = upsilon(T, BinaryIndex(n));
		const double t0 = T.entry(0, n);
		rows.push_back({{"n", n}, {"upsilon", u}, {"t0", t0}});
		csv << n << "," << io::format_double(u) << "," << io::format_double(t0) << "\n";
	}
	if (o.json)
		emit(o, out, dump({{"matrix", T.name()}, {"subsequence", subseq.label()}, {"rows", rows}}));
	else
		emit(o, out, csv.str());
	return ok;
}

int cmd_maximal(const Options& o, std::ostream& out) {
	guard_1d(o.resolution);
	const auto T = parse_matrix(o.matrix);
	const auto subseq = IndexSubsequence::parse(o.seq);
	const auto report = weak_type_experiment(T, subseq, o.trials, o.resolution, o.seed);
	emit(o, out, o.json ? dump(weak_report_json(report, o.seed)) : weak_report_csv(report));
	return ok;
}

int cmd_tensor(const Options& o, std::ostream& out) {
	const auto F = function_2d(o);
	const auto T0 = parse_matrix(o.matrix);
	const auto T1 = parse_matrix(o.matrix1.empty() ? o.matrix : o.matrix1);
	const std::uint64_t n1 = o.n1.value_or(o.n);
	const auto a = tensor_mean(T0, o.n, T1, n1, F, AxisOrder::first_axis_first);
	const auto b = tensor_mean(T0, o.n, T1, n1, F, AxisOrder::second_axis_first);
	const double err = max_abs_diff(a, b);
	ordered_json summary = {{"matrix0", T0.name()}, {"matrix1", T1.name()},
	                        {"n0", o.n},            {"n1", n1},
	                        {"resolution", F.spec().resolution()}, {"order_difference", err},
	                        {"input_l1", F.l1_norm()}, {"output_l1", a.l1_norm()}};
	emit_grid(o, out, grid_text(a), summary);
	if (!(err <= 1e-10))
		throw AssertionFailure("iteration orders differ by " + io::format_double(err));
	return ok;
}

int cmd_llogl(const Options& o, std::ostream& out) {
	guard_2d(o.resolution);
	const auto T0 = parse_matrix(o.matrix);
	const auto T1 = parse_matrix(o.matrix1.empty() ? o.matrix : o.matrix1);
	const auto s0 = IndexSubsequence::parse(o.seq);
	const auto s1 = IndexSubsequence::parse(o.seq1.empty() ? o.seq : o.seq1);
	const auto report = llogl_weak_type_experiment(T0, s0, T1, s1, o.trials, o.resolution, o.seed);
	emit(o, out, o.json ? dump(weak_report_json(report, o.seed)) : weak_report_csv(report));
	return ok;
}

ordered_json wlp_json(const WlpDiagnostic& d) {
	ordered_json w = ordered_json::array();
	for (const auto& row : d.w_table)
		w.push_back(row);
	return {{"point", {d.point.x0, d.point.x1}},
	        {"depths", {d.depths.first, d.depths.last}},
	        {"W_values", w},
	        {"H0_values", d.h0_values},
	        {"H1_values", d.h1_values},
	        {"H0_sup", d.h0_sup},
	        {"H1_sup", d.h1_sup},
	        {"verdict", to_string(d.verdict)},
	        {"thresholds",
	         {{"decay_factor", d.thresholds.decay_factor},
	          {"h_growth", d.thresholds.h_growth},
	          {"zero_floor", d.thresholds.zero_floor}}}};
}

int cmd_wlp(const Options& o, std::ostream& out) {
	const auto F = function_2d(o);
	const GridSpec& spec = F.spec();
	const auto d = classify_wlp(F, parse_point(o.point, spec), parse_depths(o.depths, spec.resolution()));
	if (o.json) {
		emit(o, out, dump(wlp_json(d)));
	} else {
		std::ostringstream s;
		s << "# point=" << d.point.x0 << "," << d.point.x1 << " verdict=" << to_string(d.verdict) << "\n";
		s << "depth,W_diagonal,H0,H1\n";
		for (unsigned a = 0; a < d.h0_values.size(); ++a)
			s << d.depths.first + a << "," << io::format_double(d.w_table[a][a]) << ","
			  << io::format_double(d.h0_values[a]) << "," << io::format_double(d.h1_values[a]) << "\n";
		emit(o, out, s.str());
	}
	return ok;
}

int cmd_mt2(const Options& o, std::ostream& out) {
	const auto F = function_2d(o);
	const auto T0 = parse_matrix(o.matrix);
	const auto T1 = parse_matrix(o.matrix1.empty() ? o.matrix : o.matrix1);
	const auto s0 = IndexSubsequence::parse(o.seq);
	const auto s1 = IndexSubsequence::parse(o.seq1.empty() ? o.seq : o.seq1);
	const auto report = mt2_convergence_experiment(T0, T1, s0, s1, F, parse_points(o.points, F.spec()));
	ordered_json points = ordered_json::array();
	bool all_converging = true;
	for (const auto& p : report.points) {
		ordered_json errors = ordered_json::array();
		for (const auto& row : p.errors)
			errors.push_back(row);
		points.push_back({{"point", {p.point.x0, p.point.x1}},
		                  {"verdict", to_string(p.verdict)},
		                  {"value", p.value},
		                  {"errors", errors},
		                  {"tail_max", p.tail_max},
		                  {"decreasing", p.decreasing}});
		if (p.verdict == WlpVerdict::passes && !p.decreasing)
			all_converging = false;
	}
	ordered_json j = {{"matrix0", report.family0}, {"matrix1", report.family1},
	                  {"indices0", report.indices0}, {"indices1", report.indices1},
	                  {"t0_column0", report.t0_column0}, {"t0_column1", report.t0_column1},
	                  {"points", points}};
	if (o.json) {
		emit(o, out, dump(j));
	} else {
		std::ostringstream s;
		s << "x0,x1,verdict,position,tail_max\n";
		for (const auto& p : report.points)
			for (std::size_t m = 0; m < p.tail_max.size(); ++m)
				s << p.point.x0 << "," << p.point.x1 << "," << to_string(p.verdict) << "," << m << ","
				  << io::format_double(p.tail_max[m]) << "\n";
		emit(o, out, s.str());
	}
	if (!all_converging)
		throw AssertionFailure("errors do not decrease at a passing point");
	return ok;
}

int cmd_example1(const Options& o, std::ostream& out) {
	const auto seq = parse_uint_list(o.nseq);
	const auto verdict = validate_nseq(seq);
	if (!verdict.ok) {
		std::string msg = "invalid sequence:";
		for (const auto& v : verdict.violations)
			msg += " " + v + ";";
		throw std::invalid_argument(msg);
	}
	const auto r = divergence_report(seq);
	bool corrected_ok = true;
	ordered_json rows = ordered_json::array();
	for (const auto& row : r.rows) {
		corrected_ok = corrected_ok && row.meets_corrected;
		rows.push_back({{"k", row.k},
		                {"n_k", row.n_k},
		                {"sigma_exact", rational_json(row.sigma)},
		                {"lower_bound", rational_json(row.printed_bound)},
		                {"corrected_bound", rational_json(row.corrected_bound)},
		                {"ratio", row.ratio},
		                {"meets_lower_bound", row.meets_printed},
		                {"meets_corrected_bound", row.meets_corrected}});
	}
	ordered_json sweep = ordered_json::array();
	for (const auto& s : r.sweep)
		sweep.push_back({{"k", s.k}, {"depth", s.depth}, {"avg_at_zero", rational_json(s.average)},
		                 {"scaled", s.scaled}});
	if (o.json) {
		emit(o, out,
		     dump({{"nseq", seq},
		           {"rows", rows},
		           {"avg_at_zero_sweep", sweep},
		           {"tail_bound", rational_json(r.tail_bound)},
		           {"fitted_constant", r.fitted_constant},
		           {"constant_bound", r.constant_bound},
		           {"sweep_bounded", r.sweep_bounded}}));
	} else {
		std::ostringstream s;
		s << "k,n_k,sigma_exact,sigma_decimal,lower_bound,corrected_bound,ratio,meets_lower_bound,"
		     "meets_corrected_bound\n";
		for (const auto& row : r.rows)
			s << row.k << "," << row.n_k << "," << row.sigma.str() << "," << row.sigma.decimal(20) << ","
			  << row.printed_bound.str() << "," << row.corrected_bound.str() << "," << io::format_double(row.ratio)
			  << "," << (row.meets_printed ? "true" : "false") << "," << (row.meets_corrected ? "true" : "false")
			  << "\n";
		s << "# fitted_constant=" << io::format_double(r.fitted_constant)
		  << " sweep_bounded=" << (r.sweep_bounded ? "true" : "false") << "\n";
		emit(o, out, s.str());
	}
	if (!corrected_ok)
		throw AssertionFailure("exact Fejer value below the corrected bound");
	if (!r.sweep_bounded)
		throw AssertionFailure("Lebesgue averages at 0 exceed the constant bound");
	return ok;
}

int cmd_c2(const Options& o, std::ostream& out) {
	const auto subseq = IndexSubsequence::parse(o.seq);
	const double expected_power = std::exp2(-o.alpha) + 1.0;
	bool powers_exact = true;
	ordered_json rows = ordered_json::array();
	std::ostringstream csv;
	csv << "n,c2\n";
	for (std::uint64_t n : subseq.indices()) {
		const BinaryIndex b(n);
		const double c = c2_quantity(o.alpha, b);
		const bool power = n >= 2 && (n & (n - 1)) == 0;
		if (power && c != expected_power)
			powers_exact = false;
		rows.push_back({{"n", n}, {"c2", c}});
		csv << n << "," << io::format_double(c) << "\n";
	}
	if (o.json)
		emit(o, out, dump({{"alpha", o.alpha}, {"subsequence", subseq.label()}, {"rows", rows}}));
	else
		emit(o, out, csv.str());
	if (!powers_exact)
		throw AssertionFailure("c2 at a power of two differs from 2^-alpha + 1");
	return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
	CLI::App app{"Dyadic summability toolkit"};
	app.require_subcommand(1);
	Options o;

	auto common = [&](CLI::App* sub) {
		sub->add_option("--out", o.out, "Output file");
		sub->add_flag("--json", o.json, "Emit JSON");
	};
	auto matrices = [&](CLI::App* sub) {
		sub->add_option("--matrix", o.matrix, "fejer | cesaro:a | cesaro-seq:file | nlog | identity | custom:file");
		sub->add_option("--matrix1", o.matrix1, "Second-axis matrix (defaults to --matrix)");
	};
	auto seqs = [&](CLI::App* sub) {
		sub->add_option("--seq", o.seq, "powers:a..b | alternating:a..b | list:... | all:1..N");
		sub->add_option("--seq1", o.seq1, "Second-axis subsequence (defaults to --seq)");
	};
	auto grid = [&](CLI::App* sub) {
		sub->add_option("--resolution", o.resolution, "Grid resolution K");
		sub->add_option("--seed", o.seed, "Random seed");
	};

	auto* kernel = app.add_subcommand("kernel", "Kernel V_n of a matrix mean");
	matrices(kernel);
	kernel->add_option("--n", o.n, "Mean index")->required();
	grid(kernel);
	common(kernel);

	auto* mean = app.add_subcommand("mean", "Apply a matrix mean to a grid function");
	matrices(mean);
	mean->add_option("--n", o.n, "Mean index")->required();
	mean->add_option("--input", o.input, "1D grid CSV (default: seeded random function)");
	mean->add_option("--trial", o.trial, "Random function index");
	grid(mean);
	common(mean);

	auto* ups = app.add_subcommand("upsilon", "Boundedness functional along a subsequence");
	matrices(ups);
	seqs(ups);
	common(ups);

	auto* maximal = app.add_subcommand("maximal", "Weak-type experiment for the 1D maximal operator");
	matrices(maximal);
	seqs(maximal);
	grid(maximal);
	maximal->add_option("--trials", o.trials, "Number of random functions");
	common(maximal);

	auto* tensor = app.add_subcommand("tensor", "Tensor-product mean of a 2D grid function");
	matrices(tensor);
	tensor->add_option("--n", o.n, "First-axis index")->required();
	tensor->add_option("--n1", o.n1, "Second-axis index (defaults to --n)");
	tensor->add_option("--input", o.input, "2D grid CSV");
	tensor->add_option("--function", o.function, "quarter | constant:c | punctured:x0,x1 | random:trial");
	grid(tensor);
	common(tensor);

	auto* llogl = app.add_subcommand("llogl-experiment", "L log L weak-type experiment for the 2D maximal operator");
	matrices(llogl);
	seqs(llogl);
	grid(llogl);
	llogl->add_option("--trials", o.trials, "Number of random functions");
	common(llogl);

	auto* wlp = app.add_subcommand("wlp", "Classify a point as a two-dimensional Walsh-Lebesgue point");
	wlp->add_option("--input", o.input, "2D grid CSV");
	wlp->add_option("--function", o.function, "quarter | constant:c | punctured:x0,x1 | random:trial");
	wlp->add_option("--point", o.point, "x0,x1 in [0,1), on the grid");
	wlp->add_option("--depths", o.depths, "a..b (default 1..K)");
	grid(wlp);
	common(wlp);

	auto* mt2 = app.add_subcommand("mt2-experiment", "Pointwise convergence of tensor means");
	matrices(mt2);
	seqs(mt2);
	mt2->add_option("--input", o.input, "2D grid CSV");
	mt2->add_option("--function", o.function, "quarter | constant:c | punctured:x0,x1 | random:trial");
	mt2->add_option("--points", o.points, "x0,x1;x0,x1;...");
	grid(mt2);
	common(mt2);

	auto* ex1 = app.add_subcommand("example1", "Exact divergence table for the sparse step function");
	ex1->add_option("--nseq", o.nseq, "Comma-separated n_1,n_2,...");
	common(ex1);

	auto* c2 = app.add_subcommand("c2-check", "c2 quantity of the Cesaro condition along a subsequence");
	c2->add_option("--alpha", o.alpha, "alpha in (0,1]");
	seqs(c2);
	common(c2);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? ok : config_error;
	}

	try {
		if (*kernel)
			return cmd_kernel(o, out);
		if (*mean)
			return cmd_mean(o, out);
		if (*ups)
			return cmd_upsilon(o, out);
		if (*maximal)
			return cmd_maximal(o, out);
		if (*tensor)
			return cmd_tensor(o, out);
		if (*llogl)
			return cmd_llogl(o, out);
		if (*wlp)
			return cmd_wlp(o, out);
		if (*mt2)
			return cmd_mt2(o, out);
		if (*ex1)
			return cmd_example1(o, out);
		if (*c2)
			return cmd_c2(o, out);
	} catch (const GuardRailError& e) {
		err << "guard rail: " << e.what() << "\n";
		return guard_rail;
	} catch (const AssertionFailure& e) {
		err << "assertion failed: " << e.what() << "\n";
		return assertion_failure;
	} catch (const std::exception& e) {
		err << "error: " << e.what() << "\n";
		return config_error;
	}
	return config_error;
}

}  // namespace walshsum::cli
