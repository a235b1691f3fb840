#include "walshsum/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace walshsum::io {

namespace {

std::string_view trim(std::string_view s) {
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
		s.remove_prefix(1);
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
		s.remove_suffix(1);
	return s;
}

unsigned parse_header(const std::string& line, bool two_dims) {
	static const std::regex one(R"(#\s*resolution=(\d+)\s*)");
	static const std::regex two(R"(#\s*resolution=(\d+)\s+dims=2\s*)");
	std::smatch m;
	if (!std::regex_match(line, m, two_dims ? two : one))
		throw std::invalid_argument("bad grid CSV header: '" + line + "'");
	return static_cast<unsigned>(std::stoul(m[1].str()));
}

std::string next_line(std::istream& in, const char* what) {
	std::string line;
	if (!std::getline(in, line))
		throw std::invalid_argument(std::string("grid CSV truncated while reading ") + what);
	if (!line.empty() && line.back() == '\r')
		line.pop_back();
	return line;
}

}  // namespace

double parse_double(std::string_view text) {
	text = trim(text);
	double v = 0.0;
	const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
	if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
		throw std::invalid_argument("not a number: '" + std::string(text) + "'");
	return v;
}

std::uint64_t parse_uint(std::string_view text) {
	text = trim(text);
	std::uint64_t v = 0;
	const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
	if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
		throw std::invalid_argument("not a natural number: '" + std::string(text) + "'");
	return v;
}

std::vector<double> parse_csv_doubles(std::string_view line) {
	std::vector<double> out;
	std::size_t start = 0;
	while (true) {
		const std::size_t comma = line.find(',', start);
		out.push_back(parse_double(line.substr(start, comma - start)));
		if (comma == std::string_view::npos)
			break;
		start = comma + 1;
	}
	return out;
}

std::vector<std::string> read_data_lines(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw std::invalid_argument("cannot open '" + path + "'");
	std::vector<std::string> lines;
	std::string line;
	while (std::getline(in, line)) {
		const auto t = trim(line);
		if (t.empty() || t.front() == '#')
			continue;
		lines.emplace_back(t);
	}
	return lines;
}

std::string format_double(double v) {
	char buf[64];
	const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
	if (ec != std::errc())
		throw std::runtime_error("format_double failed");
	return std::string(buf, ptr);
}

void write_grid_csv(std::ostream& out, const GridFunction1D& f) {
	out << "# resolution=" << f.spec().resolution() << '\n';
	for (double v : f.samples())
		out << format_double(v) << '\n';
}

GridFunction1D read_grid_csv(std::istream& in) {
	const GridSpec spec(parse_header(next_line(in, "header"), false));
	std::vector<double> samples;
	samples.reserve(spec.size());
	for (std::size_t l = 0; l < spec.size(); ++l)
		samples.push_back(parse_double(next_line(in, "samples")));
	return GridFunction1D(spec, std::move(samples));
}

void write_grid_csv(std::ostream& out, const GridFunction2D& f) {
	out << "# resolution=" << f.spec().resolution() << " dims=2\n";
	const std::size_t N = f.side();
	for (std::size_t i = 0; i < N; ++i) {
		for (std::size_t j = 0; j < N; ++j) {
			if (j)
				out << ',';
			out << format_double(f(i, j));
		}
		out << '\n';
	}
}

GridFunction2D read_grid2d_csv(std::istream& in) {
	const GridSpec spec(parse_header(next_line(in, "header"), true));
	GridFunction2D f(spec);
	for (std::size_t i = 0; i < f.side(); ++i) {
		const auto row = parse_csv_doubles(next_line(in, "rows"));
		if (row.size() != f.side())
			throw std::invalid_argument("2D grid CSV row " + std::to_string(i) + " has " +
			                            std::to_string(row.size()) + " values");
		for (std::size_t j = 0; j < f.side(); ++j)
			f(i, j) = row[j];
	}
	return f;
}

namespace {
template <typename F>
void save_any(const std::string& path, const F& f) {
	std::ofstream out(path);
	if (!out)
		throw std::invalid_argument("cannot write '" + path + "'");
	write_grid_csv(out, f);
}
}  // namespace

void save_grid(const std::string& path, const GridFunction1D& f) { save_any(path, f); }
void save_grid(const std::string& path, const GridFunction2D& f) { save_any(path, f); }

GridFunction1D load_grid(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw std::invalid_argument("cannot open '" + path + "'");
	return read_grid_csv(in);
}

GridFunction2D load_grid2d(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw std::invalid_argument("cannot open '" + path + "'");
	return read_grid2d_csv(in);
}

}  // namespace walshsum::io
