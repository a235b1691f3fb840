#pragma once

// CSV grid files and small parsing helpers shared by the library and the CLI.

#include "walshsum/tensor2d.hpp"
#include "walshsum/walsh.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace walshsum::io {

/// Strict decimal parse; throws std::invalid_argument on trailing junk.
double parse_double(std::string_view text);
std::uint64_t parse_uint(std::string_view text);
std::vector<double> parse_csv_doubles(std::string_view line);

/// Non-empty lines of a file, skipping those starting with '#'.
std::vector<std::string> read_data_lines(const std::string& path);

/// Shortest text that parses back to exactly v.
std::string format_double(double v);

/// `# resolution=K`, then one value per line.
void write_grid_csv(std::ostream& out, const GridFunction1D& f);
GridFunction1D read_grid_csv(std::istream& in);

/// `# resolution=K dims=2`, then 2^K lines of 2^K comma-separated values (row i = x0 index).
void write_grid_csv(std::ostream& out, const GridFunction2D& f);
GridFunction2D read_grid2d_csv(std::istream& in);

void save_grid(const std::string& path, const GridFunction1D& f);
void save_grid(const std::string& path, const GridFunction2D& f);
GridFunction1D load_grid(const std::string& path);
GridFunction2D load_grid2d(const std::string& path);

}  // namespace walshsum::io
