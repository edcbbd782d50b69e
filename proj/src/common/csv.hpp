#pragma once

#include <string>
#include <vector>

namespace dsim {

/// Shortest decimal string that round-trips to the same double.
/// Used everywhere a floating-point value lands in an artifact so that
/// repeated runs produce byte-identical files.
std::string format_double(double v);

/// Minimal CSV writer: fixed header, rows of preformatted cells.
class CsvWriter {
public:
	explicit CsvWriter(std::vector<std::string> header);

	void add_row(std::vector<std::string> cells);

	/// Serialize to a single string ('\n' line endings, trailing newline).
	std::string str() const;

	/// Write atomically-ish (single ofstream write) to `path`.
	void save(const std::string& path) const;

	std::size_t rows() const { return rows_.size(); }

private:
	std::vector<std::string> header_;
	std::vector<std::vector<std::string>> rows_;
};

/// Parse a CSV produced by CsvWriter (no quoting or escaping — our artifacts
/// never contain commas inside cells). Returns rows including the header.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

/// Read a whole file into a string. Throws std::runtime_error if missing.
std::string read_file(const std::string& path);

/// Write a whole string to a file, creating parent directories.
void write_file(const std::string& path, const std::string& content);

} // namespace dsim
