#include "common/csv.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dsim {

std::string format_double(double v) {
	if (v == 0.0) return "0"; // normalize -0
	if (std::isnan(v)) return "nan";
	if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
	char buf[40];
	auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
	(void)ec;
	return std::string(buf, ptr);
}

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::add_row(std::vector<std::string> cells) {
	if (cells.size() != header_.size())
		throw std::runtime_error("csv row width " + std::to_string(cells.size()) +
		                         " does not match header width " + std::to_string(header_.size()));
	rows_.push_back(std::move(cells));
}

std::string CsvWriter::str() const {
	std::ostringstream out;
	for (std::size_t i = 0; i < header_.size(); ++i) {
		if (i) out << ',';
		out << header_[i];
	}
	out << '\n';
	for (const auto& row : rows_) {
		for (std::size_t i = 0; i < row.size(); ++i) {
			if (i) out << ',';
			out << row[i];
		}
		out << '\n';
	}
	return out.str();
}

void CsvWriter::save(const std::string& path) const {
	write_file(path, str());
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
	std::vector<std::vector<std::string>> rows;
	std::istringstream in(text);
	std::string line;
	while (std::getline(in, line)) {
		if (!line.empty() && line.back() == '\r') line.pop_back();
		if (line.empty()) continue;
		std::vector<std::string> cells;
		std::size_t pos = 0;
		while (true) {
			std::size_t comma = line.find(',', pos);
			if (comma == std::string::npos) {
				cells.push_back(line.substr(pos));
				break;
			}
			cells.push_back(line.substr(pos, comma - pos));
			pos = comma + 1;
		}
		rows.push_back(std::move(cells));
	}
	return rows;
}

std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw std::runtime_error("cannot open file: " + path);
	std::ostringstream out;
	out << in.rdbuf();
	return out.str();
}

void write_file(const std::string& path, const std::string& content) {
	const auto parent = std::filesystem::path(path).parent_path();
	if (!parent.empty()) std::filesystem::create_directories(parent);
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out) throw std::runtime_error("cannot write file: " + path);
	out << content;
	if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace dsim
