#include "gdm/population_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "gdm/errors.hpp"

namespace gdm {

namespace {

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string_view trim_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

} // namespace

std::string population_csv(const Population& population) {
    std::ostringstream out;
    const int n = population.dimension();
    for (int k = 0; k < n; ++k) out << (k ? ",x" : "x") << (k + 1);
    out << '\n';
    for (int i = 0; i < population.size(); ++i) {
        for (int k = 0; k < n; ++k) {
            if (k) out << ',';
            out << format17(population.gene(i, k));
        }
        out << '\n';
    }
    return out.str();
}

Population parse_population_csv(std::string_view text, const Landscape& landscape) {
    const int n = landscape.dimension();
    std::size_t pos = 0;
    int line_no = 0;
    bool header_seen = false;
    std::vector<std::vector<double>> rows;

    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = trim_cr(
            eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos));
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (line.empty()) continue;

        const auto fields = split(line, ',');
        if (!header_seen) {
            if (static_cast<int>(fields.size()) != n)
                throw ParseError("line 1: header has " + std::to_string(fields.size()) +
                                 " columns, landscape has " + std::to_string(n) + " genes");
            for (int k = 0; k < n; ++k) {
                const std::string expected = "x" + std::to_string(k + 1);
                if (fields[static_cast<std::size_t>(k)] != expected)
                    throw ParseError("line 1: expected header column '" + expected + "', got '" +
                                     std::string(fields[static_cast<std::size_t>(k)]) + "'");
            }
            header_seen = true;
            continue;
        }

        if (static_cast<int>(fields.size()) != n)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(n) + " values, got " + std::to_string(fields.size()));
        std::vector<double> row(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            const auto f = fields[static_cast<std::size_t>(k)];
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc{} || ptr != f.data() + f.size())
                throw ParseError("line " + std::to_string(line_no) + ": cannot parse '" +
                                 std::string(f) + "' as a real number");
            row[static_cast<std::size_t>(k)] = v;
        }
        rows.push_back(std::move(row));
    }

    if (!header_seen) throw ParseError("line 1: missing header");
    if (rows.empty()) throw ParseError("population must contain at least one individual");
    return make_population(rows, landscape);
}

void save_population(const Population& population, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << population_csv(population);
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

Population load_population(const std::string& path, const Landscape& landscape) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_population_csv(buf.str(), landscape);
}

} // namespace gdm
