// Copyright 2026 The qsemigroup Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qsemigroup/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>

#include "qsemigroup/error.hpp"

namespace qsemigroup {
namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\v\f";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

template <typename T>
bool parse_number(std::string_view text, T &out) {
    const char *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end && !text.empty();
}

template <typename T>
std::string join(std::span<const T> values, std::string_view sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            os << sep;
        }
        os << values[i];
    }
    return os.str();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        fields.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return fields;
        }
        start = pos + 1;
    }
}

void write_text(const std::string &text, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    }
}

} // namespace

std::vector<Integer> parse_generators(std::istream &in) {
    std::vector<Integer> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view text = line;
        if (line_no == 1 && text.starts_with("\xEF\xBB\xBF")) {
            text.remove_prefix(3);
        }
        text = trim(text);
        if (text.empty()) {
            continue;
        }
        Integer value = 0;
        if (!parse_number(text, value) || value < 1) {
            throw ParseError(line_no, "line " + std::to_string(line_no) +
                                          ": expected a positive integer, got '" +
                                          std::string(text) + "'");
        }
        values.push_back(value);
    }
    if (values.empty()) {
        throw Error(ErrorKind::EmptyFile, "generators file contains no integers");
    }
    return values;
}

std::vector<Integer> parse_generators_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::FileNotFound, "cannot open " + path.string());
    }
    return parse_generators(in);
}

std::string format_generators(std::span<const Integer> gens) {
    return "<" + join(gens, ", ") + ">";
}

std::string format_factorization(const Factorization &f, std::span<const Integer> gens) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.lambdas.size(); ++i) {
        if (i) {
            os << " + ";
        }
        os << f.lambdas[i] << "*(" << gens[i] << ")";
    }
    return os.str();
}

std::string format_json(const InvariantReport &report) {
    std::ostringstream os;
    os << "{\n"
       << "  \"generators\": [" << join<Integer>(report.generators, ", ") << "],\n"
       << "  \"frobenius\": " << report.frobenius << ",\n"
       << "  \"genus\": " << report.genus << ",\n"
       << "  \"multiplicity\": " << report.multiplicity << ",\n"
       << "  \"embedding_dimension\": " << report.embedding_dimension << ",\n"
       << "  \"gaps\": [" << join<Integer>(report.gaps, ", ") << "]\n"
       << "}\n";
    return os.str();
}

void write_json(const InvariantReport &report, const std::filesystem::path &path) {
    write_text(format_json(report), path);
}

std::string format_csv(std::span<const IterationRow> rows) {
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const IterationRow &r : rows) {
        os << r.t << ',' << r.denumerant << ',' << r.classical_iterations << ','
           << r.quantum_sqrt_iterations << ',';
        if (r.grover_optimal_iterations) {
            os << *r.grover_optimal_iterations;
        }
        os << '\n';
    }
    return os.str();
}

void write_csv(std::span<const IterationRow> rows, const std::filesystem::path &path) {
    if (rows.empty()) {
        throw Error(ErrorKind::InvalidArgument, "no iteration rows to write");
    }
    write_text(format_csv(rows), path);
}

std::vector<IterationRow> parse_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != kCsvHeader) {
        throw ParseError(1, "line 1: missing iteration CSV header");
    }
    std::vector<IterationRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty()) {
            continue;
        }
        const auto fields = split(text, ',');
        IterationRow row;
        bool ok = fields.size() == 5 && parse_number(fields[0], row.t) &&
                  parse_number(fields[1], row.denumerant) &&
                  parse_number(fields[2], row.classical_iterations) &&
                  parse_number(fields[3], row.quantum_sqrt_iterations);
        if (ok && !fields[4].empty()) {
            Count g = 0;
            ok = parse_number(fields[4], g);
            row.grover_optimal_iterations = g;
        }
        if (!ok) {
            throw ParseError(line_no, "line " + std::to_string(line_no) +
                                          ": malformed iteration row");
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace qsemigroup
