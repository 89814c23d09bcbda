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
/**
 * @file
 * Generators files, JSON invariant reports and iteration CSVs.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qsemigroup/semigroup.hpp"
#include "qsemigroup/solver.hpp"

namespace qsemigroup {

/// One positive integer per line; surrounding whitespace and blank lines
/// are ignored. Throws ParseError (with line number) or Error(EmptyFile).
std::vector<Integer> parse_generators(std::istream &in);

/// Throws Error(FileNotFound) in addition to the parse errors.
std::vector<Integer> parse_generators_file(const std::filesystem::path &path);

/// Keys generators, frobenius, genus, multiplicity, embedding_dimension,
/// gaps in that order, two-space indentation, arrays inline.
std::string format_json(const InvariantReport &report);
void write_json(const InvariantReport &report, const std::filesystem::path &path);

inline constexpr const char *kCsvHeader =
    "t,denumerant,classical_iterations,quantum_sqrt_iterations,"
    "grover_optimal_iterations";

std::string format_csv(std::span<const IterationRow> rows);
void write_csv(std::span<const IterationRow> rows, const std::filesystem::path &path);
/// Inverse of format_csv. Throws ParseError on malformed input.
std::vector<IterationRow> parse_csv(std::istream &in);

/// "<7, 11, 17, 23>"
std::string format_generators(std::span<const Integer> gens);

/// "10*(376) + 4*(381) + 12*(393) + 0*(399)"
std::string format_factorization(const Factorization &f, std::span<const Integer> gens);

} // namespace qsemigroup
