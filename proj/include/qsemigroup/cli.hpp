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
 * numsem-compatible command line front end.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "qsemigroup/semigroup.hpp"

namespace qsemigroup::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

inline constexpr unsigned kDefaultCliDenseQubits = 16;

struct CliRequest {
    std::filesystem::path generators_path;
    bool help = false;
    bool frobenius = false;
    bool gaps = false;
    bool genus = false;
    std::optional<Integer> apery;
    std::optional<Integer> denumerant;
    std::optional<Integer> denumerant_with_solutions;
    std::optional<Integer> denumerant_table;
    std::optional<Integer> membership;
    bool ampl = false;
    bool json_out = false;
    bool quantum = false;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> p_override;
    std::optional<unsigned> max_qubits;
    std::optional<std::filesystem::path> csv_out;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parses arguments (without the program name). Throws UsageError.
CliRequest parse_arguments(std::span<const std::string> args);

std::string help_text();

/// Executes a parsed request. Returns the process exit code.
int run(const CliRequest &request, std::ostream &out, std::ostream &err);

/// parse_arguments + run, printing help on malformed options.
int main_entry(std::span<const std::string> args, std::ostream &out, std::ostream &err);

/// Where -json writes its report: the generators path with a .json extension.
std::filesystem::path json_path_for(const std::filesystem::path &generators_path);

} // namespace qsemigroup::cli
