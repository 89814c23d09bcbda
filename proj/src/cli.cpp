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
#include "qsemigroup/cli.hpp"

#include <charconv>
#include <ostream>
#include <vector>

#include "qsemigroup/error.hpp"
#include "qsemigroup/io.hpp"
#include "qsemigroup/register_layout.hpp"
#include "qsemigroup/solver.hpp"

namespace qsemigroup::cli {
namespace {

constexpr const char *kBanner =
    "===================================================================\n"
    " qsemigroup 0.1.0\n"
    " Numerical semigroup invariants with simulated quantum algorithms\n"
    "===================================================================\n";

constexpr std::uint64_t kDefaultSeed = 2019;

template <typename T>
T parse_value(std::span<const std::string> args, std::size_t &i) {
    const std::string &flag = args[i];
    if (i + 1 >= args.size()) {
        throw UsageError("option " + flag + " needs a value");
    }
    const std::string &text = args[++i];
    T value{};
    const char *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw UsageError("option " + flag + " expects a non-negative integer, got '" +
                         text + "'");
    }
    if constexpr (std::is_signed_v<T>) {
        if (value < 0) {
            throw UsageError("option " + flag + " expects a non-negative integer");
        }
    }
    return value;
}

std::string denumerant_label(Integer t, const NumericalSemigroup &s) {
    std::string label = "d(" + std::to_string(t) + "; ";
    const auto &gens = s.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        label += (i ? ", " : "") + std::to_string(gens[i]);
    }
    return label + ")";
}

std::string join_values(const std::vector<Integer> &values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(values[i]);
    }
    return out + "}";
}

SolverOptions solver_options(const CliRequest &request) {
    SolverOptions options;
    options.counting_bits = request.p_override;
    return options;
}

SolverOptions search_options(const CliRequest &request, const NumericalSemigroup &s,
                             Integer t) {
    SolverOptions options = solver_options(request);
    const unsigned limit = request.max_qubits.value_or(kDefaultCliDenseQubits);
    options.dense_qubits = limit;
    if (t >= s.multiplicity() && RegisterLayout(s, t).total_bits() <= limit) {
        options.mode = SimMode::Dense;
    }
    return options;
}

void print_membership(const CliRequest &request, const NumericalSemigroup &s,
                      Integer t, std::uint64_t seed, std::ostream &out) {
    if (!request.quantum) {
        out << t << " in S: " << (contains(s, t) ? "YES" : "NO") << '\n';
        return;
    }
    const NsmpAnswer answer = solve_nsmp(s, t, seed, search_options(request, s, t));
    out << t << " in S: " << (answer.member ? "YES" : "NO");
    if (answer.witness) {
        out << "  (" << t << " = " << format_factorization(*answer.witness, s.generators())
            << ")";
    }
    out << "\n  Grover runs: " << answer.grover_runs
        << ", total iterations: " << answer.total_iterations << '\n';
}

void print_denumerant(const CliRequest &request, const NumericalSemigroup &s,
                      Integer t, std::uint64_t seed, std::ostream &out) {
    if (!request.quantum) {
        out << denumerant_label(t, s) << " = " << denumerant(s, t) << '\n';
        return;
    }
    const SdpAnswer answer = solve_sdp(s, t, seed, solver_options(request));
    out << denumerant_label(t, s) << " = " << answer.denumerant_estimate << '\n';
    if (t >= s.multiplicity()) {
        out << "  quantum counting: p = " << answer.counting.p
            << ", y = " << answer.counting.y
            << ", estimate = " << answer.counting.m_estimate
            << ", error bound = " << answer.counting.error_bound
            << ", Grover applications = " << answer.grover_applications << '\n';
    }
}

std::vector<IterationRow> csv_rows(const CliRequest &request, const NumericalSemigroup &s) {
    if (request.denumerant_table) {
        return iteration_report(s, 1, std::max<Integer>(1, *request.denumerant_table));
    }
    for (const auto &t : {request.denumerant, request.denumerant_with_solutions,
                          request.membership}) {
        if (t) {
            return iteration_report(s, std::max<Integer>(1, *t),
                                    std::max<Integer>(1, *t));
        }
    }
    throw UsageError("--csv needs one of -dg, -d, -ds or -m");
}

} // namespace

std::filesystem::path json_path_for(const std::filesystem::path &generators_path) {
    std::filesystem::path out = generators_path;
    out.replace_extension(".json");
    return out;
}

std::string help_text() {
    return "Use:\n"
           "   qsemigroup *file* [options]\n"
           "   *file*: the file with the generators of the numerical semigroup S\n"
           "\n"
           "Available options:\n"
           "   --help: print the help\n"
           "   -f: calculate Frobenius number of S\n"
           "   -ga: calculate set of gaps of S\n"
           "   -gn: calculate genus of S\n"
           "   -ap *s*: calculate the Apery set of s with respect to S\n"
           "   -d *t*: calculate Sylvester denumerant for t and S\n"
           "   -ds *t*: calculate Sylvester denumerant for t and S and print all "
           "solutions\n"
           "   -dg *b*: calculate Sylvester function from 0 to b\n"
           "   -m *t*: calculate if t is in S\n"
           "   -ampl: not supported in this implementation\n"
           "   -json: write results to a .json file next to *file*\n"
           "   --quantum: answer -d by simulated quantum counting and -m by\n"
           "              simulated Grover search\n"
           "   --seed *n*: seed for the simulated measurements (default 2019)\n"
           "   --p *n*: fixed counting-register width for --quantum -d\n"
           "   --max-qubits *n*: largest search register simulated as a dense\n"
           "                     state vector (default 16); larger registers use\n"
           "                     the exact two-dimensional subspace model\n"
           "   --csv *path*: write the iteration comparison table for t = 1..b\n"
           "                 (with -dg) or for the -d/-ds/-m target\n";
}

CliRequest parse_arguments(std::span<const std::string> args) {
    CliRequest request;
    bool have_file = false;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string &arg = args[i];
        if (arg == "--help" || arg == "-h") {
            request.help = true;
        } else if (arg == "-f") {
            request.frobenius = true;
        } else if (arg == "-ga") {
            request.gaps = true;
        } else if (arg == "-gn") {
            request.genus = true;
        } else if (arg == "-ap") {
            request.apery = parse_value<Integer>(args, i);
        } else if (arg == "-d") {
            request.denumerant = parse_value<Integer>(args, i);
        } else if (arg == "-ds") {
            request.denumerant_with_solutions = parse_value<Integer>(args, i);
        } else if (arg == "-dg") {
            request.denumerant_table = parse_value<Integer>(args, i);
        } else if (arg == "-m") {
            request.membership = parse_value<Integer>(args, i);
        } else if (arg == "-ampl") {
            request.ampl = true;
        } else if (arg == "-json") {
            request.json_out = true;
        } else if (arg == "--quantum") {
            request.quantum = true;
        } else if (arg == "--seed") {
            request.seed = parse_value<std::uint64_t>(args, i);
        } else if (arg == "--p") {
            request.p_override = parse_value<unsigned>(args, i);
            if (*request.p_override < 1) {
                throw UsageError("--p must be at least 1");
            }
        } else if (arg == "--max-qubits") {
            request.max_qubits = parse_value<unsigned>(args, i);
        } else if (arg == "--csv") {
            if (i + 1 >= args.size()) {
                throw UsageError("option --csv needs a path");
            }
            request.csv_out = args[++i];
        } else if (!arg.empty() && arg[0] == '-') {
            throw UsageError("unknown option " + arg);
        } else if (!have_file) {
            request.generators_path = arg;
            have_file = true;
        } else {
            throw UsageError("unexpected argument " + arg);
        }
    }
    if (!request.help && !have_file) {
        throw UsageError("missing generators file");
    }
    return request;
}

int run(const CliRequest &request, std::ostream &out, std::ostream &err) {
    if (request.help) {
        out << help_text();
        return kExitOk;
    }
    if (request.ampl) {
        err << "-ampl: AMPL/Gurobi integration is not supported in this "
               "implementation\n";
        return kExitUsage;
    }
    const std::uint64_t seed = request.seed.value_or(kDefaultSeed);
    try {
        const NumericalSemigroup s =
            make_semigroup(parse_generators_file(request.generators_path));
        out << kBanner;
        out << "Numerical semigroup: S = " << format_generators(s.generators()) << '\n';
        out << "Total number of generators: " << s.embedding_dimension() << '\n';

        if (request.frobenius) {
            out << "Frobenius number: f(S) = " << frobenius(s) << '\n';
        }
        if (request.gaps) {
            out << "Gaps: " << join_values(gaps(s)) << '\n';
        }
        if (request.genus) {
            out << "Genus: g(S) = " << genus(s) << '\n';
        }
        if (request.apery) {
            out << "Apery set: Ap(S, " << *request.apery
                << ") = " << join_values(apery_set(s, *request.apery)) << '\n';
        }
        if (request.denumerant) {
            print_denumerant(request, s, *request.denumerant, seed, out);
        }
        if (request.denumerant_with_solutions) {
            const Integer t = *request.denumerant_with_solutions;
            const auto solutions = enumerate_factorizations(s, t);
            out << denumerant_label(t, s) << " = " << solutions.size() << "\n\n";
            for (const Factorization &f : solutions) {
                out << format_factorization(f, s.generators()) << '\n';
            }
        }
        if (request.denumerant_table) {
            const auto table = denumerant_table(s, *request.denumerant_table);
            for (std::size_t t = 0; t < table.size(); ++t) {
                out << denumerant_label(static_cast<Integer>(t), s) << " = " << table[t]
                    << '\n';
            }
        }
        if (request.membership) {
            print_membership(request, s, *request.membership, seed, out);
        }
        if (request.csv_out) {
            write_csv(csv_rows(request, s), *request.csv_out);
            out << "Iteration table written to " << request.csv_out->string() << '\n';
        }
        if (request.json_out) {
            const auto path = json_path_for(request.generators_path);
            write_json(invariant_report(s), path);
            out << "Results written to " << path.string() << '\n';
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n\n" << help_text();
        return kExitUsage;
    } catch (const Error &e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

int main_entry(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CliRequest request;
    try {
        request = parse_arguments(args);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n\n" << help_text();
        return kExitUsage;
    }
    return run(request, out, err);
}

} // namespace qsemigroup::cli
