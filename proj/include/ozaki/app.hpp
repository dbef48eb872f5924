#pragma once

// Command-line front end. `run` is the whole program; tools/ozaki.cpp only
// forwards argv to it.
//
// Exit codes: 0 ok, 1 usage or runtime error, 2 bound violation.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ozaki::app {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Status { Ok, BoundViolation, Error };
enum class Format { Json, Csv };

std::string_view to_string(Status s);
int exit_code(Status s);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct OutputEnvelope {
    std::string tool_version{kToolVersion};
    std::string command_echo;
    std::optional<std::uint64_t> seed;
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    // Present for tabular payloads; the CSV rendering.
    std::optional<Table> table;
    Status status = Status::Ok;
};

// Floats use 17 significant digits ("%.17g"), non-finite values become null.
std::string format_double(double v);

// Deterministic JSON with insertion-ordered keys.
std::string dump_json(const nlohmann::ordered_json& j);

// Throws std::invalid_argument for CSV on an envelope without a table.
std::string emit(const OutputEnvelope& envelope, Format format);

// "re:im,re:im,..."; a bare "re" means zero imaginary part.
std::vector<std::complex<double>> parse_complex_list(std::string_view text);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ozaki::app
