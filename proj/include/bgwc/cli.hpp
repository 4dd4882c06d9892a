#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bgwc::cli {

enum class Command { Field, Bgw, Code, Bounds, Array, Msls, Verify, Sweep };
enum class Format { Json, Text, Pretty };

struct RunConfig {
    Command command = Command::Field;
    std::optional<std::uint64_t> p, s, q, m, g;
    std::optional<std::uint64_t> n, d, w, a, inner;
    std::uint64_t t = 2;
    std::uint64_t lambda = 1;
    std::string check = "oa";
    std::string kind;
    std::string in_path;
    std::string out_path;
    Format format = Format::Text;
    bool derived = false;
    bool tables = false;
    std::uint64_t qmax = 9;
    std::uint64_t mmax = 2;
    std::uint64_t vmax = 1000;
    unsigned threads = 1;
};

/// Exit status: 0 verified, 1 verification failed, 2 invalid input.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bgwc::cli
