#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "fibprod/catalog.hpp"
#include "fibprod/report.hpp"

namespace fibprod::cli {

enum class Command { list, verify, grid, eval, special };
enum class ModeSelection { exact, limit, both };

inline constexpr int kExitPassed = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::list;
    std::optional<IdentityId> identity;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> q;
    std::int64_t n_max = 1;
    std::int64_t q_max = 1;
    std::int64_t terms = 40;
    unsigned long digits = 30;
    Format format = Format::text;
    ModeSelection mode = ModeSelection::limit;
    unsigned jobs = 0;
    bool timing = true;
};

// Help text, or the reason a command line was rejected.
struct Usage {
    std::string message;
    int exit_code = kExitUsage;  // 0 for --help
};

std::variant<RunConfig, Usage> parse_args(std::span<const std::string> args);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run; never throws.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fibprod::cli
