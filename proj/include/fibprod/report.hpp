#pragma once

#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "fibprod/engine.hpp"

namespace fibprod {

enum class Format { text, json, csv, markdown };

std::optional<Format> parse_format(std::string_view name);

using ReportSet = std::vector<VerificationReport>;

struct EmitOptions {
    unsigned long digits = 30;
    bool timing = true;  // false writes elapsed_ms as 0
};

// Deterministic serialization. JSON is an array of objects with fields
// id, theorem, n, q, N, mode, lhs_decimal, rhs_decimal,
// rhs_exact {a_num, a_den, b_num, b_den}, deviation_bound, tail_bound,
// passed, elapsed_ms (plus "reason" on reports that could not run). CSV
// uses the same column order with rhs_exact flattened; markdown renders
// one table per theorem.
std::string emit_report(const ReportSet& set, Format format, const EmitOptions& options = {});

std::string emit_catalog(Format format);

}  // namespace fibprod
