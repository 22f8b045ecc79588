#include "fibprod/report.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fibprod {

namespace {

struct Row {
    std::string id;
    int theorem;
    std::int64_t n, q, N;
    std::string mode;
    std::optional<std::string> lhs_decimal;
    std::string rhs_decimal;
    std::string a_num, a_den, b_num, b_den;
    std::optional<std::string> deviation_bound;
    std::optional<std::string> tail_bound;
    bool passed;
    std::string elapsed_ms;
    std::string reason;
};

constexpr unsigned kBoundDigits = 4;

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

Row make_row(const VerificationReport& r, const EmitOptions& opt) {
    const auto& d = descriptor(r.id);
    Row row{
        std::string(d.label), d.theorem, r.params.n, r.params.q, r.N, std::string(mode_name(r.mode)),
        std::nullopt, golden_to_decimal(r.rhs, opt.digits),
        r.rhs.a().numerator().get_str(), r.rhs.a().denominator().get_str(),
        r.rhs.b().numerator().get_str(), r.rhs.b().denominator().get_str(),
        std::nullopt, std::nullopt, r.passed, format_ms(opt.timing ? r.elapsed_ms : 0.0), r.reason,
    };
    // A report that could not run has no product.
    if (r.reason.empty() || r.deviation || r.boundary) {
        row.lhs_decimal = golden_to_decimal(r.partial_product, opt.digits);
    }
    if (r.deviation) row.deviation_bound = to_scientific(*r.deviation, kBoundDigits);
    if (r.tail_bound) row.tail_bound = to_scientific(*r.tail_bound, kBoundDigits);
    return row;
}

nlohmann::ordered_json optional_json(const std::optional<std::string>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string emit_json(const std::vector<Row>& rows) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json o;
        o["id"] = row.id;
        o["theorem"] = row.theorem;
        o["n"] = row.n;
        o["q"] = row.q;
        o["N"] = row.N;
        o["mode"] = row.mode;
        o["lhs_decimal"] = optional_json(row.lhs_decimal);
        o["rhs_decimal"] = row.rhs_decimal;
        o["rhs_exact"] = {{"a_num", row.a_num}, {"a_den", row.a_den},
                          {"b_num", row.b_num}, {"b_den", row.b_den}};
        o["deviation_bound"] = optional_json(row.deviation_bound);
        o["tail_bound"] = optional_json(row.tail_bound);
        o["passed"] = row.passed;
        o["elapsed_ms"] = nlohmann::ordered_json::parse(row.elapsed_ms);
        if (!row.reason.empty()) o["reason"] = row.reason;
        doc.push_back(std::move(o));
    }
    return doc.dump(2) + "\n";
}

std::string csv_field(std::string_view v) {
    if (v.find_first_of(",\"\n") == std::string_view::npos) return std::string(v);
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string emit_csv(const std::vector<Row>& rows) {
    std::ostringstream os;
    os << "id,theorem,n,q,N,mode,lhs_decimal,rhs_decimal,rhs_a_num,rhs_a_den,rhs_b_num,rhs_b_den,"
          "deviation_bound,tail_bound,passed,elapsed_ms\n";
    for (const auto& r : rows) {
        os << r.id << ',' << r.theorem << ',' << r.n << ',' << r.q << ',' << r.N << ',' << r.mode
           << ',' << r.lhs_decimal.value_or("") << ',' << r.rhs_decimal << ',' << r.a_num << ','
           << r.a_den << ',' << r.b_num << ',' << r.b_den << ',' << r.deviation_bound.value_or("")
           << ',' << r.tail_bound.value_or("") << ',' << (r.passed ? "true" : "false") << ','
           << r.elapsed_ms << '\n';
    }
    return os.str();
}

std::string emit_markdown(const std::vector<Row>& rows) {
    std::map<int, std::vector<const Row*>> by_theorem;
    for (const auto& r : rows) by_theorem[r.theorem].push_back(&r);
    std::ostringstream os;
    bool first = true;
    for (const auto& [theorem, group] : by_theorem) {
        if (!first) os << '\n';
        first = false;
        os << "### Theorem " << theorem << "\n\n"
           << "| id | n | q | N | mode | lhs | rhs | deviation | tail bound | passed |\n"
           << "|---|---|---|---|---|---|---|---|---|---|\n";
        for (const Row* r : group) {
            os << "| " << r->id << " | " << r->n << " | " << r->q << " | " << r->N << " | "
               << r->mode << " | " << r->lhs_decimal.value_or("-") << " | " << r->rhs_decimal
               << " | " << r->deviation_bound.value_or("-") << " | " << r->tail_bound.value_or("-")
               << " | " << (r->passed ? "yes" : "**no**") << " |\n";
        }
    }
    return os.str();
}

std::string emit_text(const ReportSet& set, const std::vector<Row>& rows) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        passed += r.passed ? 1 : 0;
        os << r.id << " n=" << r.n << " q=" << r.q << " N=" << r.N << ' ' << r.mode << ' '
           << (r.passed ? "PASS" : "FAIL") << '\n';
        if (r.lhs_decimal) os << "  lhs   " << *r.lhs_decimal << '\n';
        os << "  rhs   " << r.rhs_decimal << "  [" << set[i].rhs.to_string() << "]\n";
        if (r.deviation_bound) os << "  |P_N/rhs - 1| <= " << *r.deviation_bound << '\n';
        if (r.tail_bound) os << "  tail bound      <= " << *r.tail_bound << '\n';
        if (!r.reason.empty()) os << "  reason: " << r.reason << '\n';
    }
    os << passed << '/' << rows.size() << " passed\n";
    return os.str();
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "markdown") return Format::markdown;
    return std::nullopt;
}

std::string emit_report(const ReportSet& set, Format format, const EmitOptions& options) {
    std::vector<Row> rows;
    rows.reserve(set.size());
    for (const auto& r : set) rows.push_back(make_row(r, options));
    switch (format) {
        case Format::json: return emit_json(rows);
        case Format::csv: return emit_csv(rows);
        case Format::markdown: return emit_markdown(rows);
        case Format::text: break;
    }
    return emit_text(set, rows);
}

std::string emit_catalog(Format format) {
    const auto doc = catalog_json();
    std::ostringstream os;
    switch (format) {
        case Format::json:
            return doc.dump(2) + "\n";
        case Format::csv:
            os << "id,theorem,family,p,m,alternating,lhs,rhs\n";
            for (const auto& d : list_identities()) {
                os << d.label << ',' << d.theorem << ',' << family_name(d) << ',' << d.p_formula
                   << ',' << d.m_formula << ',' << (d.alternating() ? "true" : "false") << ','
                   << csv_field(d.lhs_display) << ',' << csv_field(d.rhs_display) << '\n';
            }
            return os.str();
        case Format::markdown:
            os << "| id | family | p | m | lhs | rhs |\n|---|---|---|---|---|---|\n";
            for (const auto& d : list_identities()) {
                os << "| " << d.label << " | " << family_name(d) << " | " << d.p_formula << " | "
                   << d.m_formula << " | `" << d.lhs_display << "` | `" << d.rhs_display << "` |\n";
            }
            return os.str();
        case Format::text:
            break;
    }
    for (const auto& d : list_identities()) {
        os << d.label << "  " << family_name(d) << "  p=" << d.p_formula << " m=" << d.m_formula
           << "\n  " << d.lhs_display << "\n  = " << d.rhs_display << '\n';
    }
    return os.str();
}

}  // namespace fibprod
