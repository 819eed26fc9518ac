#pragma once

#include <string>
#include <vector>

#include "lie/algebra.hpp"
#include "lie/rigidity.hpp"
#include "lie/sheets.hpp"
#include "lie/verify.hpp"

namespace lie {

enum class OutputFormat { json, csv, markdown };

OutputFormat parse_format(const std::string& text);  // "json" | "csv" | "md" | "markdown"

/// Row of the orbit listing (cmd orbits). Exceptional algebras only know
/// orbit dimensions, so the partition column may be absent.
struct OrbitRow {
    std::optional<NilpotentOrbit> orbit;
    int dim = 0;
    std::optional<int> z;
    bool rigid = false;

    auto operator<=>(const OrbitRow&) const = default;
};

std::vector<OrbitRow> orbit_rows(const AlgebraId& alg);

std::string render_orbits(const AlgebraId& alg, const std::vector<OrbitRow>& rows, OutputFormat fmt);
std::string render_sheets(const AlgebraId& alg, const std::vector<Sheet>& sheets, OutputFormat fmt,
                          bool trace);
std::string render_gm(const AlgebraId& alg, const std::vector<StratumReport>& table, OutputFormat fmt);
std::string render_rigid(const AlgebraId& alg, OutputFormat fmt);
std::string render_jordan(const AlgebraId& alg, const std::vector<JordanClass>& classes,
                          OutputFormat fmt);
std::string render_verify(const std::vector<verify::CheckResult>& results, OutputFormat fmt);

/// Inverses of the JSON renderers, for the round-trip property.
std::vector<OrbitRow> parse_orbits_json(const std::string& doc);
std::vector<Sheet> parse_sheets_json(const std::string& doc);
std::vector<StratumReport> parse_gm_json(const std::string& doc);

}  // namespace lie
