#pragma once

// Parsing, validation, and serialization: process-inventory CSV, scenario
// files, material aggregation, and report rendering.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lcaic/model.hpp"

namespace lcaic {

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<ValidationError> errors;

  bool ok() const { return value.has_value(); }
};

// Inventory CSV schema (header is bit-exact):
//   index,name,category,energy_kwh,materials
// where materials is a semicolon-separated list of name:class:grams triples
// (empty allowed). UTF-8, LF or CRLF, '#'-prefixed comment lines ignored.
// Collects ALL row-level errors with line numbers; never throws on
// arbitrary byte streams.
ParseResult<ProcessInventory> parse_inventory(std::istream& in,
                                              const std::string& technology_name = "");
ParseResult<ProcessInventory> parse_inventory_file(const std::string& path);

std::string render_inventory(const ProcessInventory& inv);

// Scenario files are a flat key-value tree (key = value per line, '#'
// comments, schema_version = 1). Unknown keys are rejected; missing
// required fields are listed exhaustively. Inventory references are
// resolved relative to base_dir, then validate_scenario runs.
ParseResult<Scenario> parse_scenario(std::istream& in, const std::string& base_dir = ".");
ParseResult<Scenario> parse_scenario_file(const std::string& path);

struct MaterialSummary {
  // class -> material -> grams per wafer
  std::map<std::string, std::map<std::string, double>> by_class;

  double class_total_g(const std::string& material_class) const;
  double grand_total_g() const;
};

MaterialSummary aggregate_materials(const ProcessInventory& inv);

enum class ReportFormat { table, json, csv };

std::optional<ReportFormat> report_format_from_string(const std::string& s);

// table mirrors the comparison layout (manufacturing, assembly, use phase
// with parenthetical cooling, total with parenthetical, overall improvement);
// json and csv are lossless full-precision renderings. json round-trips
// through parse_report_json byte-identically.
std::string render_report(const ComparisonReport& report, ReportFormat format,
                          int decimals = 2);

ParseResult<ComparisonReport> parse_report_json(const std::string& text);

std::string render_materials(const MaterialSummary& summary, ReportFormat format);

std::string render_whatif(const WhatIfResult& result, ReportFormat format,
                          int decimals = 2);

}  // namespace lcaic
