#include "lcaic/inventory_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace lcaic {
namespace {

using nlohmann::json;

constexpr const char* kInventoryHeader = "index,name,category,energy_kwh,materials";

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<double> parse_double(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) return std::nullopt;
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<long> parse_long(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) return std::nullopt;
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

ParseResult<ProcessInventory> parse_inventory(std::istream& in,
                                              const std::string& technology_name) {
  std::vector<ValidationError> errors;
  ProcessInventory inv;
  inv.technology_name = technology_name;

  std::string line;
  int line_no = 0;
  bool header_seen = false;
  std::set<int> indices;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::string where = "line " + std::to_string(line_no);

    if (!header_seen) {
      if (stripped != kInventoryHeader) {
        errors.push_back({where, "malformed header: expected '" +
                                     std::string(kInventoryHeader) + "', got '" + stripped + "'"});
        return {std::nullopt, std::move(errors)};
      }
      header_seen = true;
      continue;
    }

    const auto fields = split(line, ',');
    if (fields.size() != 5) {
      errors.push_back({where, "expected 5 comma-separated fields, got " +
                                   std::to_string(fields.size())});
      continue;
    }

    ProcessStep step;
    bool row_ok = true;

    const auto idx = parse_long(fields[0]);
    if (!idx || *idx <= 0) {
      errors.push_back({where, "index must be a positive integer, got '" + trim(fields[0]) + "'"});
      row_ok = false;
    } else if (!indices.insert(static_cast<int>(*idx)).second) {
      errors.push_back({where, "duplicate step index " + std::to_string(*idx)});
      row_ok = false;
    } else {
      step.index = static_cast<int>(*idx);
    }

    step.name = trim(fields[1]);
    if (step.name.empty()) {
      errors.push_back({where, "step name must not be empty"});
      row_ok = false;
    }

    const auto cat = step_category_from_string(trim(fields[2]));
    if (!cat) {
      errors.push_back({where, "unknown category '" + trim(fields[2]) + "'"});
      row_ok = false;
    } else {
      step.category = *cat;
    }

    const auto energy = parse_double(fields[3]);
    if (!energy || !std::isfinite(*energy) || *energy < 0) {
      errors.push_back({where, "energy_kwh must be a non-negative number, got '" +
                                   trim(fields[3]) + "'"});
      row_ok = false;
    } else {
      step.energy_kwh = *energy;
    }

    const std::string materials = trim(fields[4]);
    if (!materials.empty()) {
      for (const std::string& item : split(materials, ';')) {
        if (trim(item).empty()) continue;
        const auto parts = split(item, ':');
        if (parts.size() != 3) {
          errors.push_back({where, "material entry '" + item +
                                       "' is not a name:class:grams triple"});
          row_ok = false;
          continue;
        }
        MaterialFlow flow;
        flow.material = trim(parts[0]);
        flow.material_class = trim(parts[1]);
        const auto mass = parse_double(parts[2]);
        if (flow.material.empty() || !is_known_material_class(flow.material_class) || !mass ||
            !std::isfinite(*mass) || *mass < 0) {
          errors.push_back({where, "bad material entry '" + item + "'"});
          row_ok = false;
          continue;
        }
        flow.mass_g = *mass;
        step.materials.push_back(std::move(flow));
      }
    }

    if (row_ok) inv.steps.push_back(std::move(step));
  }

  if (!header_seen) errors.push_back({"line 1", "empty file: missing header"});
  if (header_seen && inv.steps.empty() && errors.empty())
    errors.push_back({"file", "inventory contains no steps"});

  if (!errors.empty()) return {std::nullopt, std::move(errors)};
  return {std::move(inv), {}};
}

ParseResult<ProcessInventory> parse_inventory_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {std::nullopt, {{path, "cannot open file"}}};
  const std::string name = std::filesystem::path(path).stem().string();
  return parse_inventory(in, name);
}

std::string render_inventory(const ProcessInventory& inv) {
  std::ostringstream out;
  out << kInventoryHeader << '\n';
  for (const auto& step : inv.steps) {
    out << step.index << ',' << step.name << ',' << to_string(step.category) << ','
        << fmt_full(step.energy_kwh) << ',';
    for (std::size_t i = 0; i < step.materials.size(); ++i) {
      if (i) out << ';';
      const auto& m = step.materials[i];
      out << m.material << ':' << m.material_class << ':' << fmt_full(m.mass_g);
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Scenario files

namespace {

struct KvFile {
  std::map<std::string, std::string> values;
  std::vector<ValidationError> errors;
};

KvFile read_kv(std::istream& in) {
  KvFile kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      kv.errors.push_back({"line " + std::to_string(line_no), "expected 'key = value'"});
      continue;
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      kv.errors.push_back({"line " + std::to_string(line_no), "empty key"});
      continue;
    }
    if (!kv.values.emplace(key, value).second)
      kv.errors.push_back({"line " + std::to_string(line_no), "duplicate key '" + key + "'"});
  }
  return kv;
}

class ScenarioReader {
 public:
  ScenarioReader(std::map<std::string, std::string> values, std::string base_dir)
      : values_(std::move(values)), base_dir_(std::move(base_dir)) {}

  std::optional<std::string> take(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    std::string v = it->second;
    values_.erase(it);
    return v;
  }

  std::optional<double> take_number(const std::string& key) {
    auto raw = take(key);
    if (!raw) return std::nullopt;
    auto v = parse_double(*raw);
    if (!v) {
      errors.push_back({key, "not a number: '" + *raw + "'"});
      return std::nullopt;
    }
    return v;
  }

  double require_number(const std::string& key) {
    if (!values_.count(key)) {
      errors.push_back({key, "required field is missing"});
      return 0;
    }
    return take_number(key).value_or(0);
  }

  std::string require_text(const std::string& key) {
    auto raw = take(key);
    if (!raw) {
      errors.push_back({key, "required field is missing"});
      return "";
    }
    return *raw;
  }

  ParseResult<Scenario> read() {
    Scenario s;

    const double version = require_number("schema_version");
    if (errors.empty() && version != 1)
      errors.push_back({"schema_version", "unsupported version " + fmt_full(version)});

    if (auto policy = take("replacement_policy")) {
      if (auto p = replacement_policy_from_string(*policy))
        s.replacement_policy = *p;
      else
        errors.push_back({"replacement_policy", "unknown policy '" + *policy + "'"});
    }
    if (auto v = take_number("assembly_coefficient_kwh_per_cm2"))
      s.assembly_coefficient_kwh_per_cm2 = *v;
    if (auto v = take_number("hours_per_year")) s.hours_per_year = *v;
    if (auto v = take_number("service_period_years")) s.service_period_years = *v;

    for (int i = 0; has_chip(i); ++i) s.chips.push_back(read_chip(i));
    if (s.chips.empty()) errors.push_back({"chip.0", "scenario must define at least one chip"});

    // Strict mode: anything left over is an unknown key.
    for (const auto& [key, value] : values_)
      errors.push_back({key, "unknown key (strict mode)"});

    if (!errors.empty()) return {std::nullopt, std::move(errors)};

    auto validated = validate_scenario(s);
    if (!validated.ok()) return {std::nullopt, std::move(validated.errors)};
    return {std::move(*validated.scenario), {}};
  }

  std::vector<ValidationError> errors;

 private:
  bool has_chip(int i) const {
    const std::string prefix = "chip." + std::to_string(i) + ".";
    for (const auto& [key, value] : values_)
      if (key.rfind(prefix, 0) == 0) return true;
    return false;
  }

  ChipEntry read_chip(int i) {
    const std::string p = "chip." + std::to_string(i) + ".";
    ChipEntry entry;
    entry.chip.name = require_text(p + "name");
    entry.chip.clock_frequency_hz = require_number(p + "clock_frequency_hz");
    entry.chip.operating_power_w = require_number(p + "operating_power_w");
    entry.chip.die_area_cm2 = require_number(p + "die_area_cm2");
    entry.chip.lifetime_years = require_number(p + "lifetime_years");
    if (auto v = take_number(p + "utilization")) entry.chip.utilization = *v;
    if (auto v = take_number(p + "cooling_multiplier")) entry.chip.cooling_multiplier = *v;
    if (auto v = take_number(p + "assembly_area_cm2")) entry.chip.assembly_area_cm2 = *v;
    if (auto v = take_number(p + "use_energy_override_kwh"))
      entry.chip.use_energy_override_kwh = *v;

    entry.wafer.diameter_mm = require_number(p + "wafer.diameter_mm");

    const auto direct_energy = take_number(p + "wafer.manufacturing_energy_kwh");
    const auto inventory_path = take(p + "inventory");
    if (direct_energy && inventory_path) {
      errors.push_back({p + "inventory",
                        "give either wafer.manufacturing_energy_kwh or inventory, not both"});
    } else if (direct_energy) {
      entry.wafer.manufacturing_energy_kwh = *direct_energy;
    } else if (inventory_path) {
      const auto full = (std::filesystem::path(base_dir_) / *inventory_path).string();
      auto inv = parse_inventory_file(full);
      if (!inv.ok()) {
        for (auto& e : inv.errors)
          errors.push_back({p + "inventory(" + *inventory_path + ") " + e.path, e.message});
      } else {
        entry.inventory = std::move(*inv.value);
      }
    } else {
      errors.push_back({p + "wafer.manufacturing_energy_kwh",
                        "required: either this field or '" + p + "inventory'"});
    }

    if (auto model = take(p + "yield.model")) {
      if (auto m = yield_model_from_string(*model))
        entry.yield.variant = *m;
      else
        errors.push_back({p + "yield.model", "unknown model '" + *model + "'"});
    }
    const auto density = take_number(p + "yield.defect_density");
    const auto target = take_number(p + "yield.target_yield");
    if (density && target) {
      errors.push_back({p + "yield.target_yield",
                        "give either yield.defect_density or yield.target_yield, not both"});
    } else if (density) {
      entry.yield.defect_density_per_cm2 = *density;
    } else if (target) {
      entry.target_yield = *target;
    } else {
      errors.push_back({p + "yield.defect_density",
                        "required: either this field or '" + p + "yield.target_yield'"});
    }
    return entry;
  }

  std::map<std::string, std::string> values_;
  std::string base_dir_;
};

}  // namespace

ParseResult<Scenario> parse_scenario(std::istream& in, const std::string& base_dir) {
  KvFile kv = read_kv(in);
  if (!kv.errors.empty()) return {std::nullopt, std::move(kv.errors)};
  return ScenarioReader(std::move(kv.values), base_dir).read();
}

ParseResult<Scenario> parse_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {std::nullopt, {{path, "cannot open file"}}};
  const std::string dir = std::filesystem::path(path).parent_path().string();
  return parse_scenario(in, dir.empty() ? "." : dir);
}

// ---------------------------------------------------------------------------
// Material aggregation

double MaterialSummary::class_total_g(const std::string& material_class) const {
  auto it = by_class.find(material_class);
  if (it == by_class.end()) return 0;
  double total = 0;
  for (const auto& [name, grams] : it->second) total += grams;
  return total;
}

double MaterialSummary::grand_total_g() const {
  double total = 0;
  for (const auto& [cls, mats] : by_class)
    for (const auto& [name, grams] : mats) total += grams;
  return total;
}

MaterialSummary aggregate_materials(const ProcessInventory& inv) {
  MaterialSummary summary;
  for (const auto& step : inv.steps)
    for (const auto& flow : step.materials)
      summary.by_class[flow.material_class][flow.material] += flow.mass_g;
  return summary;
}

// ---------------------------------------------------------------------------
// Report rendering

std::optional<ReportFormat> report_format_from_string(const std::string& s) {
  if (s == "table") return ReportFormat::table;
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  return std::nullopt;
}

namespace {

std::string use_cell(const PhaseEnergies& e, int decimals) {
  std::string cell = fmt_fixed(e.use_kwh(), decimals) + " kWh";
  if (e.cooling_wh > 0)
    cell += " (with cooling " + fmt_fixed(e.cooling_kwh(), decimals) + " kWh)";
  return cell;
}

std::string total_cell(const PhaseEnergies& e, int decimals) {
  std::string cell = fmt_fixed(e.total_without_cooling_kwh(), decimals) + " kWh";
  if (e.cooling_wh > 0)
    cell += " (with cooling " + fmt_fixed(e.total_kwh(), decimals) + " kWh)";
  return cell;
}

std::string render_table(const ComparisonReport& r, int decimals) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"Processor", "Manufacturing Energy", "Assembly Energy", "Use Phase Energy",
                  "Total Energy", "Overall Improvement"});
  for (std::size_t i = 0; i < r.chips.size(); ++i) {
    const auto& c = r.chips[i];
    std::string improvement;
    if (i > 0) {
      improvement = fmt_fixed(r.improvement_without_cooling[0][i], 1) + "X";
      if (c.energies.cooling_wh > 0 || r.chips[0].energies.cooling_wh > 0)
        improvement += " (with cooling " + fmt_fixed(r.improvement_with_cooling[0][i], 1) + "X)";
    }
    rows.push_back({c.name, fmt_fixed(c.energies.manufacturing_kwh(), decimals) + " kWh",
                    fmt_fixed(c.energies.assembly_kwh(), decimals) + " kWh",
                    use_cell(c.energies, decimals), total_cell(c.energies, decimals),
                    improvement});
  }

  std::vector<std::size_t> widths(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t j = 0; j < row.size(); ++j) widths[j] = std::max(widths[j], row[j].size());

  std::ostringstream out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      out << rows[i][j];
      if (j + 1 < rows[i].size())
        out << std::string(widths[j] - rows[i][j].size() + 2, ' ');
    }
    out << '\n';
    if (i == 0) {
      std::size_t line = 0;
      for (std::size_t j = 0; j < widths.size(); ++j) line += widths[j] + (j + 1 < widths.size() ? 2 : 0);
      out << std::string(line, '-') << '\n';
    }
  }
  return out.str();
}

json chip_to_json(const ChipAssessment& c) {
  return json{{"name", c.name},
              {"die_area_cm2", c.die_area_cm2},
              {"yield", c.yield_fraction},
              {"gross_dies", c.gross_dies},
              {"energies",
               {{"manufacturing_kwh", c.energies.manufacturing_kwh()},
                {"assembly_kwh", c.energies.assembly_kwh()},
                {"use_kwh", c.energies.use_kwh()},
                {"cooling_kwh", c.energies.cooling_kwh()},
                {"total_kwh", c.energies.total_kwh()}}}};
}

ChipAssessment chip_from_json(const json& j) {
  ChipAssessment c;
  c.name = j.at("name").get<std::string>();
  c.die_area_cm2 = j.at("die_area_cm2").get<double>();
  c.yield_fraction = j.at("yield").get<double>();
  c.gross_dies = j.at("gross_dies").get<double>();
  const auto& e = j.at("energies");
  c.energies.manufacturing_wh = e.at("manufacturing_kwh").get<double>() * kWhPerKwh;
  c.energies.assembly_wh = e.at("assembly_kwh").get<double>() * kWhPerKwh;
  c.energies.use_wh = e.at("use_kwh").get<double>() * kWhPerKwh;
  c.energies.cooling_wh = e.at("cooling_kwh").get<double>() * kWhPerKwh;
  return c;
}

std::string render_csv(const ComparisonReport& r) {
  std::ostringstream out;
  out << "name,die_area_cm2,yield,gross_dies,manufacturing_kwh,assembly_kwh,use_kwh,"
         "cooling_kwh,total_kwh,improvement_without_cooling,improvement_with_cooling\n";
  for (std::size_t i = 0; i < r.chips.size(); ++i) {
    const auto& c = r.chips[i];
    out << c.name << ',' << fmt_full(c.die_area_cm2) << ',' << fmt_full(c.yield_fraction) << ','
        << fmt_full(c.gross_dies) << ',' << fmt_full(c.energies.manufacturing_kwh()) << ','
        << fmt_full(c.energies.assembly_kwh()) << ',' << fmt_full(c.energies.use_kwh()) << ','
        << fmt_full(c.energies.cooling_kwh()) << ',' << fmt_full(c.energies.total_kwh()) << ','
        << fmt_full(r.improvement_without_cooling[0][i]) << ','
        << fmt_full(r.improvement_with_cooling[0][i]) << '\n';
  }
  return out.str();
}

}  // namespace

std::string render_report(const ComparisonReport& report, ReportFormat format, int decimals) {
  switch (format) {
    case ReportFormat::table:
      return render_table(report, decimals);
    case ReportFormat::csv:
      return render_csv(report);
    case ReportFormat::json: {
      json j;
      j["chips"] = json::array();
      for (const auto& c : report.chips) j["chips"].push_back(chip_to_json(c));
      j["improvement_with_cooling"] = report.improvement_with_cooling;
      j["improvement_without_cooling"] = report.improvement_without_cooling;
      j["ratios_vs_baseline"] = json::array();
      for (const auto& r : report.ratios_vs_baseline)
        j["ratios_vs_baseline"].push_back({{"manufacturing", r.manufacturing},
                                           {"assembly", r.assembly},
                                           {"use", r.use},
                                           {"area", r.area}});
      return j.dump(2) + "\n";
    }
  }
  return "";
}

ParseResult<ComparisonReport> parse_report_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) return {std::nullopt, {{"report", "malformed JSON"}}};
  try {
    ComparisonReport r;
    for (const auto& c : j.at("chips")) r.chips.push_back(chip_from_json(c));
    r.improvement_with_cooling =
        j.at("improvement_with_cooling").get<std::vector<std::vector<double>>>();
    r.improvement_without_cooling =
        j.at("improvement_without_cooling").get<std::vector<std::vector<double>>>();
    for (const auto& rr : j.at("ratios_vs_baseline")) {
      ComponentRatios ratios;
      ratios.manufacturing = rr.at("manufacturing").get<double>();
      ratios.assembly = rr.at("assembly").get<double>();
      ratios.use = rr.at("use").get<double>();
      ratios.area = rr.at("area").get<double>();
      r.ratios_vs_baseline.push_back(ratios);
    }
    return {std::move(r), {}};
  } catch (const json::exception& e) {
    return {std::nullopt, {{"report", e.what()}}};
  }
}

std::string render_materials(const MaterialSummary& summary, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      json j;
      for (const auto& [cls, mats] : summary.by_class) {
        json group;
        for (const auto& [name, grams] : mats) group[name] = grams;
        j["by_class"][cls] = group;
        j["class_totals_g"][cls] = summary.class_total_g(cls);
      }
      j["grand_total_g"] = summary.grand_total_g();
      return j.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "class,material,grams_per_wafer\n";
      for (const auto& [cls, mats] : summary.by_class)
        for (const auto& [name, grams] : mats)
          out << cls << ',' << name << ',' << fmt_full(grams) << '\n';
      return out.str();
    }
    case ReportFormat::table: {
      std::ostringstream out;
      for (const auto& [cls, mats] : summary.by_class) {
        out << cls << " (total " << fmt_fixed(summary.class_total_g(cls), 2) << " g/wafer)\n";
        for (const auto& [name, grams] : mats)
          out << "  " << name << ": " << fmt_fixed(grams, 2) << " g/wafer\n";
      }
      out << "grand total: " << fmt_fixed(summary.grand_total_g(), 2) << " g/wafer\n";
      return out.str();
    }
  }
  return "";
}

std::string render_whatif(const WhatIfResult& result, ReportFormat format, int decimals) {
  if (format == ReportFormat::json) {
    json j{{"chip", result.scaled_chip.name},
           {"die_area_cm2", result.scaled_chip.die_area_cm2},
           {"yield", result.new_yield},
           {"gross_dies", result.new_gross_dies},
           {"energies",
            {{"manufacturing_kwh", result.energies.manufacturing_kwh()},
             {"assembly_kwh", result.energies.assembly_kwh()},
             {"use_kwh", result.energies.use_kwh()},
             {"cooling_kwh", result.energies.cooling_kwh()},
             {"total_kwh", result.energies.total_kwh()}}},
           {"improvement_without_cooling", result.improvement_without_cooling},
           {"improvement_with_cooling", result.improvement_with_cooling}};
    return j.dump(2) + "\n";
  }
  if (format == ReportFormat::csv) {
    std::ostringstream out;
    out << "chip,die_area_cm2,yield,gross_dies,manufacturing_kwh,assembly_kwh,use_kwh,"
           "cooling_kwh,total_kwh,improvement_without_cooling,improvement_with_cooling\n";
    out << result.scaled_chip.name << ',' << fmt_full(result.scaled_chip.die_area_cm2) << ','
        << fmt_full(result.new_yield) << ',' << fmt_full(result.new_gross_dies) << ','
        << fmt_full(result.energies.manufacturing_kwh()) << ','
        << fmt_full(result.energies.assembly_kwh()) << ','
        << fmt_full(result.energies.use_kwh()) << ','
        << fmt_full(result.energies.cooling_kwh()) << ','
        << fmt_full(result.energies.total_kwh()) << ','
        << fmt_full(result.improvement_without_cooling) << ','
        << fmt_full(result.improvement_with_cooling) << '\n';
    return out.str();
  }
  std::ostringstream out;
  out << result.scaled_chip.name << '\n'
      << "  die area:      " << fmt_full(result.scaled_chip.die_area_cm2) << " cm2\n"
      << "  yield:         " << fmt_fixed(result.new_yield * 100.0, 1) << "%\n"
      << "  gross dies:    " << fmt_fixed(result.new_gross_dies, 1) << '\n'
      << "  manufacturing: " << fmt_fixed(result.energies.manufacturing_kwh(), decimals) << " kWh\n"
      << "  assembly:      " << fmt_fixed(result.energies.assembly_kwh(), decimals) << " kWh\n"
      << "  use phase:     " << use_cell(result.energies, decimals) << '\n'
      << "  total:         " << total_cell(result.energies, decimals) << '\n'
      << "  improvement vs baseline: " << fmt_fixed(result.improvement_without_cooling, 1)
      << "X (with cooling " << fmt_fixed(result.improvement_with_cooling, 1) << "X)\n";
  return out.str();
}

}  // namespace lcaic
