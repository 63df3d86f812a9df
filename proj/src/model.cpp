#include "lcaic/model.hpp"

#include <numeric>
#include <sstream>

namespace lcaic {

const char* to_string(StepCategory c) {
  switch (c) {
    case StepCategory::deposition: return "deposition";
    case StepCategory::lithography: return "lithography";
    case StepCategory::etch: return "etch";
    case StepCategory::implant_or_anneal: return "implant_or_anneal";
    case StepCategory::clean: return "clean";
    case StepCategory::metrology: return "metrology";
    case StepCategory::other: return "other";
  }
  return "other";
}

std::optional<StepCategory> step_category_from_string(const std::string& s) {
  for (auto c : {StepCategory::deposition, StepCategory::lithography, StepCategory::etch,
                 StepCategory::implant_or_anneal, StepCategory::clean,
                 StepCategory::metrology, StepCategory::other}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

const char* to_string(YieldModel m) {
  switch (m) {
    case YieldModel::murphy: return "murphy";
    case YieldModel::poisson: return "poisson";
    case YieldModel::seeds: return "seeds";
  }
  return "murphy";
}

std::optional<YieldModel> yield_model_from_string(const std::string& s) {
  for (auto m : {YieldModel::murphy, YieldModel::poisson, YieldModel::seeds}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

const char* to_string(ReplacementPolicy p) {
  switch (p) {
    case ReplacementPolicy::per_device: return "per_device";
    case ReplacementPolicy::common_service_period: return "common_service_period";
  }
  return "per_device";
}

std::optional<ReplacementPolicy> replacement_policy_from_string(const std::string& s) {
  for (auto p : {ReplacementPolicy::per_device, ReplacementPolicy::common_service_period}) {
    if (s == to_string(p)) return p;
  }
  return std::nullopt;
}

bool is_known_material_class(const std::string& s) {
  return s == "gas" || s == "chemical" || s == "water" || s == "metal" || s == "other";
}

double ProcessInventory::total_energy_kwh() const {
  return std::accumulate(steps.begin(), steps.end(), 0.0,
                         [](double acc, const ProcessStep& s) { return acc + s.energy_kwh; });
}

std::string format_errors(const std::vector<ValidationError>& errors) {
  std::ostringstream out;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (i) out << '\n';
    out << errors[i].path << ": " << errors[i].message;
  }
  return out.str();
}

}  // namespace lcaic
