#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ratjones/classify.hpp"

namespace ratjones {

enum class ReportFormat { Json, Csv };
ReportFormat parse_report_format(std::string_view text);

/// [[exp, coeff], ...] ascending by exponent.
nlohmann::ordered_json to_json(const LaurentT& v);
nlohmann::ordered_json to_json(const TemplateInstance& w);
nlohmann::ordered_json to_json(const ClassifiedGroup& g);

/// Writes the census report. Groups without classification data carry an
/// empty "classification" list.
void emit_report(const std::vector<ClassifiedGroup>& groups, ReportFormat format, std::ostream& sink);

std::string csv_header();
std::string csv_row(const ClassifiedGroup& g);

}  // namespace ratjones
