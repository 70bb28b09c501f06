#pragma once

#include <string>
#include <vector>

#include "gsqg/fixedpoint.hpp"
#include "json.hpp"

namespace gsqg::cli {

using nlohmann::json;

// Columns are written with 17 significant digits.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

void write_csv(const std::string& path, const Table& t);
Table read_csv(const std::string& path);  // ConfigError on malformed input
std::vector<double> column(const Table& t, const std::string& name);

json to_json(const MembershipReport& r);
json to_json(const FunctionalsR2& f);
json to_json(const FunctionalsHP& f);
json to_json(const SolveReportR2& r, const AlphaParams& params);
json to_json(const SolveReportHP& r, const AlphaParams& params);
json to_json(const SweepRow& r);

void write_json(const std::string& path, const json& j);

}  // namespace gsqg::cli
