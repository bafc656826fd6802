#pragma once

#include <motzeta/curves.hpp>
#include <motzeta/fan.hpp>
#include <motzeta/moebius.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace motzeta {

/// {"rank": r, "rays": [[...], ...], "max_cones": [[i, ...], ...]}, ray
/// indices 0-based. Syntax errors are reported as InputError with line and
/// column; structural problems come from the Fan constructor.
Fan fan_from_json(std::string_view text);
Fan load_fan_file(const std::string& path);
std::string fan_to_json(const Fan& f);

enum class Format { text, json, csv };
Format parse_format(std::string_view s);

/// One row per degree vector: JSON array of {"e": [...], "mu": "..."} or
/// CSV with columns e_0..e_{E-1},mu.
std::string mobius_table_json(const MultiDegreeTable& t);
std::string mobius_table_csv(const MultiDegreeTable& t);

/// Per-degree table of a height series: d, n_Sigma(d), vdim, class and its
/// values at each q.
std::string heights_report(const HeightSeries& hs, const std::vector<int>& qs, Format fmt);

}  // namespace motzeta
