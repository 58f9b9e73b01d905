#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "classification.hpp"
#include "difftables.hpp"
#include "verify.hpp"

namespace homometry::serialize {

// One JSON object per line: {"n","type","m","i","j"?,"members"}.
std::string classify_lines(const std::vector<classification::HomometryClass>& classes);

// One JSON object per line: {"n","distances","members"}.
std::string oracle_lines(std::uint64_t n, const std::vector<bracelets::HomometrySet>& sets);

// CSV with header "n,h_n" plus optional "pairs,triples" and per-type columns.
std::string count_csv(std::uint64_t n_lo, std::uint64_t n_hi, bool refined, bool by_type);

// Whole-result JSON documents.
std::string minimal_tables_json(const difftables::MinimalTablesResult& res, bool dump_cells);
std::string intersections_json(const difftables::IntersectionReport& rep);
std::string cross_check_json(const verify::CrossCheckReport& rep);
std::string long_count_json(const verify::LongCountReport& rep);
std::string un_action_json(const verify::UnActionReport& rep);

}  // namespace homometry::serialize
