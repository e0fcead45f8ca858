#pragma once

#include "msd/levelgraph.hpp"
#include "msd/reidtai.hpp"

#include <string>

namespace msd {

// {"top":[{"genus":int,"legs":[int,...]}],"bottom":[...],
//  "edges":[{"top":int,"bot":int,"prong":int}]}
TwoLevelGraph parse_two_level_graph(const std::string& json_text);

// {"vertices":[{"level":int,"genus":int,"legs":[...]}],
//  "edges":[{"from":int,"to":int,"prong":int}]}  (from = upper end)
MultiLevelGraph parse_multi_level_graph(const std::string& json_text);

// Either format; a multi-level file with exactly two levels is converted.
TwoLevelGraph parse_graph_file_as_two_level(const std::string& path);
MultiLevelGraph parse_graph_file_as_multi_level(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace msd
