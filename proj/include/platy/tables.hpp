#pragma once
// plain-text renderings of the catalog tables, one row per line, columns split by " | "
#include "platy/cosmos.hpp"

#include <string>
#include <vector>

namespace platy {

const std::vector<int>& table_numbers();  // 1 3 4 11 12 13
std::string render_table(int n);          // throws UnknownTable

// single rows, as they appear in the tables above
std::string seifert_row(CosmType t);
std::string surfaces_row(CosmType t);
std::string names_row(CosmType t);
std::string groups_row(CosmType t);

}  // namespace platy
