#pragma once

#include <schur/character.hpp>
#include <schur/modules.hpp>
#include <schur/oracle.hpp>
#include <schur/planner.hpp>
#include <schur/weight.hpp>

#include <string>
#include <vector>

namespace schur::io {

// JSON forms. Weights serialize as plain integer arrays; integers are JSON
// numbers when they fit in 64 bits and decimal strings otherwise, except
// algebra dimensions, which are always decimal strings. Term order and key
// order are canonical, so equal values serialize byte-identically.

std::string to_json(const Weight& w);
Weight weight_from_json(const std::string& text);

std::string to_json(const Character& x);
Character character_from_json(const std::string& text);

std::string to_json(const InjectiveDescriptor& d);
InjectiveDescriptor descriptor_from_json(const std::string& text);

std::string to_json(const ConstructionResult& r);
ConstructionResult construction_from_json(const std::string& text);

std::string to_json(const OracleReport& r);
std::string to_json(const std::vector<OracleReport>& reports);
OracleReport report_from_json(const std::string& text);

}  // namespace schur::io
