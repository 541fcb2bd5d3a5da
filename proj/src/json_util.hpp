// Copyright 2026 The SIA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIA_SRC_JSON_UTIL_HPP_
#define SIA_SRC_JSON_UTIL_HPP_

// Strict field access helpers shared by the instance and scenario readers.

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include "json.hpp"
#include "sia/rational.hpp"

namespace sia {

void RejectUnknownFields(const nlohmann::json& obj,
                         std::initializer_list<const char*> allowed);
const nlohmann::json& Require(const nlohmann::json& obj, const char* field);
int64_t AsInt(const nlohmann::json& value, const std::string& where);
int64_t RequireInt(const nlohmann::json& obj, const char* field);
Rational AsRational(const nlohmann::json& value, const std::string& where);
std::vector<int64_t> IntVector(const nlohmann::json& value,
                               const std::string& where);
std::vector<std::vector<int64_t>> IntMatrix(const nlohmann::json& value,
                                            const std::string& where);
std::vector<Rational> RationalVector(const nlohmann::json& value,
                                     const std::string& where);
std::vector<std::vector<Rational>> RationalMatrix(const nlohmann::json& value,
                                                  const std::string& where);
// Integers stay integers; anything else becomes a "p/q" string.
nlohmann::json RationalToJson(const Rational& r);

std::string ReadFile(const std::filesystem::path& path);

}  // namespace sia

#endif  // SIA_SRC_JSON_UTIL_HPP_
