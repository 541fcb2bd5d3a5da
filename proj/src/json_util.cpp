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

#include "json_util.hpp"

#include <fstream>
#include <sstream>

#include "sia/error.hpp"

namespace sia {

using nlohmann::json;

namespace {

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

const json& RequireArray(const json& value, const std::string& where) {
  if (!value.is_array()) Fail(where + ": expected an array");
  return value;
}

}  // namespace

void RejectUnknownFields(const json& obj,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* name : allowed) known = known || key == name;
    if (!known) Fail("unknown field '" + key + "'");
  }
}

const json& Require(const json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) Fail(std::string("missing field '") + field + "'");
  return *it;
}

int64_t AsInt(const json& value, const std::string& where) {
  if (!value.is_number_integer()) Fail(where + ": expected an integer");
  return value.get<int64_t>();
}

int64_t RequireInt(const json& obj, const char* field) {
  return AsInt(Require(obj, field), field);
}

Rational AsRational(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<int64_t>());
  if (value.is_string()) {
    if (auto r = Rational::Parse(value.get<std::string>())) return *r;
    Fail(where + ": malformed rational '" + value.get<std::string>() + "'");
  }
  Fail(where + ": expected an integer or a \"p/q\" string");
}

std::vector<int64_t> IntVector(const json& value, const std::string& where) {
  std::vector<int64_t> out;
  const json& arr = RequireArray(value, where);
  for (size_t i = 0; i < arr.size(); ++i)
    out.push_back(AsInt(arr[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<int64_t>> IntMatrix(const json& value,
                                            const std::string& where) {
  std::vector<std::vector<int64_t>> out;
  const json& arr = RequireArray(value, where);
  for (size_t i = 0; i < arr.size(); ++i)
    out.push_back(IntVector(arr[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Rational> RationalVector(const json& value,
                                     const std::string& where) {
  std::vector<Rational> out;
  const json& arr = RequireArray(value, where);
  for (size_t i = 0; i < arr.size(); ++i)
    out.push_back(AsRational(arr[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<Rational>> RationalMatrix(const json& value,
                                                  const std::string& where) {
  std::vector<std::vector<Rational>> out;
  const json& arr = RequireArray(value, where);
  for (size_t i = 0; i < arr.size(); ++i)
    out.push_back(
        RationalVector(arr[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json RationalToJson(const Rational& r) {
  if (auto v = r.to_int64()) return *v;
  return r.to_string();
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoFailure, "cannot read " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sia
