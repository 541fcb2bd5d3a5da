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

#include "sia/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sia/error.hpp"
#include "json_util.hpp"

namespace sia {

using nlohmann::json;

SiaInstance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "instance must be a JSON object");
  }
  RejectUnknownFields(doc, {"num_interfaces", "num_services", "num_resources",
                            "demand", "capacity", "unit_cost",
                            "activation_cost", "overhead"});

  RawInstance raw;
  raw.num_interfaces = RequireInt(doc, "num_interfaces");
  raw.num_services = RequireInt(doc, "num_services");
  raw.num_resources = RequireInt(doc, "num_resources");
  raw.demand = IntMatrix(Require(doc, "demand"), "demand");
  raw.capacity = IntMatrix(Require(doc, "capacity"), "capacity");
  raw.unit_cost = RationalMatrix(Require(doc, "unit_cost"), "unit_cost");
  raw.activation_cost =
      RationalVector(Require(doc, "activation_cost"), "activation_cost");
  if (auto it = doc.find("overhead"); it != doc.end()) {
    if (!it->is_array()) {
      throw Error(ErrorCode::kParseError, "overhead must be an array");
    }
    for (size_t i = 0; i < it->size(); ++i) {
      raw.overhead.push_back(RationalMatrix(
          (*it)[i], "overhead[" + std::to_string(i) + "]"));
    }
  }
  return SiaInstance::Validate(raw);
}

SiaInstance LoadInstance(const std::filesystem::path& path) {
  return ParseInstance(ReadFile(path));
}

std::string InstanceToJson(const SiaInstance& instance) {
  RawInstance raw = instance.ToRaw();
  json doc = json::object();
  doc["num_interfaces"] = raw.num_interfaces;
  doc["num_services"] = raw.num_services;
  doc["num_resources"] = raw.num_resources;
  doc["demand"] = raw.demand;
  doc["capacity"] = raw.capacity;
  json cost = json::array();
  for (const auto& row : raw.unit_cost) {
    json out = json::array();
    for (const auto& c : row) out.push_back(RationalToJson(c));
    cost.push_back(out);
  }
  doc["unit_cost"] = cost;
  json fixed = json::array();
  for (const auto& f : raw.activation_cost) fixed.push_back(RationalToJson(f));
  doc["activation_cost"] = fixed;
  if (!raw.overhead.empty()) {
    json over = json::array();
    for (const auto& plane : raw.overhead) {
      json p = json::array();
      for (const auto& row : plane) {
        json r = json::array();
        for (const auto& a : row) r.push_back(RationalToJson(a));
        p.push_back(r);
      }
      over.push_back(p);
    }
    doc["overhead"] = over;
  }
  return doc.dump(2) + "\n";
}

}  // namespace sia
