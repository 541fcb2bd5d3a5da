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

#ifndef SIA_INSTANCE_IO_HPP_
#define SIA_INSTANCE_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "sia/instance.hpp"

namespace sia {

// Instance files are JSON objects with exactly these fields:
//
//   num_interfaces, num_services, num_resources   positive integers
//   demand           J x K integers
//   capacity         I x K integers
//   unit_cost        I x K rationals
//   activation_cost  I rationals
//   overhead         I x J x K rationals (optional; omitted means all zero)
//
// A rational is a JSON integer or a string "p/q", "p" or a finite decimal.
// Unknown fields are rejected. Structural problems raise kParseError; shape
// and sign problems raise the validation codes of SiaInstance::Validate.
SiaInstance ParseInstance(std::string_view text);
SiaInstance LoadInstance(const std::filesystem::path& path);

std::string InstanceToJson(const SiaInstance& instance);

}  // namespace sia

#endif  // SIA_INSTANCE_IO_HPP_
