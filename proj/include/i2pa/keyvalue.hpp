/*
 * Copyright 2026 The I2PA Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef I2PA_KEYVALUE_HPP_
#define I2PA_KEYVALUE_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "i2pa/bytes.hpp"

namespace i2pa {

// The "key=value" line format used by curve fixtures, parameter files, key
// files and credentials. Blank lines and lines starting with '#' are
// skipped; a value runs from the first '=' to the end of the line.
class KeyValueText {
 public:
  static KeyValueText Parse(std::string_view text);

  void Set(std::string key, std::string value);
  void SetInt(std::string key, const BigInt& value) {
    Set(std::move(key), value.get_str());
  }

  bool Has(std::string_view key) const;
  // Throw kMalformed when missing or unparsable.
  const std::string& Get(std::string_view key) const;
  BigInt GetInt(std::string_view key) const;

  // Lines in insertion order.
  std::string Format() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::map<std::string, size_t, std::less<>> index_;
};

std::string ReadTextFile(const std::string& path);
Bytes ReadBinaryFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);
void WriteFile(const std::string& path, std::span<const uint8_t> contents);

}  // namespace i2pa

#endif  // I2PA_KEYVALUE_HPP_
