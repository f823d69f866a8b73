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

#include "i2pa/keyvalue.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "i2pa/error.hpp"

namespace i2pa {

KeyValueText KeyValueText::Parse(std::string_view text) {
  KeyValueText kv;
  size_t line_no = 0;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(ErrorCode::kMalformed,
                  "line " + std::to_string(line_no) + ": expected key=value");
    }
    std::string key(line.substr(0, eq));
    if (kv.Has(key)) {
      throw Error(ErrorCode::kMalformed, "duplicate key '" + key + "'");
    }
    kv.Set(std::move(key), std::string(line.substr(eq + 1)));
  }
  return kv;
}

void KeyValueText::Set(std::string key, std::string value) {
  auto it = index_.find(key);
  if (it != index_.end()) {
    entries_[it->second].second = std::move(value);
    return;
  }
  index_.emplace(key, entries_.size());
  entries_.emplace_back(std::move(key), std::move(value));
}

bool KeyValueText::Has(std::string_view key) const {
  return index_.find(key) != index_.end();
}

const std::string& KeyValueText::Get(std::string_view key) const {
  auto it = index_.find(key);
  if (it == index_.end()) {
    throw Error(ErrorCode::kMalformed, "missing key '" + std::string(key) + "'");
  }
  return entries_[it->second].second;
}

BigInt KeyValueText::GetInt(std::string_view key) const {
  const std::string& s = Get(key);
  bool ok = !s.empty();
  for (char c : s) ok = ok && c >= '0' && c <= '9';
  if (!ok) {
    throw Error(ErrorCode::kMalformed,
                "key '" + std::string(key) + "' is not a decimal integer");
  }
  return BigInt(s, 10);
}

std::string KeyValueText::Format() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Bytes ReadBinaryFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIo, "short write to " + path);
}

void WriteFile(const std::string& path, std::span<const uint8_t> contents) {
  WriteFile(path, std::string_view(reinterpret_cast<const char*>(contents.data()),
                                   contents.size()));
}

}  // namespace i2pa
