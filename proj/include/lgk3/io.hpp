// Copyright 2026 The lgk3 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LGK3_IO_HPP
#define LGK3_IO_HPP

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lgk3/channel.hpp"

namespace lgk3 {

// ---------------------------------------------------------------------------
// Number formatting and angle parsing
// ---------------------------------------------------------------------------

/// 17 significant digits: enough for a lossless double round trip, and the
/// same bytes on every run.
std::string format_double(double v);

/// Parses a plain decimal or a pi-fraction literal: "pi", "-pi", "2pi",
/// "pi/3", "0.5pi", "-2pi/5". Throws std::invalid_argument on junk.
double parse_angle(const std::string& text);

/// Comma-separated doubles; each entry may be a pi-fraction literal.
std::vector<double> parse_number_list(const std::string& text);

// ---------------------------------------------------------------------------
// Map specifications
// ---------------------------------------------------------------------------

/// Compact textual map forms accepted by the CLI and config files:
///   identity
///   diag:c1,c2,c3
///   matrix:d11,d12,...,d33            (row-major, 9 entries)
///   rdr:a1,b1,g1|c1,c2,c3|a2,b2,g2    (z-y-z Euler angles around a diagonal)
///   affine:b1,b2,b3|d11,...,d33       (general trace-preserving map)
/// Angles accept pi-fraction literals.
AffineQubitMap parse_map_spec(const std::string& text);

/// Flat exchange record: b then delta row-major.
std::array<double, 12> map_record(const AffineQubitMap& map);

// ---------------------------------------------------------------------------
// Key-value config files
// ---------------------------------------------------------------------------

/// "key = value" lines; '#' starts a comment; blank lines ignored.
/// Later keys overwrite earlier ones.
std::map<std::string, std::string> parse_config_file(const std::string& path);

// ---------------------------------------------------------------------------
// Structured output
// ---------------------------------------------------------------------------

/// Minimal ordered JSON tree. Numbers are emitted through format_double so
/// output bytes are stable and round trips are lossless.
class JsonValue {
 public:
  JsonValue() : kind_(Kind::Null) {}

  static JsonValue boolean(bool b);
  static JsonValue integer(long long i);
  static JsonValue real(double d);
  static JsonValue str(std::string s);
  static JsonValue array();
  static JsonValue object();

  JsonValue& push(JsonValue v);                       // arrays
  JsonValue& set(const std::string& key, JsonValue v);  // objects

  std::string dump(int indent = 2) const;

 private:
  enum class Kind { Null, Bool, Int, Real, Str, Arr, Obj };

  void dump_to(std::string& out, int indent, int depth) const;

  Kind kind_;
  bool bool_ = false;
  long long int_ = 0;
  double real_ = 0.0;
  std::string str_;
  std::vector<JsonValue> arr_;
  std::vector<std::pair<std::string, JsonValue>> obj_;
};

JsonValue json_from_record(const std::array<double, 12>& record, bool unital);
JsonValue json_from_report(const ChannelReport& report);

/// CSV with a fixed header; all cells preformatted by the caller.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string dump() const;
};

/// Writes text to path, creating parent directories. Throws
/// std::runtime_error on I/O failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lgk3

#endif  // LGK3_IO_HPP
