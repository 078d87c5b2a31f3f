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

#include "lgk3/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lgk3 {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_plain_double(const std::string& s) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("trailing junk in number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

double parse_angle(const std::string& text) {
  const std::string s = trim(text);
  const std::size_t pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) return parse_plain_double(s);

  std::string head = trim(s.substr(0, pi_pos));
  std::string tail = trim(s.substr(pi_pos + 2));

  double sign = 1.0;
  if (!head.empty() && (head.front() == '+' || head.front() == '-')) {
    sign = head.front() == '-' ? -1.0 : 1.0;
    head = trim(head.substr(1));
  }
  const double coef = head.empty() ? 1.0 : parse_plain_double(head);

  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/')
      throw std::invalid_argument("malformed pi literal: '" + text + "'");
    divisor = parse_plain_double(trim(tail.substr(1)));
    if (divisor == 0.0) throw std::invalid_argument("pi literal divides by zero");
  }
  return sign * coef * M_PI / divisor;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& piece : split(text, ',')) out.push_back(parse_angle(piece));
  return out;
}

namespace {

Mat3 mat3_from(const std::vector<double>& v, std::size_t offset = 0) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[offset + 3 * i + j];
  return m;
}

}  // namespace

AffineQubitMap parse_map_spec(const std::string& text) {
  const std::string s = trim(text);
  if (s == "identity") return AffineQubitMap{};

  const std::size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("map spec needs a kind prefix: '" + text + "'");
  const std::string kind = trim(s.substr(0, colon));
  const std::string body = s.substr(colon + 1);

  if (kind == "diag") {
    const auto v = parse_number_list(body);
    if (v.size() != 3) throw std::invalid_argument("diag map spec needs 3 entries");
    return {Vec3::Zero(), Vec3(v[0], v[1], v[2]).asDiagonal()};
  }
  if (kind == "matrix") {
    const auto v = parse_number_list(body);
    if (v.size() != 9) throw std::invalid_argument("matrix map spec needs 9 entries");
    return {Vec3::Zero(), mat3_from(v)};
  }
  if (kind == "rdr") {
    const auto parts = split(body, '|');
    if (parts.size() != 3)
      throw std::invalid_argument("rdr map spec needs 'angles|diag|angles'");
    const auto a1 = parse_number_list(parts[0]);
    const auto d = parse_number_list(parts[1]);
    const auto a2 = parse_number_list(parts[2]);
    if (a1.size() != 3 || d.size() != 3 || a2.size() != 3)
      throw std::invalid_argument("rdr map spec needs 3 entries per block");
    const UnitalMap m = make_unital_rdr(rot_zyz(a1[0], a1[1], a1[2]),
                                        Vec3(d[0], d[1], d[2]),
                                        rot_zyz(a2[0], a2[1], a2[2]));
    return AffineQubitMap{m};
  }
  if (kind == "affine") {
    const auto parts = split(body, '|');
    if (parts.size() != 2)
      throw std::invalid_argument("affine map spec needs 'b|delta'");
    const auto b = parse_number_list(parts[0]);
    const auto d = parse_number_list(parts[1]);
    if (b.size() != 3 || d.size() != 9)
      throw std::invalid_argument("affine map spec needs 3 + 9 entries");
    return {Vec3(b[0], b[1], b[2]), mat3_from(d)};
  }
  throw std::invalid_argument("unknown map spec kind: '" + kind + "'");
}

std::array<double, 12> map_record(const AffineQubitMap& map) {
  std::array<double, 12> out{};
  for (int i = 0; i < 3; ++i) out[i] = map.b(i);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[3 + 3 * i + j] = map.delta(i, j);
  return out;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
    out[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return out;
}

// --- JSON ------------------------------------------------------------------

JsonValue JsonValue::boolean(bool b) {
  JsonValue v;
  v.kind_ = Kind::Bool;
  v.bool_ = b;
  return v;
}

JsonValue JsonValue::integer(long long i) {
  JsonValue v;
  v.kind_ = Kind::Int;
  v.int_ = i;
  return v;
}

JsonValue JsonValue::real(double d) {
  JsonValue v;
  v.kind_ = Kind::Real;
  v.real_ = d;
  return v;
}

JsonValue JsonValue::str(std::string s) {
  JsonValue v;
  v.kind_ = Kind::Str;
  v.str_ = std::move(s);
  return v;
}

JsonValue JsonValue::array() {
  JsonValue v;
  v.kind_ = Kind::Arr;
  return v;
}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::Obj;
  return v;
}

JsonValue& JsonValue::push(JsonValue v) {
  arr_.push_back(std::move(v));
  return *this;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
  obj_.emplace_back(key, std::move(v));
  return *this;
}

namespace {

void json_escape(const std::string& s, std::string& out) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
  out += '"';
}

}  // namespace

void JsonValue::dump_to(std::string& out, int indent, int depth) const {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (kind_) {
    case Kind::Null: out += "null"; break;
    case Kind::Bool: out += bool_ ? "true" : "false"; break;
    case Kind::Int: out += std::to_string(int_); break;
    case Kind::Real: out += format_double(real_); break;
    case Kind::Str: json_escape(str_, out); break;
    case Kind::Arr: {
      if (arr_.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (std::size_t i = 0; i < arr_.size(); ++i) {
        out += pad_in;
        arr_[i].dump_to(out, indent, depth + 1);
        if (i + 1 < arr_.size()) out += ',';
        out += '\n';
      }
      out += pad + "]";
      break;
    }
    case Kind::Obj: {
      if (obj_.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      for (std::size_t i = 0; i < obj_.size(); ++i) {
        out += pad_in;
        json_escape(obj_[i].first, out);
        out += ": ";
        obj_[i].second.dump_to(out, indent, depth + 1);
        if (i + 1 < obj_.size()) out += ',';
        out += '\n';
      }
      out += pad + "}";
      break;
    }
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  dump_to(out, indent, 0);
  out += '\n';
  return out;
}

JsonValue json_from_record(const std::array<double, 12>& record, bool unital) {
  JsonValue rec = JsonValue::array();
  for (double v : record) rec.push(JsonValue::real(v));
  JsonValue obj = JsonValue::object();
  obj.set("record", std::move(rec));
  obj.set("unital", JsonValue::boolean(unital));
  return obj;
}

JsonValue json_from_report(const ChannelReport& report) {
  JsonValue ev = JsonValue::array();
  for (double v : report.choi_eigenvalues) ev.push(JsonValue::real(v));
  JsonValue obj = JsonValue::object();
  obj.set("trace_preserving", JsonValue::boolean(report.is_trace_preserving));
  obj.set("unital", JsonValue::boolean(report.is_unital));
  obj.set("positive", JsonValue::boolean(report.is_positive));
  obj.set("completely_positive", JsonValue::boolean(report.is_completely_positive));
  obj.set("divisibility_witness", JsonValue::boolean(report.divisibility_witness));
  obj.set("choi_eigenvalues", std::move(ev));
  obj.set("determinant", JsonValue::real(report.determinant));
  return obj;
}

std::string CsvTable::dump() const {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    out += header[i];
    out += (i + 1 < header.size()) ? "," : "";
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      out += (i + 1 < row.size()) ? "," : "";
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace lgk3
