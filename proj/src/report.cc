// Copyright 2026 The jlcs Authors.
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


#include "jlcs/report.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jlcs/error.h"

namespace jlcs::report {
namespace {

// Rounded to 12 decimals with negative zero cleared, so the text form does
// not depend on the last bits of the embedding.
double tidy(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0 ? 0.0 : r;
}

Json pairs_to_object(const std::vector<std::pair<std::string, std::string>>& pairs) {
  Json out = Json::object();
  for (const auto& [k, v] : pairs) out[k] = v;
  return out;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

void flatten(const std::string& prefix, const Json& j, std::vector<std::pair<std::string, std::string>>& out) {
  if (is_cyc_value(j)) {
    out.emplace_back(prefix + ".re", Json(j["approx"][0]).dump());
    out.emplace_back(prefix + ".im", Json(j["approx"][1]).dump());
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(prefix.empty() ? k : prefix + "." + k, v, out);
    return;
  }
  if (j.is_array()) {
    std::string joined;
    for (const auto& v : j) {
      if (!joined.empty()) joined += ' ';
      joined += v.is_primitive() ? scalar_text(v) : v.dump();
    }
    out.emplace_back(prefix, joined);
    return;
  }
  out.emplace_back(prefix, scalar_text(j));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string text_value(const Json& j) {
  if (is_cyc_value(j)) return j["text"].get<std::string>();
  if (j.is_object()) {
    std::string out;
    for (const auto& [k, v] : j.items()) {
      if (!out.empty()) out += ',';
      out += k + "=" + text_value(v);
    }
    return "{" + out + "}";
  }
  return scalar_text(j);
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  throw DomainError("unknown format '" + name + "' (json, csv, text)");
}

Json to_json(const cyc::CycValue& v) {
  const std::complex<double> z = cyc::complex_embed(v);
  Json coeffs = Json::array();
  for (int64_t c : v.coeffs()) coeffs.push_back(c);
  return Json{{"modulus", v.ring()->modulus()},
              {"coeffs", coeffs},
              {"approx", {tidy(z.real()), tidy(z.imag())}},
              {"text", v.to_string()}};
}

bool is_cyc_value(const Json& j) {
  return j.is_object() && j.contains("modulus") && j.contains("coeffs") && j.contains("approx");
}

Json to_json(const ff::FFElem& x) {
  return Json{{"index", x.index()}, {"coeffs", x.coeffs()}};
}

Json to_json(const locfield::LaurentTrunc& x) {
  Json out{{"val", x.is_zero() ? Json(nullptr) : Json(x.val())},
           {"prec", x.exact() ? Json("exact") : Json(x.prec())},
           {"coeffs", x.stored()},
           {"text", x.to_string()}};
  return out;
}

Json to_json(const csa::RedCharPoly& f) {
  Json coeffs = Json::array();
  for (const auto& a : f.coeffs) coeffs.push_back(to_json(a));
  return Json{{"degree", f.degree()}, {"coeffs", coeffs}};
}

Json to_json(const expsum::SumReport& r) {
  Json extra = Json::object();
  for (const auto& [name, v] : r.extra) extra[name] = to_json(v);
  return Json{{"kind", r.kind},
              {"parameters", pairs_to_object(r.parameters)},
              {"lhs", to_json(r.lhs)},
              {"rhs", to_json(r.rhs)},
              {"extra", extra},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
              {"equal", r.equal}};
}

Json to_json(const ssc::CharTableRow& row) {
  Json out{{"kind", row.kind},
           {"parameters", pairs_to_object(row.parameters)},
           {"closed_form", to_json(row.closed_form)},
           {"direct_sum", to_json(row.direct_sum)}};
  if (row.split_direct) {
    out["split_direct"] = to_json(*row.split_direct);
    out["sign"] = row.sign;
  }
  if (row.charpoly_match) out["charpoly_match"] = *row.charpoly_match;
  out["match"] = row.match;
  return out;
}

Json to_json(const ssc::Side& side) {
  return Json{{"m", side.m}, {"r", side.r}, {"s", side.s}, {"n", side.n()}};
}

void Writer::header(Json j) { header_ = std::move(j); }
void Writer::row(Json j) { rows_.push_back(std::move(j)); }
void Writer::summary(Json j) { summary_ = std::move(j); }

std::string Writer::str() const {
  std::ostringstream out;
  switch (format_) {
    case Format::kJson: {
      if (!header_.is_null()) out << Json{{"type", "header"}, {"data", header_}}.dump() << '\n';
      for (const Json& r : rows_) out << Json{{"type", "row"}, {"data", r}}.dump() << '\n';
      if (!summary_.is_null()) out << Json{{"type", "summary"}, {"data", summary_}}.dump() << '\n';
      break;
    }
    case Format::kCsv: {
      std::vector<std::string> columns;
      std::vector<std::vector<std::pair<std::string, std::string>>> flat;
      for (const Json& r : rows_) {
        flat.emplace_back();
        flatten("", r, flat.back());
        for (const auto& [k, v] : flat.back()) {
          if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
        }
      }
      for (size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_field(columns[i]);
      out << '\n';
      for (const auto& f : flat) {
        for (size_t i = 0; i < columns.size(); ++i) {
          std::string value;
          for (const auto& [k, v] : f) {
            if (k == columns[i]) value = v;
          }
          out << (i ? "," : "") << csv_field(value);
        }
        out << '\n';
      }
      break;
    }
    case Format::kText: {
      for (const Json& r : rows_) {
        std::string line;
        for (const auto& [k, v] : r.items()) {
          if (!line.empty()) line += "  ";
          line += k + ": " + text_value(v);
        }
        out << line << '\n';
      }
      if (!summary_.is_null()) out << "summary: " << text_value(summary_) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace jlcs::report
