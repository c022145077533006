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


#ifndef JLCS_REPORT_H_
#define JLCS_REPORT_H_

// Report serialization. JSON output is one object per line: a header, the
// rows, and a summary. CSV output flattens each row to scalar columns and
// replaces every cyclotomic value by its complex embedding, so it is lossy;
// JSON is the record of truth.
//
// Nothing time- or thread-dependent is written, so identical inputs give
// identical bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "jlcs/csa.h"
#include "jlcs/cyc.h"
#include "jlcs/expsum.h"
#include "jlcs/ff.h"
#include "jlcs/locfield.h"
#include "jlcs/ssc.h"

namespace jlcs::report {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv, kText };
Format parse_format(const std::string& name);

// {"modulus", "coeffs", "approx": [re, im], "text"}.
Json to_json(const cyc::CycValue& v);
Json to_json(const ff::FFElem& x);
Json to_json(const locfield::LaurentTrunc& x);
Json to_json(const csa::RedCharPoly& f);
Json to_json(const expsum::SumReport& r);
Json to_json(const ssc::CharTableRow& row);
Json to_json(const ssc::Side& side);

// True for objects produced by to_json(CycValue).
bool is_cyc_value(const Json& j);

class Writer {
 public:
  explicit Writer(Format format) : format_(format) {}
  void header(Json j);
  void row(Json j);
  void summary(Json j);
  std::string str() const;
  const std::vector<Json>& rows() const { return rows_; }

 private:
  Format format_;
  Json header_, summary_;
  std::vector<Json> rows_;
};

}  // namespace jlcs::report

#endif  // JLCS_REPORT_H_
