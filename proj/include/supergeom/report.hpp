// Copyright 2026 The Supergeom Authors
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

// Machine-readable smoothness report. Every field is always present; fields
// without a value for a given verdict are null.

#ifndef SUPERGEOM_REPORT_HPP_
#define SUPERGEOM_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "supergeom/localgeom.hpp"

namespace supergeom {

struct Certificate {
  bool complete_intersection = false;
  std::optional<int> witness_degree;
  std::optional<int> failed_generator;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Report {
  std::string verdict;
  std::optional<SuperDim> dim;  // null unless smooth
  SuperDim tangent;
  SuperRank rank;
  std::vector<int> hilbert;
  Certificate certificate;
  int order = 0;
  double timing_ms = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

inline Report MakeReport(const SmoothnessVerdict& v, double timing_ms) {
  Report r;
  r.verdict = VerdictName(v.verdict);
  if (v.smooth()) r.dim = v.dim;
  r.tangent = v.tangent;
  r.rank = v.rank;
  r.hilbert = v.hilbert;
  r.certificate = {v.complete_intersection, v.witness_degree, v.failed_generator};
  r.order = v.order;
  r.timing_ms = timing_ms;
  return r;
}

inline void to_json(nlohmann::json& j, const SuperDim& d) {
  j = nlohmann::json{{"even", d.even}, {"odd", d.odd}};
}
inline void from_json(const nlohmann::json& j, SuperDim& d) {
  j.at("even").get_to(d.even);
  j.at("odd").get_to(d.odd);
}

namespace internal {

template <typename T>
nlohmann::json OptionalToJson(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> OptionalFromJson(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace internal

inline void to_json(nlohmann::json& j, const Certificate& c) {
  j = nlohmann::json{{"complete_intersection", c.complete_intersection},
                     {"witness_degree", internal::OptionalToJson(c.witness_degree)},
                     {"failed_generator", internal::OptionalToJson(c.failed_generator)}};
}
inline void from_json(const nlohmann::json& j, Certificate& c) {
  j.at("complete_intersection").get_to(c.complete_intersection);
  c.witness_degree = internal::OptionalFromJson<int>(j.at("witness_degree"));
  c.failed_generator = internal::OptionalFromJson<int>(j.at("failed_generator"));
}

inline void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{{"verdict", r.verdict},
                     {"dim", internal::OptionalToJson(r.dim)},
                     {"tangent", r.tangent},
                     {"rank", r.rank},
                     {"hilbert", r.hilbert},
                     {"certificate", r.certificate},
                     {"order", r.order},
                     {"timing_ms", r.timing_ms}};
}
inline void from_json(const nlohmann::json& j, Report& r) {
  j.at("verdict").get_to(r.verdict);
  r.dim = internal::OptionalFromJson<SuperDim>(j.at("dim"));
  j.at("tangent").get_to(r.tangent);
  j.at("rank").get_to(r.rank);
  j.at("hilbert").get_to(r.hilbert);
  j.at("certificate").get_to(r.certificate);
  j.at("order").get_to(r.order);
  j.at("timing_ms").get_to(r.timing_ms);
}

}  // namespace supergeom

#endif  // SUPERGEOM_REPORT_HPP_
