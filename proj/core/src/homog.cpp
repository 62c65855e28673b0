/*
 * Copyright 2026 The linord Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "linord/homog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "linord/error.hpp"

namespace linord {

const OrderTerm& q_times2() {
  static const OrderTerm t = OrderTerm::times2(OrderTerm::rats());
  return t;
}

// ---------------------------------------------------------------------------
// PartialMap

PartialMap::PartialMap(std::vector<MapPair> pairs) : pairs_(std::move(pairs)) {}

PartialMap PartialMap::parse(std::string_view text) {
  std::vector<MapPair> pairs;
  std::string buffer(text);
  for (char& c : buffer) {
    if (c == ';') c = '\n';
  }
  std::istringstream lines(buffer);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(first, last - first + 1);
    auto arrow = trimmed.find("->");
    if (arrow == std::string::npos) {
      throw ParseError(line_no, "expected \"src -> dst\" in \"" + trimmed + "\"");
    }
    auto strip = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      if (b == std::string::npos) return std::string();
      return s.substr(b, e - b + 1);
    };
    std::string src_text = strip(trimmed.substr(0, arrow));
    std::string dst_text = strip(trimmed.substr(arrow + 2));
    if (src_text.empty() || dst_text.empty()) {
      throw ParseError(line_no, "missing element in \"" + trimmed + "\"");
    }
    pairs.push_back(MapPair{parse_elem(q_times2(), src_text),
                            parse_elem(q_times2(), dst_text)});
  }
  return PartialMap(std::move(pairs));
}

std::string PartialMap::format() const {
  std::string out;
  for (const MapPair& p : pairs_) {
    out += format_elem(p.src) + " -> " + format_elem(p.dst) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Order:
      return "order";
    case ViolationKind::JumpLeft:
      return "j_left";
    case ViolationKind::JumpRight:
      return "j_right";
    case ViolationKind::JumpPair:
      return "j_pair";
  }
  return "?";
}

ValidationResult validate_partial_map(const PartialMap& pm) {
  const OrderTerm& t = q_times2();
  const auto& pairs = pm.pairs();
  for (const MapPair& p : pairs) {
    validate(t, p.src);
    validate(t, p.dst);
  }
  std::set<std::string> sources;
  std::set<std::string> targets;
  for (const MapPair& p : pairs) {
    if (!sources.insert(format_elem(p.src)).second) {
      throw DomainError("duplicate_source",
                        "source " + format_elem(p.src) + " listed twice");
    }
    if (!targets.insert(format_elem(p.dst)).second) {
      throw DomainError("duplicate_target",
                        "target " + format_elem(p.dst) + " listed twice");
    }
  }

  ValidationResult result;

  // In Q*2, J_l is the bit-0 points and J_r the bit-1 points: preserving
  // them is preserving the bit.
  for (const MapPair& p : pairs) {
    if (p.src.bit() == 0 && p.dst.bit() != 0) {
      result.violation = Violation{ViolationKind::JumpLeft, p, std::nullopt};
      return result;
    }
    if (p.src.bit() == 1 && p.dst.bit() != 1) {
      result.violation = Violation{ViolationKind::JumpRight, p, std::nullopt};
      return result;
    }
  }

  // J relates exactly (q,0) and (q,1): sources sharing a rational must map
  // to targets sharing a rational, and only those.
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      bool src_paired = pairs[i].src.inner() == pairs[j].src.inner();
      bool dst_paired = pairs[i].dst.inner() == pairs[j].dst.inner();
      if (src_paired != dst_paired) {
        result.violation =
            Violation{ViolationKind::JumpPair, pairs[i], pairs[j]};
        return result;
      }
    }
  }

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      Ordering src = compare(t, pairs[i].src, pairs[j].src);
      Ordering dst = compare(t, pairs[i].dst, pairs[j].dst);
      if (src != dst) {
        result.violation = Violation{ViolationKind::Order, pairs[i], pairs[j]};
        return result;
      }
    }
  }

  result.valid = true;
  return result;
}

// ---------------------------------------------------------------------------
// PiecewiseLinearMap

PiecewiseLinearMap PiecewiseLinearMap::identity() {
  return PiecewiseLinearMap();
}

PiecewiseLinearMap PiecewiseLinearMap::through(
    std::vector<std::pair<Rational, Rational>> control) {
  for (std::size_t i = 0; i + 1 < control.size(); ++i) {
    if (!(control[i].first < control[i + 1].first) ||
        !(control[i].second < control[i + 1].second)) {
      throw DomainError("control_points_not_increasing",
                        "piecewise-linear control points must increase in "
                        "both coordinates");
    }
  }
  PiecewiseLinearMap map;
  map.control_ = std::move(control);
  return map;
}

Rational PiecewiseLinearMap::eval(const Rational& x) const {
  if (control_.empty()) return x;
  if (x <= control_.front().first) {
    return x + (control_.front().second - control_.front().first);
  }
  if (x >= control_.back().first) {
    return x + (control_.back().second - control_.back().first);
  }
  // Invariant: front().first < x < back().first, so a segment exists.
  std::size_t lo = 0, hi = control_.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (control_[mid].first <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const auto& [x0, y0] = control_[lo];
  const auto& [x1, y1] = control_[hi];
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

PiecewiseLinearMap PiecewiseLinearMap::inverse() const {
  std::vector<std::pair<Rational, Rational>> swapped;
  swapped.reserve(control_.size());
  for (const auto& [x, y] : control_) swapped.push_back({y, x});
  return through(std::move(swapped));
}

// ---------------------------------------------------------------------------
// Automorphism

Automorphism Automorphism::identity() {
  return Automorphism(PiecewiseLinearMap::identity());
}

Automorphism Automorphism::extend(const PartialMap& pm) {
  ValidationResult check = validate_partial_map(pm);
  if (!check.valid) {
    std::string msg = "partial map violates " + to_string(check.violation->kind) +
                      " on " + format_elem(check.violation->first.src) + " -> " +
                      format_elem(check.violation->first.dst);
    if (check.violation->second) {
      msg += " and " + format_elem(check.violation->second->src) + " -> " +
             format_elem(check.violation->second->dst);
    }
    throw DomainError("invalid_partial_map", msg);
  }
  // Project to the quotient: J-paired sources collapse to one control
  // point, and order preservation makes the projected points strictly
  // increasing in both coordinates.
  std::map<Rational, Rational> control;
  for (const MapPair& p : pm.pairs()) {
    control.emplace(p.src.inner().rat_value(), p.dst.inner().rat_value());
  }
  std::vector<std::pair<Rational, Rational>> points(control.begin(),
                                                    control.end());
  return Automorphism(PiecewiseLinearMap::through(std::move(points)));
}

Elem Automorphism::apply(const Elem& x, Direction dir) const {
  validate(q_times2(), x);
  const Rational& q = x.inner().rat_value();
  Rational image = dir == Direction::Fwd ? base_.eval(q) : base_.inverse().eval(q);
  return Elem::pair(Elem::rational(image), x.bit());
}

std::string Automorphism::to_json() const {
  nlohmann::ordered_json j;
  j["control_points"] = nlohmann::ordered_json::array();
  for (const auto& [x, y] : base_.control_points()) {
    j["control_points"].push_back({to_string(x), to_string(y)});
  }
  j["tail_slope_left"] = "1";
  j["tail_slope_right"] = "1";
  return j.dump();
}

Rational quotient_map(const Elem& x) {
  validate(q_times2(), x);
  return x.inner().rat_value();
}

}  // namespace linord
