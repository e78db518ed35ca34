// Copyright 2026 The Authors.
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

#include "submod/presentable.hpp"

#include <algorithm>

namespace submod {

bool RInterval::contains(const Rational& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

namespace {

// Strictly before with no touching-merge possible: a ends before b starts,
// and if they share the boundary point neither side covers it twice nor can
// they be glued (one of the two endpoints must be open on both sides).
bool mergeable(const RInterval& a, const RInterval& b) {
  // assumes a.lo <= b.lo
  if (b.lo < a.hi) return true;                         // overlap
  if (b.lo == a.hi && (a.hi_closed || b.lo_closed)) return true;  // touch
  return false;
}

}  // namespace

PresentableSet::PresentableSet(std::vector<RInterval> parts) {
  std::vector<RInterval> kept;
  for (const RInterval& p : parts) {
    if (p.empty()) continue;
    if (p.lo < 0 || p.hi > 1) {
      throw SubmodError(ErrorCode::BadArgument,
                        "presentable intervals live in [0,1]");
    }
    kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end(), [](const RInterval& a, const RInterval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.lo_closed != b.lo_closed) return a.lo_closed;  // closed end first
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.hi_closed < b.hi_closed;
  });
  for (const RInterval& p : kept) {
    if (!parts_.empty() && mergeable(parts_.back(), p)) {
      RInterval& last = parts_.back();
      if (p.hi > last.hi) {
        last.hi = p.hi;
        last.hi_closed = p.hi_closed;
      } else if (p.hi == last.hi) {
        last.hi_closed = last.hi_closed || p.hi_closed;
      }
    } else {
      parts_.push_back(p);
    }
  }
}

PresentableSet PresentableSet::unit() {
  return interval(Rational(0), Rational(1));
}

PresentableSet PresentableSet::interval(const Rational& lo, const Rational& hi,
                                        bool lo_closed, bool hi_closed) {
  return PresentableSet({RInterval{lo, hi, lo_closed, hi_closed}});
}

bool PresentableSet::contains(const Rational& x) const {
  for (const RInterval& p : parts_) {
    if (p.contains(x)) return true;
  }
  return false;
}

PresentableSet PresentableSet::unite(const PresentableSet& other) const {
  std::vector<RInterval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return PresentableSet(std::move(all));
}

PresentableSet PresentableSet::intersect(const PresentableSet& other) const {
  std::vector<RInterval> out;
  for (const RInterval& a : parts_) {
    for (const RInterval& b : other.parts_) {
      RInterval c;
      if (a.lo > b.lo || (a.lo == b.lo && !a.lo_closed)) {
        c.lo = a.lo;
        c.lo_closed = a.lo_closed && (b.lo < a.lo || b.lo_closed);
      } else {
        c.lo = b.lo;
        c.lo_closed = b.lo_closed && (a.lo < b.lo || a.lo_closed);
      }
      if (a.hi < b.hi || (a.hi == b.hi && !a.hi_closed)) {
        c.hi = a.hi;
        c.hi_closed = a.hi_closed && (b.hi > a.hi || b.hi_closed);
      } else {
        c.hi = b.hi;
        c.hi_closed = b.hi_closed && (a.hi > b.hi || a.hi_closed);
      }
      if (!c.empty()) out.push_back(c);
    }
  }
  return PresentableSet(std::move(out));
}

PresentableSet PresentableSet::complement() const {
  std::vector<RInterval> out;
  Rational cursor(0);
  bool cursor_closed = true;  // the complement still owns `cursor` itself
  for (const RInterval& p : parts_) {
    RInterval gap{cursor, p.lo, cursor_closed, !p.lo_closed};
    if (!gap.empty()) out.push_back(gap);
    cursor = p.hi;
    cursor_closed = !p.hi_closed;
  }
  RInterval tail{cursor, Rational(1), cursor_closed, true};
  if (!tail.empty()) out.push_back(tail);
  return PresentableSet(std::move(out));
}

PresentableSet PresentableSet::difference(const PresentableSet& other) const {
  return intersect(other.complement());
}

Rational PresentableSet::measure() const {
  Rational total(0);
  for (const RInterval& p : parts_) total += p.hi - p.lo;
  return total;
}

Rational PresentableSet::sup() const {
  if (parts_.empty()) return Rational(0);
  return parts_.back().hi;
}

std::string PresentableSet::to_string() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " u ";
    const RInterval& p = parts_[i];
    out += (p.lo_closed ? "[" : "(") + format_rational(p.lo) + "," +
           format_rational(p.hi) + (p.hi_closed ? "]" : ")");
  }
  return out;
}

PresentableSet PresentableQuotient::pullback(Subset mask) const {
  PresentableSet out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (mask & (Subset{1} << i)) out = out.unite(cells[i]);
  }
  return out;
}

PresentableQuotient presentable_quotient(
    const std::vector<PresentableSet>& cells,
    const std::vector<std::string>& labels) {
  if (cells.empty()) {
    throw SubmodError(ErrorCode::NotAPartition, "no cells");
  }
  PresentableSet running;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].is_empty()) {
      throw SubmodError(ErrorCode::NotAPartition, "empty cell");
    }
    if (!running.intersect(cells[i]).is_empty()) {
      throw SubmodError(ErrorCode::NotAPartition,
                        "cells overlap at cell " + std::to_string(i));
    }
    running = running.unite(cells[i]);
  }
  if (running != PresentableSet::unit()) {
    throw SubmodError(ErrorCode::NotAPartition, "cells do not cover [0,1]");
  }
  std::vector<std::string> names = labels;
  if (names.empty()) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      names.push_back("c" + std::to_string(i));
    }
  }
  if (names.size() != cells.size()) {
    throw SubmodError(ErrorCode::ShapeError, "one label per cell");
  }
  return PresentableQuotient{GroundSet(names), cells};
}

SetFunction quotient_sup_function(const PresentableQuotient& quotient) {
  auto q = std::make_shared<const PresentableQuotient>(quotient);
  return SetFunction(
      quotient.ground, [q](Subset x) { return q->pullback(x).sup(); },
      FlagSet{Property::Submodular, Property::Increasing,
              Property::Normalized});
}

SetFunction quotient_measure_function(const PresentableQuotient& quotient) {
  auto q = std::make_shared<const PresentableQuotient>(quotient);
  return SetFunction(
      quotient.ground, [q](Subset x) { return q->pullback(x).measure(); },
      FlagSet{Property::Modular, Property::Increasing, Property::Normalized});
}

}  // namespace submod
