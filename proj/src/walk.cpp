#include "walks/walk.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace walks {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_component(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("step set: bad integer '" + s + "'");
  if (v < 0) throw std::invalid_argument("step set: negative components are not supported");
  return v;
}

}  // namespace

StepSet2::StepSet2(std::vector<Step2> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("step set: must be non-empty");
  std::sort(steps_.begin(), steps_.end());
  for (const auto& s : steps_) {
    if (s.dx == 0 && s.dy == 0) throw std::invalid_argument("step set: zero step not allowed");
    if (s.dx < 0 || s.dy < 0) throw std::invalid_argument("step set: negative components");
  }
  if (std::adjacent_find(steps_.begin(), steps_.end()) != steps_.end())
    throw std::invalid_argument("step set: duplicate step");
}

int StepSet2::max_dx() const {
  int m = 0;
  for (const auto& s : steps_) m = std::max(m, s.dx);
  return m;
}

int StepSet2::max_dy() const {
  int m = 0;
  for (const auto& s : steps_) m = std::max(m, s.dy);
  return m;
}

std::string StepSet2::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < steps_.size(); ++i) {
    if (i) os << ";";
    os << steps_[i].dx << "," << steps_[i].dy;
  }
  return os.str();
}

StepSet3::StepSet3(std::vector<Step3> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("step set: must be non-empty");
  std::sort(steps_.begin(), steps_.end());
  for (const auto& s : steps_) {
    if (s.dx == 0 && s.dy == 0 && s.dz == 0)
      throw std::invalid_argument("step set: zero step not allowed");
    if (s.dx < 0 || s.dy < 0 || s.dz < 0)
      throw std::invalid_argument("step set: negative components");
  }
  if (std::adjacent_find(steps_.begin(), steps_.end()) != steps_.end())
    throw std::invalid_argument("step set: duplicate step");
}

std::string StepSet3::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < steps_.size(); ++i) {
    if (i) os << ";";
    os << steps_[i].dx << "," << steps_[i].dy << "," << steps_[i].dz;
  }
  return os.str();
}

StepSet2 parse_step_set2(const std::string& text) {
  std::vector<Step2> steps;
  for (const auto& part : split(text, ';')) {
    auto comps = split(part, ',');
    if (comps.size() != 2) throw std::invalid_argument("step set: expected dx,dy in '" + part + "'");
    steps.push_back({parse_component(comps[0]), parse_component(comps[1])});
  }
  return StepSet2(std::move(steps));
}

StepSet3 parse_step_set3(const std::string& text) {
  std::vector<Step3> steps;
  for (const auto& part : split(text, ';')) {
    auto comps = split(part, ',');
    if (comps.size() != 3)
      throw std::invalid_argument("step set: expected dx,dy,dz in '" + part + "'");
    steps.push_back({parse_component(comps[0]), parse_component(comps[1]), parse_component(comps[2])});
  }
  return StepSet3(std::move(steps));
}

Step2 reflected(Step2 s) { return {s.dy, s.dx}; }

Walk2 reflected(const Walk2& w) {
  Walk2 r;
  r.reserve(w.size());
  for (auto s : w) r.push_back(reflected(s));
  return r;
}

const char* stat_name(Stat s) {
  switch (s) {
    case Stat::a1: return "a1";
    case Stat::a2: return "a2";
    case Stat::a3: return "a3";
    case Stat::a4: return "a4";
  }
  return "?";
}

Stat parse_stat(const std::string& name) {
  if (name == "a1") return Stat::a1;
  if (name == "a2") return Stat::a2;
  if (name == "a3") return Stat::a3;
  if (name == "a4") return Stat::a4;
  throw std::invalid_argument("unknown statistic '" + name + "'");
}

StatVector compute_stats(std::span<const Step2> walk) {
  StatVector v;
  long h = 0;       // height after step i
  long h_prev = 0;  // height after step i-1
  long h_back2 = 0; // height after step i-2 (for the sign-change window)
  for (size_t i = 1; i <= walk.size(); ++i) {
    h_back2 = h_prev;
    h_prev = h;
    h += walk[i - 1].dy - walk[i - 1].dx;
    if (h < 0 || (h == 0 && h_prev < 0)) ++v.a1;
    if (h == 0) {
      ++v.a2;
      v.a3 = i;
    }
    // arriving at step i finalizes the window around index i-1
    if (i >= 2 && h_back2 != 0 && h != 0 && ((h_back2 < 0) != (h < 0))) ++v.a4;
  }
  return v;
}

int classify_region_3d(long x, long y, long z) {
  if (x < y && y < z) return 1;
  if (x < z && z < y) return 2;
  if (y < x && x < z) return 3;
  if (y < z && z < x) return 4;
  if (z < x && x < y) return 5;
  if (z < y && y < x) return 6;
  return 7;
}

const char* region_name(int region) {
  switch (region) {
    case 1: return "x<y<z";
    case 2: return "x<z<y";
    case 3: return "y<x<z";
    case 4: return "y<z<x";
    case 5: return "z<x<y";
    case 6: return "z<y<x";
    case 7: return "ties";
  }
  return "?";
}

}  // namespace walks
