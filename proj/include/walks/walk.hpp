#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "walks/poly.hpp"

namespace walks {

struct Step2 {
  int dx = 0;
  int dy = 0;
  friend auto operator<=>(const Step2&, const Step2&) = default;
};

struct Step3 {
  int dx = 0;
  int dy = 0;
  int dz = 0;
  friend auto operator<=>(const Step3&, const Step3&) = default;
};

/// Finite set of non-negative, nonzero lattice steps; kept sorted so
/// every enumeration order downstream is deterministic.
class StepSet2 {
 public:
  explicit StepSet2(std::vector<Step2> steps);
  const std::vector<Step2>& steps() const { return steps_; }
  size_t size() const { return steps_.size(); }
  int max_dx() const;
  int max_dy() const;
  std::string to_string() const;

 private:
  std::vector<Step2> steps_;
};

class StepSet3 {
 public:
  explicit StepSet3(std::vector<Step3> steps);
  const std::vector<Step3>& steps() const { return steps_; }
  size_t size() const { return steps_.size(); }
  std::string to_string() const;

 private:
  std::vector<Step3> steps_;
};

/// Text format shared with the CLI: "dx,dy(;dx,dy)*", e.g. "1,0;0,1;1,1".
StepSet2 parse_step_set2(const std::string& text);
/// 3-D variant: "dx,dy,dz(;dx,dy,dz)*".
StepSet3 parse_step_set3(const std::string& text);

using Walk2 = std::vector<Step2>;

/// Swap the roles of x and y (mirror across the diagonal).
Step2 reflected(Step2 s);
Walk2 reflected(const Walk2& w);

/// The four statistics of a walk, with height h_i = y_i - x_i:
///   a1  losing times: h_i < 0, or h_i = 0 arrived from h_{i-1} < 0
///   a2  break-even times: h_i = 0
///   a3  last break-even time (0 if none)
///   a4  sign changes: h_{i-1} * h_{i+1} < 0
/// Indices i run over step endpoints 1..n; the origin is not counted.
struct StatVector {
  std::uint64_t a1 = 0;
  std::uint64_t a2 = 0;
  std::uint64_t a3 = 0;
  std::uint64_t a4 = 0;
  friend bool operator==(const StatVector&, const StatVector&) = default;
};

enum class Stat { a1, a2, a3, a4 };

const char* stat_name(Stat s);
Stat parse_stat(const std::string& name);

StatVector compute_stats(std::span<const Step2> walk);

/// Strict-order region of a 3-D point, numbered as:
///   1: x<y<z  2: x<z<y  3: y<x<z  4: y<z<x  5: z<x<y  6: z<y<x
///   7: none of the above (some tie)
int classify_region_3d(long x, long y, long z);
const char* region_name(int region);

}  // namespace walks
