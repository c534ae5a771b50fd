#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace raising {

// Integer vectors index raising-operator monomials; entries may be zero or
// negative. Position 0 is row 1.
using IntVector = std::vector<int>;

// A box [row, col] of a Young diagram, both 1-based. Row 0 is used for the
// virtual row above the diagram.
struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are weakly decreasing and
  // nonnegative. Trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  // Sorts the entries in decreasing order first; rejects negatives.
  static Partition sorted(std::vector<int> entries);

  const std::vector<int>& parts() const { return p_; }
  int length() const { return static_cast<int>(p_.size()); }
  int size() const;
  bool empty() const { return p_.empty(); }
  // 1-based row length, zero beyond the last row.
  int row(int r) const { return r >= 1 && r <= length() ? p_[r - 1] : 0; }
  // Length of column c (1-based); zero past the first row.
  int col(int c) const;
  bool contains(const Box& b) const { return b.row >= 1 && b.col >= 1 && b.col <= row(b.row); }
  bool contains(const Partition& mu) const;
  int multiplicity(int part) const;
  Partition conjugate() const;
  // Prepends p as a new first row (no validation beyond the constructor's).
  Partition with_first_row(int p) const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> p_;
};

IntVector parse_int_list(std::string_view text);
std::string format_int_list(const IntVector& v);

bool is_strict(const Partition& lambda);
bool is_k_strict(const Partition& lambda, int k);
int vector_sum(const IntVector& v);
// Length = index of the last nonzero entry.
int vector_length(const IntVector& v);
IntVector trimmed(IntVector v);

// Dominance: every prefix sum of a is >= that of b. Throws if |a| != |b|.
bool dominates(const IntVector& a, const IntVector& b);

// Enumerations, all in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n, int max_part = -1, int max_length = -1);
std::vector<Partition> strict_partitions_of(int n, int max_length = -1);
std::vector<Partition> k_strict_partitions_of(int n, int k, int max_length = -1);
std::vector<Partition> partitions_in_box(int rows, int cols);
std::vector<Partition> subpartitions(const Partition& lambda);
// Weak compositions of n with exactly `parts` entries.
std::vector<IntVector> weak_compositions(int n, int parts);

std::vector<Box> skew_boxes(const Partition& lambda, const Partition& mu);

enum class StripType { Horizontal, Vertical, Both, Neither };
std::string to_string(StripType t);
// Classification of lambda/mu; throws unless mu is contained in lambda.
StripType strip_type(const Partition& lambda, const Partition& mu);
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);
bool is_vertical_strip(const Partition& lambda, const Partition& mu);

// All mu containing nu with mu/nu a horizontal strip of the given size.
std::vector<Partition> add_horizontal_strips(const Partition& nu, int size);
// All mu contained in lambda with lambda/mu a horizontal strip.
std::vector<Partition> remove_horizontal_strips(const Partition& lambda);
// All mu contained in lambda with lambda/mu a vertical strip.
std::vector<Partition> remove_vertical_strips(const Partition& lambda);

// Boxes [r,c] of lambda with [r+1,c+1] outside lambda.
bool in_rim(const Partition& lambda, const Box& b);

// Shifted diagram: row r occupies columns r .. r + lambda_r - 1.
std::vector<Box> shifted_boxes(const Partition& lambda);
std::vector<Box> shifted_skew_boxes(const Partition& lambda, const Partition& mu);

// Connected components of a set of boxes. With `corners` two boxes are
// adjacent when they share a vertex, otherwise only when they share an edge.
std::vector<std::vector<Box>> box_components(const std::vector<Box>& boxes, bool corners);

}  // namespace raising
