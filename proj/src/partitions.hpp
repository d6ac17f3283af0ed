#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "report.hpp"

namespace iwb {

// Weakly decreasing parts, each >= 2. Also names the monomial
// L_{-l1} ... L_{-lm} in the differential polynomial ring.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts; throws InvalidArgument on a part below 2.
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  long weight() const { return weight_; }
  long length() const { return static_cast<long>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long operator[](std::size_t i) const { return parts_[i]; }

  // Multiset union (monomial product).
  Partition operator*(const Partition& other) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  // Grevlex; see grevlex_less.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<long> parts_;
  long weight_ = 0;
};

// Lower weight is smaller; at equal weight, the partition with the larger
// part at the first disagreement is smaller.
bool grevlex_less(const Partition& a, const Partition& b);

// mu is a sub-multiset of lam.
bool contains(const Partition& lam, const Partition& mu);

std::string to_string(const Partition& p);
nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

// All partitions of n into parts >= 2, ascending grevlex.
std::vector<Partition> partitions_min2(long n);

// The forbidden patterns of weight <= max_weight, ascending grevlex.
std::vector<Partition> forbidden_patterns(long max_weight);
bool avoids_all(const Partition& lam);

// The avoidance set of weight n, ascending grevlex.
std::vector<Partition> enumerate_P(long n);

enum class PClass { A, B, C, D, E };
const char* name(PClass c);
inline constexpr PClass kPClasses[] = {PClass::A, PClass::B, PClass::C, PClass::D, PClass::E};
// Throws NotInP when lam contains a forbidden pattern.
PClass classify(const Partition& lam);

// a..e and p counts indexed by [n][m], 0 <= m <= n.
struct CountTable {
  long n_max = 0;
  std::vector<std::vector<std::array<long, 5>>> cls;
  long count(PClass c, long n, long m) const;  // 0 outside the table
  long p(long n, long m) const;
  long total(long n) const;
};
CountTable count_table(long n_max);

// The five counting recurrences at every (n, m) with n <= n_max.
CheckItems recursion_check(long n_max);

// Partitions of n into parts >= 2 with l_i - l_{i+s-1} >= 2.
std::vector<Partition> mourtada_basis(long s, long n);

}  // namespace iwb
