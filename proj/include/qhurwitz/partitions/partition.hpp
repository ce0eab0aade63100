#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qhurwitz/exactalg/rat.hpp"

namespace qhurwitz::partitions {

using exact::Int;
using exact::Rat;

class Partition {
 public:
  Partition() = default;
  // Sorts descending; rejects non-positive parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int colength() const { return weight_ - length(); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  // m_j for j = 1..max part (index 0 unused).
  std::vector<int> multiplicities() const;
  Partition conjugate() const;

  std::string to_string() const;  // "2,1,1"; "" for the empty partition
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);
// Same order, restricted to at most max_len parts.
std::vector<Partition> partitions_of(int n, int max_len);
// Partitions of n with colength exactly c, reverse-lexicographic.
std::vector<Partition> partitions_with_colength(int n, int c);

Rat z_mu(const Partition& mu);
Int factorial(int n);
// N!/z_μ: size of the conjugacy class of cycle type μ.
Int class_size(const Partition& mu);
Rat dim_irrep(const Partition& lambda);

struct ColengthContents {
  int colength;
  std::vector<int> contents;  // row-major over cells, j - i
};
ColengthContents colength_contents(const Partition& lambda);

int euler_characteristic(int n, const Partition& mu, int d);

// Ordered tuple of partitions of a common weight.
class ProfileList {
 public:
  explicit ProfileList(std::vector<Partition> profiles);
  const std::vector<Partition>& profiles() const { return p_; }
  int size() const { return static_cast<int>(p_.size()); }
  int weight() const { return p_.front().weight(); }
  int total_colength() const;
  std::string to_string() const;  // "2,1;2,1"
  static ProfileList parse(const std::string& text);

 private:
  std::vector<Partition> p_;
};

}  // namespace qhurwitz::partitions
