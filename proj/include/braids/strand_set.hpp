#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace braids {

// A subset of the strand indices {1..n}, with the ambient strand count n
// carried along so set operations can check they mix compatible ambients.
class StrandSet {
 public:
  explicit StrandSet(int n) : n_(check_ambient(n)) {}
  StrandSet(int n, std::initializer_list<int> members) : n_(check_ambient(n)) {
    for (int i : members) add(i);
  }
  StrandSet(int n, const std::vector<int>& members) : n_(check_ambient(n)) {
    for (int i : members) add(i);
  }

  static StrandSet full(int n) {
    StrandSet s(n);
    s.bits_ = (n == 64) ? ~0ull : ((1ull << n) - 1);
    return s;
  }
  static StrandSet from_bits(int n, std::uint64_t bits);

  int ambient() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int i) const {
    return i >= 1 && i <= n_ && (bits_ >> (i - 1)) & 1;
  }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }
  std::vector<int> members() const;

  void add(int i) {
    if (i < 1 || i > n_)
      throw std::invalid_argument("strand index " + std::to_string(i) +
                                  " out of range for ambient " +
                                  std::to_string(n_));
    bits_ |= 1ull << (i - 1);
  }

  bool subset_of(const StrandSet& other) const {
    check_same_ambient(other);
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const StrandSet& other) const {
    check_same_ambient(other);
    return (bits_ & other.bits_) != 0;
  }

  friend bool operator==(const StrandSet&, const StrandSet&) = default;

  void check_same_ambient(const StrandSet& other) const {
    if (n_ != other.n_)
      throw std::invalid_argument("strand sets have different ambients");
  }

 private:
  static int check_ambient(int n) {
    if (n < 1 || n > 64)
      throw std::invalid_argument("ambient strand count must be in 1..64");
    return n;
  }

  int n_;
  std::uint64_t bits_ = 0;
};

// {1..n} \ S.
StrandSet complement(const StrandSet& s);

StrandSet set_union(const StrandSet& s1, const StrandSet& s2);
StrandSet set_intersection(const StrandSet& s1, const StrandSet& s2);

// Lexicographic comparison of the sorted member sequences; used to break
// cardinality ties in the canonical subset order.
bool lex_less(const StrandSet& s1, const StrandSet& s2);

std::string to_string(const StrandSet& s);  // e.g. "{1,3}" or "{}"

}  // namespace braids
