#include "braids/strand_set.hpp"

namespace braids {

StrandSet StrandSet::from_bits(int n, std::uint64_t bits) {
  StrandSet s(n);
  if (n < 64 && (bits >> n) != 0)
    throw std::invalid_argument("bitmask has members beyond ambient");
  s.bits_ = bits;
  return s;
}

std::vector<int> StrandSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int i = 1; i <= n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

StrandSet complement(const StrandSet& s) {
  return StrandSet::from_bits(s.ambient(),
                              StrandSet::full(s.ambient()).bits() & ~s.bits());
}

StrandSet set_union(const StrandSet& s1, const StrandSet& s2) {
  s1.check_same_ambient(s2);
  return StrandSet::from_bits(s1.ambient(), s1.bits() | s2.bits());
}

StrandSet set_intersection(const StrandSet& s1, const StrandSet& s2) {
  s1.check_same_ambient(s2);
  return StrandSet::from_bits(s1.ambient(), s1.bits() & s2.bits());
}

bool lex_less(const StrandSet& s1, const StrandSet& s2) {
  std::uint64_t a = s1.bits(), b = s2.bits();
  while (a != 0 && b != 0) {
    std::uint64_t la = a & -a, lb = b & -b;  // lowest members
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;  // a proper prefix is smaller
}

std::string to_string(const StrandSet& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace braids
