#include "braids/retraction.hpp"

#include <stdexcept>

#include "braids/artin.hpp"

namespace braids {

BraidWord phi(const StrandSet& s, const BraidWord& w) {
  if (s.ambient() != w.strand_count())
    throw std::invalid_argument("phi: ambient mismatch");
  std::vector<PureGenerator> kept;
  kept.reserve(w.size());
  for (const PureGenerator& g : w.letters())
    if (!s.contains(g.a) && !s.contains(g.b)) kept.push_back(g);
  return BraidWord(w.strand_count(), std::move(kept));
}

StrandSet support(const BraidWord& w) {
  const int n = w.strand_count();
  // Strands no letter touches cannot be in the support; only the rest need
  // an oracle call.
  StrandSet touched(n);
  for (const PureGenerator& g : w.letters()) {
    touched.add(g.a);
    touched.add(g.b);
  }
  StrandSet out(n);
  for (int i : touched.members()) {
    if (!are_equal(phi(StrandSet(n, {i}), w), w)) out.add(i);
  }
  return out;
}

bool in_P(const StrandSet& s, const BraidWord& w) {
  if (s.ambient() != w.strand_count())
    throw std::invalid_argument("in_P: ambient mismatch");
  return are_equal(phi(complement(s), w), w);
}

bool in_Q(const StrandSet& s, const BraidWord& w) {
  if (s.ambient() != w.strand_count())
    throw std::invalid_argument("in_Q: ambient mismatch");
  return is_trivial(phi(s, w));
}

}  // namespace braids
