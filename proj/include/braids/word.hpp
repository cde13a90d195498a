#pragma once

#include <stdexcept>
#include <vector>

namespace braids {

// A signed pure-braid generator p[a,b]^sign with 1 <= a < b.
struct PureGenerator {
  int a;
  int b;
  int sign;  // +1 or -1

  PureGenerator inverse() const { return {a, b, -sign}; }

  friend bool operator==(const PureGenerator&, const PureGenerator&) = default;
};

// A word in the generators of the pure braid group on n strands.  Words are
// stored literally: no relation is ever applied at this layer, and the only
// rewriting available is free cancellation of adjacent inverse pairs.  The
// empty word is the identity of P_n.
class BraidWord {
 public:
  BraidWord() = default;  // empty word in P_1
  explicit BraidWord(int n);
  BraidWord(int n, std::vector<PureGenerator> letters);

  int strand_count() const { return n_; }
  const std::vector<PureGenerator>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_ = 1;
  std::vector<PureGenerator> letters_;
};

// One-letter word p[a,b]^sign in P_n.  Rejects a >= b, out-of-range indices
// and n < 2.
BraidWord make_generator(int a, int b, int sign, int n);

// Letters of w1 followed by letters of w2; no cancellation.  The strand
// counts must agree.
BraidWord concat(const BraidWord& w1, const BraidWord& w2);

// Letters reversed with signs flipped, so that concat(w, invert(w)) freely
// cancels to the empty word.
BraidWord invert(const BraidWord& w);

// Removes adjacent pairs p[a,b]^s p[a,b]^-s until none remain.  Free
// reduction is confluent, so the result does not depend on removal order.
// Commuting letters are never reordered.
BraidWord free_cancel(const BraidWord& w);

}  // namespace braids
