#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "braids/word.hpp"

namespace braids {

// A freely reduced word in the free group F_n.  Letters are nonzero signed
// indices: +i stands for x_i, -i for x_i^-1.  The stored sequence never
// contains an adjacent pair (i)(-i).
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord reduce(std::span<const int> letters);
  static FreeWord generator(int i);

  // Appends one letter, cancelling against the current last letter.
  void push(int letter);
  // Appends a whole word (or its inverse), cancelling at the seam.
  void append(const FreeWord& w);
  void append_inverse(const FreeWord& w);

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  FreeWord inverse() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> letters_;
};

// An endomorphism of F_n given by the images of the generators x_1..x_n.
// All images are kept freely reduced, so equality of automorphisms is
// equality of image sequences.
class FreeAutomorphism {
 public:
  FreeAutomorphism(int rank, std::vector<FreeWord> images);

  static FreeAutomorphism identity(int rank);

  int rank() const { return rank_; }
  const FreeWord& image(int i) const { return images_[i - 1]; }
  const std::vector<FreeWord>& images() const { return images_; }

  // Substitutes each letter of w by its image and reduces.
  FreeWord apply(const FreeWord& w) const;

  bool is_identity() const;

  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) =
      default;

 private:
  int rank_;
  std::vector<FreeWord> images_;
};

// The automorphism "apply f, then g": its image of x_i is g(f(x_i)).
FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g);

// Action of the elementary braid generator sigma_i on F_n:
//   sign +1:  x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
//   sign -1:  x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
// and x_j -> x_j for all other j.  Requires 1 <= i <= n-1.
FreeAutomorphism sigma_automorphism(int i, int sign, int rank);

// Action of p[a,b]^sign, obtained by expanding the generator into the
// sigma-word (sigma_{b-1} ... sigma_{a+1}) sigma_a^2 (sigma_{a+1}^-1 ...
// sigma_{b-1}^-1).  The presentation relation suite validates this
// convention end to end.
FreeAutomorphism pure_generator_automorphism(const PureGenerator& g, int rank);

// Composition of the letter automorphisms in word order; a homomorphism
// from braid words to Aut(F_n).
FreeAutomorphism braid_automorphism(const BraidWord& w);

// True iff w represents the identity of P_n.  The Artin action is faithful,
// so this solves the word problem.
bool is_trivial(const BraidWord& w);

// True iff w1 and w2 represent the same element of P_n.  Decided as
// is_trivial(w1 w2^-1).  The strand counts must agree.
bool are_equal(const BraidWord& w1, const BraidWord& w2);

}  // namespace braids
