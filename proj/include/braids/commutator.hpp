#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>

#include "braids/artin.hpp"
#include "braids/strand_set.hpp"
#include "braids/word.hpp"

namespace braids {

// An iterated commutator over the pure-braid generators: a binary tree
// whose leaves are signed generators, with [x,y] = x^-1 y^-1 x y as the
// bracket.  Trees are immutable and share structure; a tree is monic iff
// every bracket in it evaluates to a nontrivial braid, which is a checkable
// property rather than a structural invariant.
class CommutatorTree {
 public:
  static CommutatorTree leaf(const PureGenerator& g, int n);
  // Builds the bracket without any triviality check; used by parsers and
  // by strict-mode collection, where trivial brackets are representable.
  static CommutatorTree bracket_unchecked(const CommutatorTree& x,
                                          const CommutatorTree& y);

  bool is_leaf() const { return node_->left == nullptr; }
  const PureGenerator& generator() const;  // leaves only
  CommutatorTree left() const;             // brackets only
  CommutatorTree right() const;

  int strand_count() const { return node_->n; }
  int leaf_count() const { return node_->leaf_count; }
  std::uint64_t support_bits() const { return node_->support_bits; }

  // Stable identity of the shared node, usable as a memo key.
  const void* node_id() const { return node_.get(); }

  friend bool operator==(const CommutatorTree& a, const CommutatorTree& b) {
    return a.node_ == b.node_ || structurally_equal(a, b);
  }

 private:
  struct Node {
    PureGenerator gen;  // valid when left == nullptr
    std::shared_ptr<const Node> left, right;
    int n;
    int leaf_count;
    std::uint64_t support_bits;
  };

  explicit CommutatorTree(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  static bool structurally_equal(const CommutatorTree& a,
                                 const CommutatorTree& b);

  std::shared_ptr<const Node> node_;
};

// Leaf -> one-letter word; Bracket(x,y) -> X^-1 Y^-1 X Y with X, Y the
// evaluations of the children.  No cancellation is applied.
BraidWord evaluate(const CommutatorTree& t);

// Union of {a,b} over all leaves.  Equals support(evaluate(t)) whenever t
// is monic; an upper bound otherwise.
StrandSet leaf_support(const CommutatorTree& t);

// The braid automorphism of a tree together with its inverse, built
// compositionally so nested brackets never materialize their evaluated
// words.
struct TreeAut {
  FreeAutomorphism fwd;
  FreeAutomorphism inv;
};

// Memo table from tree node to TreeAut.  One cache per computation keeps
// everything pure from the outside; sharing a cache across many trees that
// reuse subtrees is what makes collection and enumeration tractable.
class AutCache {
 public:
  const TreeAut& get(const CommutatorTree& t);

  // True iff [x,y] evaluates to the identity, decided by comparing the two
  // composition orders of the child automorphisms.
  bool bracket_trivial(const CommutatorTree& x, const CommutatorTree& y);

  static TreeAut bracket_aut(const TreeAut& x, const TreeAut& y);
  static bool commute(const TreeAut& x, const TreeAut& y);

 private:
  std::unordered_map<const void*, TreeAut> table_;
};

// True iff every bracket subtree (including t itself) is nontrivial;
// leaves are always monic.  Subtree results are memoized within the call.
bool is_monic(const CommutatorTree& t);
bool is_monic(const CommutatorTree& t, AutCache& cache);

// Bracket constructor of the commutator calculus: returns the bracket when
// it is nontrivial and nullopt (the trivial marker) otherwise.
std::optional<CommutatorTree> bracket(const CommutatorTree& x,
                                      const CommutatorTree& y);
std::optional<CommutatorTree> bracket(const CommutatorTree& x,
                                      const CommutatorTree& y,
                                      AutCache& cache);

}  // namespace braids
