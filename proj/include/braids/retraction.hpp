#pragma once

#include "braids/strand_set.hpp"
#include "braids/word.hpp"

namespace braids {

// The strand-deletion retraction: deletes every letter p[a,b] with a or b
// in S and keeps the rest in order.  The strand count is preserved, so
// phi_S is an endomorphism of P_n and phi_S1 . phi_S2 = phi_{S1 u S2} holds
// letter for letter.
BraidWord phi(const StrandSet& s, const BraidWord& w);

// The smallest strand set S with w in P_S, computed by n single-strand
// deletion tests: i is in the support iff deleting strand i changes the
// element.
StrandSet support(const BraidWord& w);

// Membership in the subgroup generated by p[a,b] with both indices in S.
bool in_P(const StrandSet& s, const BraidWord& w);

// Membership in the kernel of phi_S (generated by p[a,b] with at least one
// index in S).
bool in_Q(const StrandSet& s, const BraidWord& w);

}  // namespace braids
