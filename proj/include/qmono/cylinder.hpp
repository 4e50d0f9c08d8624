#pragma once

// The cylinder fixture {<u, v> : u in A} with its two-argument padding, and
// the lift that turns a guess-and-check machine for an S-paddable set into
// one whose witnesses are themselves members of the set.

#include "qmono/nondet.hpp"
#include "qmono/oracle.hpp"
#include "qmono/padding.hpp"

namespace qmono {

struct Cylinder {
    OracleHandle l;
    SPadding s;
};

/// s(x, y) = <u, <v, x, y>> when x = <u, v>, else <non_member, <x, y>>.
/// Honesty bound q(n) = n. non_member must lie outside a (checked).
Cylinder make_cylinder(const OracleHandle& a, const BitString& non_member);

/// Guess-and-check machine for the cylinder: accepts x in l on every guess of
/// length <= 1 (three witnesses per member).
NondetMachine cylinder_membership_machine(const Cylinder& c);

/// n' guesses w with |w| <= q(|x| + p(|x|)), accepts iff w = pi(x, w') for some
/// w' with |w'| <= p(|x|) on which n accepts. pi must be fully invertible. Its
/// candidate list is {pi(x, w')}, and every candidate is checked against the
/// length bound (ConfigurationError when q is too small).
NondetMachine self_witnessing_lift(const NondetMachine& n, const SPadding& pi, const Polynomial& p,
                                   const Polynomial& q);

} // namespace qmono
