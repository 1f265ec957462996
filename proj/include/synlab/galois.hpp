#pragma once

// Closure operators <-> meet-preserving topogenous orders, and
// quasi-uniformity bases <-> co-perfect syntopogenous structures.

#include "synlab/structures.hpp"

namespace synlab {

/// U(m) = ⋂{n : m ⊏ n}
EndoMap endomap_of_relation(const Relation& r);

/// c(m) = ⋂{p : m ⊏ p}. Refuses input that is invalid or not meet-preserving.
ClosureOp closure_of_topogenous(const TopogenousOrder& t);
/// m ⊏ n ⇔ c(m) ⊆ n. Refuses an invalid closure.
TopogenousOrder topogenous_of_closure(const ClosureOp& c);
/// {⊏_U : U in the base}, m ⊏_U n ⇔ U(m) ⊆ n. Refuses an invalid base.
Syntop syntop_of_qubase(const QUBase& b);
/// {U^⊏ : ⊏ in the family}. Refuses input that is invalid or not co-perfect.
QUBase qubase_of_syntop(const Syntop& s);

}  // namespace synlab
