#pragma once

// Lifting structures along pointed and copointed endofunctors, fibrations and
// adjunctions, in syntopogenous, base and closure form. Each lift validates
// its transformation data and refuses (Refused) when a precondition fails.

#include <string_view>

#include "synlab/structures.hpp"

namespace synlab {

// m ⊏ n ⇔ ∃p ⊆ FX: η(m) ⊏_FX p and η⁻¹(p) ⊆ n. Needs an E-pointed unit unless
// s is co-perfect.
Syntop lift_pointed_syntop(const Syntop& s, const PointedEndo& p);
// U(m) = η⁻¹(U_FX(η(m)))
QUBase lift_pointed_qubase(const QUBase& b, const PointedEndo& p);
// c(m) = η⁻¹(c_FX(η(m)))
ClosureOp lift_pointed_closure(const ClosureOp& c, const PointedEndo& p);

// m ⊏ n ⇔ m ⊆ n and ε⁻¹(m) ⊏_GX ε⁻¹(n). Needs an M-copointed counit.
Syntop lift_copointed_syntop(const Syntop& s, const CopointedEndo& q);
// V(m) = m ∪ ε(V_GX(ε⁻¹(m)))
QUBase lift_copointed_qubase(const QUBase& b, const CopointedEndo& q);
// c(m) = m ∪ ε(c_GX(ε⁻¹(m)))
ClosureOp lift_copointed_closure(const ClosureOp& c, const CopointedEndo& q);

// m ⊏ n ⇔ γ(m) ⊏_FX γ(n)
Syntop lift_fibration_syntop(const Syntop& s, const FibrationData& fd);
// U(m) = δ(U_FX(γ(m)))
QUBase lift_fibration_qubase(const QUBase& b, const FibrationData& fd);
// c(m) = δ(c_FX(γ(m)))
ClosureOp lift_fibration_closure(const ClosureOp& c, const FibrationData& fd);

// U(m) = η⁻¹(G U_FX(F m))
QUBase lift_adjoint_qubase(const QUBase& b, const AdjunctionData& ad);
// m ⊏ n ⇔ η⁻¹(G U^⊏(F m)) ⊆ n; s must be co-perfect.
Syntop lift_adjoint_syntop(const Syntop& s, const AdjunctionData& ad);
// c(m) = η⁻¹(G c_FX(F m))
ClosureOp lift_adjoint_closure(const ClosureOp& c, const AdjunctionData& ad);

using Transformation = std::variant<PointedEndo, CopointedEndo, FibrationData, AdjunctionData>;

const char* family_name(const Transformation& t);
const std::string& transformation_id(const Transformation& t);
/// Where the input structure lives and where the lifted one lands.
CategoryPtr lift_input_category(const Transformation& t);
CategoryPtr lift_output_category(const Transformation& t);

/// Dispatches on both arguments. Topogenous orders have no direct lift and
/// are rejected with InputError.
Structure lift(const Structure& s, const Transformation& t);

/// The extremal claim a lift carries. coarsest and least put the lifted
/// structure below every admissible candidate, finest and largest above.
enum class Extremal { coarsest, finest, least, largest };
const char* extremal_name(Extremal e);
/// Throws InputError on an unknown name.
Extremal parse_extremal(std::string_view name);
bool lifted_below(Extremal e);
Extremal claimed_extremal(const Transformation& t, const Structure& input);

/// Human-readable formula applied by `lift`.
std::string lift_formula(const Transformation& t, const Structure& input);

/// Empty when `candidate` (on the output category) makes the designated maps
/// continuous against `input`: η components for pointed lifts, ε components
/// for copointed ones, the functor otherwise.
std::string designated_continuity_witness(const Transformation& t, const Structure& input,
                                          const Structure& candidate);

}  // namespace synlab
