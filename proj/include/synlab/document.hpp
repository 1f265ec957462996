#pragma once

#include <vector>

#include "synlab/fincat.hpp"
#include "synlab/structures.hpp"

namespace synlab {

/// Everything an instance file can carry. Categories are full subcategories
/// of one pool of objects and morphisms, so ids are shared between them.
struct Document {
  std::vector<CategoryPtr> categories;
  std::vector<FunctorData> functors;
  std::vector<NatTransData> nats;
  std::vector<PointedEndo> pointed;
  std::vector<CopointedEndo> copointed;
  std::vector<AdjunctionData> adjunctions;
  std::vector<FibrationData> fibrations;
  std::vector<ClosureOp> closures;
  std::vector<TopogenousOrder> topogenous;
  std::vector<QUBase> qubases;
  std::vector<Syntop> syntops;

  CategoryPtr category(std::string_view id) const;
  const FunctorData* functor(std::string_view id) const;
};

}  // namespace synlab
