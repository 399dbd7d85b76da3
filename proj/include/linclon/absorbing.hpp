#pragma once

#include <vector>

#include "linclon/funcspace.hpp"

namespace linclon {

/// Unique decomposition f = sum_{I subset [m]} f_I into summands with f_I
/// 0-absorbing in I, computed per factor of the codomain.

struct AbsorbingComponent {
  FactorSet subset;
  FiniteFunction function;
};

/// Dep(f) within I, and f vanishes wherever some block i in I is zero in
/// every argument.
bool is_absorbing(const FiniteFunction& f, FactorSet I);

/// f_I(a) = sum_{J subset I} (-1)^{|I|+|J|} f(a^(J)).
FiniteFunction component(const FiniteFunction& f, FactorSet I);

/// One component per subset, ordered by subset bitmask.
std::vector<AbsorbingComponent> decompose(const FiniteFunction& f);

/// Same components through the recursion f_I(a) = f(a^(I)) - sum_{J proper subset I} f_J(a).
std::vector<AbsorbingComponent> decompose_recursive(const FiniteFunction& f);

/// The function x -> f(x^(J)).
FiniteFunction masked(const FiniteFunction& f, FactorSet J);

}  // namespace linclon
