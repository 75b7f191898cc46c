#pragma once

#include "qmzv/word.hpp"

namespace qmzv {

/// Duality involution on admissible words:
///   tau(u_{k1}u_0^{z1}...u_{kd}u_0^{zd}) = u_{zd+1}u_0^{kd-1}...u_{z1+1}u_0^{k1-1},
/// tau(1) = 1. Throws std::domain_error on non-admissible input.
Word tau(const Word& w);

/// Q-linear extension of tau; every word in the combination must be admissible.
LinearCombination tau_lin(const LinearCombination& a);

}  // namespace qmzv
