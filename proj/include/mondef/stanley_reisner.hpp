#pragma once

#include "mondef/monomial.hpp"
#include "mondef/simplicial_complex.hpp"

namespace mondef {

// Square-free ideal generated by the products over the minimal non-faces.
// A simplex yields the zero ideal.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& k);

// Inverse direction: the complex whose non-faces are exactly the subsets
// containing a generator support.  Requires a square-free ideal none of
// whose generators is a single variable.
SimplicialComplex complex_of_squarefree(const MonomialIdeal& ideal);

// V(M): the complex of the radical.
SimplicialComplex v_complex(const MonomialIdeal& ideal);

}  // namespace mondef
