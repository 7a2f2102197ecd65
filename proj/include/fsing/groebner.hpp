#pragma once

#include <cstddef>
#include <vector>

#include "fsing/field.hpp"
#include "fsing/monomial.hpp"
#include "fsing/poly.hpp"

// Low-level Buchberger engine on raw term vectors. Higher layers (Ideal)
// translate to and from Poly; the engine itself knows nothing about variable
// names, so callers may use spare exponent slots for auxiliary variables.
namespace fsing::gb {

using TermVec = std::vector<Term>;

/// Sort descending under `order`, merge equal monomials, drop zeros.
void normalize(TermVec& terms, const PrimeField& field, const MonomialOrder& order);

struct Stats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

/// Reduced Groebner basis of the ideal generated by `gens`.
/// Each element is monic and sorted descending under `order`; elements are
/// listed by ascending leading monomial. The zero ideal yields an empty list.
/// Uses the sugar strategy with the Gebauer-Moeller installation of both
/// Buchberger criteria.
std::vector<TermVec> reduced_basis(const PrimeField& field, std::vector<TermVec> gens,
                                   const MonomialOrder& order, Stats* stats = nullptr);

/// Full normal form of `f` (any term order on input) with respect to
/// `basis`, which must be a Groebner basis for `order` with monic elements.
TermVec normal_form(const PrimeField& field, TermVec f, const std::vector<TermVec>& basis,
                    const MonomialOrder& order);

/// Exact quotient f / g; throws InvalidArgument if g does not divide f.
TermVec exact_divide(const PrimeField& field, TermVec f, TermVec g, const MonomialOrder& order);

}  // namespace fsing::gb
