#pragma once

#include <vector>

#include "rlrs/algebraic.hpp"
#include "rlrs/intmat.hpp"

namespace rlrs {

// Exact test of prod_j gammas[j]^exps[j] = 1.
bool power_product_is_one(const std::vector<AlgebraicNumber>& gammas, const IntVec& exps);

struct RelationLattice {
    size_t k = 0;
    IntMatrix generators;  // HNF rows
    unsigned height_bound = 64;
    bool complete = false;
};

// Multiplicative relations among unit-modulus algebraic numbers.
RelationLattice relation_lattice(const std::vector<AlgebraicNumber>& gammas, unsigned height_bound = 64);

// Torus points are t_j = exp(2 pi i theta_j) with
// theta = finite_part[c] + embedding * phi (turns), phi in [0, 1)^free_rank.
struct TorusParam {
    size_t k = 0;
    IntMatrix relations;
    std::vector<std::vector<Rational>> finite_part;  // coset offsets in turns, each in [0, 1)
    size_t free_rank = 0;
    IntMatrix embedding;  // k rows, free_rank columns

    // Exact coset representative as roots of unity.
    std::vector<AlgebraicNumber> finite_point(size_t coset) const;
    // Angles of the torus point in turns (exact for rational phi).
    std::vector<Rational> turns(size_t coset, const std::vector<Rational>& phi) const;
    // True when the integer combination of turns satisfies every relation.
    bool satisfies(const std::vector<Rational>& theta) const;
};

TorusParam parametrize(const RelationLattice& lat);

std::vector<AlgebraicNumber> orbit_point(const std::vector<AlgebraicNumber>& gammas, unsigned long n);

// e^{2 pi i turn} as an exact algebraic number.
AlgebraicNumber root_of_unity(const Rational& turn);

}  // namespace rlrs
