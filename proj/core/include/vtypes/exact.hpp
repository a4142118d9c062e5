#pragma once

#include <cstddef>

#include "vtypes/algebraic.hpp"
#include "vtypes/graph.hpp"
#include "vtypes/matrix.hpp"
#include "vtypes/polynomial.hpp"

namespace vtypes {

using IntMatrix = DenseMatrix<BigInt>;
using RationalMatrix = DenseMatrix<Rational>;

IntMatrix adjacency_matrix(const Graph& g);

/// det(xI - A(G)), monic of degree n. Computed modulo word-size primes via
/// Hessenberg reduction and lifted by CRT against a Hadamard-type bound.
IntPolynomial char_poly(const Graph& g);
IntPolynomial char_poly(const IntMatrix& a);  // symmetric or not, any square integer matrix

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& a);
/// Exact rank by fraction-free elimination.
std::size_t integer_rank(const IntMatrix& a);
std::size_t rational_rank(const RationalMatrix& a);

/// Largest k with minpoly(lambda)^k | p. Throws DomainError on a zero p or non-monic minpoly.
std::size_t root_multiplicity(const IntPolynomial& p, const AlgebraicNumber& lambda);
std::size_t root_multiplicity(const IntPolynomial& p, const IntPolynomial& monic_factor);

/// root_multiplicity(char_poly(G), lambda).
std::size_t eigenvalue_multiplicity(const Graph& g, const AlgebraicNumber& lambda);

/// Second exact route: (n - rank(q(A))) / deg q for the minimal polynomial q.
/// Valid because A is diagonalizable and conjugate roots share multiplicity.
std::size_t eigenspace_dimension(const Graph& g, const AlgebraicNumber& lambda);

/// Main/non-main for a rational eigenvalue. With M = A - lambda I symmetric,
/// range(M) = ker(M)^perp, so lambda is non-main iff j lies in range(M); hence
///   main  <=>  rank([M | j]) == rank(M) + 1.
/// Throws DomainError for irrational lambda, NotAnEigenvalue if rank(M) = n.
bool is_main_exact(const Graph& g, const AlgebraicNumber& lambda);

}  // namespace vtypes
