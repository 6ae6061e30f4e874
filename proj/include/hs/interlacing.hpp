#ifndef HS_INTERLACING_HPP
#define HS_INTERLACING_HPP

#include <string>
#include <vector>

#include "hs/exact.hpp"
#include "hs/graph.hpp"

namespace hs {

/// Quotient matrix of an adjacency matrix with respect to an ordered vertex
/// partition: entry (i,j) = (1/|V_i|) (C^T A C)_{ij}, kept exact as
/// block_sums(i,j) / class size.
struct QuotientMatrix {
    IntMatrix block_sums;            // (C^T A C)_{ij}: edges from V_i into V_j
    std::vector<Int> class_sizes;
    bool equitable = false;

    int dim() const { return static_cast<int>(class_sizes.size()); }
    Rat entry(int i, int j) const { return Rat(block_sums(i, j), class_sizes[i]); }
    RatMatrix entries() const;
    /// Exact monic char poly, rational coefficients ascending.
    std::vector<Rat> char_poly_rational() const;
};

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p);

/// True iff every vertex of V_i has the same number of neighbors in V_j,
/// for all i, j.
bool is_equitable(const Graph& g, const Partition& p);

/// lambda_i >= mu_i >= lambda_{n-m+i} for all i. Integer eigenvalues compare
/// exactly; numeric remainder roots compare with outward slack `tol`.
bool check_interlacing(const Spectrum& outer, const Spectrum& inner, double tol = 1e-9);

/// Interlacing with a split index j: mu_i = lambda_i for i <= j and
/// mu_i = lambda_{n-m+i} for i > j.
bool is_tight_interlacing(const Spectrum& outer, const Spectrum& inner, double tol = 1e-9);

/// Exact test: char poly of the quotient divides char poly of a.
bool charpoly_divides(const QuotientMatrix& b, const IntMatrix& a);
bool charpoly_divides(const QuotientMatrix& b, const CharPoly& a);

/// Numeric quotient eigenvalues via the symmetrized form
/// D^{-1/2} (C^T A C) D^{-1/2}; descending.
std::vector<double> quotient_eigenvalues_numeric(const QuotientMatrix& q);

std::string partition_to_json(const Partition& p);
Partition partition_from_json(const std::string& text);

} // namespace hs

#endif
