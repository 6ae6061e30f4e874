#ifndef HS_EXACT_HPP
#define HS_EXACT_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "hs/graph.hpp"

namespace hs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

/// Monic characteristic polynomial det(xI - M), exact integer coefficients.
/// coeffs[i] is the coefficient of x^i; coeffs.back() == 1.
struct CharPoly {
    std::vector<Int> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Int evaluate(const Int& x) const;
    bool operator==(const CharPoly& o) const { return coeffs == o.coeffs; }

    /// JSON array of decimal strings, descending degree.
    std::string to_json() const;
};

/// Exact integer eigenvalues with multiplicities plus the (monic, integer)
/// remainder factor with no integer roots. numeric_roots approximates the
/// remainder's roots for reporting only.
struct Spectrum {
    int dim = 0;
    std::vector<std::pair<Int, int>> integer_roots;  // sorted descending
    CharPoly remainder;                              // degree 0 when fully integral
    std::vector<double> numeric_roots;               // sorted descending
    double numeric_tol = 1e-10;

    bool fully_integral() const { return remainder.degree() == 0; }
    /// All eigenvalues as doubles, multiplicity-expanded, descending.
    std::vector<double> values() const;
    bool operator==(const Spectrum& o) const {
        return dim == o.dim && integer_roots == o.integer_roots && remainder == o.remainder;
    }
    std::string to_string() const;  // e.g. "9^1 3^4 (-1)^9 (-3)^4"
    std::string to_json() const;
};

IntMatrix adjacency_matrix(const Graph& g);

bool is_symmetric(const IntMatrix& m);

/// Exact characteristic polynomial. Computed modulo enough word-size primes
/// (Hessenberg reduction per prime) and recombined by CRT; the prime count
/// comes from a Hadamard-type bound, so the result is exact, not heuristic.
CharPoly char_poly(const IntMatrix& m);
CharPoly char_poly(const Graph& g);

/// Exact determinant, Bareiss fraction-free elimination.
Int det(const IntMatrix& m);

/// Exact spectrum of a symmetric integer matrix. Integer roots are found by
/// synthetic division over the Gershgorin range; throws on non-symmetric input.
Spectrum spectrum(const IntMatrix& m);
Spectrum spectrum(const Graph& g);

bool is_cospectral(const Graph& g, const Graph& h);

/// Exact PSD test for a symmetric matrix: all char poly coefficients
/// (-1)^{n-i} c_i >= 0, valid because symmetry gives real-rootedness.
bool is_psd(const IntMatrix& m);

/// Entrywise check of c3 A^3 + c2 A^2 + c1 A + c0 I == rhs J.
/// coeffs = {c3, c2, c1, c0}.
bool matrix_identity_check(const IntMatrix& a, const std::vector<Int>& coeffs, const Int& rhs);

// --- polynomial helpers (ascending coefficient vectors) ---

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b);
/// Expand prod (x - root)^mult.
CharPoly poly_from_roots(const std::vector<std::pair<Int, int>>& roots);
/// Exact division test over the rationals; both inputs need nonzero leading
/// coefficients.
bool poly_divides(const std::vector<Rat>& divisor, const std::vector<Rat>& dividend);

// --- numeric fallback (reporting / cross-checks only) ---

/// Eigenvalues of a symmetric matrix via Eigen's SelfAdjointEigenSolver,
/// descending. Entries must fit in double.
std::vector<double> numeric_eigenvalues(const IntMatrix& m);
std::vector<double> numeric_eigenvalues(const Graph& g);

} // namespace hs

#endif
