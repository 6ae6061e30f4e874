#ifndef HS_VERIFY_HPP
#define HS_VERIFY_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hs/exact.hpp"
#include "hs/graph.hpp"
#include "hs/interlacing.hpp"

namespace hs {

/// Parameters of the target family: order n = 2(t+1)^2, valency k = 4t+1,
/// spectrum {(4t+1)^1, (2t-1)^{2t}, (-1)^{(t+1)^2}, (-3)^{t^2}}.
struct TargetParams {
    int t = 0;
    int n = 0;
    int k = 0;
    std::vector<std::pair<Int, int>> eigs;  // (value, multiplicity), descending

    static TargetParams make(int t);
};

enum class Verdict { pass, fail, skip, info };
std::string to_string(Verdict v);

struct CheckResult {
    std::string lemma;    // stable check id
    std::string params;   // e.g. "t=5"
    Verdict verdict = Verdict::skip;
    std::string witness;  // failure evidence (pair, matrix, partition)
    std::string note;
    long long ms = 0;
};

struct VerificationReport {
    std::vector<CheckResult> entries;

    bool all_passed() const;
    int count(Verdict v) const;
    std::string to_json() const;  // schema hs-report/1
    void print_table(std::ostream& os) const;
};

/// Non-negative solutions of the quasi-clique counting system; n-values are
/// set only where the counting identities pin them down.
struct CountingSolution {
    long long q_2t = 0, q_2t1 = 0, q_2t2 = 0;
    std::optional<long long> n1, n2, n3, n4, n5;
};

// --- targets ---

Spectrum target_spectrum(int t);
CharPoly target_char_poly(int t);

// --- per-claim checks ---

/// Exact spectrum of g equals the target spectrum.
CheckResult verify_spectrum(const Graph& g, int t);

/// A^3 + (5-2t)A^2 + (7-8t)A + (3-6t)I == (16t+8)J entrywise.
CheckResult verify_hoffman_polynomial(const Graph& g, int t);

/// Every (A^3)_{x,y}: diagonal 8t^2+4t; adjacent 24t+1-(5-2t)lambda;
/// non-adjacent 16t+8-(5-2t)mu.
CheckResult verify_walk_counts(const Graph& g, int t);

/// M = (A-(2t-1)I)(A+I) is PSD, diagonal 2t+2, and mu <= 2t+2 on every
/// non-adjacent pair (2x2 principal-minor argument checked entrywise).
CheckResult verify_mu_bound(const Graph& g, int t);

/// min/max common-neighbor count over non-adjacent pairs.
std::pair<int, int> nonadjacent_mu_range(const Graph& g);

// --- determinant sweeps ---

IntMatrix M1_matrix(long long t, long long lambda, long long mu);
IntMatrix M2_matrix(long long t, long long lambda, long long mu);
Int det_M1(long long t, long long lambda, long long mu);  // printed cubic
Int det_M2(long long t, long long lambda, long long mu);
/// Both cubics negative over t in [2, t_max], lambda in [0,4], mu in the
/// admissible ranges; every point cross-checked against the assembled matrix.
CheckResult sweep_determinants(int t_max);

// --- clique structure ---

/// (a) max clique order 2t+2, (b) every vertex outside a maximum clique has
/// exactly 2 neighbors in it, (c) the order-(2t+4) quotient eigenvalue
/// contradiction, (d) the order-(2t+3) double-count contradiction.
CheckResult verify_clique_bounds(const Graph& g, int t);

// --- order enumerations ---

/// Triples b1 >= b2 >= b3 >= 1, b1+b2+b3 = 4t+4, b1 <= 2t+2, b2 <= 2t+1 with
/// (b1-2)^2 + b2^2 + (b3+2)^2 >= 8t^2+10.
std::vector<std::array<long long, 3>> g5_feasible_triples(int t);
CheckResult verify_g5_orders(int t);

std::vector<CountingSolution> enumerate_counting_cases(int t);
CheckResult verify_counting_cases(int t);

// --- case analysis ---

/// 4x4 quotient matrix at alpha = 2t+1.
IntMatrix case2_quotient(int t);
/// Labeled spanning-subgraph model on Omega u Omega^2 grounding the quotient.
Graph g0_graph(int t);
Partition g0_partition(int t);
CheckResult refute_case2(int t);

Graph shrikhande_graph();
CheckResult verify_case1(const Graph& g, int t);

/// Equitable partition {x, twin(x)} / remaining neighbors / rest with
/// quotient [[1,4t,0],[2,2t-1,2t],[0,4,4t-3]].
Partition twin_pair_partition(const Graph& g, int vertex = 0);
CheckResult verify_quotient_divisibility(const Graph& g, int t);

CheckResult brute_force_ds_t1();

/// Full pipeline; candidate defaults to the 2-clique extension of the
/// (t+1)x(t+1) grid. Individual failures never abort the run.
VerificationReport verify_all(int t, const Graph* candidate = nullptr,
                              int sweep_max = 1000);

} // namespace hs

#endif
