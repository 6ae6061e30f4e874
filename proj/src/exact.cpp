#include "hs/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace hs {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> make_primes(int count) {
    std::vector<u64> ps;
    u64 c = (u64{1} << 62) - 1;
    while (static_cast<int>(ps.size()) < count) {
        if (is_prime_u64(c)) ps.push_back(c);
        c -= 2;
    }
    return ps;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Montgomery arithmetic modulo an odd prime p < 2^62
struct Mont {
    u64 p, pinv_neg, r2;

    explicit Mont(u64 prime) : p(prime) {
        u64 x = p;
        for (int i = 0; i < 6; ++i) x *= 2 - p * x;  // p^{-1} mod 2^64
        pinv_neg = ~x + 1;
        u64 r = static_cast<u64>((u128(1) << 64) % p);
        r2 = static_cast<u64>(u128(r) * r % p);
    }
    u64 redc(u128 t) const {
        u64 m = static_cast<u64>(t) * pinv_neg;
        u64 res = static_cast<u64>((t + u128(m) * p) >> 64);
        return res >= p ? res - p : res;
    }
    u64 mul(u64 a, u64 b) const { return redc(u128(a) * b); }
    u64 to_mont(u64 a) const { return mul(a % p, r2); }
    u64 from_mont(u64 a) const { return redc(a); }
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
};

// char poly of an n x n matrix mod p: Hessenberg reduction by similarity
// transforms, then the standard recurrence on leading principal minors.
// Input entries are plain residues; output coefficients likewise.
std::vector<u64> char_poly_mod(std::vector<std::vector<u64>>& a, u64 p) {
    const int n = static_cast<int>(a.size());
    const Mont mont(p);
    for (auto& row : a)
        for (auto& v : row) v = mont.to_mont(v);

    for (int k = 0; k + 2 < n; ++k) {
        int piv = -1;
        for (int i = k + 1; i < n; ++i)
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != k + 1) {
            std::swap(a[piv], a[k + 1]);
            for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][k + 1]);
        }
        u64 inv = mont.to_mont(invmod(mont.from_mont(a[k + 1][k]), p));
        for (int i = k + 2; i < n; ++i) {
            if (a[i][k] == 0) continue;
            u64 f = mont.mul(a[i][k], inv);
            const u64* src = a[k + 1].data();
            u64* dst = a[i].data();
            for (int j = 0; j < n; ++j) dst[j] = mont.sub(dst[j], mont.mul(f, src[j]));
            for (int j = 0; j < n; ++j) a[j][k + 1] = mont.add(a[j][k + 1], mont.mul(f, a[j][i]));
        }
    }

    // cp[i] = char poly of leading i x i block (Montgomery-domain coefficients)
    const u64 one = mont.to_mont(1);
    std::vector<std::vector<u64>> cp(n + 1);
    cp[0] = {one};
    for (int i = 1; i <= n; ++i) {
        cp[i].assign(i + 1, 0);
        u64 d = a[i - 1][i - 1];
        for (int c = 0; c < i; ++c) {
            cp[i][c + 1] = mont.add(cp[i][c + 1], cp[i - 1][c]);
            cp[i][c] = mont.sub(cp[i][c], mont.mul(d, cp[i - 1][c]));
        }
        u64 t = one;
        for (int j = 1; j < i; ++j) {
            t = mont.mul(t, a[i - j][i - j - 1]);
            u64 f = mont.mul(t, a[i - j - 1][i - 1]);
            if (f == 0) continue;
            for (int c = 0; c <= i - j - 1; ++c)
                cp[i][c] = mont.sub(cp[i][c], mont.mul(f, cp[i - j - 1][c]));
        }
    }
    std::vector<u64> out(n + 1);
    for (int c = 0; c <= n; ++c) out[c] = mont.from_mont(cp[n][c]);
    return out;
}

u64 to_residue(const Int& x, u64 p) {
    Int r = x % p;
    if (r < 0) r += p;
    return r.convert_to<u64>();
}

int msb_bits(const Int& x) {
    if (x == 0) return 0;
    return static_cast<int>(boost::multiprecision::msb(x)) + 1;
}

} // namespace

Int CharPoly::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string CharPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) arr.push_back(it->str());
    return arr.dump();
}

IntMatrix adjacency_matrix(const Graph& g) {
    const int n = g.order();
    IntMatrix a = IntMatrix::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a(u, v) = 1;
    return a;
}

bool is_symmetric(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

CharPoly char_poly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: square matrix required");
    const int n = static_cast<int>(m.rows());
    if (n == 0) return CharPoly{{Int(1)}};

    // Hadamard-type bound: |c_k| <= C(n,k) R^k with R = max row 2-norm
    Int max_row_sq = 1;
    for (int i = 0; i < n; ++i) {
        Int s = 0;
        for (int j = 0; j < n; ++j) s += m(i, j) * m(i, j);
        max_row_sq = std::max(max_row_sq, s);
    }
    long bound_bits = n + static_cast<long>(n) * ((msb_bits(max_row_sq) + 1) / 2 + 1) + 64;
    int num_primes = static_cast<int>(bound_bits / 61 + 1);
    std::vector<u64> primes = make_primes(num_primes);

    // small-entry fast path for the per-prime residue conversion
    bool small = true;
    Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> m64;
    if (std::all_of(m.data(), m.data() + n * n,
                    [](const Int& v) { return msb_bits(abs(v)) < 62; })) {
        m64.resize(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m64(i, j) = m(i, j).convert_to<long long>();
    } else {
        small = false;
    }

    std::vector<Int> crt(n + 1, 0);
    Int mod = 1;
    for (u64 p : primes) {
        std::vector<std::vector<u64>> a(n, std::vector<u64>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (small) {
                    long long v = m64(i, j) % static_cast<long long>(p);
                    a[i][j] = static_cast<u64>(v < 0 ? v + static_cast<long long>(p) : v);
                } else {
                    a[i][j] = to_residue(m(i, j), p);
                }
            }
        std::vector<u64> cp = char_poly_mod(a, p);
        if (mod == 1) {
            for (int c = 0; c <= n; ++c) crt[c] = cp[c];
        } else {
            u64 mp = to_residue(mod, p);
            u64 minv = invmod(mp, p);
            for (int c = 0; c <= n; ++c) {
                u64 cur = to_residue(crt[c], p);
                u64 delta = mulmod((cp[c] + p - cur) % p, minv, p);
                crt[c] += mod * delta;
            }
        }
        mod *= p;
    }
    Int half = mod / 2;
    for (auto& c : crt)
        if (c > half) c -= mod;
    if (crt[n] != 1) throw std::logic_error("char_poly: CRT result not monic (bound too small)");
    return CharPoly{std::move(crt)};
}

CharPoly char_poly(const Graph& g) { return char_poly(adjacency_matrix(g)); }

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
    const int n = static_cast<int>(m.rows());
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            a.row(k).swap(a.row(piv));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

namespace {

// synthetic division by (x - r); returns true and replaces poly by the
// quotient when the remainder vanishes
bool try_deflate(std::vector<Int>& poly, const Int& r) {
    const int deg = static_cast<int>(poly.size()) - 1;
    std::vector<Int> q(deg);
    Int carry = poly[deg];
    for (int i = deg - 1; i >= 0; --i) {
        q[i] = carry;
        carry = poly[i] + r * carry;
    }
    if (carry != 0) return false;
    poly = std::move(q);
    return true;
}

} // namespace

Spectrum spectrum(const IntMatrix& m) {
    if (!is_symmetric(m)) throw std::invalid_argument("spectrum: symmetric matrix required");
    const int n = static_cast<int>(m.rows());
    Spectrum s;
    s.dim = n;
    CharPoly cp = char_poly(m);

    Int radius = 0;
    for (int i = 0; i < n; ++i) {
        Int row = 0;
        for (int j = 0; j < n; ++j) row += abs(m(i, j));
        radius = std::max(radius, row);
    }

    std::vector<Int> poly = cp.coeffs;
    for (Int lam = radius; lam >= -radius && static_cast<int>(poly.size()) > 1; --lam) {
        int mult = 0;
        while (static_cast<int>(poly.size()) > 1 && try_deflate(poly, lam)) ++mult;
        if (mult > 0) s.integer_roots.emplace_back(lam, mult);
    }
    s.remainder = CharPoly{std::move(poly)};

    if (s.remainder.degree() > 0) {
        // companion-matrix roots, reporting only
        const int d = s.remainder.degree();
        bool fits = true;
        for (const auto& c : s.remainder.coeffs)
            if (msb_bits(abs(c)) > 900) fits = false;
        if (fits) {
            Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
            for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
            for (int i = 0; i < d; ++i)
                comp(i, d - 1) = -s.remainder.coeffs[i].convert_to<double>();
            Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
            for (int i = 0; i < d; ++i) s.numeric_roots.push_back(es.eigenvalues()(i).real());
            std::sort(s.numeric_roots.rbegin(), s.numeric_roots.rend());
        }
    }
    return s;
}

Spectrum spectrum(const Graph& g) { return spectrum(adjacency_matrix(g)); }

bool is_cospectral(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    return char_poly(g) == char_poly(h);
}

bool is_psd(const IntMatrix& m) {
    if (!is_symmetric(m)) throw std::invalid_argument("is_psd: symmetric matrix required");
    CharPoly cp = char_poly(m);
    const int n = cp.degree();
    for (int i = 0; i <= n; ++i) {
        Int signed_coeff = ((n - i) % 2 == 0) ? cp.coeffs[i] : -cp.coeffs[i];
        if (signed_coeff < 0) return false;
    }
    return true;
}

bool matrix_identity_check(const IntMatrix& a, const std::vector<Int>& coeffs, const Int& rhs) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix_identity_check: square required");
    if (coeffs.size() != 4) throw std::invalid_argument("matrix_identity_check: need 4 coefficients");
    const int n = static_cast<int>(a.rows());
    if (n == 0) return true;

    Int maxabs = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) maxabs = std::max(maxabs, Int(abs(a(i, j))));
    Int maxc = 0;
    for (const auto& c : coeffs) maxc = std::max(maxc, Int(abs(c)));

    // int64 fast path when n^2 * maxabs^3 * maxc can't overflow
    Int worst = Int(n) * n * maxabs * maxabs * maxabs * maxc * 8;
    if (msb_bits(worst) < 62) {
        using M64 = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
        M64 A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = a(i, j).convert_to<long long>();
        M64 A2 = A * A;
        M64 A3 = A2 * A;
        long long c3 = coeffs[0].convert_to<long long>();
        long long c2 = coeffs[1].convert_to<long long>();
        long long c1 = coeffs[2].convert_to<long long>();
        long long c0 = coeffs[3].convert_to<long long>();
        long long r = rhs.convert_to<long long>();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long lhs = c3 * A3(i, j) + c2 * A2(i, j) + c1 * A(i, j) + (i == j ? c0 : 0);
                if (lhs != r) return false;
            }
        return true;
    }

    // plain loops: Eigen's scalar-promotion probing trips over cpp_int's
    // catch-all converting constructor when given matrix*matrix expressions
    auto mul = [n](const IntMatrix& x, const IntMatrix& y) {
        IntMatrix z = IntMatrix::Zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (x(i, k) == 0) continue;
                for (int j = 0; j < n; ++j) z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    };
    IntMatrix A2 = mul(a, a);
    IntMatrix A3 = mul(A2, a);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int lhs = coeffs[0] * A3(i, j) + coeffs[1] * A2(i, j) + coeffs[2] * a(i, j) +
                      (i == j ? coeffs[3] : Int(0));
            if (lhs != rhs) return false;
        }
    return true;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

CharPoly poly_from_roots(const std::vector<std::pair<Int, int>>& roots) {
    std::vector<Int> acc{Int(1)};
    for (const auto& [r, mult] : roots)
        for (int i = 0; i < mult; ++i) acc = poly_mul(acc, {-r, Int(1)});
    return CharPoly{std::move(acc)};
}

bool poly_divides(const std::vector<Rat>& divisor, const std::vector<Rat>& dividend) {
    if (divisor.empty() || divisor.back() == 0)
        throw std::invalid_argument("poly_divides: zero leading coefficient");
    if (dividend.size() < divisor.size()) return false;
    std::vector<Rat> rem = dividend;
    const int dd = static_cast<int>(divisor.size()) - 1;
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        if (rem[k] == 0) continue;
        Rat f = rem[k] / divisor.back();
        for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= f * divisor[i];
    }
    return std::all_of(rem.begin(), rem.end(), [](const Rat& r) { return r == 0; });
}

std::vector<double> Spectrum::values() const {
    std::vector<double> out;
    for (const auto& [v, m] : integer_roots)
        for (int i = 0; i < m; ++i) out.push_back(v.convert_to<double>());
    out.insert(out.end(), numeric_roots.begin(), numeric_roots.end());
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string Spectrum::to_string() const {
    std::ostringstream ss;
    bool first = true;
    for (const auto& [v, m] : integer_roots) {
        if (!first) ss << " ";
        first = false;
        if (v < 0)
            ss << "(" << v.str() << ")^" << m;
        else
            ss << v.str() << "^" << m;
    }
    if (remainder.degree() > 0) {
        if (!first) ss << " ";
        ss << "| remainder degree " << remainder.degree();
        if (!numeric_roots.empty()) {
            ss << " ~ {";
            for (std::size_t i = 0; i < numeric_roots.size(); ++i)
                ss << (i ? ", " : "") << numeric_roots[i];
            ss << "}";
        }
    }
    return ss.str();
}

std::string Spectrum::to_json() const {
    nlohmann::json j;
    j["dim"] = dim;
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& [v, m] : integer_roots) roots.push_back({v.str(), m});
    j["integer_roots"] = roots;
    nlohmann::json rem = nlohmann::json::array();
    for (auto it = remainder.coeffs.rbegin(); it != remainder.coeffs.rend(); ++it)
        rem.push_back(it->str());
    j["remainder"] = rem;
    j["numeric_roots"] = numeric_roots;
    j["numeric_tol"] = numeric_tol;
    return j.dump();
}

std::vector<double> numeric_eigenvalues(const IntMatrix& m) {
    const int n = static_cast<int>(m.rows());
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = m(i, j).convert_to<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<double> numeric_eigenvalues(const Graph& g) {
    return numeric_eigenvalues(adjacency_matrix(g));
}

} // namespace hs
