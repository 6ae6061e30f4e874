#include "hs/verify.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace hs {

namespace {

using clock_type = std::chrono::steady_clock;

long long elapsed_ms(clock_type::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() -
                                                                 start)
        .count();
}

std::string tparam(int t) {
    return "t=" + std::to_string(t);
}

CheckResult skipped(std::string lemma, int t, std::string why) {
    CheckResult r;
    r.lemma = std::move(lemma);
    r.params = tparam(t);
    r.verdict = Verdict::skip;
    r.note = std::move(why);
    return r;
}

} // namespace

TargetParams TargetParams::make(int t) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    TargetParams p;
    p.t = t;
    p.n = 2 * (t + 1) * (t + 1);
    p.k = 4 * t + 1;
    p.eigs = {{Int(4 * t + 1), 1},
              {Int(2 * t - 1), 2 * t},
              {Int(-1), (t + 1) * (t + 1)},
              {Int(-3), t * t}};
    Int trace = 0, square = 0;
    int count = 0;
    for (auto& [v, m] : p.eigs) {
        count += m;
        trace += v * m;
        square += v * v * m;
    }
    if (count != p.n || trace != 0 || square != Int(p.n) * p.k)
        throw std::logic_error("target parameter invariants violated");
    return p;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skip: return "skip";
        case Verdict::info: return "info";
    }
    return "?";
}

bool VerificationReport::all_passed() const {
    return count(Verdict::fail) == 0;
}

int VerificationReport::count(Verdict v) const {
    int c = 0;
    for (auto& e : entries)
        if (e.verdict == v) ++c;
    return c;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "hs-report/1";
    j["entries"] = nlohmann::ordered_json::array();
    for (auto& e : entries) {
        nlohmann::ordered_json je;
        je["lemma"] = e.lemma;
        je["params"] = e.params;
        je["verdict"] = to_string(e.verdict);
        if (!e.witness.empty()) je["witness"] = e.witness;
        if (!e.note.empty()) je["note"] = e.note;
        je["ms"] = e.ms;
        j["entries"].push_back(std::move(je));
    }
    return j.dump(2) + "\n";
}

void VerificationReport::print_table(std::ostream& os) const {
    std::size_t w = 5;
    for (auto& e : entries) w = std::max(w, e.lemma.size());
    for (auto& e : entries) {
        os << std::left << std::setw(static_cast<int>(w) + 2) << e.lemma
           << std::setw(6) << to_string(e.verdict) << std::setw(10) << e.params
           << std::right << std::setw(7) << e.ms << " ms";
        if (!e.note.empty()) os << "  " << e.note;
        if (!e.witness.empty()) os << "  [" << e.witness << "]";
        os << '\n';
    }
    os << entries.size() << " checks: " << count(Verdict::pass) << " pass, "
       << count(Verdict::fail) << " fail, " << count(Verdict::skip) << " skip, "
       << count(Verdict::info) << " info\n";
}

Spectrum target_spectrum(int t) {
    TargetParams p = TargetParams::make(t);
    Spectrum s;
    s.dim = p.n;
    s.integer_roots = p.eigs;
    s.remainder = CharPoly{{Int(1)}};
    return s;
}

CharPoly target_char_poly(int t) {
    return poly_from_roots(TargetParams::make(t).eigs);
}

CheckResult verify_spectrum(const Graph& g, int t) {
    auto start = clock_type::now();
    CheckResult r;
    r.lemma = "spectrum";
    r.params = tparam(t);
    Spectrum got = spectrum(g);
    Spectrum want = target_spectrum(t);
    if (got == want) {
        r.verdict = Verdict::pass;
        r.note = got.to_string();
    } else {
        r.verdict = Verdict::fail;
        r.witness = "expected " + want.to_string() + ", got " + got.to_string();
    }
    r.ms = elapsed_ms(start);
    return r;
}

CheckResult verify_hoffman_polynomial(const Graph& g, int t) {
    auto start = clock_type::now();
    CheckResult r;
    r.lemma = "hoffman-polynomial";
    r.params = tparam(t);
    IntMatrix a = adjacency_matrix(g);
    bool ok = matrix_identity_check(
        a, {Int(1), Int(5 - 2 * t), Int(7 - 8 * t), Int(3 - 6 * t)}, Int(16 * t + 8));
    r.verdict = ok ? Verdict::pass : Verdict::fail;
    if (ok)
        r.note = "entrywise identity, rhs (16t+8)J";
    else
        r.witness = "identity fails on some entry";
    r.ms = elapsed_ms(start);
    return r;
}

CheckResult verify_walk_counts(const Graph& g, int t) {
    auto start = clock_type::now();
    CheckResult r;
    r.lemma = "walk-counts";
    r.params = tparam(t);
    r.verdict = Verdict::pass;
    const int n = g.order();
    const long long diag = 8LL * t * t + 4 * t;
    for (int x = 0; x < n && r.verdict == Verdict::pass; ++x) {
        if (diagonal_walk3(g, x) != diag) {
            r.verdict = Verdict::fail;
            r.witness = "diagonal at vertex " + std::to_string(x);
            break;
        }
        for (int y = x + 1; y < n; ++y) {
            VertexPairStats s = pair_stats(g, x, y);
            long long want =
                s.adjacent ? 24LL * t + 1 - (5LL - 2 * t) * s.common_neighbors
                           : 16LL * t + 8 - (5LL - 2 * t) * s.common_neighbors;
            if (s.walk3 != want) {
                r.verdict = Verdict::fail;
                r.witness = "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                            "): walk3=" + std::to_string(s.walk3) + " expected " +
                            std::to_string(want);
                break;
            }
        }
    }
    if (r.verdict == Verdict::pass)
        r.note = "diagonal " + std::to_string(diag) + ", all pairs exact";
    r.ms = elapsed_ms(start);
    return r;
}

std::pair<int, int> nonadjacent_mu_range(const Graph& g) {
    int lo = -1, hi = -1;
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y) {
            if (g.adjacent(x, y)) continue;
            int mu = g.common_neighbors(x, y);
            if (lo == -1 || mu < lo) lo = mu;
            if (mu > hi) hi = mu;
        }
    return {lo, hi};
}

CheckResult verify_mu_bound(const Graph& g, int t) {
    auto start = clock_type::now();
    CheckResult r;
    r.lemma = "mu-bound";
    r.params = tparam(t);
    r.verdict = Verdict::pass;

    // M = (A-(2t-1)I)(A+I) = A^2 - (2t-2)A - (2t-1)I, built from neighbor
    // counts instead of a cubic bigint matrix product
    const int n = g.order();
    IntMatrix m(n, n);
    for (int x = 0; x < n; ++x) {
        m(x, x) = g.degree(x) - (2 * t - 1);
        for (int y = x + 1; y < n; ++y) {
            Int v = g.common_neighbors(x, y);
            if (g.adjacent(x, y)) v -= 2 * t - 2;
            m(x, y) = m(y, x) = v;
        }
    }
    const Int dg = 2 * t + 2;
    for (int x = 0; x < n; ++x)
        if (m(x, x) != dg) {
            r.verdict = Verdict::fail;
            r.witness = "diagonal of M at vertex " + std::to_string(x);
        }
    for (int x = 0; x < n && r.verdict == Verdict::pass; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            Int mu = m(x, y);
            if (mu != g.common_neighbors(x, y) ||
                dg * dg - mu * mu < 0) {  // 2x2 principal minor
                r.verdict = Verdict::fail;
                r.witness = "non-adjacent pair (" + std::to_string(x) + ", " +
                            std::to_string(y) + "), mu=" + mu.str();
                break;
            }
        }
    if (r.verdict == Verdict::pass && !is_psd(m)) {
        r.verdict = Verdict::fail;
        r.witness = "M = (A-(2t-1)I)(A+I) not PSD";
    }
    if (r.verdict == Verdict::pass) {
        auto [lo, hi] = nonadjacent_mu_range(g);
        r.note = "M psd, diagonal 2t+2, mu range [" + std::to_string(lo) + ", " +
                 std::to_string(hi) + "] <= " + std::to_string(2 * t + 2);
    }
    r.ms = elapsed_ms(start);
    return r;
}

IntMatrix M1_matrix(long long t, long long lambda, long long mu) {
    IntMatrix m(3, 3);
    m << Int(2 * t + 2), Int(4 * t + lambda - mu), Int(mu),
         Int(4 * t + lambda - mu), Int(2 * t + 2), Int(-2 * (t - 1) + lambda),
         Int(mu), Int(-2 * (t - 1) + lambda), Int(2 * t + 2);
    return m;
}

IntMatrix M2_matrix(long long t, long long lambda, long long mu) {
    IntMatrix m = M1_matrix(t, lambda, mu);
    m(0, 1) = m(1, 0) = Int(4 * t + 1 + lambda - mu);
    return m;
}

Int det_M1(long long t, long long lambda, long long mu) {
    Int T = t, L = lambda, U = mu;
    return -32 * T * T * T - 8 * L * T * T +
           ((8 * L + 32) * U - 4 * L * L - 16 * L + 32) * T -
           (2 * L + 8) * U * U + (2 * L * L + 8 * L) * U - 4 * L * L - 8 * L;
}

Int det_M2(long long t, long long lambda, long long mu) {
    Int T = t, L = lambda, U = mu;
    return -32 * T * T * T - (8 * L + 16) * T * T +
           ((8 * L + 32) * U - 4 * L * L - 20 * L + 14) * T -
           (2 * L + 8) * U * U + (2 * L * L + 10 * L + 8) * U - 4 * L * L -
           12 * L - 2;
}

CheckResult sweep_determinants(int t_max) {
    auto start = clock_type::now();
    CheckResult r;
    r.lemma = "determinant-sweep";
    r.params = "t=2.." + std::to_string(t_max);
    r.verdict = Verdict::pass;
    long long points = 0;
    for (long long t = 2; t <= t_max && r.verdict == Verdict::pass; ++t)
        for (long long lambda = 0; lambda <= 4; ++lambda) {
            for (long long mu = 2 * t - 2 + lambda; mu <= 2 * t + lambda / 2; ++mu) {
                Int d = det_M1(t, lambda, mu);
                if (d >= 0 || d != det(M1_matrix(t, lambda, mu))) {
                    r.verdict = Verdict::fail;
                    r.witness = "M1 at (t,lambda,mu)=(" + std::to_string(t) + "," +
                                std::to_string(lambda) + "," + std::to_string(mu) + ")";
                    break;
                }
                ++points;
            }
            for (long long mu = 2 * t - 1 + lambda; mu <= 2 * t + (1 + lambda) / 2;
                 ++mu) {
                Int d = det_M2(t, lambda, mu);
                if (d >= 0 || d != det(M2_matrix(t, lambda, mu))) {
                    r.verdict = Verdict::fail;
                    r.witness = "M2 at (t,lambda,mu)=(" + std::to_string(t) + "," +
                                std::to_string(lambda) + "," + std::to_string(mu) + ")";
                    break;
                }
                ++points;
            }
        }
    if (r.verdict == Verdict::pass)
        r.note = std::to_string(points) + " points negative, dual oracle agrees";
    r.ms = elapsed_ms(start);
    return r;
}

CheckResult verify_clique_bounds(const Graph& g, int t) {
    auto start = clock_type::now();
    CheckResult r;
    r.lemma = "clique-bounds";
    r.params = tparam(t);
    r.verdict = Verdict::pass;

    // (a) + (b): maximum cliques have order 2t+2 and every outside vertex
    // sees exactly two clique vertices
    auto cliques = all_maximum_cliques(g);
    const int q = static_cast<int>(cliques.front().size());
    if (q != 2 * t + 2) {
        r.verdict = Verdict::fail;
        r.witness = "max clique order " + std::to_string(q);
    }
    for (const auto& c : cliques) {
        if (r.verdict != Verdict::pass) break;
        std::vector<bool> in(g.order(), false);
        for (int v : c) in[v] = true;
        for (int v = 0; v < g.order() && r.verdict == Verdict::pass; ++v) {
            if (in[v]) continue;
            int d = 0;
            for (int u : c)
                if (g.adjacent(v, u)) ++d;
            if (d != 2) {
                r.verdict = Verdict::fail;
                r.witness = "vertex " + std::to_string(v) + " has " +
                            std::to_string(d) + " neighbors in a maximum clique";
            }
        }
    }

    // (c) order 2t+4 is impossible: the two-class quotient's second eigenvalue
    // q-2+eps - (4t+1-(q-2+eps)) q / (2(t+1)^2 - q) would exceed 2t-1
    if (r.verdict == Verdict::pass) {
        const Int n = 2 * (t + 1) * (t + 1);
        const Rat qq = 2 * t + 4;
        for (const Rat& eps : {Rat(0), Rat(1)}) {
            Rat inner = qq - 2 + eps;
            Rat second = inner - (Rat(4 * t + 1) - inner) * qq / (Rat(n) - qq);
            if (!(second > Rat(2 * t - 1))) {
                r.verdict = Verdict::fail;
                r.witness = "quotient eigenvalue at q=2t+4 does not contradict";
                break;
            }
        }
    }

    // (d) order 2t+3 fails the double count 4(t+1)^2 >= (2t+2)(2t+1)+(2t+3)
    if (r.verdict == Verdict::pass) {
        long long lhs = 4LL * (t + 1) * (t + 1);
        long long rhs = (2LL * t + 2) * (2 * t + 1) + (2 * t + 3);
        if (lhs >= rhs) {
            r.verdict = Verdict::fail;
            r.witness = "double count does not contradict: " + std::to_string(lhs) +
                        " >= " + std::to_string(rhs);
        }
    }

    if (r.verdict == Verdict::pass)
        r.note = std::to_string(cliques.size()) + " maximum cliques of order " +
                 std::to_string(q) + "; outside valency 2; orders 2t+3, 2t+4 refuted";
    r.ms = elapsed_ms(start);
    return r;
}

std::vector<std::array<long long, 3>> g5_feasible_triples(int t) {
    std::vector<std::array<long long, 3>> out;
    const long long sum = 4LL * t + 4, bound = 8LL * t * t + 10;
    for (long long b1 = 1; b1 <= 2 * t + 2; ++b1)
        for (long long b2 = 1; b2 <= std::min(b1, 2LL * t + 1); ++b2) {
            long long b3 = sum - b1 - b2;
            if (b3 < 1 || b3 > b2) continue;
            long long v = (b1 - 2) * (b1 - 2) + b2 * b2 + (b3 + 2) * (b3 + 2);
            if (v >= bound) out.push_back({b1, b2, b3});
        }
    std::sort(out.begin(), out.end());
    return out;
}

CheckResult verify_g5_orders(int t) {
    auto start = clock_type::now();
    CheckResult r;
    r.lemma = "g5-orders";
    r.params = tparam(t);
    auto got = g5_feasible_triples(t);
    std::vector<std::array<long long, 3>> want = {
        {2LL * t + 1, 2LL * t + 1, 2},
        {2LL * t + 2, 2LL * t, 2},
        {2LL * t + 2, 2LL * t + 1, 1}};
    std::sort(want.begin(), want.end());
    auto show = [](const std::vector<std::array<long long, 3>>& v) {
        std::ostringstream os;
        for (auto& a : v) os << "(" << a[0] << "," << a[1] << "," << a[2] << ") ";
        return os.str();
    };
    if (t <= 4) {
        r.verdict = Verdict::info;
        r.note = "hypothesis t>4 not met; feasible set " + show(got);
    } else if (got == want) {
        r.verdict = Verdict::pass;
        r.note = "exactly " + show(got);
    } else {
        r.verdict = Verdict::fail;
        r.witness = "feasible set " + show(got);
    }
    r.ms = elapsed_ms(start);
    return r;
}

std::vector<CountingSolution> enumerate_counting_cases(int t) {
    std::vector<CountingSolution> out;
    const long long rhs = (2LL * t + 2) * (2 * t + 2), mod = 2 * t + 1;
    for (long long q2 = 0; q2 <= 2 * t + 2; ++q2)
        for (long long q1 = 0; (2 * t + 2) * q2 + (2 * t + 1) * q1 <= rhs; ++q1) {
            long long rest = rhs - (2 * t + 2) * q2 - (2 * t + 1) * q1;
            if (rest % (2 * t) != 0) continue;
            long long q0 = rest / (2 * t);
            if (((q2 - q0) % mod + mod) % mod != 1 % mod) continue;
            if (q0 > q2 + 2) continue;
            // an order-2t quasi-clique forces q_{2t+2} >= 2t, while here
            // q_{2t+2} = q_{2t}+1 <= t+2 < 2t once t > 2
            if (q0 > 0 && t > 2) continue;
            CountingSolution s;
            s.q_2t = q0;
            s.q_2t1 = q1;
            s.q_2t2 = q2;
            s.n4 = 2LL * t * q0;
            if (q1 == 0) {
                s.n3 = 0;
                s.n5 = 0;
            }
            if (q0 == 0 && q2 == 1) {
                // types 1 and 2 need two distinct order-(2t+2) quasi-cliques
                s.n1 = 0;
                s.n2 = 0;
                s.n3 = 2LL * t + 2;
                s.n5 = 2LL * t * (t + 1);
            }
            if (q0 == 0 && q1 == 0 && q2 == 2 * t + 2) {
                s.n3 = 0;
                s.n5 = 0;
            }
            out.push_back(s);
        }
    std::sort(out.begin(), out.end(), [](const CountingSolution& a,
                                         const CountingSolution& b) {
        return std::tie(a.q_2t, a.q_2t1, a.q_2t2) < std::tie(b.q_2t, b.q_2t1, b.q_2t2);
    });
    return out;
}

CheckResult verify_counting_cases(int t) {
    auto start = clock_type::now();
    CheckResult r;
    r.lemma = "counting-cases";
    r.params = tparam(t);
    auto sols = enumerate_counting_cases(t);
    auto show = [](const std::vector<CountingSolution>& v) {
        std::ostringstream os;
        for (auto& s : v)
            os << "(" << s.q_2t << "," << s.q_2t1 << "," << s.q_2t2 << ") ";
        return os.str();
    };
    bool shape_ok = sols.size() == 2 && sols[0].q_2t == 0 && sols[0].q_2t1 == 0 &&
                    sols[0].q_2t2 == 2 * t + 2 && sols[1].q_2t == 0 &&
                    sols[1].q_2t1 == 2 * t + 2 && sols[1].q_2t2 == 1;
    bool case2_ok = shape_ok && sols[1].n1 == 0 && sols[1].n2 == 0 &&
                    sols[1].n3 == 2LL * t + 2 && sols[1].n4 == 0 &&
                    sols[1].n5 == 2LL * t * (t + 1);
    // totals must hit 2(t+1)^2 whenever all five counts are determined
    for (auto& s : sols) {
        if (!(s.n1 && s.n2 && s.n3 && s.n4 && s.n5)) continue;
        if (*s.n1 + *s.n2 + *s.n3 + *s.n4 + *s.n5 != 2LL * (t + 1) * (t + 1))
            case2_ok = false;
    }
    if (t <= 4) {
        r.verdict = Verdict::info;
        r.note = "hypothesis t>4 not met; solutions " + show(sols);
    } else if (shape_ok && case2_ok) {
        r.verdict = Verdict::pass;
        r.note = "exactly " + show(sols) + "with case-2 counts (0,0,2t+2,0,2t(t+1))";
    } else {
        r.verdict = Verdict::fail;
        r.witness = "solutions " + show(sols);
    }
    r.ms = elapsed_ms(start);
    return r;
}

IntMatrix case2_quotient(int t) {
    IntMatrix b(4, 4);
    b << Int(1), Int(2 * t), Int(2 * t), Int(0),
         Int(2), Int(2 * t - 1), Int(2), Int(2 * t - 2),
         Int(1), Int(1), Int(2 * t + 1), Int(2 * t - 2),
         Int(0), Int(2), Int(4), Int(4 * t - 5);
    return b;
}

Graph g0_graph(int t) {
    // Omega = {x_1..x_{t+1}, x_1'..x_{t+1}'}; Omega^2 = 2-subsets of Omega
    // minus the t+1 partner pairs {x_i, x_i'}
    const int m = t + 1, om = 2 * m;
    auto name = [&](int a) {
        return (a < m ? "x" + std::to_string(a + 1)
                      : "x" + std::to_string(a - m + 1) + "'");
    };
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> pair_id;
    for (int a = 0; a < om; ++a)
        for (int b = a + 1; b < om; ++b) {
            if (b == a + m) continue;  // partner pair, excluded
            pair_id[{a, b}] = om + static_cast<int>(pairs.size());
            pairs.emplace_back(a, b);
        }
    Graph g(om + static_cast<int>(pairs.size()));
    for (int a = 0; a < om; ++a) {
        g.set_label(a, name(a));
        for (int b = a + 1; b < om; ++b) g.add_edge(a, b);
    }
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
        auto [a, b] = pairs[i];
        g.set_label(om + i, name(a) + name(b));
        g.add_edge(om + i, a);
        g.add_edge(om + i, b);
        for (int j = i + 1; j < static_cast<int>(pairs.size()); ++j) {
            auto [c, d] = pairs[j];
            if (a == c || a == d || b == c || b == d) g.add_edge(om + i, om + j);
        }
    }
    return g;
}

Partition g0_partition(int t) {
    const int m = t + 1, om = 2 * m;
    Graph g = g0_graph(t);
    Partition p;
    p.classes.resize(4);
    auto touches_x1 = [](const std::string& s) {
        // label mentions x1 or x1' (but not x10, x11, ...)
        std::size_t i = 0;
        while (i < s.size()) {
            if (s[i] != 'x') { ++i; continue; }
            std::size_t j = ++i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (s.compare(i, j - i, "1") == 0) return true;
            i = j;
        }
        return false;
    };
    for (int v = 0; v < g.order(); ++v) {
        const std::string& s = g.label(v);
        if (v < om)
            p.classes[touches_x1(s) ? 0 : 1].push_back(v);
        else
            p.classes[touches_x1(s) ? 2 : 3].push_back(v);
    }
    return p;
}

CheckResult refute_case2(int t) {
    auto start = clock_type::now();
    CheckResult r;
    r.lemma = "case2-refutation";
    r.params = tparam(t);
    r.verdict = Verdict::pass;

    // (a) alpha forcing: the third-power walk count 4t^2+14t+1 leaves a
    // common-neighbor budget of 8t across 2t pairs with mu in [3,4], so every
    // mu is 4; with mu = 3 throughout, the identity misses by exactly 2t
    {
        long long lhs = 4LL * t * t + 14 * t + 1;
        long long base = (4LL * t + 1) + 2LL * t * (2 * t + 1);
        if (lhs - base != 8LL * t)
            r.verdict = Verdict::fail, r.witness = "mu budget mismatch";
        else if (base + 3LL * 2 * t != lhs - 2 * t)
            r.verdict = Verdict::fail, r.witness = "alpha=2t shortfall is not 2t";
    }

    // (b)+(c): quotient at alpha = 2t+1 factors as
    // (x-(4t+1))(x-(2t-1))(x^2-(2t-4)x+(5-4t))
    if (r.verdict == Verdict::pass) {
        CharPoly cp = char_poly(case2_quotient(t));
        std::vector<Int> quad = {Int(5 - 4 * t), Int(-(2 * t - 4)), Int(1)};
        std::vector<Int> expect = poly_mul(
            poly_mul({Int(-(4 * t + 1)), Int(1)}, {Int(-(2 * t - 1)), Int(1)}), quad);
        if (cp.coeffs != expect) {
            r.verdict = Verdict::fail;
            r.witness = "quotient characteristic polynomial " + cp.to_json();
        } else {
            // (d) roots t-2 +- sqrt(t^2-1) are irrational: t^2-1 sits strictly
            // between (t-1)^2 and t^2 for t >= 2, so the quadratic is
            // irreducible and cannot divide a polynomial that splits over Z
            Int disc = Int(t) * t - 1;
            Int s = boost::multiprecision::sqrt(disc);
            if (s * s == disc || !(Int(t - 1) * (t - 1) < disc && disc < Int(t) * t)) {
                r.verdict = Verdict::fail;
                r.witness = "t^2-1 is a perfect square at t=" + std::to_string(t);
            }
            // direct division cross-check where the target polynomial is small
            if (r.verdict == Verdict::pass && t <= 8) {
                std::vector<Rat> qd(quad.begin(), quad.end());
                CharPoly target = target_char_poly(t);
                std::vector<Rat> tg(target.coeffs.begin(), target.coeffs.end());
                if (poly_divides(qd, tg)) {
                    r.verdict = Verdict::fail;
                    r.witness = "quadratic factor divides the target polynomial";
                }
            }
        }
    }

    // ground the quotient in the explicit spanning-subgraph model: the same
    // partition is equitable there, rows 1-2 agree, and each class-3/4 vertex
    // is one edge short of full valency
    if (r.verdict == Verdict::pass && t >= 2 && t <= 12) {
        Graph g0 = g0_graph(t);
        Partition p = g0_partition(t);
        QuotientMatrix q = quotient_matrix(g0, p);
        bool ok = q.equitable;
        IntMatrix expect(4, 4);
        expect << Int(1), Int(2 * t), Int(2 * t), Int(0),
                  Int(2), Int(2 * t - 1), Int(2), Int(2 * t - 2),
                  Int(1), Int(1), Int(2 * t), Int(2 * t - 2),
                  Int(0), Int(2), Int(4), Int(4 * t - 6);
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = 0; j < 4 && ok; ++j)
                ok = q.entry(i, j) == Rat(expect(i, j));
        // rows 1-2 reach full valency 4t+1; rows 3-4 stop one edge short
        for (int i = 0; i < 4 && ok; ++i) {
            Rat sum = 0;
            for (int j = 0; j < 4; ++j) sum += q.entry(i, j);
            ok = sum == Rat(4 * t + 1 - (i >= 2 ? 1 : 0));
        }
        if (!ok) {
            r.verdict = Verdict::fail;
            r.witness = "spanning-subgraph model quotient mismatch";
        } else {
            r.note = "roots t-2+-sqrt(t^2-1) irrational; model quotient grounded";
        }
    } else if (r.verdict == Verdict::pass) {
        r.note = "roots t-2+-sqrt(t^2-1) irrational";
    }
    r.ms = elapsed_ms(start);
    return r;
}

Graph shrikhande_graph() {
    Graph g(16);
    auto id = [](int i, int j) { return ((i & 3) << 2) | (j & 3); };
    const int diff[6][2] = {{0, 1}, {0, 3}, {1, 0}, {3, 0}, {1, 1}, {3, 3}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (auto& d : diff) {
                int u = id(i, j), v = id(i + d[0], j + d[1]);
                if (u < v) g.add_edge(u, v);
            }
    return g;
}

CheckResult verify_case1(const Graph& g, int t) {
    auto start = clock_type::now();
    CheckResult r;
    r.lemma = "case1-pipeline";
    r.params = tparam(t);
    r.verdict = Verdict::pass;

    // (a) twin classes: all of size 2, each pair adjacent
    Partition tw = twin_classes(g);
    for (auto& c : tw.classes) {
        if (c.size() != 2 || !g.adjacent(c[0], c[1])) {
            r.verdict = Verdict::fail;
            r.witness = "twin class of size " + std::to_string(c.size()) +
                        " at vertex " + std::to_string(c[0]);
            break;
        }
    }

    // (b) collapse twins
    Graph quotient;
    if (r.verdict == Verdict::pass) {
        try {
            quotient = quotient_by_twins(g, 2);
        } catch (const std::exception& e) {
            r.verdict = Verdict::fail;
            r.witness = std::string("twin quotient failed: ") + e.what();
        }
    }

    // (c) quotient spectrum {(2t)^1, (t-1)^{2t}, (-2)^{t^2}}
    if (r.verdict == Verdict::pass) {
        Spectrum want;
        want.dim = (t + 1) * (t + 1);
        want.integer_roots = {{Int(2 * t), 1}, {Int(t - 1), 2 * t}, {Int(-2), t * t}};
        want.remainder = CharPoly{{Int(1)}};
        Spectrum got = spectrum(quotient);
        if (!(got == want)) {
            r.verdict = Verdict::fail;
            r.witness = "quotient spectrum " + got.to_string();
        }
    }

    // (d) strong regularity ((t+1)^2, 2t, t-1, 2) by direct census
    if (r.verdict == Verdict::pass) {
        const int n = quotient.order();
        bool ok = n == (t + 1) * (t + 1);
        for (int v = 0; v < n && ok; ++v) ok = quotient.degree(v) == 2 * t;
        for (int x = 0; x < n && ok; ++x)
            for (int y = x + 1; y < n && ok; ++y) {
                int c = quotient.common_neighbors(x, y);
                ok = c == (quotient.adjacent(x, y) ? t - 1 : 2);
            }
        if (!ok) {
            r.verdict = Verdict::fail;
            r.witness = "quotient is not srg((t+1)^2, 2t, t-1, 2)";
        }
    }

    // (e) identify the grid; at t=3 this is what separates the grid from the
    // other graph with the same srg parameters
    if (r.verdict == Verdict::pass) {
        if (!is_isomorphic(quotient, build_grid(t + 1, t + 1))) {
            r.verdict = Verdict::fail;
            r.witness = "quotient satisfies the srg census but is not the grid";
        }
    }

    if (r.verdict == Verdict::pass) {
        r.note = "twins collapse to the (t+1)x(t+1) grid";
        if (t <= 4) r.note += " (report-only: proposition assumes t>4)";
    }
    r.ms = elapsed_ms(start);
    return r;
}

Partition twin_pair_partition(const Graph& g, int vertex) {
    Partition tw = twin_classes(g);
    std::vector<int> cls = tw.class_of(g.order());
    Partition p;
    p.classes.resize(3);
    int mine = cls[vertex];
    for (int v = 0; v < g.order(); ++v) {
        if (cls[v] == mine)
            p.classes[0].push_back(v);
        else if (g.adjacent(v, vertex))
            p.classes[1].push_back(v);
        else
            p.classes[2].push_back(v);
    }
    return p;
}

CheckResult verify_quotient_divisibility(const Graph& g, int t) {
    auto start = clock_type::now();
    CheckResult r;
    r.lemma = "twin-quotient-divides";
    r.params = tparam(t);
    r.verdict = Verdict::pass;

    Partition p = twin_pair_partition(g);
    QuotientMatrix q = quotient_matrix(g, p);
    IntMatrix expect(3, 3);
    expect << Int(1), Int(4 * t), Int(0),
              Int(2), Int(2 * t - 1), Int(2 * t),
              Int(0), Int(4), Int(4 * t - 3);
    bool ok = q.equitable;
    for (int i = 0; i < 3 && ok; ++i)
        for (int j = 0; j < 3 && ok; ++j) ok = q.entry(i, j) == Rat(expect(i, j));
    if (!ok) {
        r.verdict = Verdict::fail;
        r.witness = "partition quotient differs from [[1,4t,0],[2,2t-1,2t],[0,4,4t-3]]";
    } else {
        // quotient spectrum {4t+1, 2t-1, -3} and exact divisibility
        CharPoly qcp = char_poly(expect);
        CharPoly want = poly_from_roots(
            {{Int(4 * t + 1), 1}, {Int(2 * t - 1), 1}, {Int(-3), 1}});
        if (!(qcp == want) || !charpoly_divides(q, target_char_poly(t))) {
            r.verdict = Verdict::fail;
            r.witness = "quotient polynomial does not divide the target";
        } else {
            r.note = "equitable; eigenvalues {4t+1, 2t-1, -3} divide the spectrum";
        }
    }
    r.ms = elapsed_ms(start);
    return r;
}

CheckResult brute_force_ds_t1() {
    auto start = clock_type::now();
    CheckResult r;
    r.lemma = "oracle-t1";
    r.params = "t=1";

    // 5-regular graphs on 8 vertices are complements of 2-regular ones, i.e.
    // of disjoint cycle covers of 8 vertices
    std::vector<std::pair<std::string, Graph>> candidates;
    candidates.emplace_back("complement(C8)", complement(cycle_graph(8)));
    candidates.emplace_back(
        "complement(C5+C3)",
        complement(disjoint_union({cycle_graph(5), cycle_graph(3)})));
    candidates.emplace_back(
        "complement(C4+C4)",
        complement(disjoint_union({cycle_graph(4), cycle_graph(4)})));

    Spectrum want = target_spectrum(1);
    std::vector<std::string> matches;
    bool iso_ok = true;
    Graph target = build_clique_extension(build_grid(2, 2), 2);
    for (auto& [name, g] : candidates) {
        if (spectrum(g) == want) {
            matches.push_back(name);
            iso_ok = iso_ok && is_isomorphic(g, target);
        }
    }
    if (matches.size() == 1 && iso_ok) {
        r.verdict = Verdict::pass;
        r.note = "unique cospectral graph " + matches[0] +
                 ", isomorphic to the 2-clique extension of the 2x2 grid";
    } else {
        r.verdict = Verdict::fail;
        std::ostringstream os;
        os << matches.size() << " cospectral candidates:";
        for (auto& m : matches) os << ' ' << m;
        r.witness = os.str();
    }
    r.ms = elapsed_ms(start);
    return r;
}

VerificationReport verify_all(int t, const Graph* candidate, int sweep_max) {
    if (t < 2) throw std::invalid_argument("verify_all requires t >= 2");
    VerificationReport rep;
    Graph g = candidate ? *candidate
                        : build_clique_extension(build_grid(t + 1, t + 1), 2);

    CheckResult spec = verify_spectrum(g, t);
    rep.entries.push_back(spec);
    const bool cospectral = spec.verdict == Verdict::pass;
    const char* why = "candidate is not cospectral with the target";

    rep.entries.push_back(cospectral ? verify_hoffman_polynomial(g, t)
                                     : skipped("hoffman-polynomial", t, why));
    rep.entries.push_back(cospectral ? verify_walk_counts(g, t)
                                     : skipped("walk-counts", t, why));
    rep.entries.push_back(cospectral ? verify_mu_bound(g, t)
                                     : skipped("mu-bound", t, why));
    rep.entries.push_back(sweep_determinants(sweep_max));
    rep.entries.push_back(cospectral ? verify_clique_bounds(g, t)
                                     : skipped("clique-bounds", t, why));
    rep.entries.push_back(verify_g5_orders(t));
    rep.entries.push_back(verify_counting_cases(t));
    rep.entries.push_back(refute_case2(t));
    rep.entries.push_back(cospectral ? verify_case1(g, t)
                                     : skipped("case1-pipeline", t, why));
    rep.entries.push_back(cospectral ? verify_quotient_divisibility(g, t)
                                     : skipped("twin-quotient-divides", t, why));
    return rep;
}

} // namespace hs
