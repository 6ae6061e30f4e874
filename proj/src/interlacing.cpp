#include "hs/interlacing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace hs {

RatMatrix QuotientMatrix::entries() const {
    const int m = dim();
    RatMatrix out(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out(i, j) = entry(i, j);
    return out;
}

std::vector<Rat> QuotientMatrix::char_poly_rational() const {
    // clear denominators: with D = lcm of class sizes and N = D * B integer,
    // char_B(x) = D^{-m} char_N(D x)
    const int m = dim();
    Int d = 1;
    for (const auto& s : class_sizes) d = boost::multiprecision::lcm(d, s);
    IntMatrix scaled(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) scaled(i, j) = block_sums(i, j) * (d / class_sizes[i]);
    CharPoly cn = char_poly(scaled);
    std::vector<Rat> out(m + 1);
    Int dpow = 1;  // D^{m-k}
    for (int k = m; k >= 0; --k) {
        out[k] = Rat(cn.coeffs[k], dpow);
        dpow *= d;
    }
    return out;
}

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
    if (!p.valid_for(g.order()))
        throw std::invalid_argument("quotient_matrix: not a partition of V(g)");
    const int m = p.num_classes();
    QuotientMatrix q;
    q.block_sums = IntMatrix::Zero(m, m);
    q.class_sizes.reserve(m);
    for (const auto& cls : p.classes) q.class_sizes.emplace_back(cls.size());
    std::vector<int> cls_of = p.class_of(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) q.block_sums(cls_of[u], cls_of[v]) += 1;
    q.equitable = is_equitable(g, p);
    return q;
}

bool is_equitable(const Graph& g, const Partition& p) {
    if (!p.valid_for(g.order()))
        throw std::invalid_argument("is_equitable: not a partition of V(g)");
    const int m = p.num_classes();
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            int expect = -1;
            for (int u : p.classes[i]) {
                int cnt = 0;
                for (int v : p.classes[j]) cnt += g.adjacent(u, v) ? 1 : 0;
                if (expect < 0)
                    expect = cnt;
                else if (cnt != expect)
                    return false;
            }
        }
    }
    return true;
}

namespace {

struct EigVal {
    bool exact;
    Int val;       // when exact
    double approx;
};

std::vector<EigVal> expand(const Spectrum& s) {
    std::vector<EigVal> out;
    for (const auto& [v, m] : s.integer_roots)
        for (int i = 0; i < m; ++i) out.push_back({true, v, v.convert_to<double>()});
    for (double r : s.numeric_roots) out.push_back({false, Int(0), r});
    if (static_cast<int>(out.size()) != s.dim)
        throw std::invalid_argument("interlacing: spectrum has unresolved remainder roots");
    std::sort(out.begin(), out.end(), [](const EigVal& a, const EigVal& b) {
        if (a.exact && b.exact) return a.val > b.val;
        return a.approx > b.approx;
    });
    return out;
}

bool ge(const EigVal& a, const EigVal& b, double tol) {
    if (a.exact && b.exact) return a.val >= b.val;
    return a.approx >= b.approx - tol;
}

bool eq(const EigVal& a, const EigVal& b, double tol) {
    if (a.exact && b.exact) return a.val == b.val;
    return std::abs(a.approx - b.approx) <= tol;
}

} // namespace

bool check_interlacing(const Spectrum& outer, const Spectrum& inner, double tol) {
    if (inner.dim > outer.dim)
        throw std::invalid_argument("check_interlacing: inner dimension exceeds outer");
    auto lam = expand(outer);
    auto mu = expand(inner);
    const int n = outer.dim, m = inner.dim;
    for (int i = 0; i < m; ++i) {
        if (!ge(lam[i], mu[i], tol)) return false;
        if (!ge(mu[i], lam[n - m + i], tol)) return false;
    }
    return true;
}

bool is_tight_interlacing(const Spectrum& outer, const Spectrum& inner, double tol) {
    if (inner.dim > outer.dim)
        throw std::invalid_argument("is_tight_interlacing: inner dimension exceeds outer");
    auto lam = expand(outer);
    auto mu = expand(inner);
    const int n = outer.dim, m = inner.dim;
    for (int j = 0; j <= m; ++j) {
        bool ok = true;
        for (int i = 0; i < j && ok; ++i) ok = eq(lam[i], mu[i], tol);
        for (int i = j; i < m && ok; ++i) ok = eq(mu[i], lam[n - m + i], tol);
        if (ok) return true;
    }
    return false;
}

bool charpoly_divides(const QuotientMatrix& b, const IntMatrix& a) {
    return charpoly_divides(b, char_poly(a));
}

bool charpoly_divides(const QuotientMatrix& b, const CharPoly& a) {
    std::vector<Rat> divisor = b.char_poly_rational();
    std::vector<Rat> dividend(a.coeffs.begin(), a.coeffs.end());
    return poly_divides(divisor, dividend);
}

std::vector<double> quotient_eigenvalues_numeric(const QuotientMatrix& q) {
    const int m = q.dim();
    Eigen::MatrixXd sym(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double num = q.block_sums(i, j).convert_to<double>();
            double di = q.class_sizes[i].convert_to<double>();
            double dj = q.class_sizes[j].convert_to<double>();
            sym(i, j) = num / std::sqrt(di * dj);
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + m);
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string partition_to_json(const Partition& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& cls : p.classes) arr.push_back(cls);
    return arr.dump();
}

Partition partition_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Partition p;
    for (const auto& cls : j) p.classes.push_back(cls.get<std::vector<int>>());
    return p;
}

} // namespace hs
