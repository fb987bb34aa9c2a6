#include "ptoric/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace ptoric {

namespace {

std::vector<int> term_multidegree(const std::vector<int>& exp, const std::vector<int>& sizes) {
    std::vector<int> deg(sizes.size(), 0);
    int pos = 0;
    for (std::size_t f = 0; f < sizes.size(); ++f)
        for (int j = 0; j < sizes[f]; ++j) deg[f] += exp[pos++];
    return deg;
}

}  // namespace

MultiPoly MultiPoly::monomial(int nv, std::vector<int> sizes, cplx c, const std::vector<int>& exp) {
    MultiPoly p(nv, std::move(sizes));
    if (static_cast<int>(exp.size()) != nv) throw InvalidInput("monomial: exponent size");
    p.terms.push_back({c, exp});
    return p;
}

MultiPoly MultiPoly::variable(int nv, std::vector<int> sizes, int var) {
    std::vector<int> e(nv, 0);
    e[var] = 1;
    return monomial(nv, std::move(sizes), cplx(1, 0), e);
}

cplx MultiPoly::eval(const std::vector<cplx>& z) const {
    if (static_cast<int>(z.size()) != nvars) throw InvalidInput("MultiPoly::eval: size");
    cplx acc(0, 0);
    for (const Term& t : terms) {
        cplx m = t.coeff;
        for (int v = 0; v < nvars; ++v)
            for (int k = 0; k < t.exp[v]; ++k) m *= z[v];
        acc += m;
    }
    return acc;
}

MultiPoly MultiPoly::partial(int var) const {
    MultiPoly out(nvars, factor_sizes);
    for (const Term& t : terms) {
        if (t.exp[var] == 0) continue;
        Term d = t;
        d.coeff *= static_cast<double>(t.exp[var]);
        d.exp[var] -= 1;
        out.terms.push_back(std::move(d));
    }
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out(nvars, factor_sizes);
    std::map<std::vector<int>, cplx> acc;
    for (const Term& a : terms)
        for (const Term& b : o.terms) {
            std::vector<int> e(nvars);
            for (int v = 0; v < nvars; ++v) e[v] = a.exp[v] + b.exp[v];
            acc[e] += a.coeff * b.coeff;
        }
    for (auto& [e, c] : acc)
        if (std::abs(c) > 0) out.terms.push_back({c, e});
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out(nvars, factor_sizes);
    std::map<std::vector<int>, cplx> acc;
    for (const Term& a : terms) acc[a.exp] += a.coeff;
    for (const Term& b : o.terms) acc[b.exp] += b.coeff;
    for (auto& [e, c] : acc)
        if (std::abs(c) > 0) out.terms.push_back({c, e});
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (Term& t : out.terms) t.coeff = -t.coeff;
    return out;
}

MultiPoly MultiPoly::pow(int k) const {
    MultiPoly out = monomial(nvars, factor_sizes, cplx(1, 0), std::vector<int>(nvars, 0));
    for (int i = 0; i < k; ++i) out = out * (*this);
    return out;
}

std::vector<int> MultiPoly::multidegree() const {
    if (terms.empty()) return std::vector<int>(factor_sizes.size(), 0);
    std::vector<int> deg = term_multidegree(terms.front().exp, factor_sizes);
    for (const Term& t : terms)
        if (term_multidegree(t.exp, factor_sizes) != deg)
            throw InvalidInput("polynomial is not multi-homogeneous");
    return deg;
}

bool MultiPoly::is_multihomogeneous() const {
    try {
        multidegree();
        return true;
    } catch (const InvalidInput&) {
        return false;
    }
}

double MultiPoly::coeff_norm() const {
    double s = 0;
    for (const Term& t : terms) s += std::abs(t.coeff);
    return s;
}

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.real();
        if (t.coeff.imag() != 0) os << (t.coeff.imag() > 0 ? "+" : "") << t.coeff.imag() << "i";
        os << ")";
        for (int v = 0; v < nvars; ++v) {
            if (t.exp[v] == 0) continue;
            os << "*";
            if (v < static_cast<int>(var_names.size()))
                os << var_names[v];
            else
                os << "z" << v;
            if (t.exp[v] > 1) os << "^" << t.exp[v];
        }
    }
    if (first) os << "0";
    return os.str();
}

PairPoly PairPoly::constant(cplx c, int degree_pad) {
    std::vector<cplx> v(degree_pad + 1, cplx(0, 0));
    v[0] = c;
    return PairPoly(std::move(v));
}

cplx PairPoly::eval(cplx s0, cplx s1) const {
    // Horner in s1/s0 would lose the homogeneous form; evaluate directly.
    const int d = degree();
    cplx acc(0, 0);
    cplx p1(1, 0);
    std::vector<cplx> pow1(d + 1);
    for (int k = 0; k <= d; ++k) {
        pow1[k] = p1;
        p1 *= s1;
    }
    cplx p0(1, 0);
    for (int k = d; k >= 0; --k) {
        acc += coeffs[k] * p0 * pow1[k];
        p0 *= s0;
    }
    return acc;
}

PairPoly PairPoly::operator*(const PairPoly& o) const {
    if (coeffs.empty() || o.coeffs.empty()) return PairPoly();
    std::vector<cplx> out(coeffs.size() + o.coeffs.size() - 1, cplx(0, 0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs.size(); ++j) out[i + j] += coeffs[i] * o.coeffs[j];
    return PairPoly(std::move(out));
}

PairPoly PairPoly::operator+(const PairPoly& o) const {
    // Padding keeps homogeneity only when degrees match; the registry always
    // adds equal-degree polynomials.
    std::vector<cplx> out(std::max(coeffs.size(), o.coeffs.size()), cplx(0, 0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] += coeffs[i];
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) out[i] += o.coeffs[i];
    return PairPoly(std::move(out));
}

PairPoly PairPoly::operator-(const PairPoly& o) const { return *this + o.scaled(cplx(-1, 0)); }

PairPoly PairPoly::scaled(cplx c) const {
    PairPoly out = *this;
    for (cplx& a : out.coeffs) a *= c;
    return out;
}

PairPoly PairPoly::pow(int k) const {
    PairPoly out = PairPoly::constant(cplx(1, 0));
    for (int i = 0; i < k; ++i) out = out * (*this);
    return out;
}

PairPoly PairPoly::affine_derivative() const {
    if (coeffs.size() <= 1) return PairPoly(std::vector<cplx>{cplx(0, 0)});
    std::vector<cplx> out(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) out[k - 1] = coeffs[k] * static_cast<double>(k);
    return PairPoly(std::move(out));
}

double PairPoly::coeff_norm() const {
    double s = 0;
    for (const cplx& c : coeffs) s += std::abs(c);
    return s;
}

void PairPoly::trim(double tol) {
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= tol) coeffs.pop_back();
}

int PairPoly::order_at_zero(double tol) const {
    const double scale = std::max(coeff_norm(), 1e-300);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (std::abs(coeffs[k]) > tol * scale) return static_cast<int>(k);
    return static_cast<int>(coeffs.size());
}

int PairPoly::order_at_infinity(double tol) const {
    const double scale = std::max(coeff_norm(), 1e-300);
    for (std::size_t k = coeffs.size(); k-- > 0;)
        if (std::abs(coeffs[k]) > tol * scale) return degree() - static_cast<int>(k);
    return static_cast<int>(coeffs.size());
}

int PairPoly::effective_degree(double tol) const { return degree() - order_at_infinity(tol); }

std::vector<std::pair<cplx, int>> PairPoly::affine_roots(double cluster_tol) const {
    // Affine polynomial p(s) = sum coeffs[k] s^k, truncated to its effective
    // degree. Durand-Kerner from a de-symmetrized start circle.
    const double scale = std::max(coeff_norm(), 1e-300);
    int deg = effective_degree(1e-12);
    int low = order_at_zero(1e-12);
    std::vector<std::pair<cplx, int>> out;
    if (deg <= 0) return out;
    if (low > deg) low = 0;  // degenerate; fall through with full poly
    std::vector<cplx> c(coeffs.begin() + low, coeffs.begin() + deg + 1);
    if (low > 0) out.push_back({cplx(0, 0), low});
    int n = static_cast<int>(c.size()) - 1;
    if (n <= 0) return out;
    for (cplx& a : c) a /= c.back();
    std::vector<cplx> r(n);
    for (int i = 0; i < n; ++i)
        r[i] = std::polar(1.3, 0.41 + kTwoPi * static_cast<double>(i) / n);
    auto eval_monic = [&](cplx s) {
        cplx acc(0, 0);
        for (int k = n; k >= 0; --k) acc = acc * s + c[k];
        return acc;
    };
    for (int it = 0; it < 500; ++it) {
        double move = 0;
        for (int i = 0; i < n; ++i) {
            cplx denom(1, 0);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (r[i] - r[j]);
            if (std::abs(denom) < 1e-300) denom = cplx(1e-300, 0);
            cplx delta = eval_monic(r[i]) / denom;
            r[i] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-13) break;
    }
    (void)scale;  // reserved for residual-based acceptance of clusters
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        int mult = 1;
        cplx sum = r[i];
        used[i] = true;
        for (int j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            if (std::abs(r[j] - r[i]) < cluster_tol * std::max(1.0, std::abs(r[i]))) {
                used[j] = true;
                ++mult;
                sum += r[j];
            }
        }
        out.push_back({sum / static_cast<double>(mult), mult});
    }
    return out;
}

PairPoly compose(const MultiPoly& p, const std::vector<PairPoly>& coords) {
    if (static_cast<int>(coords.size()) != p.nvars) throw InvalidInput("compose: coords size");
    // Uniform total degree requires multi-homogeneity of p and equal
    // coordinate degrees within each factor; both hold for registry data.
    PairPoly acc;
    bool first = true;
    for (const MultiPoly::Term& t : p.terms) {
        PairPoly m = PairPoly::constant(t.coeff);
        for (int v = 0; v < p.nvars; ++v)
            if (t.exp[v] > 0) m = m * coords[v].pow(t.exp[v]);
        if (first) {
            acc = m;
            first = false;
        } else {
            acc = acc + m;
        }
    }
    if (first) acc = PairPoly::constant(cplx(0, 0));
    return acc;
}

}  // namespace ptoric
