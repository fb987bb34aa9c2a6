#include "ptoric/relations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ptoric {

std::vector<int> ToricRelation::plus_set() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] > 0) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> ToricRelation::minus_set() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] < 0) out.push_back(static_cast<int>(i));
    return out;
}

bool relation_valid(const ToricRelation& r, const DivisorSet& d) {
    if (r.lambda.size() != d.classes.size()) return false;
    if (d.classes.empty()) return false;
    const std::size_t rank = d.classes.front().size();
    for (std::size_t c = 0; c < rank; ++c) {
        long long s = 0;
        for (std::size_t i = 0; i < r.lambda.size(); ++i) s += r.lambda[i] * d.classes[i][c];
        if (s != 0) return false;
    }
    return true;
}

std::pair<MultiPoly, MultiPoly> split_relation(const ToricRelation& r, const DivisorSet& d) {
    if (r.lambda.size() != d.polys.size()) throw InvalidInput("split_relation: length mismatch");
    if (!relation_valid(r, d)) throw InvalidInput("split_relation: relation not in class kernel");
    const MultiPoly& sample = d.polys.front();
    MultiPoly plus = MultiPoly::monomial(sample.nvars, sample.factor_sizes, cplx(1, 0),
                                         std::vector<int>(sample.nvars, 0));
    MultiPoly minus = plus;
    for (std::size_t i = 0; i < r.lambda.size(); ++i) {
        if (r.lambda[i] > 0) plus = plus * d.polys[i].pow(static_cast<int>(r.lambda[i]));
        if (r.lambda[i] < 0) minus = minus * d.polys[i].pow(static_cast<int>(-r.lambda[i]));
    }
    if (plus.multidegree() != minus.multidegree())
        throw InvalidInput("split_relation: unbalanced multi-degrees");
    return {plus, minus};
}

std::vector<std::vector<long long>> integer_kernel_of_row(const std::vector<long long>& w) {
    const std::size_t n = w.size();
    std::vector<std::vector<long long>> basis;
    // Find a pivot with minimal nonzero |w_i| and reduce the others against
    // it by the two-term Bezout construction; repeated elimination yields a
    // basis of the rank n-1 kernel.
    int pivot = -1;
    for (std::size_t i = 0; i < n; ++i)
        if (w[i] != 0 && (pivot < 0 || std::llabs(w[i]) < std::llabs(w[pivot])))
            pivot = static_cast<int>(i);
    if (pivot < 0) {
        // Zero weight: whole lattice.
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<long long> e(n, 0);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<int>(i) == pivot) continue;
        const long long g = std::gcd(std::llabs(w[i]), std::llabs(w[pivot]));
        std::vector<long long> v(n, 0);
        if (w[i] == 0) {
            v[i] = 1;
        } else {
            v[i] = w[pivot] / g;
            v[pivot] = -w[i] / g;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Solve a rational linear system to test whether v lies in the integer span
// of rows. Rank of rows is assumed equal to rows.size().
bool in_integer_span(const std::vector<std::vector<long long>>& rows,
                     const std::vector<long long>& v) {
    const std::size_t k = rows.size();
    if (k == 0) return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
    const std::size_t n = rows.front().size();
    // Least squares x = argmin |A^T x - v| over reals, then check integrality
    // and exactness. A is k x n.
    std::vector<std::vector<double>> ata(k, std::vector<double>(k, 0));
    std::vector<double> atv(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < n; ++c)
                ata[i][j] += static_cast<double>(rows[i][c]) * static_cast<double>(rows[j][c]);
        for (std::size_t c = 0; c < n; ++c)
            atv[i] += static_cast<double>(rows[i][c]) * static_cast<double>(v[c]);
    }
    std::vector<double> x;
    try {
        x = solve_linear(ata, atv);
    } catch (const SingularSystem&) {
        return false;
    }
    std::vector<long long> xi(k);
    for (std::size_t i = 0; i < k; ++i) {
        xi[i] = std::llround(x[i]);
        if (std::abs(x[i] - static_cast<double>(xi[i])) > 1e-9) return false;
    }
    for (std::size_t c = 0; c < n; ++c) {
        long long s = 0;
        for (std::size_t i = 0; i < k; ++i) s += xi[i] * rows[i][c];
        if (s != v[c]) return false;
    }
    return true;
}

}  // namespace

bool same_integer_span(const std::vector<std::vector<long long>>& a,
                       const std::vector<std::vector<long long>>& b) {
    for (const auto& v : a)
        if (!in_integer_span(b, v)) return false;
    for (const auto& v : b)
        if (!in_integer_span(a, v)) return false;
    return true;
}

std::vector<std::vector<long long>> reduced_moment_combinations(const ToricRelation& r,
                                                                const DivisorSet& d) {
    if (d.weights.empty()) throw InvalidInput("reduced_moment_combinations: no weight data");
    const std::size_t rank = d.weights.front().size();
    std::vector<long long> w(rank, 0);
    for (std::size_t i = 0; i < r.lambda.size(); ++i)
        for (std::size_t c = 0; c < rank; ++c) w[c] += r.lambda[i] * d.weights[i][c];
    bool all_zero = std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; });
    if (all_zero) throw InvalidInput("reduced_moment_combinations: rank deficiency");
    return integer_kernel_of_row(w);
}

std::vector<ScreenRow> screen_relations(const DivisorSet& d,
                                        const std::vector<ToricRelation>& relations,
                                        const std::vector<PairPoly>& section_coords) {
    std::vector<long long> rho;
    rho.reserve(d.polys.size());
    for (const MultiPoly& poly : d.polys)
        rho.push_back(intersection_index(compose(poly, section_coords)));
    std::vector<ScreenRow> rows;
    for (const ToricRelation& r : relations) {
        if (!relation_valid(r, d)) throw InvalidInput("screen_relations: invalid relation");
        ScreenRow row;
        row.relation = r;
        row.rho = rho;
        MiddleCaseResult mc = middle_case_check(r.lambda, rho);
        row.sum_rho = mc.sum_rho;
        row.sum_positive = mc.sum_positive;
        row.middle = mc.middle;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ptoric
