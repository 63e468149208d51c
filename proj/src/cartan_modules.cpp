#include "z2rep/cartan_modules.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace z2rep {

HModule build_h_module(int n, const Rational& r, const std::vector<Rational>& c, int cap)
{
    if (n < 1 || n > cap)
        throw std::invalid_argument("h-module dimension must be in 1.." + std::to_string(cap) + ", got " +
                                    std::to_string(n));
    const std::size_t expected = n % 2 == 1 ? static_cast<std::size_t>((n - 1) / 2) : static_cast<std::size_t>(n / 2);
    if (c.size() != expected)
        throw std::invalid_argument("n = " + std::to_string(n) + " takes " + std::to_string(expected) +
                                    " coefficients, got " + std::to_string(c.size()));

    const auto dim = static_cast<std::size_t>(n);
    HModule m{dim, r, c, Matrix(dim, dim), Matrix(dim, dim), std::vector<int>(dim), true};
    for (std::size_t k = 0; k < dim; ++k) {
        m.matR(k, k) = r;
        m.parity[k] = static_cast<int>(k % 2);
        if (k + 1 < dim)
            m.matRt(k + 1, k) = 1;
    }
    // Rt|n-1> lands on the basis vectors of the other parity: 1,3,... or 0,2,...
    const std::size_t first = n % 2 == 1 ? 1 : 0;
    for (std::size_t j = 0; j < c.size(); ++j)
        m.matRt(first + 2 * j, dim - 1) = c[j];
    return m;
}

std::string to_string(const IrreducibleHModule& m)
{
    if (m.kind == HKind::nu_r)
        return "nu(" + to_string(m.r) + ")";
    return "nu(" + to_string(m.r) + "," + to_string(*m.lambda) + ")";
}

std::string to_string(Irreducibility v)
{
    switch (v) {
    case Irreducibility::reducible:
        return "reducible";
    case Irreducibility::irreducible:
        return "irreducible";
    case Irreducibility::undetermined:
        return "undetermined";
    }
    return "?";
}

Polynomial t_polynomial(const HModule& m)
{
    if (!m.is_chain || m.dim % 2 != 0)
        throw std::invalid_argument("the t-polynomial is defined for even chain modules");
    Polynomial p(m.dim / 2 + 1);
    for (std::size_t j = 0; j < m.c.size(); ++j)
        p[j] = -m.c[j];
    p.back() += 1;
    return p;
}

Polynomial characteristic_polynomial(const Matrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    Polynomial p(n + 1);
    p[n] = 1;
    Matrix mk(n, n);
    const Matrix id = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk;
        for (std::size_t i = 0; i < n; ++i)
            mk(i, i) += p[n - k + 1];
        const Matrix amk = a * mk;
        Rational trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            trace += amk(i, i);
        p[n - k] = -trace / static_cast<long>(k);
    }
    return p;
}

Rational evaluate(const Polynomial& p, const Rational& x)
{
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

namespace {

std::vector<Integer> positive_divisors(Integer n)
{
    n = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& poly)
{
    Polynomial p = poly;
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
    if (p.size() <= 1)
        return {};

    std::set<Rational> roots;
    std::size_t low = 0;
    while (sgn(p[low]) == 0)
        ++low;
    if (low > 0)
        roots.insert(0);
    if (p.size() - low > 1) {
        Integer l = 1;
        for (std::size_t i = low; i < p.size(); ++i)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p[i].get_den_mpz_t());
        const Integer a0 = Rational(p[low] * l).get_num();
        const Integer an = Rational(p.back() * l).get_num();
        for (const Integer& num : positive_divisors(a0)) {
            for (const Integer& den : positive_divisors(an)) {
                for (int s : {1, -1}) {
                    Rational x(s * num, den);
                    x.canonicalize();
                    if (sgn(evaluate(p, x)) == 0)
                        roots.insert(x);
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

namespace {

std::vector<Vector> graded_span(const std::vector<Vector>& vs, std::size_t dim)
{
    return canonical_basis(vs, dim);
}

Vector mul(const Matrix& a, const Vector& v) { return a.apply(v); }

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector unit(std::size_t dim, std::size_t i)
{
    Vector e(dim);
    e[i] = 1;
    return e;
}

/// span{v, Rt v, Rt^2 v, ...}
std::vector<Vector> cyclic_span(const HModule& m, const Vector& v)
{
    std::vector<Vector> vs{v};
    std::size_t r = 1;
    for (;;) {
        vs.push_back(mul(m.matRt, vs.back()));
        const std::size_t next = rank(vs, m.dim);
        if (next == r)
            break;
        r = next;
    }
    return graded_span(vs, m.dim);
}

bool proper(const HModule& m, const std::vector<Vector>& s) { return !s.empty() && s.size() < m.dim; }

std::optional<std::vector<Vector>> eigen_route(const HModule& m)
{
    const Matrix sq = m.matRt * m.matRt;
    for (int p : {0, 1}) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < m.dim; ++i)
            if (m.parity[i] == p)
                idx.push_back(i);
        if (idx.empty())
            continue;
        Matrix block(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                block(i, j) = sq(idx[i], idx[j]);
        auto roots = rational_roots(characteristic_polynomial(block));
        // nonzero eigenvalues give the two-dimensional pieces; try them first
        std::stable_partition(roots.begin(), roots.end(), [](const Rational& x) { return sgn(x) != 0; });
        for (const auto& mu : roots) {
            Matrix shifted = block;
            for (std::size_t i = 0; i < idx.size(); ++i)
                shifted(i, i) -= mu;
            for (const auto& x : nullspace(shifted)) {
                Vector v(m.dim);
                for (std::size_t i = 0; i < idx.size(); ++i)
                    v[idx[i]] = x[i];
                const Vector w = mul(m.matRt, v);
                std::vector<Vector> s = is_zero(w) ? std::vector<Vector>{v} : std::vector<Vector>{v, w};
                s = graded_span(s, m.dim);
                if (proper(m, s))
                    return s;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<Vector> t_polynomial_subspace(const HModule& m, const Rational& t)
{
    if (sgn(evaluate(t_polynomial(m), t)) != 0)
        throw std::invalid_argument(to_string(t) + " is not a root of the t-polynomial");
    const std::size_t half = m.dim / 2;
    // lambda_{2j-2} = t lambda_{2j} - c_{2j}, lambda_{n-2} = 1
    std::vector<Rational> lam(half);
    lam[half - 1] = 1;
    for (std::size_t j = half - 1; j > 0; --j)
        lam[j - 1] = t * lam[j] - m.c[j];
    Vector w00(m.dim);
    for (std::size_t j = 0; j < half; ++j)
        w00[2 * j] = lam[j];
    const Vector w11 = mul(m.matRt, w00);
    if (sgn(t) == 0)
        return graded_span({w11}, m.dim);
    return graded_span({w00, w11}, m.dim);
}

bool is_invariant(const HModule& m, const std::vector<Vector>& subspace)
{
    if (subspace.empty())
        return true;
    const Echelon e = rref(Matrix::from_rows(subspace, m.dim));
    for (const auto& v : subspace)
        if (!in_row_space(e, mul(m.matRt, v)) || !in_row_space(e, mul(m.matR, v)))
            return false;
    return true;
}

InvariantSearch find_invariant_subspace(const HModule& m)
{
    InvariantSearch out;
    auto found = [&out](std::vector<Vector> s, std::string route) {
        out.subspace = std::move(s);
        out.route = std::move(route);
        out.verdict = Irreducibility::reducible;
        return out;
    };

    if (m.is_chain && m.dim > 1 && m.dim % 2 == 1) {
        std::vector<Vector> tail;
        for (std::size_t k = 1; k < m.dim; ++k)
            tail.push_back(unit(m.dim, k));
        return found(graded_span(tail, m.dim), "chain-tail");
    }
    if (m.is_chain && m.dim % 2 == 0 && m.dim > 2) {
        auto roots = rational_roots(t_polynomial(m));
        std::stable_partition(roots.begin(), roots.end(), [](const Rational& x) { return sgn(x) != 0; });
        for (const auto& t : roots) {
            auto s = t_polynomial_subspace(m, t);
            if (proper(m, s) && is_invariant(m, s))
                return found(std::move(s), "t-polynomial");
        }
    }
    for (std::size_t i = 0; i < m.dim; ++i) {
        auto s = cyclic_span(m, unit(m.dim, i));
        if (proper(m, s))
            return found(std::move(s), "cyclic");
    }
    if (auto s = eigen_route(m))
        return found(std::move(*s), "eigenvector");

    // Without a hit, small modules are irreducible: a 1-dimensional module is,
    // and a 2-dimensional one with Rt^2 = lambda != 0 has no Rt-stable line.
    out.verdict = m.dim <= 2 ? Irreducibility::irreducible : Irreducibility::undetermined;
    return out;
}

HModule restrict_to(const HModule& m, const std::vector<Vector>& subspace)
{
    const Echelon e = rref(Matrix::from_rows(subspace, m.dim));
    const std::size_t d = e.pivots.size();
    HModule out{d, m.r, {}, Matrix(d, d), Matrix(d, d), std::vector<int>(d), false};
    for (std::size_t j = 0; j < d; ++j) {
        const Vector v = e.reduced.row(j);
        out.parity[j] = m.parity[e.pivots[j]];
        const Vector rv = mul(m.matR, v);
        const Vector rtv = mul(m.matRt, v);
        if (!in_row_space(e, rv) || !in_row_space(e, rtv))
            throw std::invalid_argument("subspace is not invariant");
        // coordinates in an echelon basis are the entries at the pivots
        for (std::size_t i = 0; i < d; ++i) {
            out.matR(i, j) = rv[e.pivots[i]];
            out.matRt(i, j) = rtv[e.pivots[i]];
        }
    }
    return out;
}

HModule quotient_by(const HModule& m, const std::vector<Vector>& subspace)
{
    const Echelon e = rref(Matrix::from_rows(subspace, m.dim));
    std::vector<bool> pivot(m.dim, false);
    for (auto p : e.pivots)
        pivot[p] = true;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < m.dim; ++i)
        if (!pivot[i])
            rest.push_back(i);

    const std::size_t d = rest.size();
    HModule out{d, m.r, {}, Matrix(d, d), Matrix(d, d), std::vector<int>(d), false};
    for (std::size_t j = 0; j < d; ++j) {
        out.parity[j] = m.parity[rest[j]];
        const Vector rv = reduce_modulo(e, mul(m.matR, unit(m.dim, rest[j])));
        const Vector rtv = reduce_modulo(e, mul(m.matRt, unit(m.dim, rest[j])));
        for (std::size_t i = 0; i < d; ++i) {
            out.matR(i, j) = rv[rest[i]];
            out.matRt(i, j) = rtv[rest[i]];
        }
    }
    return out;
}

namespace {

void split(const HModule& m, HClassification& out)
{
    const InvariantSearch search = find_invariant_subspace(m);
    if (search.subspace) {
        split(restrict_to(m, *search.subspace), out);
        split(quotient_by(m, *search.subspace), out);
        return;
    }
    if (search.verdict == Irreducibility::undetermined) {
        out.undetermined.push_back(m);
        return;
    }
    if (m.dim == 1)
        out.constituents.push_back({HKind::nu_r, m.r, std::nullopt});
    else
        out.constituents.push_back({HKind::nu_r_lambda, m.r, (m.matRt * m.matRt)(0, 0)});
}

}  // namespace

HClassification classify(const HModule& m)
{
    HClassification out{m.dim, m.r, {}, {}};
    split(m, out);
    return out;
}

}  // namespace z2rep
