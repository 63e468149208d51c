#include "z2rep/singular_solver.hpp"

#include <algorithm>

namespace z2rep {

std::string to_string(Chi which)
{
    switch (which) {
    case Chi::chi01:
        return "chi01";
    case Chi::chi10:
        return "chi10";
    case Chi::chi11:
        return "chi11";
    }
    return "?";
}

std::string to_string(ClosedFormMatch match)
{
    switch (match) {
    case ClosedFormMatch::exact:
        return "exact";
    case ClosedFormMatch::scalar_multiple:
        return "scalar-multiple";
    case ClosedFormMatch::mismatch:
        return "mismatch";
    case ClosedFormMatch::no_closed_form:
        return "no-closed-form";
    }
    return "?";
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& x)
{
    if (sgn(x) < 0 || !mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
        return std::nullopt;
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), x.get_den_mpz_t());
    return Rational(num, den);
}

}  // namespace

std::vector<Integer> all_constraint_solutions(const VermaKind& kind)
{
    // r + 2M = s with s = 0, or s = +-sqrt(lambda)
    std::vector<Rational> targets;
    if (!kind.has_lambda()) {
        targets.push_back(0);
    } else if (auto root = rational_sqrt(kind.lambda())) {
        targets.push_back(-*root);
        targets.push_back(*root);
    }
    std::vector<Integer> out;
    for (const auto& s : targets) {
        const Rational M = (s - kind.r()) / 2;
        if (M.get_den() == 1 && sgn(M) >= 0)
            out.push_back(M.get_num());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> constraint_solutions(const VermaKind& kind, int m_cap)
{
    std::vector<int> out;
    for (const auto& M : all_constraint_solutions(kind))
        if (M <= m_cap)
            out.push_back(static_cast<int>(M.get_si()));
    return out;
}

std::vector<ModuleVector> singular_space(const VermaKind& kind, int level, GradedDegree sector)
{
    if (level < 1)
        throw std::invalid_argument("singular vectors live at positive levels, got " + std::to_string(level));
    const auto sectors = level_sectors(level);
    if (sector != sectors[0] && sector != sectors[1])
        throw std::invalid_argument("sector " + to_string(sector) + " does not occur at level " +
                                    std::to_string(level));

    const auto source = sector_basis(kind, level, sector);
    const auto target = enumerate_level(kind, level - 1).basis;
    const Matrix am = action_matrix(Generator::am, kind, source, target);
    const Matrix atm = action_matrix(Generator::atm, kind, source, target);

    Matrix stacked(2 * target.size(), source.size());
    for (std::size_t i = 0; i < target.size(); ++i) {
        for (std::size_t j = 0; j < source.size(); ++j) {
            stacked(i, j) = am(i, j);
            stacked(target.size() + i, j) = atm(i, j);
        }
    }

    std::vector<ModuleVector> out;
    for (const auto& x : nullspace(stacked))
        out.push_back(from_coordinates(kind, source, x));
    return out;
}

bool is_singular(const ModuleVector& v)
{
    return act(Generator::am, v).is_zero() && act(Generator::atm, v).is_zero();
}

int closed_form_level(Chi which, int M) { return which == Chi::chi11 ? 2 * (2 * M + 1) : 2 * M + 1; }

ModuleVector closed_form(const VermaKind& kind, Chi which, int M)
{
    if (M < 0)
        throw std::invalid_argument("M must be nonnegative");
    const Rational& r = kind.r();
    const Rational s = r + 2 * M;
    ModuleVector out(kind);

    if (!kind.has_lambda()) {
        if (sgn(s) != 0)
            throw ConstraintError("closed form " + to_string(which) + " requires r + 2M = 0, got r = " + to_string(r) +
                                  ", M = " + std::to_string(M));
        switch (which) {
        case Chi::chi01:
            for (int j = 0; 2 * j <= M; ++j)
                out.add({0, 2 * (M - 2 * j) + 1, 2 * j}, power(4, j) * binomial(M, 2 * j));
            for (int j = 0; 2 * j + 1 <= M; ++j)
                out.add({1, 2 * (M - 2 * j - 1), 2 * j + 1}, -power(2, 2 * j + 1) * binomial(M, 2 * j + 1));
            break;
        case Chi::chi10:
            for (int j = 0; 2 * j + 1 <= M; ++j)
                out.add({0, 2 * (M - 2 * j - 1) + 1, 2 * j + 1}, -power(2, 2 * j + 1) * binomial(M, 2 * j + 1));
            for (int j = 0; 2 * j <= M; ++j)
                out.add({1, 2 * (M - 2 * j), 2 * j}, power(4, j) * binomial(M, 2 * j));
            break;
        case Chi::chi11:
            for (int j = 0; j <= M; ++j) {
                const Rational c = power(-4, j) * binomial(M, j);
                out.add({0, 4 * (M - j), 2 * j + 1}, -2 * c);
                out.add({1, 4 * (M - j) + 1, 2 * j}, c);
            }
            break;
        }
        return out;
    }

    if (which == Chi::chi11)
        throw ConstraintError("closed form chi11 is not defined for M(r,lambda)");
    if (s * s != kind.lambda())
        throw ConstraintError("closed form " + to_string(which) + " requires (r + 2M)^2 = lambda, got r = " +
                              to_string(r) + ", lambda = " + to_string(kind.lambda()) + ", M = " + std::to_string(M));
    for (int j = 0; j <= M; ++j) {
        const Rational c = power(-2, j) * binomial(M, j);
        const int even = parity(j), odd = parity(j + 1);
        if (which == Chi::chi01) {
            out.add({0, 2 * (M - j) + 1, j, even}, c * power(s, odd));
            out.add({1, 2 * (M - j), j, odd}, c * power(s, even));
        } else {
            out.add({0, 2 * (M - j) + 1, j, odd}, c * power(s, even));
            out.add({1, 2 * (M - j), j, even}, c * power(s, odd));
        }
    }
    return out;
}

std::optional<Rational> proportionality(const ModuleVector& v, const ModuleVector& w)
{
    if (w.is_zero())
        return std::nullopt;
    const auto& [b0, w0] = *w.terms().begin();
    const Rational c = v.coefficient(b0) / w0;
    if (v == c * w)
        return c;
    return std::nullopt;
}

namespace {

std::optional<Chi> applicable_closed_form(const VermaKind& kind, int level, GradedDegree sector, int& M)
{
    if (parity(level) == 1) {
        M = (level - 1) / 2;
        const Rational s = kind.r() + 2 * M;
        const bool holds = kind.has_lambda() ? s * s == kind.lambda() : sgn(s) == 0;
        if (!holds)
            return std::nullopt;
        return sector == GradedDegree{0, 1} ? Chi::chi01 : Chi::chi10;
    }
    if (kind.has_lambda() || sector != GradedDegree{1, 1} || level % 4 != 2)
        return std::nullopt;
    M = (level / 2 - 1) / 2;
    if (sgn(kind.r() + 2 * M) != 0)
        return std::nullopt;
    return Chi::chi11;
}

}  // namespace

SingularReport find_singular(const VermaKind& kind, int level, GradedDegree sector)
{
    SingularReport report{kind, level, sector, singular_space(kind, level, sector), ClosedFormMatch::no_closed_form,
                          std::nullopt, std::nullopt, std::nullopt};
    int M = 0;
    const auto which = applicable_closed_form(kind, level, sector, M);
    if (!which) {
        if (!report.nullspace.empty())
            report.closed_form_match = ClosedFormMatch::mismatch;
        return report;
    }
    report.closed_form = which;
    report.M = M;

    const ModuleVector chi = closed_form(kind, *which, M);
    if (report.nullspace.size() != 1) {
        report.closed_form_match = ClosedFormMatch::mismatch;
    } else if (report.nullspace.front() == chi) {
        report.closed_form_match = ClosedFormMatch::exact;
    } else if (proportionality(chi, report.nullspace.front())) {
        report.closed_form_match = ClosedFormMatch::scalar_multiple;
    } else {
        report.closed_form_match = ClosedFormMatch::mismatch;
    }

    if (*which != Chi::chi11) {
        const Chi partner = *which == Chi::chi01 ? Chi::chi10 : Chi::chi01;
        const auto c = proportionality(act(Generator::Rt, chi), closed_form(kind, partner, M));
        if (c) {
            const Rational stated = kind.has_lambda() ? 1 - kind.r() : Rational(2 * M + 1);
            report.rtilde = RtildeComparison{*c, stated};
        }
    }
    return report;
}

bool RtildeReport::matches_stated() const
{
    return chi01_to_chi10 && chi10_to_chi01 && *chi01_to_chi10 == stated && *chi10_to_chi01 == stated &&
           chi11_annihilated.value_or(true);
}

RtildeReport verify_rtilde_relations(const VermaKind& kind, int M)
{
    const ModuleVector chi01 = closed_form(kind, Chi::chi01, M);
    const ModuleVector chi10 = closed_form(kind, Chi::chi10, M);
    RtildeReport report{M,
                        proportionality(act(Generator::Rt, chi01), chi10),
                        proportionality(act(Generator::Rt, chi10), chi01),
                        kind.has_lambda() ? 1 - kind.r() : Rational(2 * M + 1),
                        std::nullopt};
    if (!kind.has_lambda())
        report.chi11_annihilated = act(Generator::Rt, closed_form(kind, Chi::chi11, M)).is_zero();
    return report;
}

std::string to_string(RecurrenceSystem which)
{
    switch (which) {
    case RecurrenceSystem::mu_nu:
        return "mu-nu";
    case RecurrenceSystem::alpha_beta:
        return "alpha-beta";
    case RecurrenceSystem::rho_sigma:
        return "rho-sigma";
    case RecurrenceSystem::gamma_delta:
        return "gamma-delta";
    case RecurrenceSystem::mu_nu_lambda:
        return "mu-nu-lambda";
    }
    return "?";
}

std::optional<RecurrenceSystem> recurrence_from_name(std::string_view text)
{
    for (auto s : {RecurrenceSystem::mu_nu, RecurrenceSystem::alpha_beta, RecurrenceSystem::rho_sigma,
                   RecurrenceSystem::gamma_delta, RecurrenceSystem::mu_nu_lambda})
        if (to_string(s) == text)
            return s;
    return std::nullopt;
}

namespace {

/// Unknown j of the primary ('p') or secondary ('s') family.
struct Unknown {
    char family;
    int j;
};

struct Equation {
    std::vector<std::pair<Unknown, Rational>> terms;
};

struct SystemBuilder {
    int n_primary = 0;
    int n_secondary = 0;
    std::vector<Equation> equations;

    static Unknown P(int j) { return {'p', j}; }
    static Unknown S(int j) { return {'s', j}; }

    void eq(std::initializer_list<std::pair<Unknown, Rational>> terms) { equations.push_back({terms}); }

    /// Unknowns outside the ansatz are zero and drop out.
    Matrix matrix() const
    {
        Matrix A(equations.size(), n_primary + n_secondary);
        for (std::size_t i = 0; i < equations.size(); ++i) {
            for (const auto& [u, c] : equations[i].terms) {
                const int n = u.family == 'p' ? n_primary : n_secondary;
                if (u.j < 0 || u.j >= n)
                    continue;
                A(i, (u.family == 'p' ? 0 : n_primary) + u.j) += c;
            }
        }
        return A;
    }
};

}  // namespace

RecurrenceSolution recurrence_solve(RecurrenceSystem which, int M, const Rational& r,
                                    const std::optional<Rational>& lambda)
{
    if (M < 0)
        throw std::invalid_argument("M must be nonnegative");
    if (M == 0 && (which == RecurrenceSystem::rho_sigma || which == RecurrenceSystem::gamma_delta))
        throw std::invalid_argument(to_string(which) + " lives at level 2M and needs M >= 1");
    using B = SystemBuilder;
    const int K = M / 2;
    const bool even = M % 2 == 0;
    const int up = even ? K - 1 : K;
    SystemBuilder sys;
    RecurrenceSolution out{which, M, {}, {}, 0, {}};
    std::string pname, sname;

    switch (which) {
    case RecurrenceSystem::mu_nu:
        pname = "mu", sname = "nu";
        sys.n_primary = K + 1;
        sys.n_secondary = M >= 1 ? (M - 1) / 2 + 1 : 0;
        for (int j = 0; j < sys.n_primary; ++j)
            out.ansatz.push_back({0, 2 * (M - 2 * j) + 1, 2 * j});
        for (int j = 0; j < sys.n_secondary; ++j)
            out.ansatz.push_back({1, 2 * (M - 2 * j - 1), 2 * j + 1});
        // from a- chi = 0
        for (int j = 0; j <= up; ++j)
            sys.eq({{B::P(j), 2 * (M - 2 * j)}, {B::S(j), 2 * j + 1}});
        for (int j = 0; j < K; ++j)
            sys.eq({{B::P(j + 1), j + 1}, {B::S(j), -(r + M + 2 * j + 1)}});
        if (!even)
            sys.eq({{B::S(K), r + 2 * M}});
        // from at- chi = 0
        sys.eq({{B::P(0), 2 * (r + M)}, {B::S(0), -1}});
        for (int j = 0; j < K; ++j)
            sys.eq({{B::P(j + 1), j + 1}, {B::S(j), M - 2 * j - 1}});
        for (int j = 1; j <= up; ++j)
            sys.eq({{B::P(j), 2 * (r + M - 2 * j)}, {B::S(j), -(2 * j + 1)}, {B::S(j - 1), -8 * (M - 2 * j + 1)}});
        if (even)
            sys.eq({{B::P(K), r}, {B::S(K - 1), -4}});
        break;

    case RecurrenceSystem::alpha_beta:
        pname = "beta", sname = "alpha";
        sys.n_primary = K + 1;
        sys.n_secondary = M >= 1 ? (M - 1) / 2 + 1 : 0;
        for (int j = 0; j < sys.n_primary; ++j)
            out.ansatz.push_back({1, 2 * (M - 2 * j), 2 * j});
        for (int j = 0; j < sys.n_secondary; ++j)
            out.ansatz.push_back({0, 2 * (M - 2 * j - 1) + 1, 2 * j + 1});
        for (int j = 0; j < K; ++j)
            sys.eq({{B::S(j), M - 2 * j - 1}, {B::P(j + 1), j + 1}});
        for (int j = 0; j <= up; ++j)
            sys.eq({{B::S(j), -(2 * j + 1)}, {B::P(j), 2 * (r + M + 2 * j)}});
        if (even)
            sys.eq({{B::P(K), r + 2 * M}});
        for (int j = 0; j <= up; ++j)
            sys.eq({{B::S(j), 2 * j + 1}, {B::P(j), 2 * (M - 2 * j)}});
        for (int j = 0; j < K; ++j)
            sys.eq({{B::S(j), r + M - 2 * j - 1}, {B::P(j), -4 * (M - 2 * j)}, {B::P(j + 1), -(j + 1)}});
        if (!even)
            sys.eq({{B::S(K), r}, {B::P(K), -4}});
        break;

    case RecurrenceSystem::rho_sigma:
        pname = "rho", sname = "sigma";
        sys.n_primary = K + 1;
        sys.n_secondary = K;
        for (int j = 0; j < sys.n_primary; ++j)
            out.ansatz.push_back({0, 2 * M - 4 * j, 2 * j});
        for (int j = 0; j < sys.n_secondary; ++j)
            out.ansatz.push_back({1, 2 * M - 3 - 4 * j, 2 * j + 1});
        for (int j = 0; j < K; ++j)
            sys.eq({{B::P(j), 2 * (M - 2 * j)}, {B::S(j), -(2 * j + 1)}});
        for (int j = 1; j <= K; ++j)
            sys.eq({{B::P(j), j}, {B::S(j - 1), r + M + 2 * j - 1}});
        if (!even)
            sys.eq({{B::P(K), 1}});
        sys.eq({{B::P(0), 2 * M}, {B::S(0), 1}});
        for (int j = 1; j < K; ++j)
            sys.eq({{B::P(j), 2 * (M - 2 * j)}, {B::S(j), 2 * j + 1}, {B::S(j - 1), 8 * (M - 2 * j)}});
        for (int j = 1; j <= K; ++j)
            sys.eq({{B::P(j), -j}, {B::S(j - 1), r + M - 2 * j - 1}});
        if (!even)
            sys.eq({{B::P(K), 1}, {B::S(K - 1), 4}});
        break;

    case RecurrenceSystem::gamma_delta: {
        pname = "delta", sname = "gamma";
        const int n = M >= 1 ? (M - 1) / 2 + 1 : 0;
        sys.n_primary = n;
        sys.n_secondary = n;
        for (int j = 0; j < n; ++j)
            out.ansatz.push_back({1, 2 * M - 1 - 4 * j, 2 * j});
        for (int j = 0; j < n; ++j)
            out.ansatz.push_back({0, 2 * M - 2 - 4 * j, 2 * j + 1});
        for (int j = 1; j <= up; ++j)
            sys.eq({{B::S(j - 1), M - 2 * j + 1}, {B::P(j), -j}});
        for (int j = 0; j <= up; ++j)
            sys.eq({{B::S(j), 2 * j + 1}, {B::P(j), 2 * (r + M + 2 * j)}});
        if (even)
            sys.eq({{B::S(K - 1), 1}});
        for (int j = 1; j <= up; ++j)
            sys.eq({{B::S(j - 1), M - 2 * j + 1}, {B::P(j - 1), 4 * (M - 2 * j + 1)}, {B::P(j), j}});
        for (int j = 0; j <= up; ++j)
            sys.eq({{B::S(j), 2 * j + 1}, {B::P(j), -2 * (r + M - 2 * j - 2)}});
        if (even)
            sys.eq({{B::S(K - 1), 1}, {B::P(K - 1), 4}});
        break;
    }

    case RecurrenceSystem::mu_nu_lambda: {
        if (!lambda || sgn(*lambda) == 0)
            throw std::invalid_argument("mu-nu-lambda needs lambda != 0");
        const Rational& lam = *lambda;
        auto lp = [&lam](int e) { return parity(e) == 1 ? lam : Rational(1); };
        pname = "mu", sname = "nu";
        sys.n_primary = M + 1;
        sys.n_secondary = M + 1;
        for (int j = 0; j <= M; ++j)
            out.ansatz.push_back({0, 2 * (M - j) + 1, j, parity(j)});
        for (int j = 0; j <= M; ++j)
            out.ansatz.push_back({1, 2 * (M - j), j, parity(j + 1)});
        sys.eq({{B::P(M), lp(M)}, {B::S(M), -(r + 2 * M)}});
        for (int j = 0; j < M; ++j) {
            sys.eq({{B::P(j + 1), j + 1}, {B::P(j), 2 * lp(j)}, {B::S(j), -2 * (r + M + j)}});
            sys.eq({{B::P(j), 2 * (M - j)}, {B::S(j + 1), j + 1}});
        }
        sys.eq({{B::P(0), 2 * (r + M)}, {B::S(1), -1}, {B::S(0), -2 * lam}});
        for (int j = 1; j < M; ++j)
            sys.eq({{B::P(j), 2 * (r + M - j)},
                    {B::S(j + 1), -(j + 1)},
                    {B::S(j - 1), -8 * (M - j + 1)},
                    {B::S(j), -2 * lp(j + 1)}});
        sys.eq({{B::P(M), r}, {B::S(M - 1), -4}, {B::S(M), -lp(M + 1)}});
        for (int j = 0; j < M; ++j)
            sys.eq({{B::P(j + 1), j + 1}, {B::S(j), 2 * (M - j)}});
        break;
    }
    }

    for (int j = 0; j < sys.n_primary; ++j)
        out.unknowns.push_back(pname + "_" + std::to_string(j));
    for (int j = 0; j < sys.n_secondary; ++j)
        out.unknowns.push_back(sname + "_" + std::to_string(j));
    out.equations = sys.equations.size();
    out.solutions = nullspace(sys.matrix());
    return out;
}

Vector ansatz_coefficients(const ModuleVector& v, const std::vector<BasisIndex>& ansatz)
{
    Vector x;
    x.reserve(ansatz.size());
    for (const auto& b : ansatz)
        x.push_back(v.coefficient(b));
    return x;
}

Vector normalize_leading(Vector x)
{
    auto it = std::find_if(x.begin(), x.end(), [](const Rational& c) { return sgn(c) != 0; });
    if (it == x.end())
        return x;
    const Rational lead = *it;
    for (auto& c : x)
        c /= lead;
    return x;
}

}  // namespace z2rep
