#include "z2rep/submodule_quotient.hpp"

#include <algorithm>

namespace z2rep {

namespace {

using G = Generator;

std::vector<G> repeat(G g, int n) { return std::vector<G>(static_cast<std::size_t>(std::max(n, 0)), g); }

std::vector<G> concat(std::initializer_list<std::vector<G>> parts)
{
    std::vector<G> out;
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<G> pair_power(G first, G second, int j)
{
    std::vector<G> out;
    for (int i = 0; i < j; ++i) {
        out.push_back(first);
        out.push_back(second);
    }
    return out;
}

std::vector<Vector> coordinate_rows(const std::vector<ModuleVector>& vs, const std::vector<BasisIndex>& basis)
{
    std::vector<Vector> rows;
    rows.reserve(vs.size());
    for (const auto& v : vs)
        rows.push_back(coordinates(v, basis));
    return rows;
}

}  // namespace

std::vector<ModuleVector> wbasis_family(const VermaKind& kind, int M, int q)
{
    if (q < 0)
        throw std::invalid_argument("q must be nonnegative");
    std::vector<ModuleVector> out;
    for (Chi which : {Chi::chi01, Chi::chi10}) {
        const ModuleVector chi = closed_form(kind, which, M);
        for (int j = 0; 2 * j <= q; ++j) {
            out.push_back(act_word(concat({pair_power(G::atp, G::ap, j), repeat(G::ap, q - 2 * j)}), chi));
            if (j > 0)
                out.push_back(act_word(concat({pair_power(G::ap, G::atp, j), repeat(G::ap, q - 2 * j)}), chi));
        }
        if (q % 2 == 1)
            out.push_back(act_word(concat({pair_power(G::atp, G::ap, (q - 1) / 2), {G::atp}}), chi));
    }
    return out;
}

SubmoduleLevel submodule_basis(const VermaKind& kind, int M, int q)
{
    SubmoduleLevel level{kind, M, q, wbasis_family(kind, M, q), 0};
    const auto basis = enumerate_level(kind, 2 * M + 1 + q).basis;
    level.rank = rank(coordinate_rows(level.basis, basis), basis.size());
    const auto expected = static_cast<std::size_t>(2 * (q + 1));
    if (level.rank != expected)
        throw ConsistencyError("W at level " + std::to_string(2 * M + 1 + q) + " of " + to_string(kind) +
                               ": family of " + std::to_string(level.basis.size()) + " words has rank " +
                               std::to_string(level.rank) + ", expected " + std::to_string(expected));
    return level;
}

GeneratedSubmodule::GeneratedSubmodule(VermaKind kind, std::vector<ModuleVector> generators, int max_level)
    : kind_(std::move(kind)), max_level_(max_level)
{
    if (max_level < 0)
        throw std::invalid_argument("max_level must be nonnegative");
    std::vector<std::vector<ModuleVector>> seeds(static_cast<std::size_t>(max_level) + 1);
    for (auto& g : generators) {
        if (g.is_zero())
            continue;
        const auto level = g.homogeneous_level();
        if (!level)
            throw std::invalid_argument("submodule generators must be homogeneous in level");
        if (*level <= max_level)
            seeds[static_cast<std::size_t>(*level)].push_back(std::move(g));
    }

    constexpr std::array<G, 4> raising = {G::ap, G::atp, G::Lp, G::Ltp};
    for (int N = 0; N <= max_level; ++N) {
        bases_.push_back(enumerate_level(kind_, N).basis);
        std::vector<ModuleVector> span = seeds[static_cast<std::size_t>(N)];
        for (G g : raising) {
            const int from = N - ad_weight(g);
            if (from < 0)
                continue;
            for (const auto& w : basis(from))
                span.push_back(act(g, w));
        }
        const auto& b = bases_.back();
        if (span.empty())
            spaces_.push_back({Matrix(0, b.size()), {}});
        else
            spaces_.push_back(rref(Matrix::from_rows(coordinate_rows(span, b), b.size())));
    }
}

std::size_t GeneratedSubmodule::dim(int level) const { return level_space(level).pivots.size(); }

const Echelon& GeneratedSubmodule::level_space(int level) const
{
    if (level < 0 || level > max_level_)
        throw std::out_of_range("level " + std::to_string(level) + " outside 0.." + std::to_string(max_level_));
    return spaces_[static_cast<std::size_t>(level)];
}

const std::vector<BasisIndex>& GeneratedSubmodule::level_basis(int level) const
{
    level_space(level);
    return bases_[static_cast<std::size_t>(level)];
}

std::vector<ModuleVector> GeneratedSubmodule::basis(int level) const
{
    std::vector<ModuleVector> out;
    const Echelon& e = level_space(level);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        out.push_back(from_coordinates(kind_, level_basis(level), e.reduced.row(i)));
    return out;
}

bool GeneratedSubmodule::contains(const ModuleVector& v) const
{
    std::map<int, ModuleVector> parts;
    for (const auto& [b, c] : v.terms())
        parts.try_emplace(b.level(), kind_).first->second.add(b, c);
    for (const auto& [level, part] : parts) {
        if (level > max_level_)
            throw std::out_of_range("vector of level " + std::to_string(level) + " beyond the computed range");
        if (!in_row_space(level_space(level), coordinates(part, level_basis(level))))
            return false;
    }
    return true;
}

GeneratedSubmodule singular_submodule(const VermaKind& kind, const std::vector<int>& Ms, int max_level)
{
    std::vector<ModuleVector> generators;
    for (int M : Ms) {
        generators.push_back(closed_form(kind, Chi::chi01, M));
        generators.push_back(closed_form(kind, Chi::chi10, M));
    }
    return GeneratedSubmodule(kind, std::move(generators), max_level);
}

Chi11Membership chi11_membership(int M)
{
    if (M < 0)
        throw std::invalid_argument("M must be nonnegative");
    const VermaKind kind = VermaKind::mr(-2 * M);
    const ModuleVector chi01 = closed_form(kind, Chi::chi01, M);
    const ModuleVector chi10 = closed_form(kind, Chi::chi10, M);
    const ModuleVector chi11 = closed_form(kind, Chi::chi11, M);

    Chi11Membership out{M, {}, Matrix(M + 1, M + 1), Vector(M + 1), 0, {}, ModuleVector(kind)};
    for (int p = 0; p <= M; ++p) {
        if (p % 2 == 0) {
            const int k = p / 2;
            out.words.push_back(
                act_word(concat({{G::atp}, repeat(G::ap, 2 * (M - 2 * k)), repeat(G::Ltp, 2 * k)}), chi01) +
                act_word(concat({repeat(G::ap, 2 * (M - 2 * k) + 1), repeat(G::Ltp, 2 * k)}), chi10));
        } else {
            const int k = (p - 1) / 2;
            out.words.push_back(
                act_word(concat({repeat(G::ap, 2 * (M - 2 * k) - 1), repeat(G::Ltp, 2 * k + 1)}), chi01) +
                act_word(concat({{G::atp}, repeat(G::ap, 2 * (M - 2 * k - 1)), repeat(G::Ltp, 2 * k + 1)}), chi10));
        }
    }

    // Every word sum is a combination of e_j = -2|0,4(M-j),2j+1> + |1,4(M-j)+1,2j>;
    // A(j,p) is the e_j component of word sum p.
    for (int p = 0; p <= M; ++p) {
        ModuleVector rest = out.words[static_cast<std::size_t>(p)];
        for (int j = 0; j <= M; ++j) {
            const BasisIndex odd{1, 4 * (M - j) + 1, 2 * j};
            const Rational c = rest.coefficient(odd);
            out.A(j, p) = c;
            ModuleVector e(kind, odd);
            e.add({0, 4 * (M - j), 2 * j + 1}, -2);
            rest -= c * e;
        }
        if (!rest.is_zero())
            throw ConsistencyError("word sum " + std::to_string(p) + " leaves the span of the e_j: " + to_string(rest));
    }
    for (int j = 0; j <= M; ++j)
        out.rhs[j] = chi11.coefficient({1, 4 * (M - j) + 1, 2 * j});

    out.determinant = determinant(out.A);
    if (sgn(out.determinant) == 0)
        throw ConsistencyError("coefficient matrix for M = " + std::to_string(M) + " is singular");
    auto c = solve_unique(out.A, out.rhs);
    if (!c)
        throw ConsistencyError("no unique solution for M = " + std::to_string(M));
    out.c = std::move(*c);

    out.residual = chi11;
    for (int p = 0; p <= M; ++p)
        out.residual -= out.c[p] * out.words[static_cast<std::size_t>(p)];
    return out;
}

std::string to_string(TheoremCase c)
{
    switch (c) {
    case TheoremCase::i:
        return "i";
    case TheoremCase::ii:
        return "ii";
    case TheoremCase::iii:
        return "iii";
    case TheoremCase::iv:
        return "iv";
    }
    return "?";
}

namespace {

QuotientTable tabulate(const GeneratedSubmodule& w)
{
    QuotientTable table;
    std::size_t total = 0;
    for (int N = 0; N <= w.max_level(); ++N) {
        const std::size_t vd = w.level_basis(N).size();
        const std::size_t wd = w.dim(N);
        table.per_level.push_back({N, vd, wd, vd - wd});
        total += vd - wd;
        if (vd == wd) {
            table.total = total;
            break;
        }
    }
    return table;
}

}  // namespace

namespace {

std::vector<int> checked_solutions(const VermaKind& kind, int m_cap)
{
    for (const auto& M : all_constraint_solutions(kind))
        if (M > m_cap)
            throw std::invalid_argument(to_string(kind) + " has a singular pair at M = " + M.get_str() +
                                        ", beyond the M cap " + std::to_string(m_cap));
    return constraint_solutions(kind, m_cap);
}

}  // namespace

QuotientTable quotient_dims(const VermaKind& kind, int max_level, int m_cap)
{
    return tabulate(singular_submodule(kind, checked_solutions(kind, m_cap), max_level));
}

std::size_t quotient_singular_dim(const GeneratedSubmodule& w, int level)
{
    if (level < 1)
        throw std::invalid_argument("quotient singular vectors live at positive levels");
    const auto& source = w.level_basis(level);
    const auto& target = w.level_basis(level - 1);
    const Echelon& below = w.level_space(level - 1);

    // Columns: a- and at- images of each basis vector, reduced modulo W_{N-1}.
    Matrix images(2 * target.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
        const ModuleVector e(w.kind(), source[j]);
        const Vector am = reduce_modulo(below, coordinates(act(G::am, e), target));
        const Vector atm = reduce_modulo(below, coordinates(act(G::atm, e), target));
        for (std::size_t i = 0; i < target.size(); ++i) {
            images(i, j) = am[i];
            images(target.size() + i, j) = atm[i];
        }
    }
    const std::size_t kernel = source.size() - rank(images);
    return kernel - w.dim(level);
}

bool ClassificationVerdict::quotient_irreducible() const
{
    return std::all_of(quotient_singular_dims.begin(), quotient_singular_dims.end(),
                       [](std::size_t d) { return d == 0; });
}

ClassificationVerdict classify_module(const VermaKind& kind, int max_level, int m_cap)
{
    ClassificationVerdict v{kind, TheoremCase::i, checked_solutions(kind, m_cap), {}, true, {}};
    if (kind.has_lambda())
        v.theorem_case = v.Ms.empty() ? TheoremCase::iii : TheoremCase::iv;
    else
        v.theorem_case = v.Ms.empty() ? TheoremCase::i : TheoremCase::ii;

    int top = max_level;
    for (int M : v.Ms) {
        for (Chi which : {Chi::chi01, Chi::chi10})
            v.singular_vectors_verified = v.singular_vectors_verified && is_singular(closed_form(kind, which, M));
        if (v.theorem_case == TheoremCase::ii)
            top = std::max(top, 4 * M + 1);
    }

    const GeneratedSubmodule w = singular_submodule(kind, v.Ms, top);
    v.table = tabulate(w);
    const int last = v.table.per_level.back().level;
    for (int N = 1; N <= last; ++N)
        v.quotient_singular_dims.push_back(quotient_singular_dim(w, N));
    return v;
}

}  // namespace z2rep
