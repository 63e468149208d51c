#include "z2rep/verma.hpp"

#include <stdexcept>

namespace z2rep {

VermaKind VermaKind::mr(Rational r) { return {VermaTag::Mr, std::move(r), 0}; }

VermaKind VermaKind::mr_lambda(Rational r, Rational lambda)
{
    if (sgn(lambda) == 0)
        throw std::invalid_argument("M(r,lambda) requires lambda != 0");
    return {VermaTag::MrLambda, std::move(r), std::move(lambda)};
}

const Rational& VermaKind::lambda() const
{
    if (!has_lambda())
        throw std::logic_error("M(r) has no lambda");
    return lambda_;
}

std::optional<Rational> VermaKind::lambda_opt() const
{
    if (!has_lambda())
        return std::nullopt;
    return lambda_;
}

std::string to_string(const VermaKind& kind)
{
    if (kind.has_lambda())
        return "M(" + to_string(kind.r()) + "," + to_string(kind.lambda()) + ")";
    return "M(" + to_string(kind.r()) + ")";
}

GradedDegree BasisIndex::degree() const
{
    const int b = has_beta() ? beta : 0;
    return {static_cast<std::uint8_t>(parity(alpha + m + b)), static_cast<std::uint8_t>(parity(k + m + b))};
}

std::string to_string(const BasisIndex& b)
{
    std::string out = "|" + std::to_string(b.alpha) + "," + std::to_string(b.k) + "," + std::to_string(b.m);
    if (b.has_beta())
        out += ";" + std::to_string(b.beta);
    return out + ">";
}

ModuleVector::ModuleVector(VermaKind kind, const BasisIndex& b, Rational c) : kind_(std::move(kind))
{
    add(b, c);
}

Rational ModuleVector::coefficient(const BasisIndex& b) const
{
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ModuleVector::add(const BasisIndex& b, const Rational& c)
{
    if (b.has_beta() != kind_.has_lambda())
        throw std::invalid_argument("basis index " + to_string(b) + " does not belong to " + to_string(kind_));
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

std::optional<int> ModuleVector::homogeneous_level() const
{
    std::optional<int> level;
    for (const auto& [b, c] : terms_) {
        if (!level)
            level = b.level();
        else if (*level != b.level())
            return std::nullopt;
    }
    return level;
}

std::optional<GradedDegree> ModuleVector::homogeneous_degree() const
{
    std::optional<GradedDegree> degree;
    for (const auto& [b, c] : terms_) {
        if (!degree)
            degree = b.degree();
        else if (*degree != b.degree())
            return std::nullopt;
    }
    return degree;
}

void ModuleVector::require_same_kind(const ModuleVector& other) const
{
    if (!(kind_ == other.kind_))
        throw std::invalid_argument("mixing vectors of " + to_string(kind_) + " and " + to_string(other.kind_));
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other)
{
    require_same_kind(other);
    for (const auto& [b, c] : other.terms_)
        add(b, c);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other)
{
    require_same_kind(other);
    for (const auto& [b, c] : other.terms_)
        add(b, -c);
    return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, v] : terms_)
        v *= c;
    return *this;
}

std::string to_string(const ModuleVector& v)
{
    if (v.is_zero())
        return "0";
    std::string out;
    for (const auto& [b, c] : v.terms()) {
        if (!out.empty())
            out += " + ";
        out += to_string(c) + to_string(b);
    }
    return out;
}

WeightSpace enumerate_level(const VermaKind& kind, int level)
{
    WeightSpace ws{kind, level, {}};
    if (level < 0)
        return ws;
    for (int m = 0; 2 * m <= level; ++m) {
        for (int k = 0; k + 2 * m <= level; ++k) {
            const int alpha = level - 2 * m - k;
            if (alpha > 1)
                continue;
            if (kind.has_lambda()) {
                ws.basis.push_back({alpha, k, m, 0});
                ws.basis.push_back({alpha, k, m, 1});
            } else {
                ws.basis.push_back({alpha, k, m, -1});
            }
        }
    }
    return ws;
}

std::vector<BasisIndex> sector_basis(const VermaKind& kind, int level, GradedDegree sector)
{
    std::vector<BasisIndex> out;
    for (const auto& b : enumerate_level(kind, level).basis)
        if (b.degree() == sector)
            out.push_back(b);
    return out;
}

std::array<GradedDegree, 2> level_sectors(int level)
{
    if (parity(level) == 0)
        return {GradedDegree{0, 0}, GradedDegree{1, 1}};
    return {GradedDegree{0, 1}, GradedDegree{1, 0}};
}

Vector coordinates(const ModuleVector& v, const std::vector<BasisIndex>& basis)
{
    Vector x(basis.size());
    std::size_t found = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = v.terms().find(basis[i]);
        if (it != v.terms().end()) {
            x[i] = it->second;
            ++found;
        }
    }
    if (found != v.terms().size())
        throw std::invalid_argument("vector has terms outside the given basis: " + to_string(v));
    return x;
}

ModuleVector from_coordinates(const VermaKind& kind, const std::vector<BasisIndex>& basis, const Vector& x)
{
    if (x.size() != basis.size())
        throw std::invalid_argument("coordinate length does not match the basis");
    ModuleVector v(kind);
    for (std::size_t i = 0; i < basis.size(); ++i)
        v.add(basis[i], x[i]);
    return v;
}

namespace {

int sign_pow(int e) { return parity(e) == 0 ? 1 : -1; }

/// Collects terms of a basis action; out-of-range indices vanish.
struct Terms {
    ModuleVector& out;

    void operator()(int alpha, int k, int m, int beta, const Rational& c) const
    {
        if (k < 0 || m < 0 || sgn(c) == 0)
            return;
        out.add({alpha, k, m, beta}, c);
    }
};

/// The generators with printed formulas act directly; L+ and L- go through
/// L+ = -(at+)^2/2 and L- = (a-)^2/2.
void act_basis(Generator g, const VermaKind& kind, const BasisIndex& b, ActionVariant variant, ModuleVector& out)
{
    const Rational& r = kind.r();
    const bool lam = kind.has_lambda();
    const int a = b.alpha, k = b.k, m = b.m, beta = b.beta;
    const int kb = parity(k);
    const int nb = lam ? 1 - beta : -1;
    // lambda^beta
    const Rational lp = lam && beta == 1 ? kind.lambda() : Rational(1);
    Terms add{out};

    switch (g) {
    case Generator::R:
        add(a, k, m, beta, r + a + k + 2 * m);
        break;
    case Generator::Rt:
        if (a == 0) {
            add(0, k + 2, m - 1, beta, sign_pow(k) * m);
            add(0, k - 2, m + 1, beta, sign_pow(k) * 2 * (k - kb));
            add(1, k - 1, m, beta, kb);
            if (lam)
                add(0, k, m, nb, sign_pow(k) * lp);
        } else {
            add(1, k + 2, m - 1, beta, sign_pow(k + 1) * m);
            add(1, k - 2, m + 1, beta, sign_pow(k + 1) * 2 * (k - kb));
            add(0, k + 1, m, beta, 1 + kb);
            if (lam)
                add(1, k, m, nb, sign_pow(k + 1) * lp);
        }
        break;
    case Generator::atp:
        add(1 - a, k + 2 * a, m, beta, sign_pow(a));
        break;
    case Generator::ap:
        add(a, k + 1, m, beta, 1);
        add(0, k, m + 1, beta, sign_pow(k + 1) * 4 * a);
        break;
    case Generator::Ltp:
        add(a, k, m + 1, beta, sign_pow(a + k));
        break;
    case Generator::atm:
        if (a == 0) {
            add(1, k - 2, m, beta, -(k - kb));
            add(0, k + 1, m - 1, beta, sign_pow(k) * m);
            if (lam)
                add(0, k - 1, m, nb, -2 * kb * lp);
        } else {
            add(0, k, m, beta, 2 * r + k + kb + 4 * m);
            add(1, k + 1, m - 1, beta, sign_pow(k + 1) * m);
            if (lam)
                add(1, k - 1, m, nb, 2 * kb * lp);
        }
        break;
    case Generator::am:
        if (a == 0) {
            add(0, k - 1, m, beta, k + (2 * r - 1) * kb);
            add(1, k, m - 1, beta, sign_pow(k + 1) * m);
        } else {
            add(1, k - 1, m, beta, k + (2 * r - 3) * kb);
            add(0, k + 2, m - 1, beta, sign_pow(k + 1) * m);
            add(0, k - 2, m + 1, beta, sign_pow(k + 1) * 4 * (k - kb));
            if (lam) {
                const int factor = variant == ActionVariant::consistent ? 2 : 1;
                add(0, k, m, nb, factor * sign_pow(k + 1) * lp);
            }
        }
        break;
    case Generator::Ltm:
        if (a == 0) {
            add(0, k, m - 1, beta, sign_pow(k) * m * (r + k + m - 1));
            add(0, k - 4, m + 1, beta, sign_pow(k) * (k - kb) * (k - kb - 2));
            add(1, k - 3, m, beta, kb * (k - 1));
            if (lam)
                add(0, k - 2, m, nb, sign_pow(k) * (k - kb) * lp);
        } else {
            add(1, k, m - 1, beta, sign_pow(k + 1) * m * (r + k + m));
            add(1, k - 4, m + 1, beta, sign_pow(k + 1) * (k - kb) * (k - kb - 2));
            add(0, k - 1, m, beta, 2 * (r - 1) * kb + (kb + 1) * k);
            if (lam)
                add(1, k - 2, m, nb, sign_pow(k + 1) * (k - kb) * lp);
        }
        break;
    case Generator::Lp: {
        const ModuleVector v = act(Generator::atp, act_on_index(Generator::atp, kind, b, variant), variant);
        for (const auto& [idx, c] : v.terms())
            out.add(idx, -c / 2);
        break;
    }
    case Generator::Lm: {
        const ModuleVector v = act(Generator::am, act_on_index(Generator::am, kind, b, variant), variant);
        for (const auto& [idx, c] : v.terms())
            out.add(idx, c / 2);
        break;
    }
    }
}

}  // namespace

ModuleVector act_on_index(Generator g, const VermaKind& kind, const BasisIndex& b, ActionVariant variant)
{
    ModuleVector out(kind);
    act_basis(g, kind, b, variant, out);
    return out;
}

ModuleVector act(Generator g, const ModuleVector& v, ActionVariant variant)
{
    ModuleVector out(v.kind());
    for (const auto& [b, c] : v.terms())
        out += c * act_on_index(g, v.kind(), b, variant);
    return out;
}

ModuleVector act_word(const std::vector<Generator>& gs, const ModuleVector& v, ActionVariant variant)
{
    ModuleVector out = v;
    for (auto it = gs.rbegin(); it != gs.rend(); ++it)
        out = act(*it, out, variant);
    return out;
}

ModuleVector act_of_element(const AlgebraElement& x, const ModuleVector& v, ActionVariant variant)
{
    ModuleVector out(v.kind());
    for (const auto& [g, c] : x.terms())
        out += c * act(g, v, variant);
    return out;
}

ModuleVector check_representation_property(Generator g1, Generator g2, const ModuleVector& v, ActionVariant variant)
{
    const Rational s = grading_sign(degree_of(g1), degree_of(g2));
    ModuleVector res = act(g1, act(g2, v, variant), variant);
    res -= s * act(g2, act(g1, v, variant), variant);
    res -= act_of_element(StructureTable::standard()(g1, g2), v, variant);
    return res;
}

Matrix action_matrix(Generator g, const VermaKind& kind, const std::vector<BasisIndex>& source,
                     const std::vector<BasisIndex>& target)
{
    Matrix out(target.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
        const Vector col = coordinates(act_on_index(g, kind, source[j]), target);
        for (std::size_t i = 0; i < target.size(); ++i)
            out(i, j) = col[i];
    }
    return out;
}

}  // namespace z2rep
