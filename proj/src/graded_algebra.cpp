#include "z2rep/graded_algebra.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace z2rep {

std::string to_string(GradedDegree d)
{
    return "(" + std::to_string(d.a1) + "," + std::to_string(d.a2) + ")";
}

GradedDegree parse_degree(std::string_view text)
{
    std::string bits;
    for (char ch : text) {
        if (ch == '0' || ch == '1')
            bits.push_back(ch);
        else if (ch != '(' && ch != ')' && ch != ',' && ch != ' ')
            throw std::invalid_argument("not a Z2xZ2 degree: '" + std::string(text) + "'");
    }
    if (bits.size() != 2)
        throw std::invalid_argument("not a Z2xZ2 degree: '" + std::string(text) + "'");
    return {static_cast<std::uint8_t>(bits[0] - '0'), static_cast<std::uint8_t>(bits[1] - '0')};
}

namespace {

constexpr std::array<std::string_view, generator_count> generator_names = {
    "R", "Rt", "Lp", "Lm", "Ltp", "Ltm", "ap", "am", "atp", "atm",
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view name(Generator g) { return generator_names[index_of(g)]; }

std::optional<Generator> generator_from_name(std::string_view text)
{
    for (auto g : all_generators)
        if (name(g) == text)
            return g;
    return std::nullopt;
}

void AlgebraElement::add(Generator g, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Rational AlgebraElement::coefficient(Generator g) const
{
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<GradedDegree> AlgebraElement::homogeneous_degree() const
{
    std::optional<GradedDegree> common;
    for (const auto& [g, c] : terms_) {
        if (!common)
            common = degree_of(g);
        else if (*common != degree_of(g))
            return std::nullopt;
    }
    return common;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
    for (const auto& [g, c] : other.terms_)
        add(g, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other)
{
    for (const auto& [g, c] : other.terms_)
        add(g, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, v] : terms_)
        v *= c;
    return *this;
}

std::string to_string(const AlgebraElement& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& [g, c] : x.terms()) {
        if (!out.empty())
            out += " + ";
        out += to_string(c) + "*" + std::string(name(g));
    }
    return out;
}

AlgebraElement parse_algebra_element(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw std::invalid_argument("empty algebra element");
    AlgebraElement out;
    if (text == "0")
        return out;

    std::size_t pos = 0;
    while (pos < text.size()) {
        int sign = 1;
        while (pos < text.size() && (text[pos] == '+' || text[pos] == '-' || text[pos] == ' ')) {
            if (text[pos] == '-')
                sign = -sign;
            ++pos;
        }
        std::size_t end = pos;
        while (end < text.size() && text[end] != '+' && text[end] != '-')
            ++end;
        const std::string_view term = trim(text.substr(pos, end - pos));
        if (term.empty())
            throw std::invalid_argument("malformed algebra element: '" + std::string(text) + "'");

        Rational coeff = 1;
        std::string_view gen = term;
        if (auto star = term.find('*'); star != std::string_view::npos) {
            coeff = parse_rational(trim(term.substr(0, star)));
            gen = trim(term.substr(star + 1));
        }
        const auto g = generator_from_name(gen);
        if (!g)
            throw std::invalid_argument("unknown generator '" + std::string(gen) + "'");
        out.add(*g, sign * coeff);
        pos = end;
    }
    return out;
}

const StructureTable& StructureTable::standard()
{
    static const StructureTable table = [] {
        using G = Generator;
        StructureTable t;
        auto rel = [&t](G x, G y, AlgebraElement v) { t.set_graded_pair(x, y, v); };

        for (int s : {1, -1}) {
            const bool plus = s > 0;
            const G L = plus ? G::Lp : G::Lm;
            const G Lt = plus ? G::Ltp : G::Ltm;
            const G a = plus ? G::ap : G::am;
            const G at = plus ? G::atp : G::atm;
            const G Lopp = plus ? G::Lm : G::Lp;
            const G Ltopp = plus ? G::Ltm : G::Ltp;
            const G aopp = plus ? G::am : G::ap;
            const G atopp = plus ? G::atm : G::atp;
            (void)Lopp;

            rel(G::R, L, {L, 2 * s});
            rel(G::R, Lt, {Lt, 2 * s});
            rel(G::R, a, {a, s});
            rel(G::R, at, {at, s});
            rel(G::Rt, L, {Lt, 2 * s});
            rel(G::Rt, Lt, {L, 2 * s});
            rel(G::Rt, a, {at, 1});
            rel(G::Rt, at, {a, 1});
            rel(L, Ltopp, {G::Rt, -s});
            rel(L, atopp, {at, s});
            rel(L, aopp, {a, -s});
            rel(Lt, aopp, {at, -1});
            rel(Lt, atopp, {a, 1});
            rel(a, atopp, {G::Rt, 2 * s});
            rel(a, at, {Lt, -4 * s});
            rel(a, a, {L, 4});
            rel(at, at, {L, -4});
        }
        rel(G::Lp, G::Lm, {G::R, -1});
        rel(G::Ltp, G::Ltm, {G::R, -1});
        rel(G::ap, G::am, {G::R, 2});
        rel(G::atm, G::atp, {G::R, 2});
        return t;
    }();
    return table;
}

void StructureTable::set(Generator x, Generator y, AlgebraElement value)
{
    entries_[index_of(x) * generator_count + index_of(y)] = std::move(value);
}

void StructureTable::set_graded_pair(Generator x, Generator y, const AlgebraElement& value)
{
    set(x, y, value);
    set(y, x, Rational(-grading_sign(degree_of(x), degree_of(y))) * value);
}

BracketAssignment parse_bracket_assignment(std::string_view text)
{
    text = trim(text);
    const auto close = text.find(']');
    const auto comma = text.find(',');
    const auto eq = text.find('=', close == std::string_view::npos ? 0 : close);
    if (text.empty() || text.front() != '[' || comma == std::string_view::npos ||
        close == std::string_view::npos || eq == std::string_view::npos || comma > close)
        throw std::invalid_argument("expected '[X,Y]=expr', got '" + std::string(text) + "'");
    const auto x = generator_from_name(trim(text.substr(1, comma - 1)));
    const auto y = generator_from_name(trim(text.substr(comma + 1, close - comma - 1)));
    if (!x || !y)
        throw std::invalid_argument("unknown generator in '" + std::string(text) + "'");
    return {*x, *y, parse_algebra_element(text.substr(eq + 1))};
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, const StructureTable& table)
{
    AlgebraElement out;
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms())
            for (const auto& [g, c] : table(gx, gy).terms())
                out.add(g, cx * cy * c);
    return out;
}

AlgebraElement jacobi_sum(Generator x, Generator y, Generator z, const StructureTable& table)
{
    const GradedDegree a = degree_of(x), b = degree_of(y), c = degree_of(z);
    AlgebraElement sum;
    sum += Rational(grading_sign(a, c)) * bracket(x, bracket(y, z, table), table);
    sum += Rational(grading_sign(b, a)) * bracket(y, bracket(z, x, table), table);
    sum += Rational(grading_sign(c, b)) * bracket(z, bracket(x, y, table), table);
    return sum;
}

AxiomReport verify_axioms(const StructureTable& table)
{
    AxiomReport report;
    auto fail = [&report](std::string check, std::vector<Generator> where, AlgebraElement residual) {
        report.passed = false;
        report.failed_check = std::move(check);
        report.counterexample = std::move(where);
        report.residual = std::move(residual);
    };

    for (auto x : all_generators) {
        for (auto y : all_generators) {
            ++report.pairs_checked;
            const AlgebraElement& xy = table(x, y);
            const AlgebraElement sym =
                xy + Rational(grading_sign(degree_of(x), degree_of(y))) * table(y, x);
            if (!sym.is_zero()) {
                fail("antisymmetry", {x, y}, sym);
                return report;
            }
            const GradedDegree expected = degree_add(degree_of(x), degree_of(y));
            for (const auto& [g, c] : xy.terms()) {
                if (degree_of(g) != expected) {
                    fail("degree", {x, y}, xy);
                    return report;
                }
            }
        }
    }

    for (auto x : all_generators) {
        for (auto y : all_generators) {
            for (auto z : all_generators) {
                ++report.triples_checked;
                AlgebraElement sum = jacobi_sum(x, y, z, table);
                if (!sum.is_zero()) {
                    fail("jacobi", {x, y, z}, std::move(sum));
                    return report;
                }
            }
        }
    }
    return report;
}

}  // namespace z2rep
