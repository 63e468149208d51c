#pragma once

#include "z2rep/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace z2rep {

/// An element of Z2 x Z2.
struct GradedDegree {
    std::uint8_t a1 = 0;
    std::uint8_t a2 = 0;

    friend constexpr bool operator==(GradedDegree, GradedDegree) = default;
    friend constexpr auto operator<=>(GradedDegree, GradedDegree) = default;
};

constexpr GradedDegree degree_add(GradedDegree a, GradedDegree b)
{
    return {static_cast<std::uint8_t>((a.a1 + b.a1) % 2), static_cast<std::uint8_t>((a.a2 + b.a2) % 2)};
}

constexpr int degree_dot(GradedDegree a, GradedDegree b) { return (a.a1 * b.a1 + a.a2 * b.a2) % 2; }

/// (-1)^{a.b}
constexpr int grading_sign(GradedDegree a, GradedDegree b) { return degree_dot(a, b) == 0 ? 1 : -1; }

std::string to_string(GradedDegree d);

/// Parses "(a,b)", "ab" or "a,b" with bits a, b.
GradedDegree parse_degree(std::string_view text);

enum class Generator : std::uint8_t { R, Rt, Lp, Lm, Ltp, Ltm, ap, am, atp, atm };

inline constexpr std::size_t generator_count = 10;

inline constexpr std::array<Generator, generator_count> all_generators = {
    Generator::R,   Generator::Rt, Generator::Lp, Generator::Lm,  Generator::Ltp,
    Generator::Ltm, Generator::ap, Generator::am, Generator::atp, Generator::atm,
};

constexpr std::size_t index_of(Generator g) { return static_cast<std::size_t>(g); }

constexpr GradedDegree degree_of(Generator g)
{
    switch (g) {
    case Generator::R:
    case Generator::Lp:
    case Generator::Lm:
        return {0, 0};
    case Generator::ap:
    case Generator::am:
        return {0, 1};
    case Generator::atp:
    case Generator::atm:
        return {1, 0};
    case Generator::Rt:
    case Generator::Ltp:
    case Generator::Ltm:
        return {1, 1};
    }
    return {0, 0};
}

/// Eigenvalue of ad R.
constexpr int ad_weight(Generator g)
{
    switch (g) {
    case Generator::Lp:
    case Generator::Ltp:
        return 2;
    case Generator::ap:
    case Generator::atp:
        return 1;
    case Generator::R:
    case Generator::Rt:
        return 0;
    case Generator::am:
    case Generator::atm:
        return -1;
    case Generator::Lm:
    case Generator::Ltm:
        return -2;
    }
    return 0;
}

std::string_view name(Generator g);
std::optional<Generator> generator_from_name(std::string_view text);

/// Finite rational combination of generators. Zero coefficients are never stored.
class AlgebraElement {
public:
    using Terms = std::map<Generator, Rational>;

    AlgebraElement() = default;
    AlgebraElement(Generator g) { terms_.emplace(g, 1); }  // NOLINT(google-explicit-constructor)
    AlgebraElement(Generator g, Rational c) { add(g, std::move(c)); }

    void add(Generator g, const Rational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(Generator g) const;

    /// The common degree of all present generators, if there is one.
    std::optional<GradedDegree> homogeneous_degree() const;

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rational& c);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    Terms terms_;
};

std::string to_string(const AlgebraElement& x);

/// Parses a sum like "2*R", "-Lp", "Lp + 1/2*Ltp" or "0".
AlgebraElement parse_algebra_element(std::string_view text);

/// Brackets of all 100 ordered generator pairs.
class StructureTable {
public:
    /// The defining relations of Z2^2-graded osp(1|2), both orderings stored.
    static const StructureTable& standard();

    const AlgebraElement& operator()(Generator x, Generator y) const
    {
        return entries_[index_of(x) * generator_count + index_of(y)];
    }

    /// Overwrites a single ordered entry.
    void set(Generator x, Generator y, AlgebraElement value);

    /// Sets [[x,y]] and the graded-antisymmetric partner [[y,x]].
    void set_graded_pair(Generator x, Generator y, const AlgebraElement& value);

private:
    std::array<AlgebraElement, generator_count * generator_count> entries_;
};

/// A parsed assignment "[X,Y]=expr".
struct BracketAssignment {
    Generator x;
    Generator y;
    AlgebraElement value;
};

BracketAssignment parse_bracket_assignment(std::string_view text);

/// General Lie bracket, bilinear over the terms.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y,
                       const StructureTable& table = StructureTable::standard());

struct AxiomReport {
    bool passed = true;
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    /// "antisymmetry", "degree" or "jacobi" for the first failed check.
    std::optional<std::string> failed_check;
    std::vector<Generator> counterexample;
    AlgebraElement residual;
};

/// Graded antisymmetry and degree additivity on all pairs, then the graded
/// Jacobi identity on all ordered triples. Stops at the first violation.
AxiomReport verify_axioms(const StructureTable& table = StructureTable::standard());

/// (-1)^{a.c}[[X,[[Y,Z]]]] + (-1)^{b.a}[[Y,[[Z,X]]]] + (-1)^{c.b}[[Z,[[X,Y]]]]
AlgebraElement jacobi_sum(Generator x, Generator y, Generator z, const StructureTable& table);

}  // namespace z2rep
