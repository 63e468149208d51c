#pragma once

#include "z2rep/graded_algebra.hpp"
#include "z2rep/linalg.hpp"
#include "z2rep/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace z2rep {

enum class VermaTag : std::uint8_t { Mr, MrLambda };

/// M(r) or M(r, lambda). lambda is present and nonzero iff tag == MrLambda.
class VermaKind {
public:
    static VermaKind mr(Rational r);
    /// Throws std::invalid_argument when lambda == 0.
    static VermaKind mr_lambda(Rational r, Rational lambda);

    VermaTag tag() const { return tag_; }
    bool has_lambda() const { return tag_ == VermaTag::MrLambda; }
    const Rational& r() const { return r_; }
    /// Throws std::logic_error for M(r).
    const Rational& lambda() const;
    std::optional<Rational> lambda_opt() const;

    friend bool operator==(const VermaKind&, const VermaKind&) = default;

private:
    VermaKind(VermaTag tag, Rational r, Rational lambda) : tag_(tag), r_(std::move(r)), lambda_(std::move(lambda)) {}

    VermaTag tag_;
    Rational r_;
    Rational lambda_;  // 0 for M(r)
};

std::string to_string(const VermaKind& kind);

/// |alpha,k,m> or |alpha,k,m;beta>. beta < 0 encodes "absent".
struct BasisIndex {
    int alpha = 0;
    int k = 0;
    int m = 0;
    int beta = -1;

    bool has_beta() const { return beta >= 0; }
    int level() const { return alpha + k + 2 * m; }
    GradedDegree degree() const;

    /// Level first, then the canonical order within a level: m, k, alpha, beta.
    friend auto operator<=>(const BasisIndex& a, const BasisIndex& b)
    {
        if (auto c = a.level() <=> b.level(); c != 0)
            return c;
        if (auto c = a.m <=> b.m; c != 0)
            return c;
        if (auto c = a.k <=> b.k; c != 0)
            return c;
        if (auto c = a.alpha <=> b.alpha; c != 0)
            return c;
        return a.beta <=> b.beta;
    }
    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

inline int parity(int k) { return ((k % 2) + 2) % 2; }

std::string to_string(const BasisIndex& b);

/// Finite rational combination of basis vectors of a fixed Verma module.
class ModuleVector {
public:
    using Terms = std::map<BasisIndex, Rational>;

    explicit ModuleVector(VermaKind kind) : kind_(std::move(kind)) {}
    ModuleVector(VermaKind kind, const BasisIndex& b, Rational c = 1);

    const VermaKind& kind() const { return kind_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const BasisIndex& b) const;

    /// Adds c*|b>; rejects indices whose beta presence does not match the kind.
    void add(const BasisIndex& b, const Rational& c);

    std::optional<int> homogeneous_level() const;
    std::optional<GradedDegree> homogeneous_degree() const;

    ModuleVector& operator+=(const ModuleVector& other);
    ModuleVector& operator-=(const ModuleVector& other);
    ModuleVector& operator*=(const Rational& c);

    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const Rational& c, ModuleVector a) { return a *= c; }
    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

private:
    void require_same_kind(const ModuleVector& other) const;

    VermaKind kind_;
    Terms terms_;
};

std::string to_string(const ModuleVector& v);

struct WeightSpace {
    VermaKind kind;
    int level;
    std::vector<BasisIndex> basis;
};

/// All basis indices of level N in canonical order.
WeightSpace enumerate_level(const VermaKind& kind, int level);

/// The canonically ordered indices of level N and the given degree.
std::vector<BasisIndex> sector_basis(const VermaKind& kind, int level, GradedDegree sector);

/// The two degree sectors occurring at a level: {(0,0),(1,1)} or {(0,1),(1,0)}.
std::array<GradedDegree, 2> level_sectors(int level);

/// Coordinates of v against basis; throws if v has a term outside the basis.
Vector coordinates(const ModuleVector& v, const std::vector<BasisIndex>& basis);
ModuleVector from_coordinates(const VermaKind& kind, const std::vector<BasisIndex>& basis, const Vector& x);

enum class ActionVariant : std::uint8_t {
    /// Representation-consistent table (the lambda term of a- on |1,k,m;beta> carries a factor 2).
    consistent,
    /// Same table with that lambda coefficient taken as (-1)^{k+1} lambda^beta.
    unit_lambda_am,
};

ModuleVector act(Generator g, const ModuleVector& v, ActionVariant variant = ActionVariant::consistent);
ModuleVector act_on_index(Generator g, const VermaKind& kind, const BasisIndex& b,
                          ActionVariant variant = ActionVariant::consistent);

/// Applies gs right to left: gs = {g1, g2} gives g1(g2 v).
ModuleVector act_word(const std::vector<Generator>& gs, const ModuleVector& v,
                      ActionVariant variant = ActionVariant::consistent);

/// Throws std::invalid_argument when x is applied to vectors of different kinds.
ModuleVector act_of_element(const AlgebraElement& x, const ModuleVector& v,
                            ActionVariant variant = ActionVariant::consistent);

/// g1 g2 v - (-1)^{deg g1 . deg g2} g2 g1 v - [[g1,g2]] v
ModuleVector check_representation_property(Generator g1, Generator g2, const ModuleVector& v,
                                           ActionVariant variant = ActionVariant::consistent);

/// Matrix of g from the level-N sector to the level-(N + ad_weight(g)) space;
/// rows are indexed by `target`, columns by `source`.
Matrix action_matrix(Generator g, const VermaKind& kind, const std::vector<BasisIndex>& source,
                     const std::vector<BasisIndex>& target);

}  // namespace z2rep
