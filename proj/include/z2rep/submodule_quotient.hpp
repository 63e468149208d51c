#pragma once

#include "z2rep/linalg.hpp"
#include "z2rep/singular_solver.hpp"
#include "z2rep/verma.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace z2rep {

/// A computed object contradicts a structural claim it was built to realize.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Words (at+ a+)^j a+^{q-2j} and (a+ at+)^j a+^{q-2j} on chi01 and chi10,
/// plus (at+ a+)^{(q-1)/2} at+ on both for odd q; 2(q+1) vectors.
std::vector<ModuleVector> wbasis_family(const VermaKind& kind, int M, int q);

struct SubmoduleLevel {
    VermaKind kind;
    int M;
    int q;
    std::vector<ModuleVector> basis;
    std::size_t rank;
};

/// The family above with its exact rank; throws ConsistencyError when the
/// rank falls short of 2(q+1) and ConstraintError when chi01/chi10 do not exist.
SubmoduleLevel submodule_basis(const VermaKind& kind, int M, int q);

/// Submodule generated by homogeneous vectors under the raising generators,
/// computed level by level: W_N = span(generators of level N, g W_{N-w(g)}).
class GeneratedSubmodule {
public:
    GeneratedSubmodule(VermaKind kind, std::vector<ModuleVector> generators, int max_level);

    const VermaKind& kind() const { return kind_; }
    int max_level() const { return max_level_; }
    std::size_t dim(int level) const;
    /// W_N in coordinates of enumerate_level(kind, N), reduced row echelon form.
    const Echelon& level_space(int level) const;
    const std::vector<BasisIndex>& level_basis(int level) const;
    std::vector<ModuleVector> basis(int level) const;
    /// Every homogeneous component must lie in the matching W_N.
    bool contains(const ModuleVector& v) const;

private:
    VermaKind kind_;
    int max_level_;
    std::vector<std::vector<BasisIndex>> bases_;
    std::vector<Echelon> spaces_;
};

/// Submodule generated by chi01 and chi10 for every listed M.
GeneratedSubmodule singular_submodule(const VermaKind& kind, const std::vector<int>& Ms, int max_level);

struct Chi11Membership {
    int M;
    /// word sums: index p pairs the two words on chi01 and chi10.
    std::vector<ModuleVector> words;
    Matrix A;
    Vector rhs;
    Rational determinant;
    Vector c;
    /// chi11 - sum_p c_p words_p
    ModuleVector residual;
};

/// Expresses chi11 in M(-2M) through the raising words on chi01, chi10.
/// Throws ConsistencyError if the coefficient system is singular or the words
/// leave the span they are expected to stay in.
Chi11Membership chi11_membership(int M);

enum class TheoremCase : std::uint8_t { i, ii, iii, iv };
std::string to_string(TheoremCase c);

struct LevelDims {
    int level;
    std::size_t verma_dim;
    std::size_t submodule_dim;
    std::size_t quotient_dim;
};

struct QuotientTable {
    std::vector<LevelDims> per_level;
    /// Set when the quotient vanishes at some computed level; it then vanishes
    /// at every higher level, so the sum is the total dimension.
    std::optional<std::size_t> total;
};

/// Per-level dims of M/W with W generated by all singular pairs of the
/// constraint solutions. Stops after the first level where the quotient vanishes.
QuotientTable quotient_dims(const VermaKind& kind, int max_level, int m_cap = 32);

struct ClassificationVerdict {
    VermaKind kind;
    TheoremCase theorem_case;
    /// Every M in 0..m_cap satisfying r+2M = 0 or (r+2M)^2 = lambda.
    std::vector<int> Ms;
    QuotientTable table;
    /// Each chi01/chi10 closed form is annihilated by a-, at-.
    bool singular_vectors_verified = true;
    /// Dimension of quotient singular vectors at each level >= 1 (all zero for an irreducible quotient).
    std::vector<std::size_t> quotient_singular_dims;

    bool finite() const { return table.total.has_value(); }
    bool quotient_irreducible() const;
};

/// Theorem cases: (i) M(r) with r+2M != 0, (ii) M(r) with r = -2M,
/// (iii) M(r,lambda) with (r+2M)^2 != lambda, (iv) (r+2M)^2 = lambda.
/// For case (ii) the level range is extended until the quotient terminates.
/// Throws std::invalid_argument when a constraint solution exceeds m_cap.
ClassificationVerdict classify_module(const VermaKind& kind, int max_level, int m_cap = 32);

/// Dimension of {v in M_N : a- v, at- v in W_{N-1}} modulo W_N.
std::size_t quotient_singular_dim(const GeneratedSubmodule& w, int level);

}  // namespace z2rep
