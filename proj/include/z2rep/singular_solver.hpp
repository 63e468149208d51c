#pragma once

#include "z2rep/linalg.hpp"
#include "z2rep/verma.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace z2rep {

/// A closed form was requested for parameters that violate its defining identity.
class ConstraintError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class Chi : std::uint8_t { chi01, chi10, chi11 };
std::string to_string(Chi which);

enum class ClosedFormMatch : std::uint8_t { exact, scalar_multiple, mismatch, no_closed_form };
std::string to_string(ClosedFormMatch match);

struct RtildeComparison {
    Rational computed;
    Rational stated;
};

struct SingularReport {
    VermaKind kind;
    int level;
    GradedDegree sector;
    /// Reduced row echelon basis over the canonical order (leading coefficient 1).
    std::vector<ModuleVector> nullspace;
    ClosedFormMatch closed_form_match = ClosedFormMatch::no_closed_form;
    /// The closed form that applies at this level and sector, if any.
    std::optional<Chi> closed_form;
    std::optional<int> M;
    /// For chi01/chi10: c in Rt chi = c chi' with chi' the partner.
    std::optional<RtildeComparison> rtilde;
};

/// Every integer M >= 0 with r + 2M = 0 (M(r)) or (r + 2M)^2 = lambda, solved exactly.
std::vector<Integer> all_constraint_solutions(const VermaKind& kind);

/// The solutions that do not exceed m_cap.
std::vector<int> constraint_solutions(const VermaKind& kind, int m_cap);

/// Singular vectors of the given level and degree sector: the null space of
/// a- (+) at- on that sector. Throws std::invalid_argument on a sector that
/// does not occur at the level, or on level < 1.
SingularReport find_singular(const VermaKind& kind, int level, GradedDegree sector);

/// Null-space basis only, in reduced row echelon form.
std::vector<ModuleVector> singular_space(const VermaKind& kind, int level, GradedDegree sector);

bool is_singular(const ModuleVector& v);

/// The explicit singular vectors; throws ConstraintError naming the violated identity.
ModuleVector closed_form(const VermaKind& kind, Chi which, int M);

/// Level at which the closed form lives: 2M+1, or 2(2M+1) for chi11.
int closed_form_level(Chi which, int M);

struct RtildeReport {
    int M;
    /// c with Rt chi01 = c chi10, nullopt when not proportional.
    std::optional<Rational> chi01_to_chi10;
    std::optional<Rational> chi10_to_chi01;
    /// 2M+1 for M(r), 1-r for M(r,lambda).
    Rational stated;
    /// M(r) only.
    std::optional<bool> chi11_annihilated;

    bool matches_stated() const;
};

RtildeReport verify_rtilde_relations(const VermaKind& kind, int M);

/// Proportionality factor c with v = c w, if any (w nonzero).
std::optional<Rational> proportionality(const ModuleVector& v, const ModuleVector& w);

enum class RecurrenceSystem : std::uint8_t { mu_nu, alpha_beta, rho_sigma, gamma_delta, mu_nu_lambda };
std::string to_string(RecurrenceSystem which);
std::optional<RecurrenceSystem> recurrence_from_name(std::string_view text);

struct RecurrenceSolution {
    RecurrenceSystem system;
    int M;
    /// Names of the unknowns, primary family first ("mu_0", ..., "nu_0", ...).
    std::vector<std::string> unknowns;
    /// Basis index each unknown multiplies in the singular-vector ansatz.
    std::vector<BasisIndex> ansatz;
    /// Number of equations assembled.
    std::size_t equations = 0;
    /// Solution space in reduced row echelon form; empty means only zero.
    std::vector<Vector> solutions;
};

/// Assembles the coefficient recurrences for the singular-vector ansatz and
/// solves them exactly. For mu-nu, alpha-beta and mu-nu-lambda the level is
/// 2M+1; for rho-sigma (sector (0,0)) and gamma-delta (sector (1,1)) it is 2M.
/// mu-nu-lambda requires lambda != 0.
RecurrenceSolution recurrence_solve(RecurrenceSystem which, int M, const Rational& r,
                                    const std::optional<Rational>& lambda = std::nullopt);

/// Coefficients of v at the ansatz indices.
Vector ansatz_coefficients(const ModuleVector& v, const std::vector<BasisIndex>& ansatz);

/// Scales x so its first nonzero entry is 1.
Vector normalize_leading(Vector x);

}  // namespace z2rep
