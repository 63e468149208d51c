#pragma once

#include "z2rep/linalg.hpp"
#include "z2rep/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace z2rep {

/// Finite-dimensional graded module of the Cartan subalgebra span{R, Rt}.
/// Basis vector i has degree (p_i, p_i) with p_i = parity[i]; Rt flips it.
struct HModule {
    std::size_t dim = 0;
    Rational r;
    /// Chain coefficients for modules built by build_h_module; empty otherwise.
    std::vector<Rational> c;
    Matrix matR;
    Matrix matRt;
    std::vector<int> parity;
    bool is_chain = false;
};

inline constexpr int default_h_module_cap = 12;

/// Chain |0>, ..., |n-1> with Rt|k> = |k+1> and Rt|n-1> = sum_j c_j |j> over
/// the parity opposite to n-1: c = (c_1, c_3, ...) for odd n, (c_0, c_2, ...)
/// for even n. Throws std::invalid_argument on a wrong c length or n outside 1..cap.
HModule build_h_module(int n, const Rational& r, const std::vector<Rational>& c, int cap = default_h_module_cap);

enum class HKind : std::uint8_t { nu_r, nu_r_lambda };

struct IrreducibleHModule {
    HKind kind;
    Rational r;
    std::optional<Rational> lambda;

    friend bool operator==(const IrreducibleHModule&, const IrreducibleHModule&) = default;
};

std::string to_string(const IrreducibleHModule& m);

/// Coefficients, constant term first.
using Polynomial = std::vector<Rational>;

/// t^{n/2} - sum_j c_{2j} t^j for an even chain.
Polynomial t_polynomial(const HModule& m);

/// det(x I - A) by the Faddeev-LeVerrier recursion.
Polynomial characteristic_polynomial(const Matrix& a);

/// Distinct rational roots in ascending order.
std::vector<Rational> rational_roots(const Polynomial& p);

Rational evaluate(const Polynomial& p, const Rational& x);

enum class Irreducibility : std::uint8_t { reducible, irreducible, undetermined };
std::string to_string(Irreducibility v);

struct InvariantSearch {
    /// Basis (reduced row echelon form) of a proper nonzero graded Rt-invariant subspace.
    std::optional<std::vector<Vector>> subspace;
    /// Which route produced it: "chain-tail", "t-polynomial", "cyclic", "eigenvector".
    std::string route;
    Irreducibility verdict = Irreducibility::undetermined;
};

/// Searches for a proper invariant subspace: the chain tail for odd chains,
/// the t-polynomial construction for even chains, Rt-cyclic spans of basis
/// vectors, and rational eigenvectors of Rt^2 per degree sector. Modules of
/// dimension <= 2 are decided exactly; larger ones without a hit are
/// "undetermined" (no rational invariant subspace exhibited).
InvariantSearch find_invariant_subspace(const HModule& m);

/// The t-polynomial construction for a nonzero root t: {w00, Rt w00}; for t = 0: {Rt w00}.
std::vector<Vector> t_polynomial_subspace(const HModule& m, const Rational& t);

bool is_invariant(const HModule& m, const std::vector<Vector>& subspace);

/// Restriction to an invariant graded subspace and the induced quotient.
HModule restrict_to(const HModule& m, const std::vector<Vector>& subspace);
HModule quotient_by(const HModule& m, const std::vector<Vector>& subspace);

struct HClassification {
    std::size_t dim;
    Rational r;
    std::vector<IrreducibleHModule> constituents;
    /// Pieces of dimension > 2 in which no rational invariant subspace was found.
    std::vector<HModule> undetermined;

    bool complete() const { return undetermined.empty(); }
};

/// Composition factors, by repeatedly splitting into sub and quotient.
HClassification classify(const HModule& m);

}  // namespace z2rep
