#include "induced_action.hpp"

namespace z2rep::oracle {

ModuleVector InducedAction::act(Generator g, const ModuleVector& v)
{
    ModuleVector out(kind_);
    for (const auto& [b, c] : v.terms())
        out += c * act(g, b);
    return out;
}

ModuleVector InducedAction::act(Generator g, const BasisIndex& b)
{
    const auto key = std::make_pair(g, b);
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;
    ModuleVector out = compute(g, b);
    cache_.emplace(key, out);
    return out;
}

ModuleVector InducedAction::compute(Generator g, const BasisIndex& b)
{
    using G = Generator;
    const StructureTable& table = StructureTable::standard();
    ModuleVector out(kind_);

    // Letters that extend the word directly.
    if (g == G::atp && b.alpha == 0)
        return vector({1, b.k, b.m, b.beta});
    if (g == G::ap && b.alpha == 0)
        return vector({0, b.k + 1, b.m, b.beta});
    if (g == G::Ltp && b.alpha == 0 && b.k == 0)
        return vector({0, 0, b.m + 1, b.beta});
    // {a+,a+} = 4L+, so L+ = a+ a+ / 2 in the enveloping algebra.
    if (g == G::Lp)
        return Rational(1, 2) * act(G::ap, act(G::ap, b));
    // {at+,at+} = -4L+, so at+ at+ = -2L+.
    if (g == G::atp && b.alpha == 1)
        return Rational(-2) * act(G::Lp, BasisIndex{0, b.k, b.m, b.beta});

    if (b.alpha == 0 && b.k == 0 && b.m == 0) {
        if (g == G::R)
            return kind_.r() * vector(b);
        if (g == G::Rt) {
            if (!kind_.has_lambda())
                return out;
            // nu(r,lambda): Rt|0> = |1>, Rt|1> = lambda|0>
            return ModuleVector(kind_, {0, 0, 0, 1 - b.beta}, b.beta == 0 ? Rational(1) : kind_.lambda());
        }
        return out;  // n- annihilates the lowest-weight space
    }

    // Peel the leftmost letter: |b> = Y |prev>.
    G Y;
    BasisIndex prev = b;
    if (b.alpha == 1) {
        Y = G::atp;
        prev.alpha = 0;
    } else if (b.k > 0) {
        Y = G::ap;
        --prev.k;
    } else {
        Y = G::Ltp;
        --prev.m;
    }
    const Rational s = grading_sign(degree_of(g), degree_of(Y));
    out += s * act(Y, act(g, prev));
    for (const auto& [h, c] : table(g, Y).terms())
        out += c * act(h, prev);
    return out;
}

}  // namespace z2rep::oracle
