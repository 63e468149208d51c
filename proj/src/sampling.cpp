#include "z2rep/sampling.hpp"

namespace z2rep {

Rational RationalSampler::next()
{
    std::uniform_int_distribution<int> num(-bound_, bound_);
    std::uniform_int_distribution<int> den(1, bound_);
    const int p = num(engine_);
    const int q = den(engine_);
    Rational x(p, q);
    x.canonicalize();
    return x;
}

Rational RationalSampler::next_nonzero()
{
    for (;;) {
        Rational x = next();
        if (sgn(x) != 0)
            return x;
    }
}

}  // namespace z2rep
