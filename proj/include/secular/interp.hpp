#pragma once
// Exact polynomial interpolation over the rationals (Newton form, expanded
// back to the monomial basis). Nodes must be distinct.
#include <vector>
#include "exact.hpp"
#include "poly.hpp"

namespace secular {

// unique polynomial of degree < nodes.size() through (x_i, y_i)
inline DensePoly<Rational> interpolate(const std::vector<Rational>& xs,
                                       const std::vector<Rational>& ys) {
    require(xs.size() == ys.size() && !xs.empty(), "interpolation needs matching nonempty node lists");
    const size_t n = xs.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            require(xs[i] != xs[j], "interpolation nodes must be distinct");

    // divided differences
    std::vector<Rational> dd(ys);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }

    // Newton form -> monomial basis
    DensePoly<Rational> result;
    DensePoly<Rational> basis = DensePoly<Rational>::constant(Rational(1));
    for (size_t i = 0; i < n; ++i) {
        result = result + basis * dd[i];
        DensePoly<Rational> lin(std::vector<Rational>{-xs[i], Rational(1)});
        basis = basis * lin;
    }
    return result;
}

// convenience: integer nodes
inline DensePoly<Rational> interpolate_at_integers(const std::vector<long long>& xs,
                                                   const std::vector<Rational>& ys) {
    std::vector<Rational> rx;
    rx.reserve(xs.size());
    for (long long v : xs) rx.emplace_back(make_rational(BigInt(static_cast<long>(v)), BigInt(1)));
    return interpolate(rx, ys);
}

} // namespace secular
