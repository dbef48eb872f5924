#pragma once

#include "ozaki/series.hpp"

namespace ozaki {

// Initial Taylor coefficients a2, a3, a4 of a normalized function.
struct CoeffTriple {
    Complex a2{};
    Complex a3{};
    Complex a4{};

    static CoeffTriple of(const NormalizedFunction& f) { return {f.a(2), f.a(3), f.a(4)}; }

    bool operator==(const CoeffTriple&) const = default;
};

}  // namespace ozaki
