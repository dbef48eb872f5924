#include <cmath>

#include "ozaki/verifier.hpp"

namespace ozaki {

std::string_view to_string(FunctionalId id) {
    switch (id) {
        case FunctionalId::T21Log: return "T21_log";
        case FunctionalId::AbsGamma1: return "|Gamma1|";
        case FunctionalId::AbsGamma2: return "|Gamma2|";
        case FunctionalId::AbsGamma3: return "|Gamma3|";
        case FunctionalId::AbsS3: return "|S3|";
        case FunctionalId::AbsS4: return "|S4|";
        case FunctionalId::DiffA: return "|A3-A2|";
        case FunctionalId::DiffGamma: return "|Gamma3-Gamma2|";
    }
    return "?";
}

std::string_view to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::Upper: return "upper";
        case BoundKind::Lower: return "lower";
        case BoundKind::TwoSided: return "two-sided";
    }
    return "?";
}

double functional_value(const FunctionalReport& r, FunctionalId id) {
    switch (id) {
        case FunctionalId::T21Log: return r.T21_log;
        case FunctionalId::AbsGamma1: return std::abs(r.Gamma1);
        case FunctionalId::AbsGamma2: return std::abs(r.Gamma2);
        case FunctionalId::AbsGamma3: return std::abs(r.Gamma3);
        case FunctionalId::AbsS3: return std::abs(r.S3);
        case FunctionalId::AbsS4: return std::abs(r.S4);
        case FunctionalId::DiffA: return r.diff_A;
        case FunctionalId::DiffGamma: return r.diff_Gamma;
    }
    return std::nan("");
}

namespace {

BoundEntry upper(ClassLabel label, FunctionalId id, Rational value, Extremal witness) {
    return {label, id, BoundKind::Upper, std::nullopt, BoundSide{value, witness}};
}

BoundEntry two_sided(ClassLabel label, FunctionalId id, Rational lo, Extremal lo_witness, Rational hi,
                     Extremal hi_witness) {
    return {label, id, BoundKind::TwoSided, BoundSide{lo, lo_witness}, BoundSide{hi, hi_witness}};
}

}  // namespace

const std::vector<BoundEntry>& bound_ledger() {
    using C = ClassLabel;
    using Fn = FunctionalId;
    using E = Extremal;
    static const std::vector<BoundEntry> ledger = {
        two_sided(C::F, Fn::T21Log, Rational(-1, 16), E::f2, Rational(95, 256), E::f1),
        upper(C::F, Fn::AbsGamma1, Rational(3, 4), E::f1),
        upper(C::F, Fn::AbsGamma2, Rational(11, 16), E::f1),
        upper(C::F, Fn::AbsGamma3, Rational(7, 8), E::f1),
        upper(C::F, Fn::AbsS3, Rational(3), E::f2),
        upper(C::F, Fn::DiffA, Rational(4), E::f1),
        upper(C::F, Fn::DiffGamma, Rational(25, 16), E::f1),
        two_sided(C::G, Fn::T21Log, Rational(-1, 144), E::g2, Rational(15, 256), E::g1),
        upper(C::G, Fn::AbsGamma1, Rational(1, 4), E::g1),
        upper(C::G, Fn::AbsGamma2, Rational(3, 16), E::g1),
        upper(C::G, Fn::AbsGamma3, Rational(5, 24), E::g1),
        upper(C::G, Fn::AbsS3, Rational(3, 2), E::g1),
        upper(C::G, Fn::AbsS4, Rational(6), E::g1),
    };
    return ledger;
}

std::vector<BoundEntry> ledger_for(ClassLabel label) {
    std::vector<BoundEntry> out;
    for (const BoundEntry& e : bound_ledger()) {
        if (e.label == label) out.push_back(e);
    }
    return out;
}

bool ExtremalCheck::passed(double tol) const {
    for (const SideCheck& s : sides) {
        if (!(std::abs(s.residual) <= tol)) return false;
    }
    return !sides.empty();
}

std::vector<ExtremalCheck> check_extremals() {
    std::vector<ExtremalCheck> out;
    for (const BoundEntry& entry : bound_ledger()) {
        ExtremalCheck check{entry, {}};
        for (const auto& [side, is_upper] : {std::pair{entry.lower, false}, std::pair{entry.upper, true}}) {
            if (!side) continue;
            const FunctionalReport report = full_report(extremal_member(side->witness, kWitnessOrder));
            const double computed = functional_value(report, entry.functional);
            check.sides.push_back({is_upper, side->value, side->witness, computed, computed - side->value.value()});
        }
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace ozaki
