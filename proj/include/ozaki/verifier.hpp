#pragma once

// Numerical reproduction of the sharp bounds for the classes F and G:
//  - the eight reduced real objectives and their compact regions,
//  - deterministic nested grid extremization of those objectives,
//  - the bound ledger with its extremal witnesses,
//  - randomized sampling of class members against the ledger.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ozaki/classes.hpp"
#include "ozaki/functionals.hpp"
#include "ozaki/rational.hpp"

namespace ozaki {

// ---------------------------------------------------------------------------
// Objectives

enum class ObjectiveId { UpsilonF, PsiF, PhiG, NG, ChiF, MF, SG, DeltaG };

inline constexpr std::array<ObjectiveId, 8> kAllObjectives = {
    ObjectiveId::UpsilonF, ObjectiveId::PsiF, ObjectiveId::PhiG, ObjectiveId::NG,
    ObjectiveId::ChiF,     ObjectiveId::MF,   ObjectiveId::SG,   ObjectiveId::DeltaG};

std::string_view to_string(ObjectiveId id);
ObjectiveId parse_objective(std::string_view name);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Box: (p, x) in [0,2] x [0,1].  Parabolic: (u, v) with 0 <= u <= 1, 0 <= v <= 1 - u^2.
enum class DomainKind { Box, Parabolic };

struct DomainSpec {
    DomainKind kind;

    double x_max() const noexcept { return kind == DomainKind::Box ? 2.0 : 1.0; }
    double y_max() const noexcept { return 1.0; }
    bool contains(Point pt) const noexcept;
};

DomainSpec domain_of(ObjectiveId id);

struct PointOutsideDomain : std::domain_error {
    PointOutsideDomain(ObjectiveId id, Point pt);
    Point point() const noexcept { return point_; }

private:
    Point point_;
};

double eval_objective(ObjectiveId id, Point pt);

enum class OptMode { Max, Min };

std::string_view to_string(OptMode mode);

struct ReferenceExtremum {
    OptMode mode;
    Rational value;
};

// The extremum each objective is used for in the bound proofs.
ReferenceExtremum reference_extremum(ObjectiveId id);

struct OptResult {
    ObjectiveId id;
    OptMode mode;
    double value;
    Point argpoint;
    int grid_resolution;
    int refine_iterations;
    // Only set when mode matches reference_extremum(id).mode.
    std::optional<Rational> paper_value;
    std::optional<double> gap;
};

// resolution x resolution grid over the bounding box (points outside a
// parabolic region dropped, the curve v = 1 - u^2 sampled explicitly), then
// refine_iters rounds of a 10x smaller window around the incumbent.
// Throws std::invalid_argument if resolution < 100 or refine_iters < 0.
OptResult grid_extremize(ObjectiveId id, OptMode mode, int resolution, int refine_iters);

// ---------------------------------------------------------------------------
// Bound ledger

enum class FunctionalId { T21Log, AbsGamma1, AbsGamma2, AbsGamma3, AbsS3, AbsS4, DiffA, DiffGamma };

std::string_view to_string(FunctionalId id);

// Signed value for T21Log, modulus for everything else.
double functional_value(const FunctionalReport& report, FunctionalId id);

enum class BoundKind { Upper, Lower, TwoSided };

std::string_view to_string(BoundKind kind);

struct BoundSide {
    Rational value;
    Extremal witness;
};

struct BoundEntry {
    ClassLabel label;
    FunctionalId functional;
    BoundKind kind;
    std::optional<BoundSide> lower;
    std::optional<BoundSide> upper;
};

// All 13 entries, F first.
const std::vector<BoundEntry>& bound_ledger();
std::vector<BoundEntry> ledger_for(ClassLabel label);

inline constexpr double kSharpnessTol = 1e-12;
inline constexpr std::size_t kWitnessOrder = 8;

struct SideCheck {
    bool upper;
    Rational bound;
    Extremal witness;
    double computed;
    double residual;  // computed - bound
};

struct ExtremalCheck {
    BoundEntry entry;
    std::vector<SideCheck> sides;

    bool passed(double tol = kSharpnessTol) const;
};

std::vector<ExtremalCheck> check_extremals();

// ---------------------------------------------------------------------------
// Sampling

struct SampleConfig {
    ClassLabel label = ClassLabel::F;
    std::size_t count = 10000;
    std::size_t order = 8;
    std::uint64_t seed = 0;
    std::size_t blaschke_max_zeros = 3;
    bool include_extremals = true;
    double violation_tolerance = 1e-9;
    // When set, every random member uses this Schwarz function.
    std::optional<BlaschkeSpec> fixed_spec;
    // 0 selects default_thread_count().
    unsigned threads = 0;
};

struct FunctionalStats {
    BoundEntry entry;
    double empirical_min;
    double empirical_max;
    // Largest excess beyond the bound (negative when strictly inside).
    double margin;
    std::size_t violations;
};

struct SampleReport {
    ClassLabel label;
    std::uint64_t seed;
    std::size_t members;
    double violation_tolerance;
    std::vector<FunctionalStats> stats;
    double worst_violation;
    std::size_t violation_count;

    bool ok() const noexcept { return violation_count == 0; }
};

// Seed of random member `index`; independent of how work is partitioned.
std::uint64_t member_seed(std::uint64_t seed, std::uint64_t index);

// OZAKI_THREADS if set to a positive integer, else hardware concurrency.
unsigned default_thread_count();

// Throws std::invalid_argument if count == 0 or order < 8.
SampleReport sample_and_check(const SampleConfig& cfg);

}  // namespace ozaki
