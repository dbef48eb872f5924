#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>
#include <random>
#include <thread>

#include "ozaki/verifier.hpp"

namespace ozaki {

std::uint64_t member_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the (seed, index) pair
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("OZAKI_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) {
            return static_cast<unsigned>(n);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Accumulator {
    std::vector<double> lo;
    std::vector<double> hi;
    std::vector<std::size_t> violations;
    std::size_t members = 0;
    std::size_t violating_members = 0;

    explicit Accumulator(std::size_t n)
        : lo(n, std::numeric_limits<double>::infinity()),
          hi(n, -std::numeric_limits<double>::infinity()),
          violations(n, 0) {}

    void merge(const Accumulator& o) {
        for (std::size_t k = 0; k < lo.size(); ++k) {
            lo[k] = std::min(lo[k], o.lo[k]);
            hi[k] = std::max(hi[k], o.hi[k]);
            violations[k] += o.violations[k];
        }
        members += o.members;
        violating_members += o.violating_members;
    }
};

double excess(const BoundEntry& e, double value) {
    double worst = -std::numeric_limits<double>::infinity();
    if (e.upper) worst = std::max(worst, value - e.upper->value.value());
    if (e.lower) worst = std::max(worst, e.lower->value.value() - value);
    return worst;
}

void record(const std::vector<BoundEntry>& entries, double tol, const OzakiFunction& member, Accumulator& acc) {
    const FunctionalReport report = full_report(member);
    bool violated = false;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const double v = functional_value(report, entries[k].functional);
        acc.lo[k] = std::min(acc.lo[k], v);
        acc.hi[k] = std::max(acc.hi[k], v);
        if (!(excess(entries[k], v) <= tol)) {
            ++acc.violations[k];
            violated = true;
        }
    }
    ++acc.members;
    if (violated) ++acc.violating_members;
}

}  // namespace

SampleReport sample_and_check(const SampleConfig& cfg) {
    if (cfg.count == 0) {
        throw std::invalid_argument("sample count must be at least 1");
    }
    if (cfg.order < 8) {
        throw std::invalid_argument("sampling order must be at least 8");
    }
    const std::vector<BoundEntry> entries = ledger_for(cfg.label);
    const BlaschkeSampler sampler(cfg.blaschke_max_zeros);

    auto run_range = [&](std::size_t begin, std::size_t end, Accumulator& acc) {
        for (std::size_t i = begin; i < end; ++i) {
            BlaschkeSpec spec;
            if (cfg.fixed_spec) {
                spec = *cfg.fixed_spec;
            } else {
                std::mt19937_64 rng(member_seed(cfg.seed, i));
                spec = sampler(rng);
            }
            const SchwarzCoeffs w = schwarz_from_blaschke(spec, cfg.order);
            record(entries, cfg.violation_tolerance, build_member(cfg.label, w, cfg.order), acc);
        }
    };

    const unsigned requested = cfg.threads == 0 ? default_thread_count() : cfg.threads;
    const std::size_t workers = std::clamp<std::size_t>(requested, 1, cfg.count);
    std::vector<Accumulator> partial(workers, Accumulator(entries.size()));
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t) {
            const std::size_t begin = cfg.count * t / workers;
            const std::size_t end = cfg.count * (t + 1) / workers;
            pool.emplace_back([&, t, begin, end] {
                try {
                    run_range(begin, end, partial[t]);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    Accumulator total(entries.size());
    for (const Accumulator& a : partial) total.merge(a);

    if (cfg.include_extremals) {
        const Extremal pair[2] = {cfg.label == ClassLabel::F ? Extremal::f1 : Extremal::g1,
                                  cfg.label == ClassLabel::F ? Extremal::f2 : Extremal::g2};
        for (Extremal e : pair) {
            record(entries, cfg.violation_tolerance, extremal_member(e, cfg.order), total);
        }
    }

    SampleReport report{cfg.label, cfg.seed, total.members, cfg.violation_tolerance, {},
                        -std::numeric_limits<double>::infinity(), total.violating_members};
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const double margin = std::max(excess(entries[k], total.hi[k]), excess(entries[k], total.lo[k]));
        report.stats.push_back({entries[k], total.lo[k], total.hi[k], margin, total.violations[k]});
        report.worst_violation = std::max(report.worst_violation, margin);
    }
    return report;
}

}  // namespace ozaki
