#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "sweb/expr.hpp"

namespace sweb {

/// Closed analysis rectangle [x0,x1] x [y0,y1].
struct Rect {
    Rational x0, x1, y0, y1;
    Rational center_x() const { return (x0 + x1) / Rational(2); }
    Rational center_y() const { return (y0 + y1) / Rational(2); }
    bool valid() const { return x0 < x1 && y0 < y1; }
};

/// Sampling and tolerance policy for numeric verdicts. A fixed seed gives a
/// reproducible point stream and therefore deterministic verdicts.
struct SamplePlan {
    Rect domain{Rational(1), Rational(2), Rational(1), Rational(2)};
    EvalMode mode = EvalMode::Float;
    int samples = 40;           // N >= 20
    std::uint64_t seed = 1;
    double tol = 1e-9;          // zero tolerance
    double margin = 1e-6;       // exclusion margin for singular loci
    int max_prolong = 8;        // prolongation iteration cap
    std::vector<Expr> exclusions;  // loci |e| <= margin are avoided
};

/// Deterministic stream of rational points in a rectangle. Coordinates are
/// dyadic rationals, so the exact and float readings agree bit for bit.
class PointStream {
public:
    PointStream(const Rect& domain, std::uint64_t seed)
        : domain_(domain), rng_(seed) {}

    std::pair<Rational, Rational> next();
    /// A value in [lo, hi] for auxiliary coordinates (W bindings).
    Rational next_in(const Rational& lo, const Rational& hi);

private:
    Rational pick(const Rational& lo, const Rational& hi);
    Rect domain_;
    std::mt19937_64 rng_;
};

enum class Verdict { Zero, NonZero, Inconclusive };

/// Outcome of a zero test. Zero with proof=true is an exact normal-form
/// decision; otherwise verdicts are sampled. NonZero always carries a witness.
struct ZeroVerdict {
    Verdict verdict = Verdict::Inconclusive;
    bool proof = false;
    Bindings witness;            // set for NonZero
    double witness_value = 0.0;  // |value| at the witness
    double max_abs = 0.0;        // largest |value| seen over the samples
    int samples = 0;
    int failures = 0;

    bool zero() const { return verdict == Verdict::Zero; }
    bool nonzero() const { return verdict == Verdict::NonZero; }
    bool inconclusive() const { return verdict == Verdict::Inconclusive; }

    static ZeroVerdict exact_zero();
};

/// Points in plan.domain passing the exclusion margins, with evaluation
/// failures skipped. Binds "x", "y", and (when bind_w) "W0".."W6".
/// May return fewer than plan.samples if the attempt cap is hit.
std::vector<Bindings> sample_points(const SamplePlan& plan, bool bind_w);

}  // namespace sweb
