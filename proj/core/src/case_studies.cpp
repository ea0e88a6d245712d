#include "hausdorff/case_studies.hpp"

#include <cmath>
#include <random>

#include "hausdorff/action.hpp"
#include "hausdorff/relations.hpp"
#include "hausdorff/spectra.hpp"

namespace hausdorff {

namespace {

SpecDocument::Entry entry_1d(std::int64_t k, Complex c, double a,
                             std::optional<ExactEigenvalue> exact = std::nullopt) {
    SpecDocument::Entry e;
    e.k = k;
    e.c = c;
    e.matrix = {a};
    if (exact)
        e.exact = std::vector<ExactEigenvalue>{*exact};
    return e;
}

std::vector<Complex> circle_samples(Complex center, double radius, int n) {
    std::vector<Complex> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double angle = 2.0 * pi * i / n;
        out.push_back(center + radius * Complex(std::cos(angle), std::sin(angle)));
    }
    return out;
}

// Grid pinned fine enough that the covering radius of the curve cloud is a
// few 1e-3: the full phase winds 2 * 200 = 400 half-periods and each step
// advances it by 0.01 * log 2.
GridPlan pinned_case_grid() {
    GridPlan plan;
    plan.span = 200.0 / std::log(2.0);
    plan.step = 0.01;
    return plan;
}

struct CaseBuilder {
    CaseStudyResult result;

    explicit CaseBuilder(std::string name, ResultDocument doc)
        : result{std::move(name), true, {}, std::move(doc)} {}

    void check(std::string description, bool ok, double measured, double threshold) {
        result.checks.push_back({std::move(description), ok, measured, threshold});
        result.passed = result.passed && ok;
    }
};

std::vector<double> seeded_angles(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed ^ 0xa5a5a5a5ULL);
    std::uniform_real_distribution<double> dist(0.0, 2.0 * pi);
    std::vector<double> angles(count);
    for (auto& a : angles)
        a = dist(rng);
    return angles;
}

} // namespace

SpecDocument remark_circle_document() {
    SpecDocument doc;
    doc.dimension = 1;
    doc.entries.push_back(entry_1d(0, {1.0, 0.0}, 1.0, ExactEigenvalue{1, 2, 0, 1}));
    doc.entries.push_back(entry_1d(1, {1.0, 0.0}, 2.0, ExactEigenvalue{1, 2, 1, 1}));
    return doc;
}

SpecDocument cell_growth_document(double alpha, Complex c0, Complex c1) {
    SpecDocument doc;
    doc.dimension = 2;
    SpecDocument::Entry e0;
    e0.k = 0;
    e0.c = c0;
    e0.matrix = {1.0, 0.0, 0.0, 1.0};
    doc.entries.push_back(std::move(e0));
    SpecDocument::Entry e1;
    e1.k = 1;
    e1.c = c1;
    e1.matrix = {alpha, 0.0, 0.0, 1.0};
    doc.entries.push_back(std::move(e1));
    return doc;
}

SpecDocument ross_document() {
    SpecDocument doc;
    doc.dimension = 1;
    doc.entries.push_back(entry_1d(0, {1.0, 0.0}, 1.0, ExactEigenvalue{1, 2, 0, 1}));
    doc.entries.push_back(entry_1d(1, {1.0, 0.0}, 0.5, ExactEigenvalue{1, 2, -1, 1}));
    doc.entries.push_back(entry_1d(2, {1.0, 0.0}, 0.25, ExactEigenvalue{1, 2, -2, 1}));
    return doc;
}

SpecDocument two_term_document() {
    SpecDocument doc;
    doc.dimension = 1;
    doc.entries.push_back(entry_1d(0, {1.0, 0.0}, 2.0, ExactEigenvalue{1, 2, 1, 1}));
    doc.entries.push_back(entry_1d(1, {1.0, 0.0}, 3.0, ExactEigenvalue{1, 3, 1, 1}));
    return doc;
}

SpecDocument three_term_document() {
    SpecDocument doc = two_term_document();
    doc.entries.push_back(entry_1d(2, {1.0, 0.0}, 5.0, ExactEigenvalue{1, 5, 1, 1}));
    return doc;
}

SpecDocument prime_family_document() {
    SpecDocument doc;
    doc.dimension = 1;
    doc.generator = SpecDocument::Generator{"geometric-prime", std::nullopt, std::nullopt};
    return doc;
}

const std::vector<std::string>& case_study_names() {
    static const std::vector<std::string> names = {
        "remark-circle",   "cell-growth",     "ross-circle",        "prime-annulus",
        "two-term-annulus", "three-term-disc", "pantograph-classify"};
    return names;
}

namespace {

CaseStudyResult run_remark_circle(std::uint64_t seed) {
    const SpecDocument doc = remark_circle_document();
    CaseBuilder builder("remark-circle",
                        ResultDocument("case-study", fnv1a_digest(doc.serialize()), seed));
    const OperatorSpec spec = doc.to_operator_spec();
    const GridPlan grid = pinned_case_grid();
    const SpectrumApprox cloud = spectrum_frequency_grid(spec, grid);

    const std::vector<Complex> circle =
        circle_samples({1.0, 0.0}, std::pow(2.0, -0.5), 10'000);
    const double distance = hausdorff_distance(cloud.points, circle);
    builder.check("spectrum fills the circle |z - 1| = 2^{-1/2}", distance <= 1e-2,
                  distance, 1e-2);

    const double angle = pi;
    const InvarianceCheck inv = rotational_invariance_check(cloud, {&angle, 1});
    builder.check("rotation by pi displaces the spectrum (no invariance)",
                  !inv.passed && inv.max_distance > 1.0, inv.max_distance, 1.0);

    builder.result.document.set_parameter("span", *grid.span);
    builder.result.document.set_parameter("step", *grid.step);
    builder.result.document.set_output("circle_distance", distance);
    builder.result.document.set_output("rotation_distance_at_pi", inv.max_distance);
    builder.result.document.set_output("resolution", cloud.resolution);
    builder.result.document.set_output("invariance_failed", !inv.passed);
    builder.result.document.set_output("passed", builder.result.passed);
    return std::move(builder.result);
}

CaseStudyResult run_cell_growth(std::uint64_t seed) {
    const double alpha = 2.0;
    const SpecDocument doc = cell_growth_document(alpha);
    CaseBuilder builder("cell-growth",
                        ResultDocument("case-study", fnv1a_digest(doc.serialize()), seed));
    const OperatorSpec spec = doc.to_operator_spec();
    const GridPlan grid = pinned_case_grid();
    const SpectrumApprox cloud = spectrum_frequency_grid(spec, grid);

    const std::vector<Complex> circle =
        circle_samples({1.0, 0.0}, 1.0 / std::sqrt(alpha), 10'000);
    const double distance = hausdorff_distance(cloud.points, circle);
    builder.check("spectrum is the circle with center c(0), radius |c(1)|/sqrt(alpha)",
                  distance <= 1e-2, distance, 1e-2);

    builder.result.document.set_parameter("alpha", alpha);
    builder.result.document.set_parameter("span", *grid.span);
    builder.result.document.set_parameter("step", *grid.step);
    builder.result.document.set_output("circle_distance", distance);
    builder.result.document.set_output("resolution", cloud.resolution);
    builder.result.document.set_output("passed", builder.result.passed);
    return std::move(builder.result);
}

CaseStudyResult run_ross_circle(std::uint64_t seed) {
    const SpecDocument doc = ross_document();
    CaseBuilder builder("ross-circle",
                        ResultDocument("case-study", fnv1a_digest(doc.serialize()), seed));
    const OperatorSpec spec = doc.to_operator_spec();
    const SymbolTable table(spec);
    const GridPlan grid = pinned_case_grid();
    const SpectrumApprox cloud = spectrum_frequency_grid(table, grid);

    // sigma(R) = r(q^{d/2} T) with r(z) = 1 + z + z^2, q = 2, d = 1.
    const auto r = [](Complex z) { return 1.0 + z + z * z; };
    const double rho = std::sqrt(2.0);
    std::vector<Complex> curve;
    curve.reserve(10'000);
    for (int i = 0; i < 10'000; ++i) {
        const double angle = 2.0 * pi * i / 10'000;
        curve.push_back(r(rho * Complex(std::cos(angle), std::sin(angle))));
    }
    const double distance = hausdorff_distance(cloud.points, curve);
    builder.check("spectrum equals r(sqrt(2) T)", distance <= 1e-2, distance, 1e-2);

    const double norm = operator_norm_estimate(table, grid);
    double oracle = 0.0;
    for (int i = 0; i < 1'000'000; ++i) {
        const double angle = 2.0 * pi * i / 1'000'000;
        oracle = std::max(oracle, std::abs(r(rho * Complex(std::cos(angle), std::sin(angle)))));
    }
    builder.check("operator norm equals max |r| on the circle",
                  std::abs(norm - oracle) <= 1e-3, std::abs(norm - oracle), 1e-3);

    builder.result.document.set_parameter("span", *grid.span);
    builder.result.document.set_parameter("step", *grid.step);
    builder.result.document.set_output("curve_distance", distance);
    builder.result.document.set_output("operator_norm", norm);
    builder.result.document.set_output("norm_oracle", oracle);
    builder.result.document.set_output("passed", builder.result.passed);
    return std::move(builder.result);
}

CaseStudyResult run_annulus_case(const std::string& name, const SpecDocument& doc,
                                 std::uint64_t seed, std::int64_t samples,
                                 bool expect_disc) {
    CaseBuilder builder(name,
                        ResultDocument("case-study", fnv1a_digest(doc.serialize()), seed));
    const OperatorSpec spec = doc.to_operator_spec();
    const DiagonalizedFamily family = simultaneous_diagonalize(spec, seed);
    const CoordinateIndependence independence = best_coordinate_independence(spec, family);
    const SpectrumApprox annulus = annulus_analytic(spec, independence.report);

    TorusPlan plan;
    plan.samples = samples;
    plan.seed = seed;
    const SpectrumApprox torus =
        spectrum_torus(SymbolTable(spec, family), independence.report, plan);

    double min_mod = std::numeric_limits<double>::infinity(), max_mod = 0.0;
    for (const Complex& z : torus.points) {
        min_mod = std::min(min_mod, std::abs(z));
        max_mod = std::max(max_mod, std::abs(z));
    }
    const double r_in = annulus.annulus->inner;
    const double r_out = annulus.annulus->outer;

    if (expect_disc)
        builder.check("analytic inner radius is zero (disc)", r_in == 0.0, r_in, 0.0);
    else
        builder.check("analytic inner radius is positive (annulus)", r_in > 0.0, r_in, 0.0);
    builder.check("torus min modulus matches the inner radius",
                  std::abs(min_mod - r_in) <= 1e-3, std::abs(min_mod - r_in), 1e-3);
    builder.check("torus max modulus matches the outer radius",
                  std::abs(max_mod - r_out) <= 1e-3, std::abs(max_mod - r_out), 1e-3);

    const std::vector<double> angles = seeded_angles(seed, 8);
    const InvarianceCheck inv = rotational_invariance_check(torus, angles);
    builder.check("torus cloud is rotationally invariant", inv.passed, inv.max_distance,
                  inv.tolerance);

    builder.result.document.set_parameter("samples", samples);
    builder.result.document.set_output("r_in", r_in);
    builder.result.document.set_output("r_out", r_out);
    builder.result.document.set_output("torus_min_modulus", min_mod);
    builder.result.document.set_output("torus_max_modulus", max_mod);
    builder.result.document.set_output("resolution", torus.resolution);
    builder.result.document.set_output("invariance_distance", inv.max_distance);
    builder.result.document.set_output("passed", builder.result.passed);
    return std::move(builder.result);
}

CaseStudyResult run_prime_annulus(std::uint64_t seed, std::int64_t samples) {
    const SpecDocument doc = prime_family_document();
    CaseBuilder builder("prime-annulus",
                        ResultDocument("case-study", fnv1a_digest(doc.serialize()), seed));
    const auto family_gen = doc.make_generator();
    const int order = 10;
    const OperatorSpec spec = truncate_family(*family_gen, order);
    const DiagonalizedFamily family = simultaneous_diagonalize(spec, seed);
    const CoordinateIndependence independence = best_coordinate_independence(spec, family);
    builder.check("prime logarithms are exactly independent",
                  independence.report.verdict == RelationVerdict::ExactlyIndependent, 0.0,
                  0.0);

    const SpectrumApprox annulus = annulus_analytic(spec, independence.report);
    TorusPlan plan;
    plan.samples = samples;
    plan.seed = seed;
    const SpectrumApprox torus =
        spectrum_torus(SymbolTable(spec, family), independence.report, plan);

    double min_mod = std::numeric_limits<double>::infinity(), max_mod = 0.0;
    for (const Complex& z : torus.points) {
        min_mod = std::min(min_mod, std::abs(z));
        max_mod = std::max(max_mod, std::abs(z));
    }
    const double r_in = annulus.annulus->inner;
    const double r_out = annulus.annulus->outer;
    builder.check("inner radius positive", r_in > 0.0, r_in, 0.0);
    builder.check("torus min modulus matches", std::abs(min_mod - r_in) <= 1e-3,
                  std::abs(min_mod - r_in), 1e-3);
    builder.check("torus max modulus matches", std::abs(max_mod - r_out) <= 1e-3,
                  std::abs(max_mod - r_out), 1e-3);

    const std::vector<Complex> eigenvalues = point_spectrum(spec);
    builder.check("no point spectrum", eigenvalues.empty(),
                  static_cast<double>(eigenvalues.size()), 0.0);

    const SpectrumClassification weyl = weyl_classify(spec, torus, eigenvalues);
    builder.check("Weyl spectrum equals the spectrum (0 outside)",
                  weyl.weyl_equals_spectrum && !weyl.weyl_caveat &&
                      weyl.pi00 == Pi00Status::Empty,
                  0.0, 0.0);
    builder.check("rotational invariance proven",
                  weyl.rotation_invariant == RotationInvarianceVerdict::Proven, 0.0, 0.0);

    builder.result.document.set_parameter("order", static_cast<std::int64_t>(order));
    builder.result.document.set_parameter("samples", samples);
    builder.result.document.set_output("r_in", r_in);
    builder.result.document.set_output("r_out", r_out);
    builder.result.document.set_output("torus_min_modulus", min_mod);
    builder.result.document.set_output("torus_max_modulus", max_mod);
    builder.result.document.set_output("weyl_equals_spectrum", weyl.weyl_equals_spectrum);
    builder.result.document.set_output("passed", builder.result.passed);
    return std::move(builder.result);
}

CaseStudyResult run_pantograph_classify(std::uint64_t seed, std::int64_t samples) {
    // y' = H y + K y with compact K: when sigma_ew(H) is rotationally
    // invariant and different from {0}, it meets the open right half plane,
    // so the equation has unbounded solutions. Classification only.
    const SpecDocument doc = two_term_document();
    CaseBuilder builder("pantograph-classify",
                        ResultDocument("case-study", fnv1a_digest(doc.serialize()), seed));
    const OperatorSpec spec = doc.to_operator_spec();
    const DiagonalizedFamily family = simultaneous_diagonalize(spec, seed);
    const CoordinateIndependence independence = best_coordinate_independence(spec, family);

    TorusPlan plan;
    plan.samples = samples;
    plan.seed = seed;
    const SpectrumApprox torus =
        spectrum_torus(SymbolTable(spec, family), independence.report, plan);
    const std::vector<Complex> eigenvalues = point_spectrum(spec);
    const SpectrumClassification weyl = weyl_classify(spec, torus, eigenvalues);

    const bool invariant = weyl.rotation_invariant == RotationInvarianceVerdict::Proven;
    double max_mod = 0.0;
    for (const Complex& z : torus.points)
        max_mod = std::max(max_mod, std::abs(z));
    const bool nonzero = max_mod > 1e-9;
    const bool unbounded = invariant && nonzero;

    builder.check("essential Weyl spectrum rotationally invariant", invariant, 0.0, 0.0);
    builder.check("essential Weyl spectrum nonzero", nonzero, max_mod, 1e-9);
    builder.check("classification: unbounded solutions exist", unbounded, 0.0, 0.0);

    builder.result.document.set_parameter("samples", samples);
    builder.result.document.set_output("sigma_ew_rotationally_invariant", invariant);
    builder.result.document.set_output("sigma_ew_nonzero", nonzero);
    builder.result.document.set_output("unbounded_solutions", unbounded);
    builder.result.document.set_output("passed", builder.result.passed);
    return std::move(builder.result);
}

} // namespace

CaseStudyResult run_case_study(const std::string& name, std::uint64_t seed,
                               std::optional<std::int64_t> samples_override) {
    const auto samples = [&](std::int64_t fallback) {
        return samples_override.value_or(fallback);
    };
    if (name == "remark-circle")
        return run_remark_circle(seed);
    if (name == "cell-growth")
        return run_cell_growth(seed);
    if (name == "ross-circle")
        return run_ross_circle(seed);
    if (name == "two-term-annulus")
        return run_annulus_case(name, two_term_document(), seed, samples(1'000'000), false);
    if (name == "three-term-disc")
        return run_annulus_case(name, three_term_document(), seed, samples(1'000'000), true);
    if (name == "prime-annulus")
        return run_prime_annulus(seed, samples(200'000));
    if (name == "pantograph-classify")
        return run_pantograph_classify(seed, samples(200'000));
    throw UnknownCaseError(name);
}

} // namespace hausdorff
