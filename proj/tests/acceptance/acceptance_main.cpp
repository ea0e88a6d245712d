// Acceptance suite: end-to-end checks of the spectral claims this library
// computes, each with its tolerance and (where stated) a runtime budget.
// Prints one PASS/FAIL line per criterion; the exit code is the number of
// failures. `--criterion N` runs a single criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hausdorff/action.hpp"
#include "hausdorff/case_studies.hpp"
#include "hausdorff/relations.hpp"
#include "hausdorff/spectra.hpp"

using namespace hausdorff;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        passed = passed && ok;
        if (!detail.empty())
            detail += "; ";
        detail += (ok ? "" : "FAILED: ") + what;
    }
};

double out_double(const CaseStudyResult& r, const char* name) {
    const ResultValue* v = r.document.output(name);
    if (!v)
        throw Error(std::string("case study lacks output ") + name);
    return std::get<double>(*v);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

ScaleEntry scalar_entry(std::int64_t k, Complex c, double a, int d = 1) {
    ScaleEntry e;
    e.index = k;
    e.coefficient = c;
    e.matrix = a * RealMatrix::Identity(d, d);
    return e;
}

// 1. Two-term dilation circle: grid spectrum on |z - 1| = 2^{-1/2}, and the
//    rotation check fails at pi. Budget 5 s.
Outcome criterion_1(double& budget) {
    budget = 5.0;
    Outcome out;
    const CaseStudyResult r = run_case_study("remark-circle");
    const double distance = out_double(r, "circle_distance");
    out.require(distance <= 1e-2, "dist_H(cloud, circle) = " + fmt(distance) + " <= 1e-2");
    const double rotation = out_double(r, "rotation_distance_at_pi");
    const ResultValue* inv = r.document.output("invariance_failed");
    out.require(inv && std::get<bool>(*inv),
                "rotation by pi detected as non-invariant (distance " + fmt(rotation) + ")");
    return out;
}

// 2. Cell-growth circle: center c(0), radius |c(1)|/sqrt(alpha). Budget 10 s.
Outcome criterion_2(double& budget) {
    budget = 10.0;
    Outcome out;
    const CaseStudyResult r = run_case_study("cell-growth");
    const double distance = out_double(r, "circle_distance");
    out.require(distance <= 1e-2, "dist_H(cloud, circle) = " + fmt(distance) + " <= 1e-2");
    return out;
}

// 3. Reciprocal-power dilation: spectrum r(sqrt 2 T) and norm max |r|.
Outcome criterion_3(double& budget) {
    budget = 0.0; // no stated budget
    Outcome out;
    const CaseStudyResult r = run_case_study("ross-circle");
    const double distance = out_double(r, "curve_distance");
    out.require(distance <= 1e-2, "dist_H(cloud, r(sqrt2 T)) = " + fmt(distance) + " <= 1e-2");
    const double gap = std::abs(out_double(r, "operator_norm") - out_double(r, "norm_oracle"));
    out.require(gap <= 1e-3, "norm gap to dense-sweep oracle = " + fmt(gap) + " <= 1e-3");
    return out;
}

// 4. Annulus analytics against the torus oracle, plus rotational invariance.
//    Budget 30 s for the pair of cases.
Outcome criterion_4(double& budget) {
    budget = 30.0;
    Outcome out;
    {
        const CaseStudyResult r = run_case_study("two-term-annulus");
        const double r_in = out_double(r, "r_in");
        const double r_out = out_double(r, "r_out");
        const double lo_gap = std::abs(out_double(r, "torus_min_modulus") - r_in);
        const double hi_gap = std::abs(out_double(r, "torus_max_modulus") - r_out);
        out.require(std::abs(r_in - 0.1297565) < 1e-4,
                    "two-term r_in = " + fmt(r_in) + " (2^-1/2 - 3^-1/2)");
        out.require(std::abs(r_out - 1.2844571) < 1e-4,
                    "two-term r_out = " + fmt(r_out) + " (2^-1/2 + 3^-1/2)");
        out.require(lo_gap <= 1e-3, "two-term min-modulus gap " + fmt(lo_gap) + " <= 1e-3");
        out.require(hi_gap <= 1e-3, "two-term max-modulus gap " + fmt(hi_gap) + " <= 1e-3");
        out.require(r.passed, "two-term rotational invariance at 8 random angles");
    }
    {
        const CaseStudyResult r = run_case_study("three-term-disc");
        const double lo = out_double(r, "torus_min_modulus");
        const double hi_gap =
            std::abs(out_double(r, "torus_max_modulus") - out_double(r, "r_out"));
        out.require(out_double(r, "r_in") == 0.0, "three-term analytic r_in = 0 (disc)");
        out.require(lo <= 1e-3, "three-term min modulus " + fmt(lo) + " <= 1e-3");
        out.require(hi_gap <= 1e-3, "three-term max-modulus gap " + fmt(hi_gap) + " <= 1e-3");
        out.require(r.passed, "three-term rotational invariance at 8 random angles");
    }
    return out;
}

// 5. Kato truncation bound on the prime family, orders 5..10. Budget 60 s.
Outcome criterion_5(double& budget) {
    budget = 60.0;
    Outcome out;
    const GeometricPrimeFamily family;
    const int orders[] = {5, 6, 7, 8, 9};
    TorusPlan plan;
    plan.samples = 200'000;
    const std::vector<TruncationStep> steps = truncation_convergence(family, orders, plan);
    for (const TruncationStep& s : steps) {
        const double allowance = s.tail_bound + 2.0 * s.resolution;
        out.require(s.measured_distance <= allowance,
                    "n=" + std::to_string(s.order) + ": dist " + fmt(s.measured_distance) +
                        " <= bound " + fmt(s.tail_bound) + " + 2*res " + fmt(s.resolution));
    }
    return out;
}

// 6. Union of the scalar-symbol ranges equals the matrix-symbol cloud for a
//    mixed-sign scalar dilation.
Outcome criterion_6(double& budget) {
    budget = 0.0;
    Outcome out;
    const OperatorSpec spec = OperatorSpec::validate(
        1, {scalar_entry(0, {1.0, 0.0}, 2.0), scalar_entry(1, {1.0, 0.0}, -3.0)});
    const SymbolTable table(spec);
    const SpectrumApprox grid = spectrum_frequency_grid(table);
    const SpectrumApprox curve = scalar_range_curve(table);
    const double distance = hausdorff_distance(grid.points, curve.points);
    const double allowance = grid.resolution + curve.resolution;
    out.require(distance <= allowance, "dist_H(eigen cloud, phi/phi* ranges) = " +
                                           fmt(distance) + " <= " + fmt(allowance));
    return out;
}

// 7. Schur factorization of det(lambda - Phi) for d = 1, 2, 3.
Outcome criterion_7(double& budget) {
    budget = 0.0;
    Outcome out;
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> freq(-10.0, 10.0);
    std::uniform_real_distribution<double> re(-2.0, 2.0);
    for (int d : {1, 2, 3}) {
        const OperatorSpec spec = OperatorSpec::validate(
            d, {scalar_entry(0, {1.0, 0.0}, 2.0, d), scalar_entry(1, {1.0, 0.0}, -3.0, d)});
        const SymbolTable table(spec);
        const int n = 1 << d;
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            RealVector s(d);
            for (int l = 0; l < d; ++l)
                s(l) = freq(rng);
            const Complex lambda(re(rng), re(rng));
            const ComplexMatrix m = lambda * ComplexMatrix::Identity(n, n) - table.matrix(s);
            const Complex lhs = m.determinant();
            const Complex rhs = std::pow(
                (lambda - table.scalar(s)) * (lambda - table.conjugate_scalar(s)), n / 2);
            worst = std::max(worst, std::abs(lhs - rhs) /
                                        std::max({std::abs(lhs), std::abs(rhs), 1e-12}));
        }
        out.require(worst <= 1e-8,
                    "d=" + std::to_string(d) + " worst relative error " + fmt(worst));
    }
    return out;
}

// 8. Norm inequality: random Gaussians under every case-study operator, and
//    the near-extremizer on the two-term dilation spec.
Outcome criterion_8(double& budget) {
    budget = 0.0;
    Outcome out;
    struct Case {
        std::string name;
        OperatorSpec spec;
    };
    std::vector<Case> cases;
    cases.push_back({"remark", remark_circle_document().to_operator_spec()});
    cases.push_back({"cell-growth", cell_growth_document().to_operator_spec()});
    cases.push_back({"ross", ross_document().to_operator_spec()});
    cases.push_back({"two-term", two_term_document().to_operator_spec()});
    cases.push_back({"three-term", three_term_document().to_operator_spec()});
    cases.push_back({"prime-10", truncate_family(GeometricPrimeFamily{}, 10)});

    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> center(-1.5, 1.5);
    std::uniform_real_distribution<double> width(0.4, 1.6);

    for (const Case& c : cases) {
        const int d = c.spec.dimension();
        std::vector<TestFunction> fs;
        for (int i = 0; i < 20; ++i) {
            RealVector mu(d);
            for (int l = 0; l < d; ++l)
                mu(l) = center(rng);
            fs.push_back(TestFunction::gaussian(mu, width(rng)));
        }
        const RatioExperiment r = norm_ratio_experiment(c.spec, fs);
        double worst = 0.0;
        for (double ratio : r.ratios)
            worst = std::max(worst, ratio - r.sup_symbol_norm);
        out.require(worst <= 1e-4, c.name + ": max excess over sup||Phi|| = " + fmt(worst) +
                                       " <= 1e-4 (sup " + fmt(r.sup_symbol_norm) + ")");
    }

    // Near-extremizer on the two-term dilation spec.
    const OperatorSpec remark = remark_circle_document().to_operator_spec();
    std::vector<TestFunction> extremal = {TestFunction::power_cutoff(0.5, 1e-6)};
    const RatioExperiment r = norm_ratio_experiment(remark, extremal);
    out.require(r.max_ratio >= 0.98 * r.sup_symbol_norm,
                "near-extremizer reaches " + fmt(r.max_ratio / r.sup_symbol_norm) +
                    " of sup||Phi|| >= 0.98");
    return out;
}

// 9. Sharpness convergence: pinned closed form at t = 1e-6 and the monotone
//    t-sequence with a sub-1% final step.
Outcome criterion_9(double& budget) {
    budget = 0.0;
    Outcome out;
    const double c[] = {1.0, 1.0};
    const SharpnessReport pinned = sharpness_experiment(2.0, c, 1e-6);
    const double closed_form =
        1.0 + std::sqrt(2.0) * (1.0 - std::log(2.0) / (12.0 * std::log(10.0)));
    out.require(std::abs(pinned.ratio - closed_form) <= 1e-9,
                "ratio(1e-6) = " + fmt(pinned.ratio) + " matches closed form to 1e-9");

    const double n_p = 1.0 + std::sqrt(2.0);
    std::vector<double> ratios;
    for (double t : {1e-2, 1e-4, 1e-6, 1e-8})
        ratios.push_back(sharpness_experiment(2.0, c, t).ratio);
    bool monotone = true;
    for (std::size_t i = 1; i < ratios.size(); ++i)
        monotone = monotone && ratios[i] > ratios[i - 1] && ratios[i] < n_p;
    out.require(monotone, "t-sequence increases toward 1 + sqrt 2");
    const double final_step = (ratios[3] - ratios[2]) / n_p;
    out.require(final_step <= 0.01,
                "final step " + fmt(100.0 * final_step) + "% of N_p <= 1% (remaining gap " +
                    fmt(100.0 * (n_p - ratios[3]) / n_p) + "%)");
    return out;
}

// 10. Point/Weyl classification across the recognized shapes.
Outcome criterion_10(double& budget) {
    budget = 0.0;
    Outcome out;

    const OperatorSpec identity =
        OperatorSpec::validate(1, {scalar_entry(0, {2.5, 0.0}, 1.0)});
    const std::vector<Complex> p_id = point_spectrum(identity);
    out.require(p_id.size() == 1 && std::abs(p_id[0] - Complex(2.5, 0.0)) < 1e-10,
                "lambda I: sigma_p = {lambda}");
    const SpectrumApprox id_cloud = spectrum_frequency_grid(identity);
    const SpectrumClassification id_class = weyl_classify(identity, id_cloud, p_id);
    out.require(id_class.weyl_equals_spectrum && id_class.pi00 == Pi00Status::Empty,
                "lambda I: sigma_ew = sigma = {lambda}");

    const OperatorSpec two = two_term_document().to_operator_spec();
    out.require(point_spectrum(two).empty(), "two positive dilations: sigma_p empty");

    const OperatorSpec reflection =
        OperatorSpec::validate(1, {scalar_entry(0, {1.3, 0.0}, -1.0)});
    std::vector<Complex> p_ref = point_spectrum(reflection);
    bool pair = p_ref.size() == 2;
    if (pair) {
        std::sort(p_ref.begin(), p_ref.end(),
                  [](Complex a, Complex b) { return a.real() < b.real(); });
        pair = std::abs(p_ref[0] + Complex(1.3, 0.0)) < 1e-9 &&
               std::abs(p_ref[1] - Complex(1.3, 0.0)) < 1e-9;
    }
    out.require(pair, "lambda J: sigma_p = {lambda, -lambda}");

    const DiagonalizedFamily family = simultaneous_diagonalize(two);
    const CoordinateIndependence independence = best_coordinate_independence(two, family);
    TorusPlan plan;
    plan.samples = 100'000;
    const SpectrumApprox cloud =
        spectrum_torus(SymbolTable(two, family), independence.report, plan);
    const SpectrumClassification two_class = weyl_classify(two, cloud, {});
    out.require(two_class.weyl_equals_spectrum && !two_class.weyl_caveat,
                "annulus with r_in > 0: sigma_ew = sigma");
    return out;
}

// 11. Relation detection: exact verdicts and numeric/exact agreement.
Outcome criterion_11(double& budget) {
    budget = 0.0;
    Outcome out;

    const ExactEigenvalue primes[] = {{1, 2, 1, 1}, {1, 3, 1, 1}, {1, 5, 1, 1}};
    out.require(check_exact_independence(primes).verdict ==
                    RelationVerdict::ExactlyIndependent,
                "{2,3,5} exactly independent");

    const double two_four[] = {2.0, 4.0};
    const RelationReport r24 = check_log_independence(two_four);
    out.require(r24.verdict == RelationVerdict::Dependent && r24.relation &&
                    *r24.relation == std::vector<std::int64_t>{2, -1},
                "{2,4} dependent with witness (2,-1)");

    const double one_two[] = {1.0, 2.0};
    out.require(check_log_independence(one_two).verdict == RelationVerdict::Dependent,
                "{1,2} dependent");

    std::mt19937_64 rng(4096);
    std::uniform_int_distribution<int> base_pick(0, 4);
    std::uniform_int_distribution<int> num_pick(-2, 2);
    std::uniform_int_distribution<int> den_pick(1, 2);
    const std::int64_t bases[] = {2, 3, 5, 6, 10};
    int disagreements = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 2);
        std::vector<ExactEigenvalue> exact;
        std::vector<double> numeric;
        for (int i = 0; i < m; ++i) {
            ExactEigenvalue e{1, bases[base_pick(rng)], num_pick(rng), den_pick(rng)};
            exact.push_back(e);
            numeric.push_back(std::exp(e.log_modulus()));
        }
        const bool exact_dep =
            check_exact_independence(exact).verdict == RelationVerdict::Dependent;
        const bool numeric_dep =
            check_log_independence(numeric).verdict == RelationVerdict::Dependent;
        if (exact_dep != numeric_dep)
            ++disagreements;
    }
    out.require(disagreements == 0, "exact and numeric paths agree on 100 random forms");
    return out;
}

struct Criterion {
    int number;
    const char* title;
    std::function<Outcome(double&)> run;
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0)
            only = std::atoi(argv[i + 1]);

    const std::vector<Criterion> criteria = {
        {1, "two-term dilation circle and invariance failure", criterion_1},
        {2, "cell-growth circle", criterion_2},
        {3, "reciprocal-power dilation: curve and norm", criterion_3},
        {4, "annulus analytics vs torus oracle", criterion_4},
        {5, "Kato truncation bound on the prime family", criterion_5},
        {6, "scalar-range union equals the eigenvalue cloud", criterion_6},
        {7, "Schur determinant factorization", criterion_7},
        {8, "norm inequality and near-extremizer", criterion_8},
        {9, "sharpness convergence", criterion_9},
        {10, "point and Weyl classification", criterion_10},
        {11, "integer-relation detection", criterion_11},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.number != only)
            continue;
        double budget = 0.0;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run(budget);
        } catch (const std::exception& e) {
            outcome.passed = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (budget > 0.0 && elapsed > budget) {
            outcome.passed = false;
            outcome.detail += "; over the " + fmt(budget) + " s budget";
        }
        std::printf("[%s] criterion %2d: %s (%.2f s)\n", outcome.passed ? "PASS" : "FAIL",
                    c.number, c.title, elapsed);
        if (!outcome.detail.empty())
            std::printf("          %s\n", outcome.detail.c_str());
        if (!outcome.passed)
            ++failures;
    }
    return failures;
}
