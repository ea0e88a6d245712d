#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hausdorff/family.hpp"
#include "hausdorff/geometry.hpp"
#include "hausdorff/relations.hpp"
#include "hausdorff/symbols.hpp"

namespace hausdorff {

enum class SpectrumMethod { FrequencyGrid, TorusSampling, AnalyticAnnulus, AnalyticCurve };

const char* to_string(SpectrumMethod method);

struct AnnulusDescriptor {
    double inner = 0.0;
    double outer = 0.0;
};

// A sampled approximation of the spectrum: a planar point cloud, the method
// that produced it, and a covering-radius estimate. `resolution` is an
// estimate, not a certificate. Grid methods record the spans/steps they
// actually used (one per reduced-frequency axis), so "auto" plans stay
// reproducible from the result alone.
struct SpectrumApprox {
    std::vector<Complex> points;
    SpectrumMethod method = SpectrumMethod::FrequencyGrid;
    std::optional<AnnulusDescriptor> annulus;
    std::int64_t sample_count = 0;
    double resolution = 0.0;
    std::vector<double> axis_spans;
    std::vector<double> axis_steps;
};

// Frequency sampling plan. The only frequency dependence of the symbol is
// through s . log|a(k)|, so sampling happens on the subspace spanned by the
// log-vectors. Auto span makes the slowest phase sweep `periods` full
// periods; auto step keeps the fastest phase below `max_phase_step` radians
// per step. Explicit span/step override the auto rule on every axis.
struct GridPlan {
    std::optional<double> span;
    std::optional<double> step;
    double periods = 30.0;
    double max_phase_step = 0.05;
    std::int64_t max_auto_points = std::int64_t{1} << 21;
};

// Torus sampling plan: Kronecker lattice plus seeded uniform points plus a
// deterministic coarse-to-fine refinement around the extremal moduli (all
// stages sample the same torus map, and all counts stay inside `samples`).
struct TorusPlan {
    std::int64_t samples = 1'000'000;
    std::int64_t random_points = 10'000;
    std::uint64_t seed = 0;
    bool refine_extremes = true;
};

// Eigenvalues of Phi(s) over the frequency grid. The spectrum is the closure
// of the eigenvalue field, so the cloud fills it as the grid refines.
SpectrumApprox spectrum_frequency_grid(const SymbolTable& table, const GridPlan& plan = {});
SpectrumApprox spectrum_frequency_grid(const OperatorSpec& spec, const GridPlan& plan = {});

// Kronecker-density route: under the arithmetic hypothesis the phases
// e^{-i s.log|a(k)|} fill the torus, so the spectrum equals the closure of
// the eigenvalue field of Xi(t) over t in T^m. Requires an independent
// relation verdict; throws HypothesisNotMetError otherwise.
SpectrumApprox spectrum_torus(const SymbolTable& table, const RelationReport& relation,
                              const TorusPlan& plan = {});
SpectrumApprox spectrum_torus(const OperatorSpec& spec, const RelationReport& relation,
                              const TorusPlan& plan = {});

// Closed-form annulus for scalar-dilation or sign-definite families under
// the arithmetic hypothesis: with r_k = |c(k)| |det A(k)|^{-1/2},
// r_out = sum r_k and r_in = max(0, 2 max_k r_k - sum r_k). The emitted
// cloud samples concentric rings of the annulus. If no relation report is
// passed, one is computed. Throws HypothesisNotMetError when the family has
// the wrong shape or the hypothesis fails.
SpectrumApprox annulus_analytic(const OperatorSpec& spec,
                                std::optional<RelationReport> relation = std::nullopt);

// Dense sweep of the scalar-symbol ranges phi(R^d) and phi*(R^d) (scalar
// dilations only): the spectrum equals the closure of their union.
SpectrumApprox scalar_range_curve(const SymbolTable& table, const GridPlan& plan = {});

// sup over the frequency grid of the spectral norm ||Phi(s)||; equals the
// operator norm of H in the limit of grid refinement.
double operator_norm_estimate(const SymbolTable& table, const GridPlan& plan = {});

struct InvarianceCheck {
    bool passed = false;
    double max_distance = 0.0;
    double tolerance = 0.0;
    std::vector<double> distances; // one per angle
};

// Pass iff dist_H(e^{i theta} cloud, cloud) <= tol for every angle;
// tol defaults to 3 * resolution.
InvarianceCheck rotational_invariance_check(const SpectrumApprox& approx,
                                            std::span<const double> angles,
                                            std::optional<double> tolerance = std::nullopt);

// Candidate eigenvalues are the eigenvalues of Phi at the first probe;
// a candidate survives iff det(lambda I - Phi(s)) stays below tolerance at
// every probe frequency (common-eigenvalue criterion; valid for the real-
// analytic symbols of finite specs). Sign-definite families take the
// analytic fast path: {c(0)} for a single identity dilation, else empty.
std::vector<Complex> point_spectrum(const OperatorSpec& spec, int probe_count = 32);

enum class Pi00Status { Empty, ContainsZero, Unknown };
enum class RotationInvarianceVerdict { Proven, FailedNumerically, NotApplicable };

struct SpectrumClassification {
    std::vector<Complex> point_spectrum;
    bool weyl_equals_spectrum = true;
    bool weyl_caveat = false; // multiplicity of an isolated 0 is not decidable here
    Pi00Status pi00 = Pi00Status::Empty;
    RotationInvarianceVerdict rotation_invariant = RotationInvarianceVerdict::NotApplicable;
};

// Weyl classification: sigma_ew = sigma minus pi00, and pi00 is contained in
// {0} under the arithmetic hypothesis. Identity and reflection multiples are
// recognized analytically (their eigenvalues have infinite multiplicity);
// otherwise the hypothesis is required and an isolated 0 that is also an
// eigenvalue is reported as Unknown with a caveat.
SpectrumClassification weyl_classify(const OperatorSpec& spec, const SpectrumApprox& approx,
                                     std::span<const Complex> point_spec);

struct TruncationStep {
    int order = 0;              // n
    double measured_distance = 0.0; // dist_H(sigma^(n), sigma^(n+1))
    double tail_bound = 0.0;    // closed-form bound at order n
    double resolution = 0.0;    // max of the two cloud resolutions
};

// Spectra of successive truncations H^{(n)}, their Hausdorff distances, and
// the tail bounds that dominate them (Kato: dist <= ||R_n||).
std::vector<TruncationStep> truncation_convergence(const FamilyGenerator& family,
                                                   std::span<const int> orders,
                                                   const TorusPlan& plan = {});

} // namespace hausdorff
