// Command-line front end: spec-file ingestion, the operation subcommands, and
// machine-readable result documents (JSON by default, CSV for point clouds).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hausdorff/action.hpp"
#include "hausdorff/case_studies.hpp"
#include "hausdorff/relations.hpp"
#include "hausdorff/spectra.hpp"
#include "hausdorff/version.hpp"

using namespace hausdorff;

namespace {

struct CommonOptions {
    std::string spec_path;
    std::string out_path;
    std::uint64_t seed = 0;
    std::string format = "json";
    int order = 10; // truncation order for generator specs
};

struct LoadedSpec {
    SpecDocument document;
    std::string digest;

    OperatorSpec materialize(int order) const {
        if (document.has_generator() && document.entries.empty())
            return truncate_family(*document.make_generator(), order);
        return document.to_operator_spec();
    }
};

LoadedSpec load_spec(const CommonOptions& opts) {
    if (opts.spec_path.empty())
        throw Error("missing --spec <path>");
    const std::string bytes = read_file(opts.spec_path);
    return LoadedSpec{SpecDocument::parse(bytes), fnv1a_digest(bytes)};
}

void emit(const ResultDocument& doc, const CommonOptions& opts) {
    const std::string text = opts.format == "csv" ? doc.to_csv() : doc.to_json();
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + opts.out_path);
    out << text;
}

std::optional<double> parse_auto(const std::string& value, const char* what) {
    if (value.empty() || value == "auto")
        return std::nullopt;
    try {
        return std::stod(value);
    } catch (...) {
        throw Error(std::string("bad value for ") + what + ": " + value);
    }
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
        if (!item.empty())
            out.push_back(std::stod(item));
    return out;
}

std::vector<RealVector> parse_points(const std::string& text, int dimension) {
    std::vector<RealVector> out;
    std::stringstream stream(text);
    std::string chunk;
    while (std::getline(stream, chunk, ';')) {
        const std::vector<double> coords = parse_list(chunk);
        if (static_cast<int>(coords.size()) != dimension)
            throw Error("point '" + chunk + "' does not have dimension " +
                        std::to_string(dimension));
        RealVector x(dimension);
        for (int i = 0; i < dimension; ++i)
            x(i) = coords[i];
        out.push_back(std::move(x));
    }
    return out;
}

TestFunction parse_function(const std::string& text, int dimension) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::vector<double> args =
        colon == std::string::npos ? std::vector<double>{} : parse_list(text.substr(colon + 1));
    if (kind == "gaussian") {
        RealVector center = RealVector::Zero(dimension);
        double width = 1.0;
        if (static_cast<int>(args.size()) == dimension + 1) {
            for (int i = 0; i < dimension; ++i)
                center(i) = args[i];
            width = args.back();
        } else if (!args.empty()) {
            throw Error("gaussian takes center coordinates plus a width");
        }
        return TestFunction::gaussian(center, width);
    }
    if (kind == "cutoff") {
        if (args.size() != 2)
            throw Error("cutoff takes exponent,t");
        return TestFunction::power_cutoff(args[0], args[1]);
    }
    if (kind == "indicator") {
        if (static_cast<int>(args.size()) != 2 * dimension)
            throw Error("indicator takes lo,hi per axis");
        Box box;
        for (int i = 0; i < dimension; ++i)
            box.axes.push_back({args[2 * i], args[2 * i + 1]});
        return TestFunction::indicator(box);
    }
    throw Error("unknown function '" + kind + "' (gaussian | cutoff | indicator)");
}

const char* verdict_name(RelationVerdict v) {
    switch (v) {
    case RelationVerdict::IndependentUpToBound: return "IndependentUpToBound";
    case RelationVerdict::Dependent: return "Dependent";
    case RelationVerdict::ExactlyIndependent: return "ExactlyIndependent";
    }
    return "?";
}

void add_cloud_outputs(ResultDocument& doc, const SpectrumApprox& approx) {
    doc.set_output("method", std::string(to_string(approx.method)));
    doc.set_output("sample_count", approx.sample_count);
    doc.set_output("resolution", approx.resolution);
    doc.set_output("resolution_note",
                   std::string("covering-radius estimate, not a certificate"));
    if (approx.annulus) {
        doc.set_output("r_in", approx.annulus->inner);
        doc.set_output("r_out", approx.annulus->outer);
    }
    doc.set_output("empirically_connected",
                   empirically_connected(approx.points,
                                         3.0 * approx.resolution +
                                             1e-9 * (1.0 + std::abs(approx.points[0]))));
    doc.set_output("cloud", approx.points);
}

int run_spectrum(const CommonOptions& opts, const std::string& method,
                 const std::string& span, const std::string& step, std::int64_t samples) {
    const LoadedSpec loaded = load_spec(opts);
    ResultDocument doc("spectrum", loaded.digest, opts.seed);
    doc.set_parameter("method", method);
    doc.set_parameter("order", static_cast<std::int64_t>(opts.order));

    const OperatorSpec spec = loaded.materialize(opts.order);
    const DiagonalizedFamily family = simultaneous_diagonalize(spec, opts.seed);
    const SymbolTable table(spec, family);

    SpectrumApprox approx;
    if (method == "grid") {
        GridPlan plan;
        plan.span = parse_auto(span, "--span");
        plan.step = parse_auto(step, "--step");
        approx = spectrum_frequency_grid(table, plan);
        // The effective values, whether given or derived from "auto".
        doc.set_parameter("span", approx.axis_spans);
        doc.set_parameter("step", approx.axis_steps);
    } else if (method == "torus") {
        const CoordinateIndependence best = best_coordinate_independence(spec, family);
        TorusPlan plan;
        plan.samples = samples;
        plan.seed = opts.seed;
        doc.set_parameter("samples", samples);
        doc.set_parameter("relation_verdict", std::string(verdict_name(best.report.verdict)));
        approx = spectrum_torus(table, best.report, plan);
    } else if (method == "analytic") {
        try {
            approx = annulus_analytic(spec);
        } catch (const HypothesisNotMetError&) {
            GridPlan plan;
            plan.span = parse_auto(span, "--span");
            plan.step = parse_auto(step, "--step");
            approx = scalar_range_curve(table, plan);
        }
    } else {
        throw Error("unknown --method '" + method + "' (grid | torus | analytic)");
    }
    add_cloud_outputs(doc, approx);
    emit(doc, opts);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra, symbols and norms of discrete dilation-sum operators on L2(R^d)"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    CommonOptions opts;
    std::string method = "grid", span = "auto", step = "auto";
    std::string angles_text, s_text, points_text, coeffs_text = "1,1";
    std::string function_text = "gaussian";
    std::string orders_text = "5,6,7,8,9";
    std::string case_name;
    double p = 2.0, t = 1e-6;
    std::int64_t bound = 10, samples = 1'000'000;

    const auto add_common = [&](CLI::App* cmd, bool needs_spec = true) {
        if (needs_spec)
            cmd->add_option("--spec", opts.spec_path, "operator spec file (JSON)");
        cmd->add_option("--out", opts.out_path, "write the result document here");
        cmd->add_option("--seed", opts.seed, "deterministic seed");
        cmd->add_option("--format", opts.format, "json | csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--order", opts.order, "truncation order for generator specs");
    };

    CLI::App* symbol = app.add_subcommand("symbol", "evaluate the symbols at a frequency");
    add_common(symbol);
    symbol->add_option("--s", s_text, "frequency, comma-separated (default 0)");

    CLI::App* spectrum = app.add_subcommand("spectrum", "sample the spectrum");
    add_common(spectrum);
    spectrum->add_option("--method", method, "grid | torus | analytic");
    spectrum->add_option("--span", span, "grid half-width or 'auto'");
    spectrum->add_option("--step", step, "grid step or 'auto'");
    spectrum->add_option("--samples", samples, "torus sample budget");

    CLI::App* norm = app.add_subcommand("norm", "N_p bound and the symbol norm");
    add_common(norm);
    norm->add_option("--p", p, "exponent in [1, inf]");

    CLI::App* relations = app.add_subcommand("relations", "Z-independence of the log moduli");
    add_common(relations);
    relations->add_option("--bound", bound, "coefficient bound for the search");

    CLI::App* invariance = app.add_subcommand("invariance", "rotational-invariance check");
    add_common(invariance);
    invariance->add_option("--method", method, "grid | torus | analytic");
    invariance->add_option("--span", span, "grid half-width or 'auto'");
    invariance->add_option("--step", step, "grid step or 'auto'");
    invariance->add_option("--samples", samples, "torus sample budget");
    invariance->add_option("--angles", angles_text, "angles in radians, comma-separated");

    CLI::App* truncate = app.add_subcommand("truncate", "truncation convergence of a family");
    add_common(truncate);
    truncate->add_option("--orders", orders_text, "orders n, comma-separated");
    truncate->add_option("--samples", samples, "torus sample budget per truncation");

    CLI::App* apply_cmd = app.add_subcommand("apply", "apply the operator to a function");
    add_common(apply_cmd);
    apply_cmd->add_option("--function", function_text,
                          "gaussian[:c...,w] | cutoff:e,t | indicator:lo,hi...");
    apply_cmd->add_option("--points", points_text, "points, ';' between, ',' within");

    CLI::App* sharpness = app.add_subcommand("sharpness", "norm-bound sharpness experiment");
    add_common(sharpness, /*needs_spec=*/false);
    sharpness->add_option("--p", p, "exponent in (1, inf)");
    sharpness->add_option("--t", t, "cutoff parameter in (0, 1)");
    sharpness->add_option("--coeffs", coeffs_text, "c(1), c(2), ... (nonnegative)");

    CLI::App* case_cmd = app.add_subcommand("case", "run a bundled case study");
    case_cmd->add_option("name", case_name, "case-study name")->required();
    add_common(case_cmd, /*needs_spec=*/false);
    case_cmd->add_option("--samples", samples, "override the sampling budget");
    bool list_cases = false;
    case_cmd->add_flag("--list", list_cases, "list the available case studies");

    CLI11_PARSE(app, argc, argv);

    try {
        if (symbol->parsed()) {
            const LoadedSpec loaded = load_spec(opts);
            const OperatorSpec spec = loaded.materialize(opts.order);
            const SymbolTable table(spec);
            RealVector s = RealVector::Zero(spec.dimension());
            if (!s_text.empty()) {
                const std::vector<double> coords = parse_list(s_text);
                if (static_cast<int>(coords.size()) != spec.dimension())
                    throw Error("--s needs " + std::to_string(spec.dimension()) + " numbers");
                for (int i = 0; i < spec.dimension(); ++i)
                    s(i) = coords[i];
            }
            const SymbolEvaluation ev = table.evaluate(s);
            ResultDocument doc("symbol", loaded.digest, opts.seed);
            doc.set_parameter("s", std::vector<double>(s.data(), s.data() + s.size()));
            std::vector<Complex> flat;
            for (int i = 0; i < ev.matrix.rows(); ++i)
                for (int j = 0; j < ev.matrix.cols(); ++j)
                    flat.push_back(ev.matrix(i, j));
            doc.set_output("matrix_size", static_cast<std::int64_t>(ev.matrix.rows()));
            doc.set_output("matrix", flat);
            doc.set_output("scalar", std::vector<Complex>{*ev.scalar});
            if (ev.conjugate_scalar)
                doc.set_output("conjugate_scalar", std::vector<Complex>{*ev.conjugate_scalar});
            doc.set_output("matrix_norm", table.matrix_norm(s));
            emit(doc, opts);
            return 0;
        }
        if (spectrum->parsed())
            return run_spectrum(opts, method, span, step, samples);
        if (norm->parsed()) {
            const LoadedSpec loaded = load_spec(opts);
            const OperatorSpec spec = loaded.materialize(opts.order);
            ResultDocument doc("norm", loaded.digest, opts.seed);
            doc.set_parameter("p", p);
            doc.set_output("np_bound", norm_bound(spec, p));
            if (p == 2.0)
                doc.set_output("sup_symbol_norm", operator_norm_estimate(SymbolTable(spec)));
            emit(doc, opts);
            return 0;
        }
        if (relations->parsed()) {
            const LoadedSpec loaded = load_spec(opts);
            const OperatorSpec spec = loaded.materialize(opts.order);
            const DiagonalizedFamily family = simultaneous_diagonalize(spec, opts.seed);
            const CoordinateIndependence best =
                best_coordinate_independence(spec, family, bound);
            ResultDocument doc("relations", loaded.digest, opts.seed);
            doc.set_parameter("bound", bound);
            doc.set_output("verdict", std::string(verdict_name(best.report.verdict)));
            doc.set_output("coordinate", static_cast<std::int64_t>(best.coordinate));
            doc.set_output("residual", best.report.residual);
            if (best.report.relation) {
                std::vector<double> relation;
                for (auto v : *best.report.relation)
                    relation.push_back(static_cast<double>(v));
                doc.set_output("relation", relation);
            }
            emit(doc, opts);
            return 0;
        }
        if (invariance->parsed()) {
            const LoadedSpec loaded = load_spec(opts);
            const OperatorSpec spec = loaded.materialize(opts.order);
            const DiagonalizedFamily family = simultaneous_diagonalize(spec, opts.seed);
            const SymbolTable table(spec, family);
            SpectrumApprox approx;
            if (method == "torus") {
                const CoordinateIndependence best = best_coordinate_independence(spec, family);
                TorusPlan plan;
                plan.samples = samples;
                plan.seed = opts.seed;
                approx = spectrum_torus(table, best.report, plan);
            } else {
                GridPlan plan;
                plan.span = parse_auto(span, "--span");
                plan.step = parse_auto(step, "--step");
                approx = spectrum_frequency_grid(table, plan);
            }
            std::vector<double> angles =
                angles_text.empty() ? std::vector<double>{0.5, 1.0, 2.0, 3.1}
                                    : parse_list(angles_text);
            const InvarianceCheck check = rotational_invariance_check(approx, angles);
            ResultDocument doc("invariance", loaded.digest, opts.seed);
            doc.set_parameter("angles", angles);
            doc.set_output("passed", check.passed);
            doc.set_output("max_distance", check.max_distance);
            doc.set_output("tolerance", check.tolerance);
            doc.set_output("distances", check.distances);
            emit(doc, opts);
            return check.passed ? 0 : 1;
        }
        if (truncate->parsed()) {
            const LoadedSpec loaded = load_spec(opts);
            if (!loaded.document.has_generator())
                throw Error("truncate needs a generator spec");
            const auto family = loaded.document.make_generator();
            std::vector<int> orders;
            for (double v : parse_list(orders_text))
                orders.push_back(static_cast<int>(v));
            TorusPlan plan;
            plan.samples = samples;
            plan.seed = opts.seed;
            const std::vector<TruncationStep> steps =
                truncation_convergence(*family, orders, plan);
            ResultDocument doc("truncate", loaded.digest, opts.seed);
            doc.set_parameter("samples", samples);
            std::vector<double> ns, dists, bounds, resolutions;
            for (const TruncationStep& s : steps) {
                ns.push_back(s.order);
                dists.push_back(s.measured_distance);
                bounds.push_back(s.tail_bound);
                resolutions.push_back(s.resolution);
            }
            doc.set_output("orders", ns);
            doc.set_output("measured_distance", dists);
            doc.set_output("tail_bound", bounds);
            doc.set_output("resolution", resolutions);
            emit(doc, opts);
            return 0;
        }
        if (apply_cmd->parsed()) {
            const LoadedSpec loaded = load_spec(opts);
            const OperatorSpec spec = loaded.materialize(opts.order);
            const TestFunction f = parse_function(function_text, spec.dimension());
            if (points_text.empty())
                throw Error("apply needs --points");
            const std::vector<RealVector> points = parse_points(points_text, spec.dimension());
            const std::vector<Complex> values = apply(spec, f, points);
            ResultDocument doc("apply", loaded.digest, opts.seed);
            doc.set_parameter("function", function_text);
            doc.set_output("values", values);
            emit(doc, opts);
            return 0;
        }
        if (sharpness->parsed()) {
            const std::vector<double> coeffs = parse_list(coeffs_text);
            const SharpnessReport report = sharpness_experiment(p, coeffs, t);
            ResultDocument doc("sharpness", fnv1a_digest(coeffs_text), opts.seed);
            doc.set_parameter("p", p);
            doc.set_parameter("t", t);
            doc.set_output("ratio", report.ratio);
            doc.set_output("limit", report.limit);
            std::vector<double> hs;
            for (const auto& [k, h] : report.h_values)
                hs.push_back(h);
            doc.set_output("h_values", hs);
            emit(doc, opts);
            return 0;
        }
        if (case_cmd->parsed()) {
            if (list_cases) {
                for (const std::string& name : case_study_names())
                    std::puts(name.c_str());
                return 0;
            }
            const std::optional<std::int64_t> override_samples =
                case_cmd->count("--samples") ? std::optional<std::int64_t>(samples)
                                             : std::nullopt;
            const CaseStudyResult result =
                run_case_study(case_name, opts.seed, override_samples);
            for (const CaseStudyCheck& check : result.checks)
                std::printf("[%s] %s (measured %.6g, threshold %.6g)\n",
                            check.passed ? "ok" : "FAIL", check.description.c_str(),
                            check.measured, check.threshold);
            if (!opts.out_path.empty()) {
                std::ofstream out(opts.out_path, std::ios::binary);
                out << result.document.to_json();
            }
            std::printf("%s: %s\n", result.name.c_str(),
                        result.passed ? "PASSED" : "FAILED");
            return result.passed ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
