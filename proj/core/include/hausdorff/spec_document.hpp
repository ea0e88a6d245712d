#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hausdorff/family.hpp"
#include "hausdorff/operator_spec.hpp"

namespace hausdorff {

// On-disk operator description (JSON, schema_version "1"):
//
// {
//   "schema_version": "1",
//   "dimension": 1,
//   "entries": [
//     {"k": 0, "c": [1.0, 0.0], "matrix": [1.0],
//      "exact": [{"sign": 1, "base": 2, "num": 0, "den": 1}]}
//   ],
//   "generator": {"name": "geometric-prime"}
// }
//
// "matrix" is row-major, d*d reals. "exact" is optional, one form per
// eigenvalue. "generator" selects a named infinite family instead of (or,
// for custom-tail, on top of) the explicit entries:
//   {"name": "geometric-prime"}
//   {"name": "custom-tail", "tail_coefficient": C, "tail_ratio": r}
// (custom-tail uses the document's entries as its stock). Unknown or missing
// fields are hard errors with a location.
struct SpecDocument {
    struct Entry {
        std::int64_t k = 0;
        Complex c{0.0, 0.0};
        std::vector<double> matrix; // row-major, d*d
        std::optional<std::vector<ExactEigenvalue>> exact;
    };
    struct Generator {
        std::string name;
        std::optional<double> tail_coefficient;
        std::optional<double> tail_ratio;
    };

    std::string schema_version = "1";
    int dimension = 1;
    std::vector<Entry> entries;
    std::optional<Generator> generator;

    static SpecDocument parse(const std::string& text);
    static SpecDocument load(const std::string& path);

    std::string serialize() const; // canonical JSON (sorted keys, 2-space indent)

    bool has_generator() const { return generator.has_value(); }
    OperatorSpec to_operator_spec() const;
    std::unique_ptr<FamilyGenerator> make_generator() const;
};

// Whole-file read; throws on IO failure.
std::string read_file(const std::string& path);

} // namespace hausdorff
