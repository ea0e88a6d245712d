#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hausdorff/types.hpp"

namespace hausdorff {

using ResultValue = std::variant<bool, std::int64_t, double, std::string,
                                 std::vector<double>, std::vector<Complex>>;

// Machine-readable record of one invocation: inputs (digest + parameters),
// outputs, and provenance. Identical inputs and seed reproduce identical
// bytes; point clouds serialize as flat [re, im, re, im, ...] arrays.
class ResultDocument {
public:
    ResultDocument(std::string operation, std::string input_digest, std::uint64_t seed);

    void set_parameter(std::string name, ResultValue value);
    void set_output(std::string name, ResultValue value);

    const std::string& operation() const { return operation_; }
    const ResultValue* output(std::string_view name) const;

    std::string to_json() const;
    // CSV of the first cloud output (or the named one): "re,im" rows.
    std::string to_csv(std::string_view cloud_name = {}) const;

private:
    std::string operation_;
    std::string input_digest_;
    std::uint64_t seed_;
    std::vector<std::pair<std::string, ResultValue>> parameters_;
    std::vector<std::pair<std::string, ResultValue>> outputs_;
};

// FNV-1a 64-bit digest, hex-encoded; used to key result documents to their
// input bytes.
std::string fnv1a_digest(std::string_view bytes);

} // namespace hausdorff
