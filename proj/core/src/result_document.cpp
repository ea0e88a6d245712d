#include "hausdorff/result_document.hpp"

#include <cstdio>

#include <json.hpp>

#include "hausdorff/version.hpp"

namespace hausdorff {

namespace {

using nlohmann::ordered_json;

ordered_json to_node(const ResultValue& value) {
    return std::visit(
        [](const auto& v) -> ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::vector<Complex>>) {
                ordered_json flat = ordered_json::array();
                for (const Complex& z : v) {
                    flat.push_back(z.real());
                    flat.push_back(z.imag());
                }
                return flat;
            } else {
                return ordered_json(v);
            }
        },
        value);
}

} // namespace

ResultDocument::ResultDocument(std::string operation, std::string input_digest,
                               std::uint64_t seed)
    : operation_(std::move(operation)), input_digest_(std::move(input_digest)), seed_(seed) {}

void ResultDocument::set_parameter(std::string name, ResultValue value) {
    parameters_.emplace_back(std::move(name), std::move(value));
}

void ResultDocument::set_output(std::string name, ResultValue value) {
    outputs_.emplace_back(std::move(name), std::move(value));
}

const ResultValue* ResultDocument::output(std::string_view name) const {
    for (const auto& [key, value] : outputs_)
        if (key == name)
            return &value;
    return nullptr;
}

std::string ResultDocument::to_json() const {
    ordered_json doc;
    doc["schema_version"] = "1";
    doc["operation"] = operation_;
    doc["input_digest"] = input_digest_;
    ordered_json params;
    for (const auto& [key, value] : parameters_)
        params[key] = to_node(value);
    doc["parameters"] = std::move(params);
    ordered_json outs;
    for (const auto& [key, value] : outputs_)
        outs[key] = to_node(value);
    doc["outputs"] = std::move(outs);
    doc["provenance"] = {{"tool", "hausdorff"},
                         {"version", version_string},
                         {"seed", seed_}};
    return doc.dump(2) + "\n";
}

std::string ResultDocument::to_csv(std::string_view cloud_name) const {
    const std::vector<Complex>* cloud = nullptr;
    for (const auto& [key, value] : outputs_) {
        if (!cloud_name.empty() && key != cloud_name)
            continue;
        if (const auto* v = std::get_if<std::vector<Complex>>(&value)) {
            cloud = v;
            break;
        }
    }
    if (!cloud)
        throw Error("result document has no point-cloud output to export");
    std::string out = "re,im\n";
    char line[80];
    for (const Complex& z : *cloud) {
        std::snprintf(line, sizeof(line), "%.17g,%.17g\n", z.real(), z.imag());
        out += line;
    }
    return out;
}

std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

} // namespace hausdorff
