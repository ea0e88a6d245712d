#include "hausdorff/spec_document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hausdorff {

namespace {

using nlohmann::json;

void reject_unknown(const json& node, const std::set<std::string>& known,
                    const std::string& where) {
    for (const auto& [key, value] : node.items())
        if (!known.count(key))
            throw ParseError(where + "." + key, "unknown field");
}

const json& require(const json& node, const char* key, const std::string& where) {
    if (!node.contains(key))
        throw ParseError(where, std::string("missing required field '") + key + "'");
    return node.at(key);
}

Complex parse_complex(const json& node, const std::string& where) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
        throw ParseError(where, "expected [re, im]");
    return Complex(node[0].get<double>(), node[1].get<double>());
}

ExactEigenvalue parse_exact(const json& node, const std::string& where) {
    if (!node.is_object())
        throw ParseError(where, "expected an object {sign, base, num, den}");
    reject_unknown(node, {"sign", "base", "num", "den"}, where);
    ExactEigenvalue e;
    e.sign = require(node, "sign", where).get<int>();
    e.base = require(node, "base", where).get<std::int64_t>();
    e.num = require(node, "num", where).get<std::int64_t>();
    e.den = require(node, "den", where).get<std::int64_t>();
    if (e.sign != 1 && e.sign != -1)
        throw ParseError(where + ".sign", "must be -1 or +1");
    if (e.base < 2)
        throw ParseError(where + ".base", "must be an integer >= 2");
    if (e.den <= 0)
        throw ParseError(where + ".den", "must be positive");
    return e;
}

SpecDocument::Entry parse_entry(const json& node, int dimension, const std::string& where) {
    if (!node.is_object())
        throw ParseError(where, "expected an object");
    reject_unknown(node, {"k", "c", "matrix", "exact"}, where);
    SpecDocument::Entry entry;
    entry.k = require(node, "k", where).get<std::int64_t>();
    entry.c = parse_complex(require(node, "c", where), where + ".c");
    const json& m = require(node, "matrix", where);
    if (!m.is_array() || m.size() != static_cast<std::size_t>(dimension) * dimension)
        throw ParseError(where + ".matrix",
                         "expected " + std::to_string(dimension * dimension) +
                             " row-major reals");
    for (const auto& v : m) {
        if (!v.is_number())
            throw ParseError(where + ".matrix", "expected reals");
        entry.matrix.push_back(v.get<double>());
    }
    if (node.contains("exact")) {
        const json& ex = node.at("exact");
        if (!ex.is_array())
            throw ParseError(where + ".exact", "expected an array");
        std::vector<ExactEigenvalue> forms;
        for (std::size_t i = 0; i < ex.size(); ++i)
            forms.push_back(parse_exact(ex[i], where + ".exact[" + std::to_string(i) + "]"));
        entry.exact = std::move(forms);
    }
    return entry;
}

} // namespace

SpecDocument SpecDocument::parse(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError("$", e.what());
    }
    if (!doc.is_object())
        throw ParseError("$", "expected a JSON object");
    reject_unknown(doc, {"schema_version", "dimension", "entries", "generator"}, "$");

    SpecDocument out;
    out.schema_version = require(doc, "schema_version", "$").get<std::string>();
    if (out.schema_version != "1")
        throw ParseError("$.schema_version", "unsupported schema version");
    out.dimension = require(doc, "dimension", "$").get<int>();
    if (out.dimension < 1)
        throw ParseError("$.dimension", "must be a positive integer");

    if (doc.contains("entries")) {
        const json& entries = doc.at("entries");
        if (!entries.is_array())
            throw ParseError("$.entries", "expected an array");
        for (std::size_t i = 0; i < entries.size(); ++i)
            out.entries.push_back(parse_entry(entries[i], out.dimension,
                                              "$.entries[" + std::to_string(i) + "]"));
    }

    if (doc.contains("generator")) {
        const json& gen = doc.at("generator");
        if (!gen.is_object())
            throw ParseError("$.generator", "expected an object");
        reject_unknown(gen, {"name", "tail_coefficient", "tail_ratio"}, "$.generator");
        Generator g;
        g.name = require(gen, "name", "$.generator").get<std::string>();
        if (gen.contains("tail_coefficient"))
            g.tail_coefficient = gen.at("tail_coefficient").get<double>();
        if (gen.contains("tail_ratio"))
            g.tail_ratio = gen.at("tail_ratio").get<double>();
        if (g.name == "geometric-prime") {
            if (!out.entries.empty())
                throw ParseError("$.entries",
                                 "geometric-prime takes no explicit entries");
            if (out.dimension != 1)
                throw ParseError("$.dimension", "geometric-prime is one-dimensional");
            if (g.tail_coefficient || g.tail_ratio)
                throw ParseError("$.generator", "geometric-prime takes no tail parameters");
        } else if (g.name == "custom-tail") {
            if (out.entries.empty())
                throw ParseError("$.entries", "custom-tail needs stocked entries");
            if (!g.tail_coefficient || !g.tail_ratio)
                throw ParseError("$.generator",
                                 "custom-tail needs tail_coefficient and tail_ratio");
        } else {
            throw ParseError("$.generator.name", "unknown generator '" + g.name + "'");
        }
        out.generator = std::move(g);
    }

    if (out.entries.empty() && !out.generator)
        throw ParseError("$", "document needs entries or a generator");
    return out;
}

SpecDocument SpecDocument::load(const std::string& path) {
    return parse(read_file(path));
}

std::string SpecDocument::serialize() const {
    json doc;
    doc["schema_version"] = schema_version;
    doc["dimension"] = dimension;
    if (!entries.empty()) {
        json list = json::array();
        for (const auto& e : entries) {
            json node;
            node["k"] = e.k;
            node["c"] = {e.c.real(), e.c.imag()};
            node["matrix"] = e.matrix;
            if (e.exact) {
                json forms = json::array();
                for (const auto& f : *e.exact)
                    forms.push_back({{"sign", f.sign},
                                     {"base", f.base},
                                     {"num", f.num},
                                     {"den", f.den}});
                node["exact"] = std::move(forms);
            }
            list.push_back(std::move(node));
        }
        doc["entries"] = std::move(list);
    }
    if (generator) {
        json g;
        g["name"] = generator->name;
        if (generator->tail_coefficient)
            g["tail_coefficient"] = *generator->tail_coefficient;
        if (generator->tail_ratio)
            g["tail_ratio"] = *generator->tail_ratio;
        doc["generator"] = std::move(g);
    }
    return doc.dump(2) + "\n";
}

OperatorSpec SpecDocument::to_operator_spec() const {
    if (entries.empty())
        throw Error("spec document has no explicit entries; truncate its generator instead");
    std::vector<ScaleEntry> scale;
    scale.reserve(entries.size());
    for (const auto& e : entries) {
        ScaleEntry s;
        s.index = e.k;
        s.coefficient = e.c;
        s.matrix = RealMatrix(dimension, dimension);
        for (int r = 0; r < dimension; ++r)
            for (int c = 0; c < dimension; ++c)
                s.matrix(r, c) = e.matrix[static_cast<std::size_t>(r) * dimension + c];
        s.exact_eigenvalues = e.exact;
        scale.push_back(std::move(s));
    }
    return OperatorSpec::validate(dimension, std::move(scale));
}

std::unique_ptr<FamilyGenerator> SpecDocument::make_generator() const {
    if (!generator)
        throw Error("spec document has no generator");
    if (generator->name == "geometric-prime")
        return std::make_unique<GeometricPrimeFamily>();
    // custom-tail: stock the document's entries.
    SpecDocument stock = *this;
    stock.generator.reset();
    const OperatorSpec spec = stock.to_operator_spec(); // validates the stock
    return std::make_unique<CustomTailFamily>(dimension, spec.entries(),
                                              *generator->tail_coefficient,
                                              *generator->tail_ratio);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace hausdorff
