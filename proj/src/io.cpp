#include "nalg/io.hpp"

#include "nalg/rational.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace nalg::io {

namespace {

using ordered_json = nlohmann::ordered_json;

// Dimensions stay desk-scale; the cap guards the n^3 allocation against
// absurd inputs.
constexpr std::size_t kMaxDim = 64;

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
    throw error(fmt::format("{}: {}", origin, message));
}

std::size_t parse_index(const ordered_json& v, const std::string& origin,
                        const std::string& field, std::size_t dim) {
    if (!v.is_number_integer() || v.is_number_float())
        fail(origin, fmt::format("field '{}' must be an integer", field));
    const auto raw = v.get<long long>();
    if (raw < 0 || static_cast<std::size_t>(raw) >= dim)
        fail(origin, fmt::format("field '{}' is {}, outside the basis range 0..{}", field, raw,
                                 dim == 0 ? 0 : dim - 1));
    return static_cast<std::size_t>(raw);
}

void reject_unknown_keys(const ordered_json& obj, std::initializer_list<const char*> allowed,
                         const std::string& origin, const std::string& where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) known |= (item.key() == key);
        if (!known) fail(origin, fmt::format("unknown field '{}' in {}", item.key(), where));
    }
}

} // namespace

AlgebraDoc parse_algebra_text(const std::string& text, const std::string& origin) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(origin, fmt::format("JSON parse error: {}", e.what()));
    }
    if (!root.is_object()) fail(origin, "top level must be an object");
    reject_unknown_keys(root, {"dim", "label", "names", "products"}, origin, "the algebra file");

    if (!root.contains("dim")) fail(origin, "missing field 'dim'");
    if (!root["dim"].is_number_integer() || root["dim"].is_number_float())
        fail(origin, "field 'dim' must be a non-negative integer");
    const auto dim_raw = root["dim"].get<long long>();
    if (dim_raw < 0) fail(origin, "field 'dim' must be non-negative");
    if (static_cast<std::size_t>(dim_raw) > kMaxDim)
        fail(origin, fmt::format("dim {} exceeds the supported maximum {}", dim_raw, kMaxDim));
    const std::size_t dim = static_cast<std::size_t>(dim_raw);

    AlgebraDoc doc;
    doc.algebra.dim = dim;
    doc.algebra.mult = BilinearMap::zero(dim);

    if (root.contains("label")) {
        if (!root["label"].is_string()) fail(origin, "field 'label' must be a string");
        doc.algebra.label = root["label"].get<std::string>();
    }
    if (root.contains("names")) {
        if (!root["names"].is_array())
            fail(origin, "field 'names' must be an array of strings");
        if (root["names"].size() != dim)
            fail(origin, fmt::format("'names' has {} entries, expected dim = {}",
                                     root["names"].size(), dim));
        for (const auto& n : root["names"]) {
            if (!n.is_string()) fail(origin, "field 'names' must be an array of strings");
            doc.names.push_back(n.get<std::string>());
        }
    }

    if (!root.contains("products")) fail(origin, "missing field 'products'");
    if (!root["products"].is_array()) fail(origin, "field 'products' must be an array");

    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::size_t index = 0;
    for (const auto& entry : root["products"]) {
        const std::string where = fmt::format("products[{}]", index++);
        if (!entry.is_object()) fail(origin, fmt::format("{} must be an object", where));
        reject_unknown_keys(entry, {"i", "j", "coeffs"}, origin, where);
        if (!entry.contains("i") || !entry.contains("j") || !entry.contains("coeffs"))
            fail(origin, fmt::format("{} needs fields 'i', 'j' and 'coeffs'", where));
        const std::size_t i = parse_index(entry["i"], origin, where + ".i", dim);
        const std::size_t j = parse_index(entry["j"], origin, where + ".j", dim);
        if (!seen.insert({i, j}).second)
            fail(origin, fmt::format("duplicate product entry for (i={}, j={})", i, j));
        if (!entry["coeffs"].is_object())
            fail(origin, fmt::format("{}.coeffs must be an object", where));
        for (const auto& item : entry["coeffs"].items()) {
            std::size_t k = 0;
            try {
                std::size_t pos = 0;
                k = std::stoul(item.key(), &pos);
                if (pos != item.key().size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                fail(origin, fmt::format("{}.coeffs key '{}' is not a basis index", where,
                                         item.key()));
            }
            if (k >= dim)
                fail(origin, fmt::format("{}.coeffs key '{}' is outside the basis range 0..{}",
                                         where, item.key(), dim == 0 ? 0 : dim - 1));
            if (!item.value().is_string())
                fail(origin, fmt::format(
                                 "{}.coeffs[\"{}\"] must be a rational string like \"3/2\"",
                                 where, item.key()));
            try {
                doc.algebra.mult.at(i, j, k) = parse_rational(item.value().get<std::string>());
            } catch (const error& e) {
                fail(origin, fmt::format("{}.coeffs[\"{}\"]: {}", where, item.key(), e.what()));
            }
        }
    }
    return doc;
}

AlgebraDoc read_algebra_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(fmt::format("{}: cannot open file", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_text(buf.str(), path.string());
}

std::string write_algebra_text(const AlgebraDoc& doc) {
    const Algebra& a = doc.algebra;
    ordered_json root;
    root["dim"] = a.dim;
    if (!a.label.empty()) root["label"] = a.label;
    if (!doc.names.empty()) root["names"] = doc.names;

    ordered_json products = ordered_json::array();
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            const auto row = a.mult.row(i, j);
            ordered_json coeffs;
            for (std::size_t k = 0; k < a.dim; ++k)
                if (row[k] != 0) coeffs[std::to_string(k)] = row[k].get_str();
            if (coeffs.empty()) continue;
            ordered_json entry;
            entry["i"] = i;
            entry["j"] = j;
            entry["coeffs"] = std::move(coeffs);
            products.push_back(std::move(entry));
        }
    root["products"] = std::move(products);
    return root.dump(2) + "\n";
}

void write_algebra_file(const std::filesystem::path& path, const AlgebraDoc& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(fmt::format("{}: cannot open file for writing", path.string()));
    out << write_algebra_text(doc);
    if (!out) throw error(fmt::format("{}: write failed", path.string()));
}

} // namespace nalg::io
