#include "hyperkit/io.hpp"

#include "hyperkit/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace hyperkit::io {

namespace {

Rational parse_scalar(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(mpz_class(v.dump(), 10));
    if (v.is_number_float()) return parse_rational(v.dump());
    throw StructuralError("expected a number or rational string, got " + v.dump());
}

std::string decimal(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

const Json& member(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw StructuralError(std::string("missing field '") + key + "'");
    return doc.at(key);
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

RawHypergroup parse_hypergroup(const Json& doc, std::optional<Arithmetic> mode) {
    try {
        Arithmetic arithmetic = Arithmetic::exact;
        if (doc.contains("arithmetic")) {
            const auto a = doc.at("arithmetic").get<std::string>();
            if (a == "float")
                arithmetic = Arithmetic::floating;
            else if (a != "exact")
                throw StructuralError("unknown arithmetic '" + a + "'");
        }
        if (mode) arithmetic = *mode;

        const std::string name = doc.value("name", std::string("H"));
        const auto labels = member(doc, "elements").get<std::vector<std::string>>();
        std::unordered_map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (!index.emplace(labels[i], i).second) throw StructuralError("duplicate element label '" + labels[i] + "'");
        auto lookup = [&](const Json& v) {
            const auto s = v.get<std::string>();
            auto it = index.find(s);
            if (it == index.end()) throw StructuralError("unknown element label '" + s + "'");
            return it->second;
        };

        const std::size_t identity = lookup(member(doc, "identity"));
        std::vector<std::size_t> involution(labels.size(), labels.size());
        const Json& inv = member(doc, "involution");
        if (!inv.is_object()) throw StructuralError("involution must map labels to labels");
        for (const auto& [from, to] : inv.items()) involution[lookup(Json(from))] = lookup(to);
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (involution[i] == labels.size()) throw StructuralError("involution misses element '" + labels[i] + "'");

        RawHypergroup raw(name, labels, identity, std::move(involution), arithmetic);
        for (const auto& record : member(doc, "constants")) {
            const Rational c = parse_scalar(member(record, "c"));
            const std::size_t x = lookup(member(record, "x"));
            const std::size_t y = lookup(member(record, "y"));
            const std::size_t z = lookup(member(record, "z"));
            if (arithmetic == Arithmetic::exact)
                raw.add(x, y, z, c);
            else
                raw.add(x, y, z, c.get_d());
        }
        return raw;
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("malformed hypergroup file: ") + e.what());
    }
}

RawHypergroup read_hypergroup_file(const std::filesystem::path& path, std::optional<Arithmetic> mode) {
    return parse_hypergroup(read_json_file(path), mode);
}

Json to_json(const FiniteHypergroup& h) {
    Json doc;
    doc["name"] = h.name();
    doc["arithmetic"] = h.exact() ? "exact" : "float";
    doc["elements"] = h.labels();
    doc["identity"] = h.label(h.identity());
    Json inv = Json::object();
    for (std::size_t x = 0; x < h.size(); ++x) inv[h.label(x)] = h.label(h.involution(x));
    doc["involution"] = std::move(inv);
    Json constants = Json::array();
    for (std::size_t x = 0; x < h.size(); ++x) {
        for (std::size_t y = 0; y < h.size(); ++y) {
            for (const auto& t : h.product(x, y)) {
                Json record;
                record["x"] = h.label(x);
                record["y"] = h.label(y);
                record["z"] = h.label(t.element);
                record["c"] = h.exact() ? to_string(t.exact) : decimal(t.value);
                constants.push_back(std::move(record));
            }
        }
    }
    doc["constants"] = std::move(constants);
    return doc;
}

void write_hypergroup_file(const FiniteHypergroup& h, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw StructuralError("cannot write '" + path.string() + "'");
    out << to_json(h).dump(2) << '\n';
}

CayleyTable parse_cayley(std::istream& in, std::string name) {
    long long n = 0;
    if (!(in >> n) || n <= 0) throw StructuralError("Cayley file must start with a positive order");
    std::vector<std::vector<std::size_t>> table(static_cast<std::size_t>(n), std::vector<std::size_t>(static_cast<std::size_t>(n)));
    for (auto& row : table) {
        for (auto& v : row) {
            long long entry = -1;
            if (!(in >> entry)) throw StructuralError("Cayley file ends early");
            if (entry < 0 || entry >= n) throw StructuralError("Cayley entry out of range: " + std::to_string(entry));
            v = static_cast<std::size_t>(entry);
        }
    }
    std::string extra;
    if (in >> extra) throw StructuralError("unexpected trailing data in Cayley file");
    return CayleyTable::create(std::move(table), {}, std::move(name));
}

CayleyTable read_cayley_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open '" + path.string() + "'");
    return parse_cayley(in, path.stem().string());
}

HFunction parse_function(const Json& doc, const FiniteHypergroup& host) {
    auto value = [](const Json& v) -> Complex {
        if (v.is_array()) {
            if (v.size() != 2) throw StructuralError("complex values are [re, im] pairs");
            return {parse_scalar(v[0]).get_d(), parse_scalar(v[1]).get_d()};
        }
        return parse_scalar(v).get_d();
    };
    try {
        const Json& values = member(doc, "values");
        std::vector<Complex> out(host.size());
        if (values.is_array()) {
            if (values.size() != host.size())
                throw StructuralError("function has " + std::to_string(values.size()) + " values, expected " +
                                      std::to_string(host.size()));
            for (std::size_t i = 0; i < values.size(); ++i) out[i] = value(values[i]);
        } else if (values.is_object()) {
            for (const auto& [label, v] : values.items()) {
                auto idx = host.index_of(label);
                if (!idx) throw StructuralError("unknown element label '" + label + "' in function file");
                out[*idx] = value(v);
            }
        } else {
            throw StructuralError("function 'values' must be an array or an object");
        }
        return HFunction(host, std::move(out));
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("malformed function file: ") + e.what());
    }
}

HFunction read_function_file(const std::filesystem::path& path, const FiniteHypergroup& host) {
    return parse_function(read_json_file(path), host);
}

FiniteHypergroup to_floating(const FiniteHypergroup& h) {
    if (!h.exact()) return h;
    const RawHypergroup& src = h.raw();
    RawHypergroup raw(src.name, src.labels, src.identity, src.involution, Arithmetic::floating);
    for (std::size_t x = 0; x < h.size(); ++x)
        for (std::size_t y = 0; y < h.size(); ++y)
            for (const auto& t : h.product(x, y)) raw.add(x, y, t.element, t.value);
    return FiniteHypergroup::create(std::move(raw));
}

}  // namespace hyperkit::io
