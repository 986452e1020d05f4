#include "cltop/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cltop {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int get_size(const json& j) {
    if (!j.contains("size") || !j["size"].is_number_integer())
        throw InvalidInputError("model file needs an integer \"size\"");
    const int size = j["size"].get<int>();
    if (size < 1 || size > kMaxCarrier)
        throw InvalidInputError("model file size must be between 1 and " +
                                std::to_string(kMaxCarrier));
    return size;
}

Relation parse_relation(const json& j, const char* key, int size) {
    if (!j.contains(key) || !j[key].is_array())
        throw InvalidInputError(std::string("model file needs pair array \"") + key + "\"");
    Relation r(size);
    for (const json& pair : j[key]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            throw InvalidInputError(std::string("\"") + key + "\" entries must be [point, point]");
        const int x = pair[0].get<int>(), y = pair[1].get<int>();
        if (x < 0 || x >= size || y < 0 || y >= size)
            throw InvalidInputError(std::string("\"") + key + "\" pair out of carrier range");
        r.add(x, y);
    }
    return r;
}

std::vector<Subset> parse_opens(const json& j, const char* key, int size) {
    if (!j.contains(key) || !j[key].is_array())
        throw InvalidInputError(std::string("space file needs subset array \"") + key + "\"");
    std::vector<Subset> out;
    for (const json& open : j[key]) {
        if (!open.is_array())
            throw InvalidInputError(std::string("\"") + key + "\" entries must be point arrays");
        Subset s = Subset::empty_set(size);
        for (const json& p : open) {
            if (!p.is_number_integer())
                throw InvalidInputError(std::string("\"") + key + "\" points must be integers");
            const int point = p.get<int>();
            if (point < 0 || point >= size)
                throw InvalidInputError(std::string("\"") + key + "\" point out of carrier range");
            s = s.with(point);
        }
        out.push_back(s);
    }
    return out;
}

Valuation parse_valuation(const json& j, int size) {
    if (!j.is_object()) throw InvalidInputError("\"valuation\" must be an object");
    Valuation v(size);
    for (const auto& [key, points] : j.items()) {
        if (key.size() < 2 || key[0] != 'p' ||
            key.find_first_not_of("0123456789", 1) != std::string::npos)
            throw InvalidInputError("valuation keys must look like \"p0\", got \"" + key + "\"");
        int var = 0;
        try {
            var = std::stoi(key.substr(1));
        } catch (const std::exception&) {
            throw InvalidInputError("valuation variable index out of range: \"" + key + "\"");
        }
        if (!points.is_array())
            throw InvalidInputError("valuation entries must be point arrays");
        Subset s = Subset::empty_set(size);
        for (const json& p : points) {
            if (!p.is_number_integer())
                throw InvalidInputError("valuation points must be integers");
            const int point = p.get<int>();
            if (point < 0 || point >= size)
                throw InvalidInputError("valuation point out of carrier range");
            s = s.with(point);
        }
        v.set(var, s);
    }
    return v;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw InvalidInputError("unexpected key \"" + key + "\" in model file");
    }
}

// Canonical text fragments: opens ascending by mask, relation pairs in
// row-major order, valuation keys by variable index.
std::string points_text(const Subset& s) {
    std::string out = "[";
    bool first = true;
    for (int p : s.points()) {
        if (!first) out += ", ";
        out += std::to_string(p);
        first = false;
    }
    return out + "]";
}

std::string pairs_text(const Relation& r) {
    std::string out = "[";
    bool first = true;
    for (auto [x, y] : r.pairs()) {
        if (!first) out += ", ";
        out += "[" + std::to_string(x) + ", " + std::to_string(y) + "]";
        first = false;
    }
    return out + "]";
}

std::string opens_text(const FiniteSpace& sp) {
    std::string out = "[";
    bool first = true;
    for (const Subset& s : sp.opens()) {
        if (!first) out += ", ";
        out += points_text(s);
        first = false;
    }
    return out + "]";
}

std::string valuation_text(const Valuation& v) {
    std::string out = "{";
    bool first = true;
    for (int var : v.variables()) {
        if (!first) out += ", ";
        out += "\"p" + std::to_string(var) + "\": " + points_text(v.get(var));
        first = false;
    }
    return out + "}";
}

}  // namespace

int ModelFile::size() const {
    return frame ? frame->size() : space->size();
}

ModelFile ModelFile::of_frame(VisserFrame f, std::optional<Valuation> v) {
    return ModelFile{Kind::Frame, std::move(f), std::nullopt, std::move(v)};
}

ModelFile ModelFile::of_model(VisserFrame f, Valuation v) {
    return ModelFile{Kind::Model, std::move(f), std::nullopt, std::move(v)};
}

ModelFile ModelFile::of_space(BitopSpace sp, std::optional<Valuation> v) {
    return ModelFile{Kind::Space, std::nullopt, std::move(sp), std::move(v)};
}

ModelFile parse_model_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInputError(std::string("model file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InvalidInputError("model file must be a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw InvalidInputError("model file needs a string \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    const int size = get_size(j);

    std::optional<Valuation> valuation;
    if (j.contains("valuation")) valuation = parse_valuation(j["valuation"], size);

    if (kind == "frame" || kind == "model") {
        check_keys(j, {"kind", "size", "R", "S", "valuation"});
        VisserFrame frame(parse_relation(j, "R", size), parse_relation(j, "S", size));
        if (kind == "model") {
            if (!valuation) throw InvalidInputError("kind \"model\" requires a \"valuation\"");
            return ModelFile::of_model(std::move(frame), std::move(*valuation));
        }
        return ModelFile::of_frame(std::move(frame), std::move(valuation));
    }
    if (kind == "space") {
        check_keys(j, {"kind", "size", "opens0", "opens1", "valuation"});
        BitopSpace sp(FiniteSpace::from_open_family(size, parse_opens(j, "opens0", size)),
                      FiniteSpace::from_open_family(size, parse_opens(j, "opens1", size)));
        return ModelFile::of_space(std::move(sp), std::move(valuation));
    }
    throw InvalidInputError("unknown model kind \"" + kind + "\"");
}

std::string serialize_model(const ModelFile& m) {
    std::string kind;
    switch (m.kind) {
        case ModelFile::Kind::Frame: kind = "frame"; break;
        case ModelFile::Kind::Space: kind = "space"; break;
        case ModelFile::Kind::Model: kind = "model"; break;
    }
    std::string out = "{\n";
    out += "  \"kind\": \"" + kind + "\",\n";
    out += "  \"size\": " + std::to_string(m.size());
    if (m.frame) {
        out += ",\n  \"R\": " + pairs_text(m.frame->r());
        out += ",\n  \"S\": " + pairs_text(m.frame->s());
    }
    if (m.space) {
        out += ",\n  \"opens0\": " + opens_text(m.space->tau0());
        out += ",\n  \"opens1\": " + opens_text(m.space->tau1());
    }
    if (m.valuation) out += ",\n  \"valuation\": " + valuation_text(*m.valuation);
    return out + "\n}\n";
}

ModelFile load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_model_json(buf.str());
    } catch (const InvalidInputError& e) {
        throw InvalidInputError(path + ": " + e.what());
    }
}

void save_model_file(const ModelFile& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write model file: " + path);
    out << serialize_model(m);
    if (!out) throw InvalidInputError("write failed: " + path);
}

}  // namespace cltop
