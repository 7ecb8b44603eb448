#include "asph/assembly_io.hpp"

#include "asph/error.hpp"
#include "json_util.hpp"

#include <fstream>
#include <sstream>

namespace asph::assembly {

using detail::Json;
using catalog::BlockKind;

namespace {

Json params_json(const catalog::Block& b) {
    Json p = Json::object();
    switch (b.kind) {
        case BlockKind::PuncturedSphere: {
            Json ms = Json::array();
            for (const auto& m : b.params) ms.push_back(m.to_string());
            p["monodromies"] = ms;
            break;
        }
        case BlockKind::SemibundleTrick:
            p["phi"] = b.params.at(0).to_string();
            break;
        case BlockKind::TorusTrick:
            p["phi"] = b.params.at(0).to_string();
            p["psi"] = b.params.at(1).to_string();
            break;
        default:
            break;
    }
    return p;
}

sl2z::MatrixZ matrix_field(const Json& params, const char* key, const std::string& where) {
    if (!params.contains(key) || !params[key].is_string()) {
        throw InvalidInput(where + ": params." + key + " must be a matrix string \"a,b,c,d\"");
    }
    return sl2z::MatrixZ::parse(params[key].get<std::string>());
}

std::vector<sl2z::MatrixZ> parse_params(BlockKind kind, const Json& params, const std::string& where) {
    if (!params.is_object()) throw InvalidInput(where + ": params must be an object");
    std::vector<sl2z::MatrixZ> out;
    switch (kind) {
        case BlockKind::PuncturedSphere: {
            if (!params.contains("monodromies") || !params["monodromies"].is_array()) {
                throw InvalidInput(where + ": params.monodromies must be a list of matrices");
            }
            for (const auto& m : params["monodromies"]) {
                if (!m.is_string()) throw InvalidInput(where + ": monodromies must be strings");
                out.push_back(sl2z::MatrixZ::parse(m.get<std::string>()));
            }
            break;
        }
        case BlockKind::SemibundleTrick:
            out.push_back(matrix_field(params, "phi", where));
            break;
        case BlockKind::TorusTrick:
            out.push_back(matrix_field(params, "phi", where));
            out.push_back(matrix_field(params, "psi", where));
            break;
        default:
            break;
    }
    return out;
}

PortRef parse_end(const Assembly& a, const Json& end, const std::string& where) {
    if (!end.is_array() || end.size() != 2 || !end[0].is_string() ||
        !end[1].is_number_unsigned()) {
        throw InvalidInput(where + " must be [block_id, port_index]");
    }
    auto id = end[0].get<std::string>();
    auto index = a.find(id);
    if (!index) throw InvalidInput(where + " references unknown block '" + id + "'");
    return {*index, end[1].get<std::size_t>()};
}

}  // namespace

std::string to_document(const Assembly& a, int indent) {
    Json doc;
    Json blocks = Json::array();
    for (const auto& node : a.nodes()) {
        Json b;
        b["id"] = node.id;
        b["kind"] = std::string(catalog::kind_name(node.block.kind));
        b["params"] = params_json(node.block);
        b["reversed"] = node.block.reversed;
        blocks.push_back(b);
    }
    Json gluings = Json::array();
    for (const auto& g : a.gluings()) {
        Json e;
        e["a"] = Json::array({a.nodes()[g.a.block].id, g.a.port});
        e["b"] = Json::array({a.nodes()[g.b.block].id, g.b.port});
        gluings.push_back(e);
    }
    doc["blocks"] = blocks;
    doc["gluings"] = gluings;
    return doc.dump(indent);
}

Assembly from_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("assembly document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("blocks") || !doc["blocks"].is_array()) {
        throw InvalidInput("assembly document needs a 'blocks' list");
    }
    Assembly a;
    std::size_t index = 0;
    for (const auto& b : doc["blocks"]) {
        std::string where = "blocks[" + std::to_string(index++) + "]";
        if (!b.is_object() || !b.contains("id") || !b["id"].is_string() || !b.contains("kind") ||
            !b["kind"].is_string()) {
            throw InvalidInput(where + " needs string fields 'id' and 'kind'");
        }
        BlockKind kind = catalog::parse_kind(b["kind"].get<std::string>());
        Json params = b.contains("params") ? b["params"] : Json::object();
        auto block = catalog::make_block(kind, parse_params(kind, params, where));
        bool reversed = false;
        if (b.contains("reversed")) {
            if (!b["reversed"].is_boolean()) throw InvalidInput(where + ".reversed must be boolean");
            reversed = b["reversed"].get<bool>();
        }
        if (reversed) block = orientation_reverse(std::move(block));
        a.add_block(std::move(block), b["id"].get<std::string>());
    }
    if (doc.contains("gluings")) {
        if (!doc["gluings"].is_array()) throw InvalidInput("'gluings' must be a list");
        index = 0;
        for (const auto& g : doc["gluings"]) {
            std::string where = "gluings[" + std::to_string(index++) + "]";
            if (!g.is_object() || !g.contains("a") || !g.contains("b")) {
                throw InvalidInput(where + " needs fields 'a' and 'b'");
            }
            a.connect(parse_end(a, g["a"], where + ".a"), parse_end(a, g["b"], where + ".b"));
        }
    }
    return a;
}

void save(const Assembly& a, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write assembly file " + path.string());
    out << to_document(a) << '\n';
}

Assembly load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read assembly file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_document(buf.str());
}

}  // namespace asph::assembly
