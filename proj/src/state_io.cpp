#include "entlab/state_io.hpp"

#include "entlab/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace entlab {

using nlohmann::json;

namespace {

    const json &member(const json &obj, const char *key, const std::string &where) {
        const auto it = obj.find(key);
        if(it == obj.end()) throw Error(ErrorKind::ParseError, where + " is missing \"" + key + "\"");
        return *it;
    }

    Block parse_block(const json &jb, std::size_t index) {
        const std::string where = "blocks[" + std::to_string(index) + "]";
        if(!jb.is_object()) throw Error(ErrorKind::ParseError, where + " must be an object");
        const auto &sector = member(jb, "sector", where);
        const auto &dim    = member(jb, "dim", where);
        const auto &data   = member(jb, "entries", where);
        if(!sector.is_string()) throw Error(ErrorKind::ParseError, where + ".sector must be a string");
        if(!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
            throw Error(ErrorKind::ParseError, where + ".dim must be a positive integer");
        if(!data.is_array()) throw Error(ErrorKind::ParseError, where + ".entries must be an array");
        const auto d = dim.get<std::size_t>();
        if(data.size() != d * d)
            throw Error(ErrorKind::InvalidState, "entries length = dim^2: " + where + " has " +
                                                     std::to_string(data.size()) + " entries for dim " +
                                                     std::to_string(d));
        std::vector<Complex> entries;
        entries.reserve(d * d);
        for(std::size_t i = 0; i < data.size(); ++i) {
            const auto &pair = data[i];
            if(!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
                throw Error(ErrorKind::ParseError,
                            where + ".entries[" + std::to_string(i) + "] must be a [re, im] number pair");
            entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        return Block{SectorLabel{sector.get<std::string>()}, ComplexMatrix(d, d, std::move(entries))};
    }

} // namespace

DensityMatrix parse_state_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch(const json::parse_error &e) {
        throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
    }
    if(!doc.is_object()) throw Error(ErrorKind::ParseError, "state document must be an object");
    const auto &blocks = member(doc, "blocks", "state document");
    if(!blocks.is_array()) throw Error(ErrorKind::ParseError, "\"blocks\" must be an array");
    std::vector<Block> parsed;
    for(std::size_t i = 0; i < blocks.size(); ++i) parsed.push_back(parse_block(blocks[i], i));
    return DensityMatrix(std::move(parsed));
}

DensityMatrix read_state_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if(!in) throw Error(ErrorKind::ParseError, "cannot open state file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_json(buffer.str());
}

std::string state_to_json(const DensityMatrix &rho) {
    json blocks = json::array();
    for(const auto &b : rho.blocks()) {
        json entries = json::array();
        for(const auto &z : b.matrix.entries()) entries.push_back(json::array({z.real(), z.imag()}));
        blocks.push_back({{"sector", b.sector.id}, {"dim", b.matrix.rows()}, {"entries", std::move(entries)}});
    }
    return json{{"blocks", std::move(blocks)}}.dump() + "\n";
}

void write_state_file(const std::filesystem::path &path, const DensityMatrix &rho) {
    std::ofstream out(path, std::ios::binary);
    if(!out) throw Error(ErrorKind::ParseError, "cannot write state file " + path.string());
    out << state_to_json(rho);
}

} // namespace entlab
