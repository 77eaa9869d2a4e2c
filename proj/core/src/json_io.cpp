#include "contact_atlas/json_io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace contact_atlas {
namespace {

using nlohmann::json;

json parse_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, col] = text_position(text, offset);
        throw std::invalid_argument(what + ": parse error at line " + std::to_string(line) +
                                    ", column " + std::to_string(col));
    }
}

bool is_decimal_integer(const std::string& s) {
    std::size_t i = s.size() > 0 && s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (!is_decimal_integer(s))
            throw std::invalid_argument(where + ": '" + s + "' is not an integer");
        return Int(s);
    }
    throw std::invalid_argument(where + ": expected an integer or decimal string");
}

Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_number_unsigned()) return Rat(Int(j.get<unsigned long long>()));
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::invalid_argument(where + ": expected a rational as string or integer");
}

const json& member(const json& j, const char* key, const std::string& what) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(what + ": missing field \"" + key + "\"");
    return j.at(key);
}

ActionInput action_from_parsed(const json& j, const std::string& what) {
    ActionInput input;
    const json& n = member(j, "n", what);
    if (!n.is_number_integer() || n.get<long long>() < 0)
        throw std::invalid_argument(what + ": \"n\" must be a nonnegative integer");
    input.n = n.get<int>();

    const json& gens = member(j, "generators", what);
    if (!gens.is_array())
        throw std::invalid_argument(what + ": \"generators\" must be an array");
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const std::string where = what + ": generators[" + std::to_string(gi) + "]";
        const json& g = gens[gi];
        if (!g.is_array() || g.empty())
            throw std::invalid_argument(where + " must be a nonempty array of rows");
        const int rows = static_cast<int>(g.size());
        RationalMatrix m(rows, rows);
        for (int r = 0; r < rows; ++r) {
            const json& row = g[r];
            if (!row.is_array() || static_cast<int>(row.size()) != rows)
                throw std::invalid_argument(where + " is not square");
            for (int c = 0; c < rows; ++c)
                m.at(r, c) = rat_from_json(row[c], where);
        }
        input.generators.push_back(std::move(m));
    }
    return input;
}

}  // namespace

std::pair<int, int> text_position(const std::string& text, std::size_t byte_offset) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < byte_offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Rat rat_from_string(const std::string& s) {
    std::size_t slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den) || Int(den) == 0)
        throw std::invalid_argument("'" + s + "' is not a rational");
    return Rat(Int(num)) / Rat(Int(den));
}

std::string fan_to_json_text(const Fan& fan) {
    json j;
    j["rank"] = fan.rank;
    json rays = json::array();
    for (const auto& ray : fan.rays) {
        json r = json::array();
        for (const auto& c : ray) r.push_back(int_to_json(c));
        rays.push_back(std::move(r));
    }
    j["rays"] = std::move(rays);
    j["max_cones"] = fan.max_cones;
    return j.dump(2);
}

Fan fan_from_json_text(const std::string& text, FanCheck level) {
    json j = parse_text(text, "fan JSON");
    int rank = member(j, "rank", "fan JSON").get<int>();

    std::vector<IntVec> rays;
    for (const json& ray : member(j, "rays", "fan JSON")) {
        IntVec v;
        for (const json& c : ray) v.push_back(int_from_json(c, "fan JSON: ray entry"));
        rays.push_back(std::move(v));
    }

    std::vector<std::vector<int>> cones;
    for (const json& cone : member(j, "max_cones", "fan JSON"))
        cones.push_back(cone.get<std::vector<int>>());
    return make_fan(rank, std::move(rays), std::move(cones), level);
}

std::string divisor_to_json_text(const ToricDivisor& d) {
    json j;
    json coeffs = json::array();
    for (const auto& c : d.coeffs) coeffs.push_back(int_to_json(c));
    j["coeffs"] = std::move(coeffs);
    return j.dump(2);
}

IntVec divisor_coeffs_from_json_text(const std::string& text) {
    json j = parse_text(text, "divisor JSON");
    IntVec coeffs;
    for (const json& c : member(j, "coeffs", "divisor JSON"))
        coeffs.push_back(int_from_json(c, "divisor JSON: coefficient"));
    return coeffs;
}

std::string action_to_json_text(const ActionInput& a) {
    json j;
    j["n"] = a.n;
    json gens = json::array();
    for (const auto& g : a.generators) {
        json rows = json::array();
        for (int r = 0; r < g.rows; ++r) {
            json row = json::array();
            for (int c = 0; c < g.cols; ++c) row.push_back(rat_to_string(g.at(r, c)));
            rows.push_back(std::move(row));
        }
        gens.push_back(std::move(rows));
    }
    j["generators"] = std::move(gens);
    return j.dump(2);
}

ActionInput action_from_json_text(const std::string& text) {
    return action_from_parsed(parse_text(text, "action JSON"), "action JSON");
}

ActionInput load_action_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open action file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return action_from_parsed(parse_text(buffer.str(), path), path);
}

}  // namespace contact_atlas
