#include "parred/json_io.hpp"

#include <fstream>

namespace parred {

namespace {
const Int kSafeLimit = (Int(1) << 53);
} // namespace

Json int_to_json(const Int& x) {
    if (abs(x) < kSafeLimit) return Json(x.get_si());
    return Json(x.get_str());
}

Int json_to_int(const Json& j) {
    if (j.is_number_integer())
        return Int(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw config_error("not an integer: " + j.dump());
        }
    }
    throw config_error("expected an integer, got " + j.dump());
}

Json rat_to_json(const Rat& x) { return Json(x.get_str()); }

Rat json_to_rat(const Json& j) {
    if (j.is_number_integer())
        return Rat(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        try {
            Rat r(j.get<std::string>());
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            throw config_error("not a rational: " + j.dump());
        }
    }
    throw config_error("expected a rational, got " + j.dump());
}

Json ivec_to_json(const IVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(int_to_json(x));
    return a;
}

IVec json_to_ivec(const Json& j) {
    if (!j.is_array()) throw config_error("expected an array of integers");
    IVec v;
    for (const auto& x : j) v.push_back(json_to_int(x));
    return v;
}

Json qvec_to_json(const QVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

RootDatum root_datum_from_json(const Json& j) {
    if (!j.is_object()) throw config_error("root datum file must be an object");
    if (j.contains("preset")) {
        if (!j["preset"].is_string())
            throw config_error("preset must be a string");
        return build_root_datum_preset(j["preset"].get<std::string>());
    }
    if (!j.contains("cartan"))
        throw config_error("root datum needs a \"preset\" or a \"cartan\"");
    const Json& cj = j["cartan"];
    if (!cj.is_array()) throw config_error("cartan must be a matrix");
    IMat cartan;
    for (const auto& row : cj) cartan.push_back(json_to_ivec(row));
    std::size_t torus = 0;
    if (j.contains("torus_rank")) {
        const Int t = json_to_int(j["torus_rank"]);
        if (t < 0) throw config_error("torus_rank must be non-negative");
        torus = static_cast<std::size_t>(to_long(t));
    }
    std::string isogeny = "sc";
    if (j.contains("isogeny")) isogeny = j["isogeny"].get<std::string>();
    return build_root_datum(cartan, torus, isogeny);
}

RootDatum load_root_datum(const std::string& path) {
    return root_datum_from_json(load_json_file(path));
}

Json root_datum_to_json(const RootDatum& rd) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["name"] = rd.name();
    j["rank_ss"] = rd.rank_ss();
    j["rank_torus"] = rd.rank_torus();
    Json cartan = Json::array();
    for (const auto& row : rd.cartan()) cartan.push_back(ivec_to_json(row));
    j["cartan"] = cartan;
    j["num_positive_roots"] = rd.positive_roots().size();
    Json weights = Json::array();
    for (const auto& w : rd.fundamental_weights())
        weights.push_back(qvec_to_json(w.vector));
    j["fundamental_weights"] = weights;
    Json roots = Json::array();
    for (const auto& g : rd.positive_roots())
        roots.push_back(ivec_to_json(g.coeffs));
    j["positive_roots"] = roots;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw config_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace parred
