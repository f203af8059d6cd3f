#include "mbig/json_io.hpp"

namespace mbig {

using nlohmann::json;
using nlohmann::ordered_json;

felem felem_from_json(const Field& f, const json& j) {
    if (j.is_number_integer()) {
        if (f.e != 1 && (j.get<std::int64_t>() >= std::int64_t(f.p) || j.get<std::int64_t>() < 0))
            fail(errc::parse_error, "extension-field entry must be a coefficient array");
        return f.from_int(j.get<std::int64_t>());
    }
    if (j.is_array()) {
        if (j.size() > f.e) fail(errc::parse_error, "too many coefficients for this field");
        std::vector<std::uint32_t> c(f.e, 0);
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_number_integer()) fail(errc::parse_error, "coefficient must be an integer");
            std::int64_t v = j[i].get<std::int64_t>();
            c[i] = std::uint32_t(((v % f.p) + f.p) % f.p);
        }
        return f.from_coeffs(c);
    }
    fail(errc::parse_error, "field entry must be an integer or coefficient array");
}

ordered_json felem_json(const Field& f, felem a) {
    if (f.e == 1) return ordered_json(a);
    ordered_json arr = ordered_json::array();
    for (std::uint32_t c : f.coeffs(a)) arr.push_back(c);
    return arr;
}

GroupSpec parse_group_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("p") || !j.contains("n") || !j.contains("generators"))
            fail(errc::parse_error, "group spec needs p, n, generators");
        std::uint32_t p = j.at("p").get<std::uint32_t>();
        std::uint32_t e = j.value("e", 1u);
        std::uint32_t n = j.at("n").get<std::uint32_t>();
        if (n == 0) fail(errc::parse_error, "n must be positive");
        const Field& f = Field::get(p, e);
        GroupSpec spec{&f, n, {}};
        for (const auto& gj : j.at("generators")) {
            if (!gj.is_array() || gj.size() != n) fail(errc::parse_error, "generator must be an n x n array");
            Mat m = mat_make(f, n, n);
            for (std::uint32_t r = 0; r < n; ++r) {
                if (!gj[r].is_array() || gj[r].size() != n)
                    fail(errc::parse_error, "generator must be an n x n array");
                for (std::uint32_t c = 0; c < n; ++c) m.at(r, c) = felem_from_json(f, gj[r][c]);
            }
            spec.generators.push_back(std::move(m));
        }
        return spec;
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("bad group spec: ") + e.what());
    }
}

ordered_json certificate_json(const BignessCertificate& c, const Field& f) {
    ordered_json out;
    out["m"] = c.m;
    out["b1"] = c.b1;
    out["b2"] = c.b2;
    out["b3"] = ordered_json{{"holds", c.b3}, {"h1_dim", c.h1}};
    ordered_json b4 = ordered_json::array();
    for (const auto& e : c.b4.entries) {
        ordered_json w;
        w["submodule"] = e.submodule;
        w["found"] = e.found;
        if (e.found) {
            w["element"] = e.element;
            w["alpha"] = felem_json(f, e.alpha);
            w["f"] = e.f_index;
        }
        b4.push_back(std::move(w));
    }
    out["b4"] = std::move(b4);
    out["verdict"] = verdict_name(c.verdict);
    out["caps_hit"] = c.caps_hit;
    return out;
}

ordered_json torus_json(const TorusElement& t) {
    ordered_json coords = ordered_json::array();
    for (felem c : t.coords) coords.push_back(felem_json(*t.f, c));
    return ordered_json{{"coords", std::move(coords)}};
}

ordered_json audit_json(const AuditReport& r) {
    ordered_json out;
    out["torus_size"] = r.torus_size;
    out["N"] = r.n_weights;
    out["R"] = r.r_mq;
    out["M"] = r.max_kernel;
    out["bound_holds"] = r.bound_holds;
    out["union_size_s"] = r.union_s;
    out["union_size"] = r.union_diff;
    out["uncovered"] = r.uncovered;
    return out;
}

} // namespace mbig
