#pragma once

#include <string>

#include <json.hpp>

#include "catalog.hpp"
#include "effectivity.hpp"
#include "picard.hpp"

namespace modulislope {

using json = nlohmann::ordered_json;

namespace detail {

inline std::string require_string(const json& j, std::string_view what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline int require_int(const json& j, std::string_view what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

inline LinExpr parse_coeff(const json& j, std::string_view what) {
    if (j.is_number_integer()) return LinExpr(j.get<long long>());
    return LinExpr::parse(require_string(j, what));
}

}  // namespace detail

inline json space_to_json(const ModuliSpace& s) { return json{{"g", s.g}, {"n", s.n}}; }

inline ModuliSpace space_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("\"space\" must be an object");
    ModuliSpace s{detail::require_int(j.value("g", json()), "space.g"), detail::require_int(j.value("n", json(0)), "space.n")};
    try {
        s.validate();
    } catch (const InvalidIndex& e) {
        throw ParseError(e.what());
    }
    return s;
}

inline json bounds_to_json(const BoundEnv& env) {
    json out = json::object();
    for (const auto& [name, b] : env.entries()) {
        json e = json::object();
        if (b.lo) e["lo"] = to_string(*b.lo);
        if (b.hi) e["hi"] = to_string(*b.hi);
        if (b.lo_strict) e["lo_strict"] = true;
        if (b.hi_strict) e["hi_strict"] = true;
        out[name] = e;
    }
    return out;
}

inline BoundEnv bounds_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("\"bounds\" must be an object");
    BoundEnv env;
    for (const auto& [name, e] : j.items()) {
        if (!e.is_object()) throw ParseError("bound for '" + name + "' must be an object");
        Bound b;
        if (e.contains("lo")) b.lo = parse_rational(detail::require_string(e["lo"], "bound lo"));
        if (e.contains("hi")) b.hi = parse_rational(detail::require_string(e["hi"], "bound hi"));
        b.lo_strict = e.value("lo_strict", false);
        b.hi_strict = e.value("hi_strict", false);
        try {
            env.set(name, b);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what());
        }
    }
    return env;
}

inline json class_to_json(const DivisorClass& d) {
    json out = json::object();
    out["space"] = space_to_json(d.space());
    out["lambda"] = d.lambda().str();
    json psi = json::object();
    json boundary = json::object();
    for (const auto& [gen, c] : d.coefficients()) {
        if (gen.kind == Generator::Kind::Psi) psi[std::to_string(gen.psi)] = c.str();
        if (gen.kind == Generator::Kind::Boundary) boundary[boundary_key(gen.boundary, d.space())] = c.str();
    }
    out["psi"] = psi;
    out["boundary"] = boundary;
    return out;
}

inline DivisorClass class_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("class must be a JSON object");
    if (!j.contains("space")) throw ParseError("class is missing \"space\"");
    const ModuliSpace space = space_from_json(j["space"]);
    DivisorClass d(space);
    try {
        if (j.contains("lambda")) d.add_lambda(detail::parse_coeff(j["lambda"], "lambda"));
        if (j.contains("psi")) {
            if (!j["psi"].is_object()) throw ParseError("\"psi\" must be an object");
            for (const auto& [k, v] : j["psi"].items()) {
                const int i = detail::parse_small_int(k);
                if (i < 1 || i > space.n) throw ParseError("psi index " + k + " out of range");
                d.add_psi(i, detail::parse_coeff(v, "psi coefficient"));
            }
        }
        if (j.contains("boundary")) {
            if (!j["boundary"].is_object()) throw ParseError("\"boundary\" must be an object");
            for (const auto& [k, v] : j["boundary"].items())
                d.add_delta(parse_boundary_key(k, space), detail::parse_coeff(v, "boundary coefficient"));
        }
    } catch (const InvalidIndex& e) {
        throw ParseError(e.what());
    }
    return d;
}

inline json named_to_json(const NamedClass& nc) {
    json out = json::object();
    out["id"] = nc.id;
    const json body = class_to_json(nc.cls);
    for (const auto& [k, v] : body.items()) out[k] = v;
    if (!nc.bounds.empty()) out["bounds"] = bounds_to_json(nc.bounds);
    return out;
}

inline NamedClass named_from_json(const json& j) {
    NamedClass nc;
    nc.cls = class_from_json(j);
    if (j.contains("id")) nc.id = detail::require_string(j["id"], "id");
    if (j.contains("bounds")) nc.bounds = bounds_from_json(j["bounds"]);
    return nc;
}

inline json quadratic_to_json(const QuadraticClass& q) {
    json terms = json::object();
    for (const auto& [key, c] : q.coefficients())
        terms[generator_name(key.first, q.space()) + "*" + generator_name(key.second, q.space())] = c.str();
    return json{{"space", space_to_json(q.space())}, {"terms", terms}};
}

inline QuadraticClass quadratic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("space")) throw ParseError("quadratic class needs \"space\"");
    const ModuliSpace space = space_from_json(j["space"]);
    if (space.n != 1) throw ParseError("quadratic classes live on M_{g,1}");
    QuadraticClass q(space);
    if (!j.contains("terms")) return q;
    if (!j["terms"].is_object()) throw ParseError("\"terms\" must be an object");
    try {
        for (const auto& [k, v] : j["terms"].items()) {
            const auto star = k.find('*');
            if (star == std::string::npos) throw ParseError("term key '" + k + "' needs the form a*b");
            q.add(parse_generator(std::string_view(k).substr(0, star), space),
                  parse_generator(std::string_view(k).substr(star + 1), space), detail::parse_coeff(v, "term"));
        }
    } catch (const InvalidIndex& e) {
        throw ParseError(e.what());
    }
    return q;
}

inline json certificate_to_json(const EffectivityCertificate& cert) {
    json out = json::object();
    out["kind"] = kind_name(cert.kind);
    out["space"] = space_to_json(cert.space);
    out["rows"] = cert.rows;
    switch (cert.kind) {
        case EffectivityCertificate::Kind::Combination: {
            json comb = json::object();
            for (const auto& [id, x] : cert.combination) comb[id] = to_string(x);
            out["combination"] = comb;
            json free = json::object();
            for (const auto& [gen, x] : cert.free_boundary) free[generator_name(gen, cert.space)] = to_string(x);
            out["free_boundary"] = free;
            if (cert.residual) out["residual"] = class_to_json(*cert.residual);
            break;
        }
        case EffectivityCertificate::Kind::Farkas: {
            json y = json::object();
            for (const auto& [gen, v] : cert.farkas) y[generator_name(gen, cert.space)] = to_string(v);
            out["farkas"] = y;
            break;
        }
        case EffectivityCertificate::Kind::UnboundedSymbol:
            out["symbol"] = cert.symbol;
            break;
    }
    return out;
}

}  // namespace modulislope
