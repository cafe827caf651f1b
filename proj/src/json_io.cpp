#include "bs/json_io.hpp"

namespace bs {

namespace {

Rational rat(const json& j) {
    if (!j.is_string()) throw ParseError("rational values must be strings like \"p/q\"");
    return parse_rational(j.get<std::string>());
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("polynomial tails must be coefficient arrays");
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rat(e));
    return Poly(std::move(c));
}

json poly_to_json(const Poly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(format_rational(c));
    return a;
}

long as_long(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<long>();
}

} // namespace

json to_json(const BettiTable& b) {
    json entries = json::array();
    for (const auto& [pos, val] : b.entries)
        entries.push_back({{"col", pos.first},
                           {"deg", pos.second},
                           {"value", format_rational(val)}});
    return {{"n", b.n}, {"entries", entries}};
}

BettiTable betti_from_json(const json& j) {
    try {
        BettiTable b;
        b.n = (int)as_long(j.at("n"), "n");
        for (const auto& e : j.at("entries"))
            b.add((int)as_long(e.at("col"), "col"), as_long(e.at("deg"), "deg"),
                  rat(e.at("value")));
        return b;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed Betti table: ") + e.what());
    }
}

json to_json(const CohomologyTable& c) {
    json values = json::array();
    for (const auto& [pos, val] : c.values)
        values.push_back({{"row", pos.first},
                          {"twist", pos.second},
                          {"value", format_rational(val)}});
    return {{"m", c.m},
            {"window", {c.d_lo, c.d_hi}},
            {"complete", c.complete},
            {"values", values},
            {"tail_high", poly_to_json(c.tail_high)},
            {"tail_low", poly_to_json(c.tail_low)}};
}

CohomologyTable cohomology_from_json(const json& j) {
    try {
        CohomologyTable c;
        c.m = (int)as_long(j.at("m"), "m");
        const json& w = j.at("window");
        if (!w.is_array() || w.size() != 2) throw ParseError("window must be [lo, hi]");
        c.d_lo = as_long(w[0], "window lower bound");
        c.d_hi = as_long(w[1], "window upper bound");
        if (!j.at("complete").is_boolean()) throw ParseError("complete must be a boolean");
        c.complete = j.at("complete").get<bool>();
        for (const auto& e : j.at("values"))
            c.add((int)as_long(e.at("row"), "row"), as_long(e.at("twist"), "twist"),
                  rat(e.at("value")));
        c.tail_high = poly_from_json(j.at("tail_high"));
        c.tail_low = poly_from_json(j.at("tail_low"));
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed cohomology table: ") + e.what());
    }
}

json to_json(const Functional& f) {
    bool betti = f.side == Functional::Side::Betti;
    json coeffs = json::array();
    for (const auto& [pos, val] : f.coeffs) {
        if (betti)
            coeffs.push_back({{"col", pos.first},
                              {"deg", pos.second},
                              {"value", format_rational(val)}});
        else
            coeffs.push_back({{"row", pos.first},
                              {"twist", pos.second},
                              {"value", format_rational(val)}});
    }
    json out = {{"orientation", betti ? "betti" : "cohomology"},
                {"window", {f.win_lo, f.win_hi}},
                {"coefficients", coeffs}};
    out[betti ? "n" : "m"] = f.size;
    return out;
}

Functional functional_from_json(const json& j) {
    try {
        Functional f;
        std::string side = j.at("orientation").get<std::string>();
        if (side == "betti")
            f.side = Functional::Side::Betti;
        else if (side == "cohomology")
            f.side = Functional::Side::Cohomology;
        else
            throw ParseError("orientation must be \"betti\" or \"cohomology\"");
        bool betti = f.side == Functional::Side::Betti;
        f.size = (int)as_long(j.at(betti ? "n" : "m"), betti ? "n" : "m");
        const json& w = j.at("window");
        if (!w.is_array() || w.size() != 2) throw ParseError("window must be [lo, hi]");
        f.win_lo = as_long(w[0], "window lower bound");
        f.win_hi = as_long(w[1], "window upper bound");
        for (const auto& e : j.at("coefficients")) {
            if (betti)
                f.add((int)as_long(e.at("col"), "col"), as_long(e.at("deg"), "deg"),
                      rat(e.at("value")));
            else
                f.add((int)as_long(e.at("row"), "row"), as_long(e.at("twist"), "twist"),
                      rat(e.at("value")));
        }
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed functional: ") + e.what());
    }
}

json to_json(const BettiDecomposition& d) {
    json parts = json::array();
    for (const auto& p : d.parts)
        parts.push_back({{"coeff", format_rational(p.coeff)},
                         {"skeleton", p.skeleton}});
    return {{"parts", parts}};
}

json to_json(const CohomologyDecomposition& d) {
    json parts = json::array();
    for (const auto& p : d.parts)
        parts.push_back({{"coeff", format_rational(p.coeff)},
                         {"skeleton", p.skeleton}});
    return {{"parts", parts}};
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace bs
