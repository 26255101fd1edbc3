#include "hodge/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace hodge {

OutputFormat parse_format(const std::string& name) {
    if (name == "plain") return OutputFormat::Plain;
    if (name == "latex") return OutputFormat::Latex;
    if (name == "json") return OutputFormat::Json;
    throw PreconditionError("unknown format: " + name +
                            " (expected plain, latex or json)");
}

namespace {

// Display order: total degree, then descending u-power, so mixed terms read
// "1 + u + v + uv" rather than in the raw (eu, ev) key order.
std::vector<std::pair<ExpPair, Int>> display_terms(const BiPoly& p) {
    std::vector<std::pair<ExpPair, Int>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const long da = static_cast<long>(a.first.u) + a.first.v;
        const long db = static_cast<long>(b.first.u) + b.first.v;
        if (da != db) return da < db;
        return a.first.u > b.first.u;
    });
    return terms;
}

void append_latex_power(std::ostringstream& out, const char* var, int e) {
    if (e == 0) return;
    out << var;
    if (e != 1) out << "^{" << e << "}";
}

std::string plain_monomial(const Int& mag, int eu, int ev) {
    std::ostringstream term;
    if (mag != 1 || (eu == 0 && ev == 0)) term << mag.get_str();
    if (eu != 0) {
        if (!term.str().empty()) term << " ";
        term << "u";
        if (eu != 1) term << "^" << eu;
    }
    if (ev != 0) {
        if (!term.str().empty()) term << " ";
        term << "v";
        if (ev != 1) term << "^" << ev;
    }
    return term.str();
}

} // namespace

std::string to_plain(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : display_terms(p)) {
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        out << plain_monomial(mag, e.u, e.v);
    }
    return out.str();
}

std::string to_plain(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.coeffs()) {
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || e == 0) out << mag.get_str();
        if (e != 0) {
            if (mag != 1) out << " ";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

std::string to_latex(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : display_terms(p)) {
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? "-" : "+");
        }
        first = false;
        if (mag != 1 || (e.u == 0 && e.v == 0)) out << mag.get_str();
        append_latex_power(out, "u", e.u);
        append_latex_power(out, "v", e.v);
    }
    return out.str();
}

std::string to_latex(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.coeffs()) {
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? "-" : "+");
        }
        first = false;
        if (mag != 1 || e == 0) out << mag.get_str();
        append_latex_power(out, "t", e);
    }
    return out.str();
}

nlohmann::ordered_json to_json(const BiPoly& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"eu", e.u}, {"ev", e.v}, {"c", c.get_str()}});
    }
    return {{"terms", std::move(terms)}};
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw PreconditionError("BiPoly JSON: expected {\"terms\": [...]}");
    BiPoly out;
    for (const auto& term : j["terms"]) {
        if (!term.contains("eu") || !term.contains("ev") || !term.contains("c"))
            throw PreconditionError("BiPoly JSON: term needs eu, ev, c");
        const std::string c = term["c"].get<std::string>();
        Int value;
        if (mpz_set_str(value.get_mpz_t(), c.c_str(), 10) != 0)
            throw PreconditionError("BiPoly JSON: bad coefficient '" + c + "'");
        out.add_term({term["eu"].get<int>(), term["ev"].get<int>()}, value);
    }
    return out;
}

nlohmann::ordered_json to_json(const UniPoly& p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.coeffs()) {
        coeffs.push_back({{"e", e}, {"c", c.get_str()}});
    }
    return {{"coeffs", std::move(coeffs)}};
}

UniPoly unipoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw PreconditionError("UniPoly JSON: expected {\"coeffs\": [...]}");
    UniPoly out;
    for (const auto& term : j["coeffs"]) {
        const std::string c = term["c"].get<std::string>();
        Int value;
        if (mpz_set_str(value.get_mpz_t(), c.c_str(), 10) != 0)
            throw PreconditionError("UniPoly JSON: bad coefficient '" + c + "'");
        out.add_term(term["e"].get<int>(), value);
    }
    return out;
}

nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json diff = nlohmann::ordered_json::array();
    for (const auto& d : r.diff) {
        diff.push_back({{"eu", d.eu},
                        {"ev", d.ev},
                        {"a", d.a.get_str()},
                        {"b", d.b.get_str()}});
    }
    return {{"name", r.name},
            {"passed", r.passed},
            {"diff", std::move(diff)},
            {"failures", r.failures}};
}

CheckReport report_from_json(const nlohmann::json& j) {
    CheckReport out;
    out.name = j.at("name").get<std::string>();
    out.passed = j.at("passed").get<bool>();
    for (const auto& d : j.at("diff")) {
        TermDiff td;
        td.eu = d.at("eu").get<int>();
        td.ev = d.at("ev").get<int>();
        td.a = Int(d.at("a").get<std::string>());
        td.b = Int(d.at("b").get<std::string>());
        out.diff.push_back(std::move(td));
    }
    for (const auto& f : j.at("failures")) out.failures.push_back(f.get<std::string>());
    return out;
}

} // namespace hodge
