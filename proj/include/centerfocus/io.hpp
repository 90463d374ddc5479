#ifndef CENTERFOCUS_IO_HPP
#define CENTERFOCUS_IO_HPP

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <centerfocus/hilbert.hpp>
#include <centerfocus/poly_io.hpp>
#include <centerfocus/system.hpp>

namespace cf {

using json = nlohmann::json;

class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Contents of `arg` if it names a readable file, else `arg` itself.
inline std::string file_or_inline(const std::string& arg) {
    std::error_code ec;
    if (arg.size() < 4096 && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        if (!in) throw input_error("cannot read '" + arg + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline Signature parse_signature_text(std::string_view text, std::size_t offset) {
    std::string t = trim(text);
    if (t.size() < 3 || t.substr(0, 2) != "s(" || t.back() != ')') {
        throw parse_error("expected a signature like s(1,2)", offset);
    }
    std::vector<unsigned> degs;
    std::stringstream body(t.substr(2, t.size() - 3));
    std::string item;
    while (std::getline(body, item, ',')) {
        item = trim(item);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw parse_error("bad degree '" + item + "' in signature", offset);
        }
        degs.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    return Signature(std::move(degs));
}

inline Rational json_rational(const json& v, const std::string& name) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw input_error("coefficient '" + name + "' must be null, an integer or a rational string");
}

inline SystemSpec assign(SystemSpec spec, const std::string& name, std::optional<Rational> v, std::size_t offset) {
    try {
        spec.slot_index(name);
    } catch (const std::out_of_range&) {
        throw parse_error("unknown coefficient '" + name + "' for " + spec.signature().to_string(), offset);
    }
    return spec.with_value(name, std::move(v));
}

// Nonlinear and linear slots without a value become 0.
inline SystemSpec zero_fill(SystemSpec spec) {
    for (std::size_t i = 0; i < spec.slots().size(); ++i) {
        if (spec.is_symbolic(i)) spec = spec.with_value(spec.slots()[i].display_name, Rational(0));
    }
    return spec;
}

}  // namespace detail

// `s(1,2); V; g=1,n=1,m=1`: signature, optional V (restrict to the variety
// chart), optional `symbolic` / `concrete`, assignments. Assignments switch
// to concrete mode, where unlisted coefficients are 0.
inline SystemSpec parse_shorthand(std::string_view text) {
    std::vector<std::pair<std::string, std::size_t>> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ';') {
            parts.emplace_back(std::string(text.substr(start, i - start)), start);
            start = i + 1;
        }
    }
    if (parts.empty() || detail::trim(parts[0].first).empty()) throw parse_error("empty system description", 0);
    SystemSpec spec = build_generic(detail::parse_signature_text(parts[0].first, parts[0].second));
    bool variety = false;
    bool concrete = false;
    bool symbolic = false;
    for (std::size_t p = 1; p < parts.size(); ++p) {
        const std::string& raw = parts[p].first;
        const std::string seg = detail::trim(raw);
        const std::size_t off = parts[p].second + (seg.empty() ? 0 : raw.find_first_not_of(" \t\r\n"));
        if (seg.empty()) continue;
        if (seg == "V") {
            variety = true;
            continue;
        }
        if (seg == "concrete") {
            concrete = true;
            continue;
        }
        if (seg == "symbolic") {
            symbolic = true;
            continue;
        }
        std::size_t item_start = 0;
        while (item_start <= seg.size()) {
            std::size_t end = seg.find(',', item_start);
            if (end == std::string::npos) end = seg.size();
            const std::string_view raw_item = std::string_view(seg).substr(item_start, end - item_start);
            const std::string item = detail::trim(raw_item);
            const std::size_t lead = item.empty() ? 0 : raw_item.find_first_not_of(" \t\r\n");
            const std::size_t item_off = off + item_start + lead;
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw parse_error("expected name=value, got '" + item + "'", item_off);
            const std::string name = detail::trim(item.substr(0, eq));
            Rational v;
            try {
                v = parse_rational(detail::trim(item.substr(eq + 1)));
            } catch (const parse_error& e) {
                throw parse_error("bad value for '" + name + "': " + e.what(), item_off);
            }
            spec = detail::assign(std::move(spec), name, v, item_off);
            concrete = true;
            item_start = end + 1;
        }
    }
    if (concrete && symbolic) throw input_error("system cannot be both symbolic and concrete");
    if (variety) spec = restrict_to_variety(spec);
    if (concrete) spec = detail::zero_fill(std::move(spec));
    return spec;
}

// {"signature": [1,2], "coefficients": {"g": "1/2", "h": null}, "variety": true}
inline SystemSpec parse_system_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("signature")) throw input_error("system document needs a \"signature\" array");
    std::vector<unsigned> degs;
    for (const auto& d : doc.at("signature")) {
        if (!d.is_number_unsigned() && !(d.is_number_integer() && d.get<long>() >= 0)) throw input_error("signature degrees must be non-negative integers");
        degs.push_back(d.get<unsigned>());
    }
    SystemSpec spec = build_generic(Signature(std::move(degs)));
    if (doc.contains("coefficients")) {
        for (const auto& [name, v] : doc.at("coefficients").items()) {
            std::optional<Rational> val;
            if (!v.is_null()) val = detail::json_rational(v, name);
            try {
                spec.slot_index(name);
            } catch (const std::out_of_range&) {
                throw input_error("unknown coefficient '" + name + "' for " + spec.signature().to_string());
            }
            spec = spec.with_value(name, val);
        }
    }
    if (doc.value("variety", false)) spec = restrict_to_variety(spec);
    return spec;
}

// File path, inline JSON, or shorthand.
inline SystemSpec parse_system(const std::string& arg) {
    const std::string text = detail::trim(file_or_inline(arg));
    if (!text.empty() && text.front() == '{') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw input_error(std::string("malformed system JSON: ") + e.what());
        }
        return parse_system_json(doc);
    }
    return parse_shorthand(text);
}

// Applies {"name": value, ...} assignments, then fills the rest with 0.
inline SystemSpec apply_point(SystemSpec spec, const json& point) {
    if (!point.is_object()) throw input_error("point must be a JSON object of coefficient values");
    for (const auto& [name, v] : point.items()) {
        if (v.is_null()) continue;
        const auto& cur = [&]() -> const std::optional<Rational>& {
            try {
                return spec.value(spec.slot_index(name));
            } catch (const std::out_of_range&) {
                throw input_error("unknown coefficient '" + name + "'");
            }
        }();
        Rational val = detail::json_rational(v, name);
        if (cur && *cur != val) throw variety_conflict("point value for '" + name + "' contradicts the system");
        spec = spec.with_value(name, val);
    }
    return detail::zero_fill(std::move(spec));
}

inline json describe(const SystemSpec& spec) {
    json coeffs = json::object();
    for (std::size_t i = 0; i < spec.slots().size(); ++i) {
        const auto& v = spec.value(i);
        coeffs[spec.slots()[i].display_name] = v ? json(to_string(*v)) : json(nullptr);
    }
    json sig = json::array();
    for (unsigned d : spec.signature().degrees()) sig.push_back(d);
    const VectorField f = vector_field(spec);
    return {{"signature", sig},
            {"coefficients", coeffs},
            {"on_variety", spec.signature().degrees()[spec.signature().linear_index()] == 1 && on_variety(spec)},
            {"P", canonical_string(f.P, spec.vars())},
            {"Q", canonical_string(f.Q, spec.vars())}};
}

// Polynomial over the system's symbols (file or inline text).
inline Poly parse_poly_arg(const std::string& arg, const SystemSpec& spec) {
    return parse_poly(detail::trim(file_or_inline(arg)), spec.vars());
}

// `builtin:NAME` or a series document: {"numerator": "1 - u + u^2",
// "denominator": [[1,2],[2,1],[3,2]], "variable": "u"}; generalized factors
// may be given as monomial strings, e.g. [["u*z0", 1], ["z1^2", 1]].
inline HilbertSeries parse_series(const std::string& arg) {
    if (arg.rfind("builtin:", 0) == 0) {
        try {
            return builtin_series(arg.substr(8));
        } catch (const std::invalid_argument& e) {
            throw input_error(e.what());
        }
    }
    json doc;
    try {
        doc = json::parse(file_or_inline(arg));
    } catch (const json::parse_error& e) {
        throw input_error(std::string("malformed series JSON: ") + e.what());
    }
    if (!doc.contains("numerator") || !doc.contains("denominator")) throw input_error("series needs numerator and denominator");
    HilbertSeries h;
    const std::string var = doc.value("variable", std::string("t"));
    bool numeric = true;
    for (const auto& f : doc.at("denominator")) {
        if (!f.is_array() || f.size() != 2) throw input_error("denominator entries are [exponent_or_monomial, multiplicity]");
        if (f[0].is_string()) numeric = false;
    }
    if (numeric) {
        h.vars.add(var, VarKind::auxiliary);
    }
    h.numerator = parse_poly_extending(doc.at("numerator").get<std::string>(), h.vars);
    for (const auto& f : doc.at("denominator")) {
        const unsigned mult = f[1].get<unsigned>();
        if (mult == 0) throw input_error("multiplicity must be positive");
        Monomial m;
        if (f[0].is_string()) {
            Poly p = parse_poly_extending(f[0].get<std::string>(), h.vars);
            if (p.size() != 1 || p.terms()[0].second != 1 || p.terms()[0].first.degree() == 0) {
                throw input_error("denominator factor must be a non-constant monic monomial");
            }
            m = p.terms()[0].first;
        } else {
            const unsigned a = f[0].get<unsigned>();
            if (a == 0) throw input_error("exponent must be positive");
            m = Monomial::of(*h.vars.find(var), static_cast<std::uint16_t>(a));
        }
        h.denominator.push_back({m, mult});
    }
    return h;
}

}  // namespace cf

#endif  // CENTERFOCUS_IO_HPP
