#ifndef CENTERFOCUS_POLY_IO_HPP
#define CENTERFOCUS_POLY_IO_HPP

#include <cctype>
#include <string>
#include <string_view>

#include <centerfocus/poly.hpp>

namespace cf {

// Renders terms in decreasing monomial order: "3/2*x^2*y - c + 1".
inline std::string canonical_string(const Poly& p, const VarTable& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string body;
        auto ex = m.exponents();
        for (std::size_t i = 0; i < ex.size(); ++i) {
            if (ex[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += vars.name(VarId{static_cast<std::uint32_t>(i)});
            if (ex[i] > 1) body += "^" + std::to_string(ex[i]);
        }
        if (body.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += body;
        } else {
            out += to_string(mag) + "*" + body;
        }
    }
    return out;
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, VarTable* vars, bool allow_new)
        : text_(text), vars_(vars), allow_new_(allow_new) {}

    Poly parse() {
        skip_ws();
        if (pos_ == text_.size()) throw parse_error("empty polynomial", pos_);
        std::vector<Poly::Term> terms;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == text_.size()) break;
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw parse_error("expected '+' or '-' between terms", pos_);
            }
            first = false;
            auto [m, c] = parse_term();
            terms.emplace_back(std::move(m), c * sign);
        }
        return Poly::from_terms(std::move(terms));
    }

private:
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Poly::Term parse_term() {
        Rational coeff = 1;
        Monomial mono;
        bool have_factor = false;
        while (true) {
            skip_ws();
            if (pos_ == text_.size()) throw parse_error("unexpected end of input", pos_);
            char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                coeff *= parse_number();
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::size_t start = pos_;
                std::string name;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                    name.push_back(text_[pos_++]);
                }
                VarId v = resolve(name, start);
                unsigned e = 1;
                skip_ws();
                if (pos_ < text_.size() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    std::size_t estart = pos_;
                    std::string digits;
                    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
                        digits.push_back(text_[pos_++]);
                    }
                    if (digits.empty() || digits.size() > 5) throw parse_error("bad exponent", estart);
                    e = static_cast<unsigned>(std::stoul(digits));
                }
                mono = mono * Monomial::of(v, e);
            } else {
                throw parse_error(std::string("unexpected character '") + ch + "'", pos_);
            }
            have_factor = true;
            skip_ws();
            if (pos_ < text_.size() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!have_factor) throw parse_error("empty term", pos_);
        return {std::move(mono), coeff};
    }

    Rational parse_number() {
        std::size_t start = pos_;
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) s.push_back(text_[pos_++]);
        skip_ws();
        if (pos_ < text_.size() && peek() == '/') {
            ++pos_;
            skip_ws();
            s.push_back('/');
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) s.push_back(text_[pos_++]);
            if (pos_ == dstart) throw parse_error("missing denominator", pos_);
        }
        try {
            return parse_rational(s);
        } catch (const parse_error& e) {
            throw parse_error(e.what(), start);
        }
    }

    VarId resolve(const std::string& name, std::size_t at) {
        if (auto v = vars_->find(name)) return *v;
        if (!allow_new_) throw parse_error("unknown symbol '" + name + "'", at);
        return vars_->add(name, VarKind::auxiliary);
    }

    std::string_view text_;
    VarTable* vars_;
    bool allow_new_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Parses the polynomial text grammar; unknown symbols are an error.
inline Poly parse_poly(std::string_view text, const VarTable& vars) {
    VarTable copy = vars;
    return detail::PolyParser(text, &copy, false).parse();
}

// Parses and registers previously unseen symbols in `vars`.
inline Poly parse_poly_extending(std::string_view text, VarTable& vars) {
    return detail::PolyParser(text, &vars, true).parse();
}

}  // namespace cf

#endif  // CENTERFOCUS_POLY_IO_HPP
