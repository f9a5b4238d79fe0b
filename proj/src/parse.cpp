#include "smc/parse.hpp"

#include <cctype>
#include <sstream>

#include "smc/error.hpp"

namespace smc {

std::vector<std::string> default_variables(int n) {
    if (n == 3) return {"x", "y", "z"};
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : s_(text), vars_(vars) {}

    MultiPoly run() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail(ErrorKind::SyntaxError, "unexpected input at '" + rest() + "'", (long)pos_);
        return p;
    }

private:
    int n() const { return (int)vars_.size(); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    std::string rest() const { return s_.substr(pos_, 12); }

    MultiPoly expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        MultiPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else break;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (true) {
            if (eat('*')) {
                acc *= factor();
                continue;
            }
            char c = peek();
            // implicit product before '(' or an identifier
            if (c == '(' || std::isalpha((unsigned char)c)) {
                acc *= factor();
                continue;
            }
            break;
        }
        return acc;
    }

    MultiPoly factor() {
        char c = peek();
        if (c == '(') {
            size_t open = pos_;
            eat('(');
            MultiPoly inner = expr();
            if (!eat(')'))
                fail(ErrorKind::SyntaxError, "unbalanced parenthesis", (long)open);
            return maybe_power(inner);
        }
        if (std::isdigit((unsigned char)c)) return maybe_power(rational_factor());
        if (std::isalpha((unsigned char)c)) return variable_factor();
        fail(ErrorKind::SyntaxError,
             pos_ >= s_.size() ? "unexpected end of input" : "unexpected character '" + std::string(1, c) + "'",
             (long)pos_);
    }

    MultiPoly maybe_power(MultiPoly base) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            long e = natural();
            base = base.pow((int)e);
        }
        return base;
    }

    MultiPoly rational_factor() {
        mpz_class num = integer();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            size_t save = pos_;
            ++pos_;
            if (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                mpz_class den = integer();
                if (den == 0) fail(ErrorKind::SyntaxError, "zero denominator", (long)save);
                return MultiPoly::constant(n(), Rational(num, den));
            }
            pos_ = save; // '/' belonged to something else; reject later
        }
        return MultiPoly::constant(n(), Rational(num));
    }

    mpz_class integer() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        if (start == pos_) fail(ErrorKind::SyntaxError, "expected digits", (long)pos_);
        return mpz_class(s_.substr(start, pos_ - start));
    }

    long natural() {
        skip_ws();
        mpz_class v = integer();
        if (v < 1 || !v.fits_slong_p())
            fail(ErrorKind::SyntaxError, "exponent must be a positive integer", (long)pos_);
        return v.get_si();
    }

    MultiPoly variable_factor() {
        skip_ws();
        size_t start = pos_;
        // longest variable-name match, so one-letter variables can be juxtaposed
        int idx = -1;
        size_t len = 0;
        for (int i = 0; i < n(); ++i) {
            const std::string& v = vars_[i];
            if (v.size() > len && s_.compare(start, v.size(), v) == 0) {
                idx = i;
                len = v.size();
            }
        }
        if (idx < 0) {
            size_t stop = start;
            while (stop < s_.size() &&
                   (std::isalnum((unsigned char)s_[stop]) || s_[stop] == '_'))
                ++stop;
            fail(ErrorKind::UnknownVariable, "'" + s_.substr(start, stop - start) + "'", (long)start);
        }
        pos_ = start + len;
        int e = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            e = (int)natural();
        }
        ExpVec ev(n(), 0);
        ev[idx] = e;
        return MultiPoly::monomial(ev, Rational(1));
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    size_t pos_ = 0;
};

} // namespace

ParsedInput parse_poly(const std::string& text, const std::vector<std::string>& variables) {
    if (variables.empty()) fail(ErrorKind::BadParameters, "no variables given");
    Parser p(text, variables);
    MultiPoly poly = p.run();
    if (poly.is_zero()) fail(ErrorKind::ZeroPolynomial, "input polynomial is zero");
    return ParsedInput{std::move(poly), variables, text};
}

ParsedInput parse_poly(const std::string& text) {
    return parse_poly(text, default_variables());
}

std::string print_poly(const MultiPoly& p, const std::vector<std::string>& variables) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, a] = *it;
        Rational mag = a.abs();
        if (first) {
            if (a.is_negative()) os << "-";
            first = false;
        } else {
            os << (a.is_negative() ? " - " : " + ");
        }
        bool any_var = false;
        for (int x : e) any_var = any_var || x > 0;
        bool unit = (mag == Rational(1));
        bool printed_coeff = (!any_var || !unit);
        if (printed_coeff) os << mag.str();
        bool first_factor = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed_coeff || !first_factor) os << "*";
            first_factor = false;
            os << variables[i];
            if (e[i] >= 2) os << "^" << e[i];
        }
    }
    return os.str();
}

std::optional<int> homogeneity(const MultiPoly& p) {
    return p.homogeneity();
}

std::set<ExpVec> support(const MultiPoly& p) {
    return p.support();
}

} // namespace smc
