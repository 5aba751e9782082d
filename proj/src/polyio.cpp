#include "curvemod/polyio.hpp"

#include <cctype>
#include <sstream>

namespace curvemod {

Poly<Num> to_num(const Poly<Rat>& p)
{
    return p.map<Num>([](const Rat& c) { return Num(c); });
}

Poly<Rat> to_rat(const Poly<Num>& p)
{
    return p.map<Rat>([](const Num& c) { return c.rational(); });
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : src_(s)
    {
        // accept the unicode minus sign
        for (size_t i = 0; i < s.size(); ++i) {
            if (i + 2 < s.size() && (unsigned char)s[i] == 0xE2 && (unsigned char)s[i + 1] == 0x88 &&
                (unsigned char)s[i + 2] == 0x92) {
                txt_ += '-';
                i += 2;
            } else {
                txt_ += s[i];
            }
        }
    }

    Poly<Num> run()
    {
        Poly<Num> p = expr();
        skip();
        if (pos_ != txt_.size()) error("unexpected character");
        return p;
    }

private:
    std::string src_, txt_;
    size_t pos_ = 0;

    [[noreturn]] void error(const std::string& msg)
    {
        fail(Err::Parse, msg + " at position " + std::to_string(pos_) + " in \"" + src_ + "\"");
    }
    void skip()
    {
        while (pos_ < txt_.size() && std::isspace((unsigned char)txt_[pos_])) ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < txt_.size() && txt_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Int integer()
    {
        skip();
        size_t st = pos_;
        while (pos_ < txt_.size() && std::isdigit((unsigned char)txt_[pos_])) ++pos_;
        if (st == pos_) error("expected an integer");
        return Int(txt_.substr(st, pos_ - st));
    }

    // integer or exact decimal literal such as 0.125
    Rat number()
    {
        Int whole = integer();
        if (pos_ >= txt_.size() || txt_[pos_] != '.') return Rat(whole);
        ++pos_;
        size_t st = pos_;
        while (pos_ < txt_.size() && std::isdigit((unsigned char)txt_[pos_])) ++pos_;
        if (st == pos_) error("expected digits after '.'");
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, pos_ - st);
        Rat r(whole * scale + Int(txt_.substr(st, pos_ - st)), scale);
        r.canonicalize();
        return r;
    }

    Poly<Num> expr()
    {
        Poly<Num> r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    Poly<Num> term()
    {
        Poly<Num> r = unary();
        for (;;) {
            if (eat('*')) {
                r = r * unary();
            } else if (eat('/')) {
                size_t at = pos_;
                Poly<Num> d = unary();
                if (d.total_degree() != 0) {
                    pos_ = at;
                    error("division by a non-constant");
                }
                Num c = d.constant_term();
                r = c.inverse() * r;
            } else {
                return r;
            }
        }
    }
    Poly<Num> unary()
    {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Poly<Num> power()
    {
        Poly<Num> b = atom();
        if (eat('^')) {
            Int e = integer();
            if (e > 10000) error("exponent too large");
            b = b.pow(static_cast<int>(e.get_si()));
        }
        return b;
    }
    Poly<Num> atom()
    {
        skip();
        if (pos_ >= txt_.size()) error("unexpected end of input");
        char c = txt_[pos_];
        if (c == '(') {
            ++pos_;
            Poly<Num> r = expr();
            if (!eat(')')) error("expected ')'");
            return r;
        }
        if (std::isdigit((unsigned char)c)) return Poly<Num>::constant(Num(number()));
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            return Poly<Num>::var(c - 'x');
        }
        if (txt_.compare(pos_, 4, "sqrt") == 0) {
            pos_ += 4;
            if (!eat('(')) error("expected '(' after sqrt");
            bool neg = eat('-');
            Int d = integer();
            if (neg) d = -d;
            if (!eat(')')) error("expected ')'");
            if (d == 0) return Poly<Num>();
            Int root;
            Int s = squarefree_part(d, &root);
            if (s == 1) return Poly<Num>::constant(Num(Rat(root)));
            return Poly<Num>::constant(Num(quad_field(s), {Rat(0), Rat(root)}));
        }
        error("unexpected character");
    }
};

std::string coeff_str(const Num& c, bool monomial_is_one, bool& negative)
{
    negative = false;
    if (c.is_rational()) {
        Rat v = c.rational();
        if (sgn(v) < 0) {
            negative = true;
            v = -v;
        }
        if (v == 1 && !monomial_is_one) return "";
        return v.get_str();
    }
    return "(" + c.str() + ")";
}

} // namespace

Poly<Num> parse_poly(const std::string& text) { return Parser(text).run(); }

Form parse_form(const std::string& text)
{
    Poly<Num> p = parse_poly(text);
    Form f;
    try {
        f = to_rat(p);
    } catch (const Error&) {
        fail(Err::Parse, "curve coefficients must be rational: \"" + text + "\"");
    }
    if (f.zero()) fail(Err::ZeroForm, "zero polynomial");
    if (!f.homogeneous()) {
        if (f.deg_in(2) > 0) fail(Err::Parse, "polynomial is not homogeneous: \"" + text + "\"");
        f = f.homogenize(2, f.total_degree());
    }
    return f;
}

std::string to_string(const Poly<Num>& p)
{
    if (p.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.t.rbegin(); it != p.t.rend(); ++it) {
        const Exp& e = it->first;
        bool one = e[0] + e[1] + e[2] == 0;
        bool neg;
        std::string cs = coeff_str(it->second, one, neg);
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        std::string mono;
        const char* names = "xyz";
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (cs.empty()) os << mono;
        else if (mono.empty()) os << cs;
        else os << cs << "*" << mono;
    }
    return os.str();
}

std::string to_string(const Form& p) { return to_string(to_num(p)); }

} // namespace curvemod
