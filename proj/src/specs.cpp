#include "valx/specs.hpp"

#include <cctype>
#include <fstream>

namespace valx {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw ParseError(what); }

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

// --- expression parser over K(x) -------------------------------------------

struct RfOps {
    const ValuedField& F;

    RatFun constant(const FieldElement& a) const { return rf_from_poly(F, p_const(F, a)); }
    RatFun x() const { return rf_from_poly(F, p_x(F)); }

    RatFun add(const RatFun& a, const RatFun& b) const {
        return rf_make(F, valx::add(F, mul(F, a.num, b.den), mul(F, b.num, a.den)),
                       mul(F, a.den, b.den));
    }
    RatFun sub(const RatFun& a, const RatFun& b) const {
        return rf_make(F, valx::sub(F, mul(F, a.num, b.den), mul(F, b.num, a.den)),
                       mul(F, a.den, b.den));
    }
    RatFun mul2(const RatFun& a, const RatFun& b) const {
        return rf_make(F, mul(F, a.num, b.num), mul(F, a.den, b.den));
    }
    RatFun div2(const RatFun& a, const RatFun& b) const {
        if (b.num.is_zero()) parse_fail("division by zero in literal");
        return rf_make(F, mul(F, a.num, b.den), mul(F, a.den, b.num));
    }
    RatFun neg1(const RatFun& a) const { return RatFun{neg(F, a.num), a.den}; }

    RatFun pow(RatFun a, long e) const {
        bool invert = e < 0;
        if (invert) e = -e;
        if (e > 100000) parse_fail("exponent too large");
        RatFun r = constant(f_one(F));
        RatFun base = a;
        while (e > 0) {
            if (e & 1) r = mul2(r, base);
            e >>= 1;
            if (e) base = mul2(base, base);
        }
        return invert ? div2(constant(f_one(F)), r) : r;
    }
};

class ExprParser {
public:
    ExprParser(const ValuedField& F, const std::string& s) : ops_{F}, s_(s) {}

    RatFun parse() {
        RatFun r = expr();
        skip_ws();
        if (pos_ != s_.size()) parse_fail("trailing characters in literal: " + s_.substr(pos_));
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFun expr() {
        RatFun r = eat('-') ? ops_.neg1(term()) : (eat('+'), term());
        for (;;) {
            if (eat('+'))
                r = ops_.add(r, term());
            else if (eat('-'))
                r = ops_.sub(r, term());
            else
                return r;
        }
    }

    RatFun term() {
        RatFun r = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r = ops_.mul2(r, factor());
            } else if (c == '/') {
                ++pos_;
                r = ops_.div2(r, factor());
            } else if (c == '(' || c == 'x' || c == 't' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                r = ops_.mul2(r, factor()); // adjacency is multiplication
            } else {
                return r;
            }
        }
    }

    RatFun factor() {
        if (eat('-')) return ops_.neg1(factor());
        RatFun base = atom();
        if (eat('^')) {
            bool negexp = eat('-');
            std::string digits = read_digits();
            if (digits.empty()) parse_fail("missing exponent");
            long e = std::stol(digits);
            base = ops_.pow(base, negexp ? -e : e);
        }
        return base;
    }

    RatFun atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFun r = expr();
            if (!eat(')')) parse_fail("missing ')'");
            return r;
        }
        if (c == 'x') {
            ++pos_;
            return ops_.x();
        }
        if (c == 't') {
            if (ops_.F.kind == FieldKind::PAdicRationals)
                parse_fail("'t' is not an element of this field");
            ++pos_;
            return ops_.constant(uniformizer(ops_.F));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = read_digits();
            return ops_.constant(f_from_int(ops_.F, Int(digits)));
        }
        parse_fail(std::string("unexpected character '") + c + "' in literal");
    }

    std::string read_digits() {
        skip_ws();
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        return d;
    }

    RfOps ops_;
    const std::string& s_;
    size_t pos_ = 0;
};

long parse_long(const std::string& s) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) parse_fail("bad integer: " + s);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        parse_fail("bad integer: " + s);
    }
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) parse_fail("empty rational");
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        parse_fail("bad rational: " + s);
    }
}

} // namespace

ValuedField parse_field(const std::string& s) {
    if (s == "Q(t)") return ValuedField{FieldKind::QRationalFunctions, 0};
    if (starts_with(s, "Q@p="))
        return ValuedField{FieldKind::PAdicRationals, parse_long(s.substr(4))};
    if (starts_with(s, "Fp(t)@p="))
        return ValuedField{FieldKind::FpRationalFunctions, parse_long(s.substr(8))};
    parse_fail("unknown field spec: " + s + " (expected Q@p=<prime>, Fp(t)@p=<prime>, Q(t))");
}

FieldElement parse_element(const ValuedField& F, const std::string& s) {
    RatFun r = ExprParser(F, s).parse();
    if (r.num.deg() > 0 || r.den.deg() > 0) parse_fail("not a base-field element: " + s);
    FieldElement n = r.num.is_zero() ? f_zero(F) : r.num.c[0];
    return div(F, n, r.den.c[0]);
}

Poly parse_poly(const ValuedField& F, const std::string& s) {
    RatFun r = ExprParser(F, s).parse();
    if (r.den.deg() > 0) parse_fail("not a polynomial: " + s);
    return p_scale(F, r.num, inv(F, r.den.c[0]));
}

RatFun parse_ratfun(const ValuedField& F, const std::string& s) {
    return ExprParser(F, s).parse();
}

Cut parse_cut(const std::string& s) {
    if (s == "belowall") return Cut::below_all();
    if (s == "aboveall") return Cut::above_all();
    if (s.empty()) parse_fail("empty cut");
    char side_c = s.back();
    if (side_c != 'L' && side_c != 'R')
        parse_fail("cut must end in L or R (or be belowall/aboveall): " + s);
    Cut::Side side = side_c == 'L' ? Cut::Side::Left : Cut::Side::Right;
    std::string qs = s.substr(0, s.size() - 1);
    if (!qs.empty() && qs.front() == '(') {
        if (qs.back() != ')') parse_fail("bad lex cut point: " + qs);
        std::string inner = qs.substr(1, qs.size() - 2);
        size_t comma = inner.find(',');
        if (comma == std::string::npos) parse_fail("bad lex cut point: " + qs);
        return Cut::principal({parse_rat(inner.substr(0, comma)), parse_rat(inner.substr(comma + 1))},
                              side);
    }
    return Cut::principal1(parse_rat(qs), side);
}

namespace {

GapExpr parse_gap(const std::string& s) {
    // forms: i | i+K | K*i | Ki | i^K | K^i
    if (s == "i") return GapExpr::affine(Int(1), Int(0));
    size_t caret = s.find('^');
    if (caret != std::string::npos) {
        std::string lhs = s.substr(0, caret), rhs = s.substr(caret + 1);
        if (lhs == "i") {
            long k = parse_long(rhs);
            if (k < 1) parse_fail("i^k needs k >= 1");
            return GapExpr::power_of_i(Int(k));
        }
        if (rhs == "i") {
            long k = parse_long(lhs);
            if (k < 2) parse_fail("k^i needs k >= 2");
            return GapExpr::exp_base(Int(k));
        }
        parse_fail("bad gap expression: " + s);
    }
    size_t plus = s.find('+');
    if (plus != std::string::npos) {
        if (s.substr(0, plus) != "i") parse_fail("bad gap expression: " + s);
        long b = parse_long(s.substr(plus + 1));
        if (b < 0) parse_fail("gap offset must be nonnegative");
        return GapExpr::affine(Int(1), Int(b));
    }
    size_t ipos = s.find('i');
    if (ipos == std::string::npos || ipos != s.size() - 1) parse_fail("bad gap expression: " + s);
    std::string coef = s.substr(0, ipos);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    long a = parse_long(coef);
    if (a < 1) parse_fail("gap slope must be positive");
    return GapExpr::affine(Int(a), Int(0));
}

} // namespace

Pcs parse_pcs(const ValuedField& F, const std::string& s) {
    if (!starts_with(s, "pcs:")) parse_fail("pCs spec must start with pcs:");
    std::string rest = s.substr(4);
    if (rest == "artin_schreier") {
        ValuedField as{FieldKind::FpRationalFunctions, 2};
        if (!(F == as)) parse_fail("pcs:artin_schreier lives over Fp(t)@p=2");
        return PcsGenerator::artin_schreier();
    }
    if (starts_with(rest, "powergap:e=")) return PcsGenerator::power_gap(F, parse_gap(rest.substr(11)));
    if (starts_with(rest, "file:")) {
        std::string path = rest.substr(5);
        std::ifstream in(path);
        if (!in) parse_fail("cannot open pCs file: " + path);
        std::vector<FieldElement> terms;
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
                line.pop_back();
            if (line.empty()) continue;
            terms.push_back(parse_element(F, line));
        }
        return PcsGenerator::explicit_terms(F, std::move(terms));
    }
    parse_fail("unknown pCs spec: " + s);
}

namespace {

/// key=value list "b=...,cut=..." where element values may contain commas
/// only inside parentheses.
std::vector<std::pair<std::string, std::string>> split_kv(const std::string& s) {
    std::vector<std::pair<std::string, std::string>> out;
    size_t i = 0;
    int depth = 0;
    size_t start = 0;
    auto flush = [&](size_t end) {
        std::string item = s.substr(start, end - start);
        size_t eq = item.find('=');
        if (eq == std::string::npos) parse_fail("expected key=value: " + item);
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    };
    for (; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    flush(s.size());
    return out;
}

} // namespace

ApproxType parse_at(const ValuedField& F, const std::string& s) {
    if (!starts_with(s, "at:")) parse_fail("approximation-type spec must start with at:");
    std::string rest = s.substr(3);
    if (rest == "empty") return at_empty(F);
    if (starts_with(rest, "trivial:c=")) return at_trivial(F, parse_element(F, rest.substr(10)));
    if (starts_with(rest, "value:")) {
        FieldElement b = f_zero(F);
        Cut cut = Cut::above_all();
        bool have_cut = false;
        for (auto& [k, v] : split_kv(rest.substr(6))) {
            if (k == "b")
                b = parse_element(F, v);
            else if (k == "cut") {
                cut = parse_cut(v);
                have_cut = true;
            } else
                parse_fail("unknown key in at:value spec: " + k);
        }
        if (!have_cut) parse_fail("at:value needs cut=");
        return at_value_extending(F, b, cut);
    }
    if (starts_with(rest, "residue:")) {
        FieldElement b = f_zero(F);
        Int delta = 0;
        bool have_delta = false;
        for (auto& [k, v] : split_kv(rest.substr(8))) {
            if (k == "b")
                b = parse_element(F, v);
            else if (k == "delta") {
                delta = Int(v);
                have_delta = true;
            } else
                parse_fail("unknown key in at:residue spec: " + k);
        }
        if (!have_delta) parse_fail("at:residue needs delta=");
        return at_residue_extending(F, b, delta);
    }
    if (starts_with(rest, "immediate:")) return to_approx_type(parse_pcs(F, rest.substr(10)));
    parse_fail("unknown approximation-type spec: " + s);
}

ExtensionValuation parse_valuation(const ValuedField& F, const std::string& s, long budget) {
    if (s == "gauss") return gauss_valuation(F);
    if (starts_with(s, "monomial:")) {
        FieldElement b = f_zero(F);
        std::optional<GroupValue> alpha;
        for (auto& [k, v] : split_kv(s.substr(9))) {
            if (k == "b")
                b = parse_element(F, v);
            else if (k == "alpha")
                alpha = gv_int(Int(v));
            else if (k == "cut")
                alpha = gv_alpha(GroupDescriptor{GroupKind::Integers}, parse_cut(v));
            else
                parse_fail("unknown key in monomial spec: " + k);
        }
        if (!alpha) parse_fail("monomial needs alpha= or cut=");
        return monomial_valuation(F, b, *alpha);
    }
    if (starts_with(s, "limit:")) {
        ApproxType A = parse_at(F, s.substr(6));
        return limit_valuation(A, /*declared_transcendental=*/false, std::nullopt, budget);
    }
    if (starts_with(s, "limit-transcendental:")) {
        ApproxType A = parse_at(F, s.substr(21));
        return limit_valuation(A, /*declared_transcendental=*/true, std::nullopt, budget);
    }
    parse_fail("unknown valuation spec: " + s);
}

GroupValue parse_group_value(const std::string& s, GroupKind kind, const Cut* cut) {
    if (s == "inf") return gv_infinity(kind);
    // augmented rendering: <plain><sign>[count]<marker> with marker i or T
    size_t marker = s.find_last_of("iT");
    if (marker != std::string::npos && marker == s.size() - 1) {
        char m = s[marker];
        size_t sign = s.find_last_of("+-", marker);
        if (sign == std::string::npos || sign == 0) parse_fail("bad augmented value: " + s);
        std::string plain_s = s.substr(0, sign);
        std::string count_s = s.substr(sign + 1, marker - sign - 1);
        Int k = count_s.empty() ? Int(1) : Int(count_s);
        if (s[sign] == '-') k = -k;
        if (!cut) parse_fail("augmented value needs a cut context: " + s);
        Rat plain = parse_rat(plain_s);
        Int mult;
        switch (cut->kind) {
        case Cut::Kind::Principal: {
            if (m != 'i') parse_fail("principal cuts render as i: " + s);
            mult = cut->side == Cut::Side::Right ? k : -k;
            GroupValue base;
            base.kind = kind;
            base.coords = {plain - Rat(mult) * cut->q[0]};
            return gv_augmented(base, mult, *cut);
        }
        case Cut::Kind::AboveAll:
            if (m != 'T') parse_fail("boundary cuts render as T: " + s);
            mult = k;
            break;
        case Cut::Kind::BelowAll:
            if (m != 'T') parse_fail("boundary cuts render as T: " + s);
            mult = -k;
            break;
        }
        GroupValue base;
        base.kind = kind;
        base.coords = {plain};
        return gv_augmented(base, mult, *cut);
    }
    if (!s.empty() && s.front() == '(') {
        if (kind != GroupKind::LexSquare) parse_fail("lex pair in a rank-1 group: " + s);
        if (s.back() != ')') parse_fail("bad lex pair: " + s);
        std::string inner = s.substr(1, s.size() - 2);
        size_t comma = inner.find(',');
        if (comma == std::string::npos) parse_fail("bad lex pair: " + s);
        return gv_lex(parse_rat(inner.substr(0, comma)), parse_rat(inner.substr(comma + 1)));
    }
    Rat q = parse_rat(s);
    if (kind == GroupKind::Integers) {
        if (q.get_den() != 1) parse_fail("not an integer value: " + s);
        return gv_int(q.get_num());
    }
    if (kind == GroupKind::Rationals) return gv_rat(q);
    parse_fail("lex values are written as pairs: " + s);
}

Ball parse_ball(const ValuedField& F, const std::string& s) {
    size_t i = 0;
    bool open = false;
    if (!starts_with(s, "B")) parse_fail("ball literal must start with B: " + s);
    i = 1;
    if (starts_with(s.substr(i), "°")) {
        open = true;
        i += std::string("°").size();
    } else if (i < s.size() && s[i] == 'o') {
        open = true;
        ++i;
    }
    if (i >= s.size() || s[i] != '[') parse_fail("expected [radius] in ball literal: " + s);
    size_t close = s.find(']', i);
    if (close == std::string::npos) parse_fail("expected ] in ball literal: " + s);
    GroupValue radius = parse_group_value(s.substr(i + 1, close - i - 1), GroupKind::Integers);
    if (close + 1 >= s.size() || s[close + 1] != '(' || s.back() != ')')
        parse_fail("expected (center) in ball literal: " + s);
    FieldElement center = parse_element(F, s.substr(close + 2, s.size() - close - 3));
    return make_ball(F, center, radius, open ? BallKind::Open : BallKind::Closed);
}

} // namespace valx
