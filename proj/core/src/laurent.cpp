#include "tropvieta/laurent.hpp"

#include <cctype>

#include "tropvieta/errors.hpp"

namespace tropvieta {

LaurentPoly LaurentPoly::monomial(const Rat& c, long exponent) {
    LaurentPoly f;
    f.set(exponent, c);
    return f;
}

void LaurentPoly::set(long exponent, const Rat& c) {
    if (c == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = c;
}

void LaurentPoly::add_term(long exponent, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rat LaurentPoly::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rat(0) : it->second;
}

ExtRat LaurentPoly::t_valuation() const {
    if (terms_.empty()) return ExtRat::inf();
    return ExtRat(Rat(terms_.begin()->first));
}

Rat LaurentPoly::leading_coeff() const {
    if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rat(-c));
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, Rat(ca * cb));
    return r;
}

ExtRat t_valuation(const LaurentPoly& f) { return f.t_valuation(); }

namespace {

// One summand: [coef][*]t[^exp] or a bare coefficient.
void parse_term(const std::string& raw, bool negative, LaurentPoly& out) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw UsageError("empty term in Laurent polynomial");
    auto tpos = s.find('t');
    Rat c(1);
    long e = 0;
    if (tpos == std::string::npos) {
        c = parse_rat(s);
    } else {
        std::string cs = s.substr(0, tpos);
        if (!cs.empty() && cs.back() == '*') cs.pop_back();
        if (!cs.empty()) c = parse_rat(cs);
        std::string es = s.substr(tpos + 1);
        if (es.empty()) {
            e = 1;
        } else {
            if (es[0] != '^') throw UsageError("bad exponent in '" + raw + "'");
            es = es.substr(1);
            if (!es.empty() && es.front() == '(' && es.back() == ')')
                es = es.substr(1, es.size() - 2);
            Rat er = parse_rat(es);
            if (er.get_den() != 1 || !er.get_num().fits_slong_p())
                throw UsageError("exponent must be a machine integer in '" + raw + "'");
            e = er.get_num().get_si();
        }
    }
    if (negative) c = -c;
    out += LaurentPoly::monomial(c, e);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly out;
    std::string cur;
    bool negative = false;
    bool seen_any = false;
    char prev = '\0';
    auto flush = [&]() {
        bool blank = true;
        for (char ch : cur)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) {
            if (seen_any) throw UsageError("dangling sign in '" + text + "'");
            return;
        }
        parse_term(cur, negative, out);
        cur.clear();
    };
    for (char ch : text) {
        bool sign = (ch == '+' || ch == '-');
        // A sign directly after '^' or '/' or '*' belongs to the number.
        if (sign && prev != '^' && prev != '(' && prev != '*' && prev != '/') {
            bool blank = true;
            for (char c2 : cur)
                if (!std::isspace(static_cast<unsigned char>(c2))) blank = false;
            if (!blank) {
                flush();
            } else if (seen_any) {
                throw UsageError("double sign in '" + text + "'");
            }
            cur.clear();
            negative = (ch == '-');
            seen_any = true;
        } else {
            cur += ch;
        }
        if (!std::isspace(static_cast<unsigned char>(ch))) prev = ch;
    }
    bool blank = true;
    for (char c2 : cur)
        if (!std::isspace(static_cast<unsigned char>(c2))) blank = false;
    if (blank) throw UsageError("empty Laurent polynomial term in '" + text + "'");
    parse_term(cur, negative, out);
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    // Highest exponent first reads like the usual "3*t^-2 + t^-3".
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        long e = it->first;
        Rat c = it->second;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (e == 0) {
            s += to_string(mag);
            continue;
        }
        if (mag != 1) s += to_string(mag) + "*";
        s += "t";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace tropvieta
