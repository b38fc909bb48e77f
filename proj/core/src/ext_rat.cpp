#include "tropvieta/ext_rat.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "tropvieta/errors.hpp"

namespace tropvieta {

Rat make_rat(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
}

bool is_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int parse_int(const std::string& s) {
    if (!is_integer_literal(s)) throw UsageError("not an integer: '" + s + "'");
    return Int(s[0] == '+' ? s.substr(1) : s, 10);
}

// Accepts d, -d, d.ddd as exact decimals.
Rat parse_decimal(const std::string& s) {
    auto dot = s.find('.');
    std::string ip = s.substr(0, dot);
    std::string fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    if (fp.empty() || !is_integer_literal(ip) || !is_integer_literal(fp) || fp[0] == '-' ||
        fp[0] == '+')
        throw UsageError("not a rational: '" + s + "'");
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    Rat r(Int(ip + fp, 10), den);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw UsageError("empty rational");
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (s.find('.') != std::string::npos) return parse_decimal(s);
        return Rat(parse_int(s));
    }
    Int num = parse_int(trim(s.substr(0, slash)));
    Int den = parse_int(trim(s.substr(slash + 1)));
    if (den == 0) throw UsageError("zero denominator in '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

ExtRat ExtRat::parse(const std::string& text) {
    std::string s = trim(text);
    std::string low = s;
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (low == "inf" || low == "+inf" || low == "infinity" || low == "∞") return ExtRat::inf();
    if (low == "-inf") throw DomainError("-inf is not representable");
    return ExtRat(parse_rat(s));
}

const Rat& ExtRat::value() const {
    if (inf_) throw DomainError("value() of +inf");
    return v_;
}

ExtRat operator+(const ExtRat& x, const ExtRat& y) {
    if (x.inf_ || y.inf_) return ExtRat::inf();
    return ExtRat(Rat(x.v_ + y.v_));
}

ExtRat operator-(const ExtRat& x, const Rat& r) {
    if (x.inf_) return x;
    return ExtRat(Rat(x.v_ - r));
}

ExtRat operator*(const Rat& c, const ExtRat& x) {
    if (c <= 0) throw DomainError("ExtRat scaling needs a positive factor");
    if (x.inf_) return x;
    return ExtRat(Rat(c * x.v_));
}

bool operator==(const ExtRat& x, const ExtRat& y) {
    if (x.inf_ || y.inf_) return x.inf_ == y.inf_;
    return x.v_ == y.v_;
}

std::strong_ordering operator<=>(const ExtRat& x, const ExtRat& y) {
    if (x.inf_ && y.inf_) return std::strong_ordering::equal;
    if (x.inf_) return std::strong_ordering::greater;
    if (y.inf_) return std::strong_ordering::less;
    int c = cmp(x.v_, y.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ExtRat::str() const { return inf_ ? "inf" : to_string(v_); }

ExtRat ext_min(const std::vector<ExtRat>& values) {
    if (values.empty()) throw UsageError("ext_min of an empty list");
    return *std::min_element(values.begin(), values.end());
}

ExtRat ext_min(std::initializer_list<ExtRat> values) {
    return ext_min(std::vector<ExtRat>(values));
}

std::ostream& operator<<(std::ostream& os, const ExtRat& x) { return os << x.str(); }

}  // namespace tropvieta
