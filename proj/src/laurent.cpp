#include "tnil/laurent.hpp"

#include "tnil/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tnil {

LaurentPoly::LaurentPoly(const Integer& constant)
{
    add_term(0, constant);
}

LaurentPoly::LaurentPoly(Terms terms)
{
    for (auto& [e, c] : terms)
        add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(Exponent e, const Integer& coeff)
{
    LaurentPoly p;
    p.add_term(e, coeff);
    return p;
}

Integer LaurentPoly::coeff(Exponent e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(Exponent e, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::shifted(Exponent m) const
{
    LaurentPoly r;
    for (auto& [e, c] : terms_)
        r.terms_.emplace(e + m, c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r;
    for (auto& [e1, c1] : a.terms_)
        for (auto& [e2, c2] : b.terms_)
            r.add_term(e1 + e2, c1 * c2);
    return r;
}

std::string LaurentPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Integer mag = abs(c);
        if (c < 0)
            out << '-';
        else if (!first)
            out << '+';
        first = false;
        if (e == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1)
            out << mag.get_str();
        out << 'b';
        if (e != 1)
            out << '^' << e;
    }
    return out.str();
}

namespace {

class LaurentParser {
public:
    explicit LaurentParser(std::string_view text) : text_(text) {}

    LaurentPoly parse()
    {
        LaurentPoly result;
        skip_ws();
        if (at_end())
            throw ParseError("empty Laurent literal", pos_);
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            result += parse_term(sign);
            skip_ws();
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected digits", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    LaurentPoly parse_term(int sign)
    {
        if (at_end())
            throw ParseError("expected term", pos_);
        Integer coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = Integer(digits());
            have_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || peek() != 'b')
                    throw ParseError("expected 'b' after '*'", pos_);
            }
        }
        if (at_end() || peek() != 'b') {
            if (!have_coeff)
                throw ParseError("expected integer or 'b'", pos_);
            return LaurentPoly(Integer(sign * coeff));
        }
        ++pos_; // 'b'
        skip_ws();
        Exponent e = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            e = parse_exponent();
        }
        return LaurentPoly::monomial(e, sign * coeff);
    }

    Exponent parse_exponent()
    {
        bool paren = false;
        if (!at_end() && peek() == '(') {
            paren = true;
            ++pos_;
            skip_ws();
        }
        int sign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        std::size_t start = pos_;
        std::string d = digits();
        if (d.size() > 15)
            throw ParseError("exponent out of range", start);
        Exponent e = sign * static_cast<Exponent>(std::stoll(d));
        if (paren) {
            skip_ws();
            if (at_end() || peek() != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
        }
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

LaurentPoly parse_laurent(std::string_view text)
{
    return LaurentParser(text).parse();
}

Integer augmentation(const LaurentPoly& s)
{
    Integer sum = 0;
    for (auto& [e, c] : s.terms())
        sum += c;
    return sum;
}

SMembership s_membership(const LaurentPoly& s)
{
    return {s, augmentation(s)};
}

bool in_S(const LaurentPoly& s)
{
    return augmentation(s) == 1;
}

std::vector<LaurentPoly> enumerate_S(int max_span, int max_abs_coeff)
{
    if (max_span < 0 || max_abs_coeff < 0)
        throw PreconditionError("enumerate_S: bounds must be non-negative");

    struct Entry {
        Exponent span;
        std::vector<int> tuple;
    };
    std::vector<Entry> found;

    const int len = max_span + 1;
    std::vector<int> tuple(len, -max_abs_coeff);
    // Tuples are visited in lexicographic order; the later stable sort by
    // span keeps that order within each span class.
    for (;;) {
        int sum = 0;
        for (int c : tuple)
            sum += c;
        if (sum == 1) {
            int lo = 0;
            while (tuple[lo] == 0)
                ++lo;
            int hi = len - 1;
            while (tuple[hi] == 0)
                --hi;
            found.push_back({hi - lo, tuple});
        }
        int i = len - 1;
        while (i >= 0 && tuple[i] == max_abs_coeff) {
            tuple[i] = -max_abs_coeff;
            --i;
        }
        if (i < 0)
            break;
        ++tuple[i];
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const Entry& a, const Entry& b) { return a.span < b.span; });

    std::vector<LaurentPoly> out;
    out.reserve(found.size());
    for (auto& entry : found) {
        LaurentPoly::Terms terms;
        for (int e = 0; e < len; ++e)
            if (entry.tuple[e] != 0)
                terms.emplace(e, entry.tuple[e]);
        out.emplace_back(std::move(terms));
    }
    return out;
}

} // namespace tnil
