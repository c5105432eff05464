#include "alexchen/freefox.hpp"

#include <cctype>
#include <stdexcept>

namespace alexchen {

FreeWord::FreeWord(int n, const std::vector<Letter>& letters) : n_(n) {
    for (auto& l : letters) push(l);
}

void FreeWord::push(const Letter& l) {
    if (l.first < 1 || l.first > n_) throw std::out_of_range("free word: generator index out of range");
    if (l.second != 1 && l.second != -1) throw std::invalid_argument("free word: exponent must be +1 or -1");
    if (!letters_.empty() && letters_.back().first == l.first && letters_.back().second == -l.second)
        letters_.pop_back();
    else
        letters_.push_back(l);
}

FreeWord FreeWord::generator(int n, int i, int exp) {
    FreeWord w(n);
    int step = exp > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(exp); ++k) w.push({i, step});
    return w;
}

FreeWord FreeWord::product_of(int n, const std::vector<int>& indices) {
    FreeWord w(n);
    for (int i : indices) w.push({i, 1});
    return w;
}

FreeWord FreeWord::commutator(const FreeWord& a, const FreeWord& b) { return a * b * a.inverse() * b.inverse(); }

FreeWord FreeWord::inverse() const {
    FreeWord w(n_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push({it->first, -it->second});
    return w;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord w(a);
    if (w.n_ == 0) w.n_ = b.n_;
    for (auto& l : b.letters_) w.push(l);
    return w;
}

Exponent FreeWord::abelianization() const {
    Exponent e(n_, 0);
    for (auto& [g, x] : letters_) e[g - 1] += x;
    return e;
}

LaurentPoly FreeWord::abelian_image() const { return LaurentPoly::monomial(n_, abelianization()); }

std::string FreeWord::str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (auto& [g, x] : letters_) {
        if (!s.empty()) s += " ";
        s += "t" + std::to_string(g);
        if (x < 0) s += "^-1";
    }
    return s;
}

namespace {

class WordParser {
public:
    WordParser(const std::string& s, int n) : s_(s), n_(n) {}
    FreeWord parse() {
        FreeWord w = word({});
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return w;
    }

private:
    const std::string& s_;
    int n_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("word parse error at column " + std::to_string(pos_ + 1) + ": " + what + " in \"" +
                                    s_ + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    int integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t st = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (st == pos_) fail("expected integer");
        int v = std::stoi(s_.substr(st, pos_ - st));
        return neg ? -v : v;
    }
    // Juxtaposition of atoms until one of the stop characters or end.
    FreeWord word(const std::string& stops) {
        FreeWord w(n_);
        while (true) {
            skip();
            if (pos_ >= s_.size() || stops.find(s_[pos_]) != std::string::npos) break;
            w = w * power();
        }
        return w;
    }
    FreeWord power() {
        FreeWord a = atom();
        if (peek('^')) {
            ++pos_;
            int k = integer();
            FreeWord r(n_);
            FreeWord base = k < 0 ? a.inverse() : a;
            for (int i = 0; i < std::abs(k); ++i) r = r * base;
            return r;
        }
        return a;
    }
    FreeWord atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '1') {
            ++pos_;
            return FreeWord(n_);
        }
        if (c == 't') {
            ++pos_;
            int i = integer();
            if (i < 1 || i > n_) fail("generator index out of range");
            return FreeWord::generator(n_, i);
        }
        if (c == '(') {
            ++pos_;
            FreeWord w = word(")");
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return w;
        }
        if (c == '[') {
            ++pos_;
            FreeWord a = word(",");
            if (!peek(',')) fail("expected ','");
            ++pos_;
            FreeWord b = word("]");
            if (!peek(']')) fail("expected ']'");
            ++pos_;
            return FreeWord::commutator(a, b);
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

}  // namespace

FreeWord FreeWord::parse(const std::string& text, int n) { return WordParser(text, n).parse(); }

GroupRingElement GroupRingElement::of(const FreeWord& w, const Integer& c) {
    GroupRingElement e(w.rank());
    e.add(w, c);
    return e;
}

void GroupRingElement::add(const FreeWord& w, const Integer& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    for (auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r(a.n_ ? a.n_ : b.n_);
    for (auto& [u, x] : a.terms_)
        for (auto& [v, y] : b.terms_) r.add(u * v, x * y);
    return r;
}

LaurentPoly GroupRingElement::abelianize() const {
    LaurentPoly p(n_);
    for (auto& [w, c] : terms_) p.add_term(w.abelianization(), Rational(c));
    return p;
}

std::vector<GroupRingElement> fox_gradient(const FreeWord& w) {
    int n = w.rank();
    std::vector<GroupRingElement> grad(n, GroupRingElement(n));
    FreeWord prefix(n);
    for (auto& [g, x] : w.letters()) {
        FreeWord next = prefix * FreeWord::generator(n, g, x);
        if (x > 0)
            grad[g - 1].add(prefix, 1);
        else
            grad[g - 1].add(next, -1);
        prefix = next;
    }
    return grad;
}

std::vector<LaurentPoly> abelianized_gradient(const FreeWord& w) {
    int n = w.rank();
    std::vector<LaurentPoly> grad(n, LaurentPoly(n));
    Exponent prefix(n, 0);
    for (auto& [g, x] : w.letters()) {
        if (x > 0) {
            grad[g - 1].add_term(prefix, 1);
            prefix[g - 1] += 1;
        } else {
            prefix[g - 1] -= 1;
            grad[g - 1].add_term(prefix, -1);
        }
    }
    return grad;
}

}  // namespace alexchen
