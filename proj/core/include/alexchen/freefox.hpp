#pragma once

#include "alexchen/exactring.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace alexchen {

// Freely reduced word in t_1..t_n. Letters are (generator, +1 or -1).
class FreeWord {
public:
    using Letter = std::pair<int, int>;

    FreeWord() = default;
    explicit FreeWord(int n) : n_(n) {}
    FreeWord(int n, const std::vector<Letter>& letters);

    static FreeWord generator(int n, int i, int exp = 1);
    // Product t_{v1} t_{v2} ... over the listed indices (in the order given).
    static FreeWord product_of(int n, const std::vector<int>& indices);
    static FreeWord commutator(const FreeWord& a, const FreeWord& b);
    static FreeWord parse(const std::string& text, int n);

    int rank() const { return n_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    FreeWord inverse() const;
    friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
    bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
    bool operator<(const FreeWord& o) const { return letters_ < o.letters_; }

    Exponent abelianization() const;
    LaurentPoly abelian_image() const;
    std::string str() const;

private:
    int n_ = 0;
    std::vector<Letter> letters_;
    void push(const Letter& l);
};

// Element of the integral group ring of F_n.
class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(int n) : n_(n) {}
    static GroupRingElement of(const FreeWord& w, const Integer& c = 1);

    void add(const FreeWord& w, const Integer& c);
    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }
    const std::map<FreeWord, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPoly abelianize() const;

private:
    int n_ = 0;
    std::map<FreeWord, Integer> terms_;
};

// Fox gradient before abelianization (used as a test reference).
std::vector<GroupRingElement> fox_gradient(const FreeWord& w);
// Abelianized Fox gradient, one left-to-right pass.
std::vector<LaurentPoly> abelianized_gradient(const FreeWord& w);

}  // namespace alexchen
