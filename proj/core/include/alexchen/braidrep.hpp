#pragma once

#include "alexchen/exactring.hpp"
#include "alexchen/freefox.hpp"
#include "alexchen/koszul.hpp"

#include <string>
#include <vector>

namespace alexchen {

// Word in the pure braid generators A_{i,j}, i < j.
class BraidWord {
public:
    struct Letter {
        int i, j, exp;
        bool operator==(const Letter& o) const { return i == o.i && j == o.j && exp == o.exp; }
    };

    BraidWord() = default;
    explicit BraidWord(int n) : n_(n) {}

    static BraidWord generator(int n, int i, int j, int exp = 1);
    // Syntax: "A[1,2] A[1,3]^-1", "1" or "" for the identity.
    static BraidWord parse(const std::string& text, int n);

    int strands() const { return n_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }

    BraidWord inverse() const;
    friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
    bool operator==(const BraidWord& o) const { return n_ == o.n_ && letters_ == o.letters_; }
    std::string str() const;

private:
    int n_ = 0;
    std::vector<Letter> letters_;
    void push(Letter l);
};

// Images z_1..z_n of a basis-conjugating automorphism t_i -> z_i t_i z_i^-1.
using ConjTuple = std::vector<FreeWord>;

// A_V^delta.
struct ConjugatedTwist {
    Subset V;
    BraidWord delta;

    // Syntax: "T{1,3,6}" or "T{1,3,6} ^ (A[3,4] A[3,6])".
    static ConjugatedTwist parse(const std::string& text, int n);
    std::string str() const;
};

// Monodromy file: "strands <n>" then one ConjugatedTwist per line; '#' comments.
struct MonodromyFile {
    int n = 0;
    std::vector<ConjugatedTwist> generators;

    static MonodromyFile parse(const std::string& text);
    std::string to_text() const;
};

BraidWord twist_word(const Subset& V, int n);
ConjTuple twist_tuple(const Subset& V, int n);

LMatrix gassner_conj(const ConjTuple& z);
// Product of generator matrices in word order: Θ(αβ) = Θ(α)Θ(β).
LMatrix gassner_word(const BraidWord& b);
// Θ(A_V^δ) = Θ(δ)^-1 Θ(A_V) Θ(δ).
LMatrix gassner_twist(const ConjugatedTwist& a, int n);

// Images of t_1..t_n under the automorphism of a braid word, in the convention
// matching gassner_word: its rows are the abelianized gradients of the images.
std::vector<FreeWord> artin_images(const BraidWord& b);
LMatrix jacobian_ab(const std::vector<FreeWord>& images);

// Entry (J, J') is the minor with rows J and columns J'.
LMatrix exterior_power(const LMatrix& m, int k);
LaurentPoly determinant(const LMatrix& m);

LMatrix mu_matrix(const Subset& V, int n);
LMatrix mu_matrix_inverse(const Subset& V, int n);

}  // namespace alexchen
