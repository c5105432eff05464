#pragma once

// Braid monodromy of a real line arrangement by lifting half twists of the
// wiring diagram to automorphisms of the free group, independent of the
// conjugating-word rule in monodromy_real.

#include "alexchen/braidrep.hpp"
#include "alexchen/geomingest.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace alexchen::testing {

using Images = std::vector<FreeWord>;
using SigmaWord = std::vector<std::pair<int, int>>;  // (i, ±1) for sigma_i^{±1}

inline Images identity_images(int n) {
    Images c;
    for (int i = 1; i <= n; ++i) c.push_back(FreeWord::generator(n, i));
    return c;
}

// sigma_i: t_i -> t_i t_{i+1} t_i^-1, t_{i+1} -> t_i, applied after `cur`.
inline void apply_sigma(Images& cur, int n, int i, int e) {
    Images img = identity_images(n);
    FreeWord a = FreeWord::generator(n, i), b = FreeWord::generator(n, i + 1);
    if (e > 0) {
        img[i - 1] = a * b * a.inverse();
        img[i] = a;
    } else {
        img[i - 1] = b;
        img[i] = b.inverse() * a * b;
    }
    for (auto& w : cur) {
        FreeWord next(n);
        for (auto& [g, x] : w.letters()) next = next * (x > 0 ? img[g - 1] : img[g - 1].inverse());
        w = next;
    }
}

inline Images act(int n, const SigmaWord& w) {
    Images c = identity_images(n);
    for (auto& [i, e] : w) apply_sigma(c, n, i, e);
    return c;
}

inline SigmaWord half_twist(int p, int q, int e) {
    SigmaWord w;
    for (int top = q - 1; top >= p; --top)
        for (int i = p; i <= top; ++i) w.push_back({i, e});
    return w;
}

inline SigmaWord inverse(SigmaWord w) {
    std::reverse(w.begin(), w.end());
    for (auto& x : w) x.second = -x.second;
    return w;
}

inline SigmaWord concat(SigmaWord a, const SigmaWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Automorphism of each vertex generator: beta_k Delta^2 beta_k^-1, with beta_k
// the negative half twists of the earlier vertices on their positions.
inline std::vector<Images> lifted_monodromy(const WiringDiagram& w) {
    int n = w.n;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[i] = i + 1;
    SigmaWord beta;
    std::vector<Images> out;
    for (auto& ev : w.events) {
        int p = n + 1, q = 0;
        for (int i = 0; i < n; ++i)
            if (std::binary_search(ev.V.begin(), ev.V.end(), pos[i])) {
                p = std::min(p, i + 1);
                q = std::max(q, i + 1);
            }
        if (q - p + 1 != static_cast<int>(ev.V.size())) throw std::logic_error("vertex wires are not adjacent");
        SigmaWord full = concat(half_twist(p, q, 1), half_twist(p, q, 1));
        out.push_back(act(n, concat(concat(beta, full), inverse(beta))));
        beta = concat(beta, half_twist(p, q, -1));
        std::reverse(pos.begin() + p - 1, pos.begin() + q);
    }
    return out;
}

inline Images twist_images(const ConjugatedTwist& a, int n) {
    return artin_images(a.delta.inverse() * twist_word(a.V, n) * a.delta);
}

}  // namespace alexchen::testing
