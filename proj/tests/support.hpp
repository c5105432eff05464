#pragma once

#include "alexchen/alexinv.hpp"
#include "alexchen/braidrep.hpp"
#include "alexchen/freefox.hpp"
#include "alexchen/geomingest.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#ifndef ALEXCHEN_FIXTURES
#error "ALEXCHEN_FIXTURES must point at the fixtures directory"
#endif

namespace alexchen::testing {

constexpr int kPropertyCases = 500;

inline std::string fixture_path(const std::string& name) { return std::string(ALEXCHEN_FIXTURES) + "/" + name; }

inline std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string read_fixture(const std::string& name) { return read_text(fixture_path(name)); }

inline ArrangementFile load_arrangement(const std::string& name) { return ArrangementFile::parse(read_fixture(name)); }

inline std::vector<ConjugatedTwist> parse_twists(const std::vector<std::string>& specs, int n) {
    std::vector<ConjugatedTwist> out;
    for (auto& s : specs) out.push_back(ConjugatedTwist::parse(s, n));
    return out;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline LaurentPoly random_laurent(std::mt19937_64& rng, int n, int terms = 3, int spread = 2) {
    LaurentPoly p(n);
    for (int t = 0; t < terms; ++t) {
        Exponent e(n);
        for (auto& x : e) x = uniform(rng, -spread, spread);
        p.add_term(e, uniform(rng, -3, 3));
    }
    return p;
}

inline FreeWord random_word(std::mt19937_64& rng, int n, int max_len) {
    std::vector<FreeWord::Letter> letters;
    int len = uniform(rng, 0, max_len);
    for (int i = 0; i < len; ++i) letters.push_back({uniform(rng, 1, n), uniform(rng, 0, 1) ? 1 : -1});
    return FreeWord(n, letters);
}

inline BraidWord random_pure_braid(std::mt19937_64& rng, int n, int max_len) {
    BraidWord b(n);
    int len = uniform(rng, 0, max_len);
    for (int k = 0; k < len; ++k) {
        int i = uniform(rng, 1, n - 1);
        int j = uniform(rng, i + 1, n);
        b = b * BraidWord::generator(n, i, j, uniform(rng, 0, 1) ? 1 : -1);
    }
    return b;
}

inline Subset random_subset(std::mt19937_64& rng, int n, int min_size, int max_size) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    std::shuffle(all.begin(), all.end(), rng);
    Subset s(all.begin(), all.begin() + uniform(rng, min_size, max_size));
    std::sort(s.begin(), s.end());
    return s;
}

inline ChainVec random_chain(std::mt19937_64& rng, int n, int k) {
    ChainVec v = zero_chain(n, k);
    for (auto& c : v)
        if (uniform(rng, 0, 2) == 0) c = random_laurent(rng, n, 2, 1);
    return v;
}

// Random family of subsets of [n] covering every pair exactly once.
inline std::vector<Subset> random_pair_partition(std::mt19937_64& rng, int n, int attempts = 6) {
    std::vector<std::vector<bool>> used(n + 1, std::vector<bool>(n + 1, false));
    std::vector<Subset> sets;
    for (int a = 0; a < attempts; ++a) {
        Subset V = random_subset(rng, n, 3, std::min(n, 4));
        bool free = true;
        for (std::size_t i = 0; i < V.size(); ++i)
            for (std::size_t j = i + 1; j < V.size(); ++j) free = free && !used[V[i]][V[j]];
        if (!free) continue;
        for (std::size_t i = 0; i < V.size(); ++i)
            for (std::size_t j = i + 1; j < V.size(); ++j) used[V[i]][V[j]] = true;
        sets.push_back(V);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!used[i][j]) sets.push_back({i, j});
    std::shuffle(sets.begin(), sets.end(), rng);
    return sets;
}

}  // namespace alexchen::testing

namespace alexchen::testing {

// Central arrangement in P^2 with multiple points: planes through pairs of a
// few random points, plus a couple of random planes. Proportional planes are
// dropped.
inline CentralArrangement3 random_central(std::mt19937_64& rng, int max_planes) {
    auto cross = [](const std::array<int, 3>& p, const std::array<int, 3>& q) {
        return std::array<int, 3>{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
    };
    auto normal = [](std::array<int, 3> v) {
        int g = std::gcd(std::gcd(std::abs(v[0]), std::abs(v[1])), std::abs(v[2]));
        if (g == 0) return v;
        for (auto& x : v) x /= g;
        for (int x : v)
            if (x != 0) {
                if (x < 0)
                    for (auto& y : v) y = -y;
                break;
            }
        return v;
    };
    std::vector<std::array<int, 3>> pts;
    int np = uniform(rng, 3, 4);
    for (int i = 0; i < np; ++i) pts.push_back({uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, 1, 2)});
    std::vector<std::array<int, 3>> planes;
    auto add = [&](std::array<int, 3> v) {
        v = normal(v);
        if (v == std::array<int, 3>{0, 0, 0}) return;
        if (std::find(planes.begin(), planes.end(), v) == planes.end()) planes.push_back(v);
    };
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) add(cross(pts[i], pts[j]));
    for (int extra = 0; extra < 6 && static_cast<int>(planes.size()) < max_planes; ++extra)
        add({uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)});
    if (static_cast<int>(planes.size()) > max_planes) planes.resize(max_planes);
    CentralArrangement3 c;
    for (auto& v : planes) c.planes.push_back({v[0], v[1], v[2]});
    return c;
}

}  // namespace alexchen::testing
