#include "kforms/forms.hpp"

#include <bit>

namespace kforms {

int mask_degree(uint8_t mask) { return std::popcount(static_cast<unsigned>(mask & kVolMask)); }

std::vector<int> mask_letters(uint8_t mask) {
    std::vector<int> out;
    for (int a = 0; a < 5; ++a)
        if (mask & (1u << a)) out.push_back(a);
    return out;
}

int merge_sign(const std::vector<int>& seq, uint8_t mask, uint8_t& out_mask) {
    std::vector<int> all = seq;
    for (int a = 0; a < 5; ++a)
        if (mask & (1u << a)) all.push_back(a);
    long inv = 0;
    uint8_t m = 0;
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = i + 1; j < all.size(); ++j) {
            if (all[i] == all[j]) return 0;
            if (all[i] > all[j]) ++inv;
        }
        m |= static_cast<uint8_t>(1u << all[i]);
    }
    out_mask = m;
    return (inv % 2 == 0) ? 1 : -1;
}

int prepend_sign(int a, uint8_t mask) {
    int below = std::popcount(static_cast<unsigned>(mask & ((1u << a) - 1)));
    return (below % 2 == 0) ? 1 : -1;
}

int append_sign(int a, uint8_t mask) {
    int above = std::popcount(static_cast<unsigned>(mask & kVolMask & ~((1u << (a + 1)) - 1)));
    return (above % 2 == 0) ? 1 : -1;
}

namespace {

int perm_sign(const std::vector<int>& v) {
    long inv = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j]) return 0;
            if (v[i] > v[j]) ++inv;
        }
    return (inv % 2 == 0) ? 1 : -1;
}

std::array<HodgeImage, 32> build_hodge_table() {
    std::array<HodgeImage, 32> t{};
    // displayed rules for degrees 0..2: *(e^w) = (prod eta) eps_{w, wbar} e^{wbar}
    for (int m = 0; m < 32; ++m) {
        if (mask_degree(static_cast<uint8_t>(m)) > 2) continue;
        uint8_t comp = static_cast<uint8_t>(kVolMask & ~m);
        std::vector<int> order = mask_letters(static_cast<uint8_t>(m));
        int sign = 1;
        for (int a : order) sign *= eta5(a);
        auto rest = mask_letters(comp);
        order.insert(order.end(), rest.begin(), rest.end());
        sign *= perm_sign(order);
        t[m] = {comp, sign};
    }
    // degrees 3..5: inverse map with the (+1) involutivity sign of d = 5
    for (int m = 0; m < 32; ++m) {
        if (mask_degree(static_cast<uint8_t>(m)) <= 2) continue;
        uint8_t comp = static_cast<uint8_t>(kVolMask & ~m);
        t[m] = {comp, t[comp].sign};
    }
    return t;
}

} // namespace

HodgeImage hodge_basis(uint8_t mask) {
    static const auto table = build_hodge_table();
    return table[mask & kVolMask];
}

namespace {

// Single-letter action on a basis one-form (boosts and rotations act like on
// coordinates, translations give zero, E powers act trivially).
std::vector<BasisImage> letter_on_basis(const Letter& l, int a) {
    switch (l.kind) {
        case Letter::P:
        case Letter::P0:
            return {};
        case Letter::E:
            return {{a, ExactScalar::one()}};
        case Letter::N: {
            // same i factors as the coordinate action (d-covariance)
            if (a == 0) return {{l.idx, ExactScalar::i()}};
            if (a == l.idx) return {{0, ExactScalar::i()}};
            return {};
        }
        case Letter::R: {
            if (a == 0 || a == 4) return {};
            std::vector<BasisImage> out;
            for (int k = 1; k <= 3; ++k) {
                int e = epsilon3(l.idx, a, k);
                if (e) out.push_back({k, ExactScalar(e) * ExactScalar::i()});
            }
            return out;
        }
    }
    return {};
}

} // namespace

std::vector<BasisImage> word_on_basis(const OpWord& w, int a) {
    std::vector<BasisImage> cur = {{a, ExactScalar::one()}};
    // letters act right-to-left; canonical order within the word
    std::vector<Letter> ls;
    static const Letter::Kind kinds[3] = {Letter::R, Letter::N, Letter::P};
    for (int g = 0; g < 3; ++g)
        for (int j = 1; j <= 3; ++j)
            for (int c = 0; c < w.exp[3 * g + j - 1]; ++c)
                ls.push_back({kinds[g], static_cast<uint8_t>(j), 0});
    for (int c = 0; c < w.exp[9]; ++c) ls.push_back(Letter::p0());
    if (w.epow) ls.push_back(Letter::e(w.epow));

    for (auto it = ls.rbegin(); it != ls.rend() && !cur.empty(); ++it) {
        std::map<int, ExactScalar> next;
        for (const auto& img : cur)
            for (const auto& nx : letter_on_basis(*it, img.letter)) {
                auto at = next.find(nx.letter);
                ExactScalar c = img.coeff * nx.coeff;
                if (at == next.end()) next[nx.letter] = c;
                else at->second = at->second + c;
            }
        cur.clear();
        for (const auto& [b, c] : next)
            if (!c.is_zero()) cur.push_back({b, c});
    }
    return cur;
}

ExactForm coord_commutator(const ExactAlgebra& alg, int mu, const ExactForm& x) {
    PolyElement xc = PolyElement::x(mu);
    ExactForm out;
    for (const auto& [m, f] : x.terms) {
        // left product x^mu (f e^w)
        out.add(alg, m, nc_mul(xc, f));
        // right product (f e^w) x^mu = f (e^w x^mu)
        std::vector<std::pair<std::vector<int>, PolyElement>> pushed;
        push_left_word(alg, mask_letters(m), xc, pushed);
        for (const auto& [seq, h] : pushed) {
            uint8_t mask;
            int s = merge_sign(seq, 0, mask);
            if (!s) continue;
            PolyElement c = nc_mul(f, h);
            if (s > 0) c = -c;  // subtracted term
            out.add(alg, mask, c);
        }
    }
    return out;
}

} // namespace kforms
