#pragma once

// The differential complex up to degree five over either coefficient
// backend.  A form is stored canonically: strictly increasing wedge words
// over the five basis one-forms (bitmask keys) with the coefficient on the
// LEFT.  All sign flips from sorting are folded into coefficients.
//
// Moving a coefficient through a wedge word uses the lambda matrix
// (e^a f = (lambda^a_b |> f) e^b); the opposite convention uses
// sigma^a_b = S(lambda^a_b).  Orientation is fixed by eps_{01234} = +1.

#include "kforms/operators.hpp"
#include "kforms/poly.hpp"
#include "kforms/wave.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace kforms {

// --- basis word utilities (masks over letters 0..4) -------------------------

constexpr uint8_t kVolMask = 0x1f;

int mask_degree(uint8_t mask);
std::vector<int> mask_letters(uint8_t mask);
// sign of sorting the concatenation (seq, letters(mask)); 0 on duplicates
int merge_sign(const std::vector<int>& seq, uint8_t mask, uint8_t& out_mask);
// sign of e^a wedged onto the left of a sorted word
int prepend_sign(int a, uint8_t mask);
// sign of e^a appended on the right of a sorted word
int append_sign(int a, uint8_t mask);

// Hodge star on basis words.  Degrees 0..2 follow the displayed epsilon
// rules; degrees 3..5 are the inverse map fixed by the involutivity
// *(*(w)) = (-1)^{n(5-n)} w, which in five dimensions is the identity sign.
struct HodgeImage { uint8_t mask; int sign; };
HodgeImage hodge_basis(uint8_t mask);

// Lorentz action on basis one-forms (boosts and rotations mirror their
// action on coordinates; translations annihilate basis forms).
struct BasisImage { int letter; ExactScalar coeff; };
std::vector<BasisImage> word_on_basis(const OpWord& w, int a);

// --- coefficient algebra adapters -------------------------------------------

struct ExactAlgebra {
    using Elem = PolyElement;
    Elem zero() const { return PolyElement::zero(); }
    Elem one() const { return PolyElement::unit(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return nc_mul(a, b); }
    Elem dagger(const Elem& a) const { return involution(a); }
    Elem act(const OperatorElement& h, const Elem& a) const { return kforms::act(h, a); }
    Elem scale(const ExactScalar& c, const Elem& a) const { return c * a; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
};

struct WaveFormAlgebra {
    WaveAlgebra alg;
    explicit WaveFormAlgebra(double kappa) : alg(kappa) {}

    using Elem = WaveElement;
    Elem zero() const { return WaveElement(); }
    Elem one() const { return alg.unit(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return alg.mul(a, b); }
    Elem dagger(const Elem& a) const { return alg.dagger(a); }
    Elem act(const OperatorElement& h, const Elem& a) const { return alg.act(h, a); }
    Elem scale(const ExactScalar& c, const Elem& a) const {
        return c.eval(alg.kappa()) * a;
    }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
};

// --- graded element ----------------------------------------------------------

template <class A>
struct FormT {
    using Elem = typename A::Elem;
    std::map<uint8_t, Elem> terms;

    bool is_zero() const { return terms.empty(); }

    void add(const A& alg, uint8_t mask, const Elem& c) {
        if (alg.is_zero(c)) return;
        auto it = terms.find(mask);
        if (it == terms.end()) {
            terms[mask] = c;
        } else {
            it->second = alg.add(it->second, c);
            if (alg.is_zero(it->second)) terms.erase(it);
        }
    }

    Elem coeff(const A& alg, uint8_t mask) const {
        auto it = terms.find(mask);
        return it == terms.end() ? alg.zero() : it->second;
    }

    // -1 for the zero form, otherwise the common degree; mixed degrees are
    // reported as -2.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms) {
            int n = mask_degree(m);
            if (d == -1) d = n;
            else if (d != n) return -2;
        }
        return d;
    }
};

using ExactForm = FormT<ExactAlgebra>;
using WaveForm = FormT<WaveFormAlgebra>;

template <class A>
FormT<A> form_scalar(const A& alg, const typename A::Elem& f) {
    FormT<A> out;
    out.add(alg, 0, f);
    return out;
}

template <class A>
FormT<A> basis_form(const A& alg, uint8_t mask) {
    FormT<A> out;
    out.add(alg, mask, alg.one());
    return out;
}

template <class A>
FormT<A> form_add(const A& alg, const FormT<A>& x, const FormT<A>& y) {
    FormT<A> out = x;
    for (const auto& [m, c] : y.terms) out.add(alg, m, c);
    return out;
}

template <class A>
FormT<A> form_sub(const A& alg, const FormT<A>& x, const FormT<A>& y) {
    FormT<A> out = x;
    for (const auto& [m, c] : y.terms) out.add(alg, m, alg.neg(c));
    return out;
}

template <class A>
FormT<A> form_scale(const A& alg, const ExactScalar& c, const FormT<A>& x) {
    FormT<A> out;
    for (const auto& [m, f] : x.terms) out.add(alg, m, alg.scale(c, f));
    return out;
}

// --- coefficient pushes ------------------------------------------------------

// e^{word} f = sum (Lambda |> f) e^{seq}: moves a right coefficient to the
// left through a wedge word, one lambda action per letter.
template <class A>
void push_left_word(const A& alg, const std::vector<int>& word,
                    const typename A::Elem& f,
                    std::vector<std::pair<std::vector<int>, typename A::Elem>>& out) {
    if (word.empty()) {
        out.push_back({{}, f});
        return;
    }
    std::vector<int> prefix(word.begin(), word.end() - 1);
    int last = word.back();
    for (int b = 0; b < 5; ++b) {
        auto g = alg.act(lambda_entry(last, b), f);
        if (alg.is_zero(g)) continue;
        std::vector<std::pair<std::vector<int>, typename A::Elem>> sub;
        push_left_word(alg, prefix, g, sub);
        for (auto& [seq, u] : sub) {
            seq.push_back(b);
            out.push_back({std::move(seq), std::move(u)});
        }
    }
}

// f e^{word} = sum e^{seq} (Sigma |> f): the opposite (right coefficient)
// convention.
template <class A>
void push_right_word(const A& alg, const std::vector<int>& word,
                     const typename A::Elem& f,
                     std::vector<std::pair<std::vector<int>, typename A::Elem>>& out) {
    if (word.empty()) {
        out.push_back({{}, f});
        return;
    }
    std::vector<int> rest(word.begin() + 1, word.end());
    int first = word.front();
    for (int b = 0; b < 5; ++b) {
        auto g = alg.act(sigma_entry(first, b), f);
        if (alg.is_zero(g)) continue;
        std::vector<std::pair<std::vector<int>, typename A::Elem>> sub;
        push_right_word(alg, rest, g, sub);
        for (auto& [seq, u] : sub) {
            std::vector<int> s;
            s.reserve(seq.size() + 1);
            s.push_back(b);
            s.insert(s.end(), seq.begin(), seq.end());
            out.push_back({std::move(s), std::move(u)});
        }
    }
}

// --- operations --------------------------------------------------------------

template <class A>
FormT<A> wedge(const A& alg, const FormT<A>& x, const FormT<A>& y) {
    FormT<A> out;
    for (const auto& [wm, f] : x.terms) {
        auto wl = mask_letters(wm);
        for (const auto& [vm, g] : y.terms) {
            if (mask_degree(wm) + mask_degree(vm) > 5) continue;
            std::vector<std::pair<std::vector<int>, typename A::Elem>> pushed;
            push_left_word(alg, wl, g, pushed);
            for (const auto& [seq, h] : pushed) {
                uint8_t mask;
                int s = merge_sign(seq, vm, mask);
                if (!s) continue;
                auto c = alg.mul(f, h);
                if (s < 0) c = alg.neg(c);
                out.add(alg, mask, c);
            }
        }
    }
    return out;
}

template <class A>
FormT<A> differential(const A& alg, const FormT<A>& x) {
    static const std::array<OperatorElement, 5> ixi = [] {
        std::array<OperatorElement, 5> v;
        for (int a = 0; a < 5; ++a) v[a] = ExactScalar::i() * xi(a);
        return v;
    }();
    FormT<A> out;
    for (const auto& [m, f] : x.terms) {
        for (int a = 0; a < 5; ++a) {
            if (m & (1u << a)) continue;
            auto g = alg.act(ixi[a], f);
            if (alg.is_zero(g)) continue;
            if (prepend_sign(a, m) < 0) g = alg.neg(g);
            out.add(alg, static_cast<uint8_t>(m | (1u << a)), g);
        }
    }
    return out;
}

template <class A>
FormT<A> hodge(const A& alg, const FormT<A>& x) {
    FormT<A> out;
    for (const auto& [m, f] : x.terms) {
        HodgeImage h = hodge_basis(m);
        auto c = (h.sign < 0) ? alg.neg(f) : f;
        out.add(alg, h.mask, c);
    }
    return out;
}

template <class A>
FormT<A> form_dagger(const A& alg, const FormT<A>& x) {
    FormT<A> out;
    for (const auto& [m, f] : x.terms) {
        int n = mask_degree(m);
        bool flip = ((n * (n - 1) / 2) % 2) != 0;  // (-1)^{n(n-1)/2}
        std::vector<std::pair<std::vector<int>, typename A::Elem>> pushed;
        push_left_word(alg, mask_letters(m), alg.dagger(f), pushed);
        for (const auto& [seq, h] : pushed) {
            uint8_t mask;
            int s = merge_sign(seq, 0, mask);
            if (!s) continue;
            auto c = ((s < 0) != flip) ? alg.neg(h) : h;
            out.add(alg, mask, c);
        }
    }
    return out;
}

// Full covariant action of a symmetry generator: the coproduct legs act on
// the coefficient and on each basis leg.  For momentum-sector elements this
// reduces to the coefficientwise Lie derivative of the calculus.
template <class A>
FormT<A> lie_term_(const A& alg, const OperatorElement& h,
                   const typename A::Elem& f, const std::vector<int>& letters) {
    FormT<A> out;
    if (letters.empty()) {
        out.add(alg, 0, alg.act(h, f));
        return out;
    }
    std::vector<int> prefix(letters.begin(), letters.end() - 1);
    int last = letters.back();
    TensorOperator dh = coproduct(h);
    for (const auto& [key, c] : dh.terms()) {
        auto imgs = word_on_basis(key.second, last);
        if (imgs.empty()) continue;
        OperatorElement h1;
        h1.add(key.first, c);
        FormT<A> sub = lie_term_(alg, h1, f, prefix);
        for (const auto& [pm, g] : sub.terms) {
            for (const auto& img : imgs) {
                if (pm & (1u << img.letter)) continue;
                int s = append_sign(img.letter, pm);
                auto u = alg.scale(img.coeff, g);
                if (s < 0) u = alg.neg(u);
                out.add(alg, static_cast<uint8_t>(pm | (1u << img.letter)), u);
            }
        }
    }
    return out;
}

template <class A>
FormT<A> lie(const A& alg, const OperatorElement& h, const FormT<A>& x) {
    FormT<A> out;
    for (const auto& [m, f] : x.terms)
        out = form_add(alg, out, lie_term_(alg, h, f, mask_letters(m)));
    return out;
}

// Inner derivative along the dual basis vector theta_a.  In the canonical
// left storage the right-convention pairing collapses to one sigma action
// per surviving slot:
//   i_a(f e^{b1..bn}) = sum_j (-1)^{j-1} (sigma^{b_j}_a |> f) e^{..without b_j..}
template <class A>
FormT<A> inner(const A& alg, int a, const FormT<A>& x) {
    FormT<A> out;
    for (const auto& [m, f] : x.terms) {
        auto letters = mask_letters(m);
        for (size_t j = 0; j < letters.size(); ++j) {
            auto g = alg.act(sigma_entry(letters[j], a), f);
            if (alg.is_zero(g)) continue;
            if (j % 2) g = alg.neg(g);
            out.add(alg, static_cast<uint8_t>(m & ~(1u << letters[j])), g);
        }
    }
    return out;
}

template <class A>
typename A::Elem metric(const A& alg, const FormT<A>& x, const FormT<A>& y) {
    if (x.degree() > 1 || y.degree() > 1 || x.degree() == -2 || y.degree() == -2)
        throw std::invalid_argument("metric expects one-forms");
    FormT<A> h = hodge(alg, wedge(alg, form_dagger(alg, x), hodge(alg, y)));
    return h.coeff(alg, 0);
}

// x^mu omega - omega x^mu, expanded termwise over wedge letters (exact
// backend only: coordinates have no plane-wave representation).
ExactForm coord_commutator(const ExactAlgebra& alg, int mu, const ExactForm& x);

// Components in the opposite (right coefficient) convention, used by the
// energy-momentum extraction: omega = sum e^{w} comp_w.
template <class A>
std::map<uint8_t, typename A::Elem> right_components(const A& alg, const FormT<A>& x) {
    std::map<uint8_t, typename A::Elem> out;
    for (const auto& [m, f] : x.terms) {
        std::vector<std::pair<std::vector<int>, typename A::Elem>> pushed;
        push_right_word(alg, mask_letters(m), f, pushed);
        for (const auto& [seq, h] : pushed) {
            uint8_t mask;
            int s = merge_sign(seq, 0, mask);
            if (!s) continue;
            auto c = (s < 0) ? alg.neg(h) : h;
            auto it = out.find(mask);
            if (it == out.end()) {
                if (!alg.is_zero(c)) out[mask] = c;
            } else {
                it->second = alg.add(it->second, c);
                if (alg.is_zero(it->second)) out.erase(it);
            }
        }
    }
    return out;
}

} // namespace kforms
