#include "kforms/poly.hpp"

#include <sstream>

namespace kforms {

PolyElement PolyElement::scalar(const ExactScalar& c) {
    PolyElement f;
    if (!c.is_zero()) f.terms_[Mono{}] = c;
    return f;
}

PolyElement PolyElement::x(int mu) {
    PolyElement f;
    Mono m{};
    if (mu == 0) m[3] = 1;
    else m[mu - 1] = 1;
    f.terms_[m] = ExactScalar::one();
    return f;
}

void PolyElement::add(const Mono& m, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyElement operator+(const PolyElement& a, const PolyElement& b) {
    PolyElement r = a;
    for (const auto& [m, c] : b.terms_) r.add(m, c);
    return r;
}

PolyElement operator-(const PolyElement& a, const PolyElement& b) {
    PolyElement r = a;
    for (const auto& [m, c] : b.terms_) r.add(m, -c);
    return r;
}

PolyElement PolyElement::operator-() const {
    PolyElement r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

PolyElement operator*(const ExactScalar& c, const PolyElement& f) {
    PolyElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, d] : f.terms()) r.add(m, c * d);
    return r;
}

namespace {

// x0^a shifted: expands (x0 + s/kappa)^a onto x0 powers, s an exact scalar
// factor carrying the imaginary unit.
void add_shifted_time_power(PolyElement& out, const Mono& spatial, int a,
                            const ExactScalar& coeff, const ExactScalar& shift) {
    // binomial expansion of (x0 + shift)^a
    Rational binom = 1;
    ExactScalar sp = ExactScalar::one();
    for (int t = a; t >= 0; --t) {
        Mono m = spatial;
        m[3] = static_cast<uint16_t>(t);
        out.add(m, coeff * ExactScalar(GaussianRational(binom)) * sp);
        if (t > 0) {
            binom = binom * t / (a - t + 1);
            sp = sp * shift;
        }
    }
}

} // namespace

PolyElement nc_mul(const PolyElement& f, const PolyElement& g) {
    PolyElement out;
    for (const auto& [ma, ca] : f.terms()) {
        for (const auto& [mb, cb] : g.terms()) {
            // x^A x0^a  *  x^B x0^b  =  x^{A+B} (x0 - i|B|/kappa)^a x0^b
            long spatial_b = mb[0] + mb[1] + mb[2];
            Mono spatial{static_cast<uint16_t>(ma[0] + mb[0]),
                         static_cast<uint16_t>(ma[1] + mb[1]),
                         static_cast<uint16_t>(ma[2] + mb[2]), 0};
            int a = ma[3];
            ExactScalar shift =
                ExactScalar(-spatial_b) * ExactScalar::i() * ExactScalar::kappa_inv_pow(1);
            // (x0 + shift)^a x0^b : shift spatial exponents then multiply x0^b
            PolyElement tmp;
            add_shifted_time_power(tmp, spatial, a, ca * cb, shift);
            for (const auto& [m, c] : tmp.terms()) {
                Mono m2 = m;
                m2[3] = static_cast<uint16_t>(m2[3] + mb[3]);
                out.add(m2, c);
            }
        }
    }
    return out;
}

PolyElement involution(const PolyElement& f) {
    PolyElement out;
    for (const auto& [m, c] : f.terms()) {
        // (x^A x0^a)^dag = x0^a x^A = x^A (x0 - i|A|/kappa)^a
        long spatial = m[0] + m[1] + m[2];
        Mono sp{m[0], m[1], m[2], 0};
        ExactScalar shift =
            ExactScalar(-spatial) * ExactScalar::i() * ExactScalar::kappa_inv_pow(1);
        add_shifted_time_power(out, sp, m[3], c.conj(), shift);
    }
    return out;
}

namespace {

// Action of a single letter on a single coordinate; results are at most
// two-term polynomials.
PolyElement letter_on_coord(const Letter& l, int mu) {
    const ExactScalar I = ExactScalar::i();
    switch (l.kind) {
        case Letter::P0:
            return mu == 0 ? PolyElement::scalar(I) : PolyElement::zero();
        case Letter::P:
            return (mu == l.idx) ? PolyElement::scalar(-I) : PolyElement::zero();
        case Letter::R: {
            // i eps_{jkl}: the factor i is forced by [R_j, P_k] = i eps_{jkl} P_l
            // together with P_j |> x_k = -i delta_{jk}
            if (mu == 0) return PolyElement::zero();
            PolyElement out;
            for (int k = 1; k <= 3; ++k) {
                int e = epsilon3(l.idx, mu, k);
                if (e) out = out + ExactScalar(e) * I * PolyElement::x(k);
            }
            return out;
        }
        case Letter::N:
            // i x_j / i delta_{jk} x_0; forced by the deformed [N_j, P_k] block
            if (mu == 0) return ExactScalar::i() * PolyElement::x(l.idx);
            return (mu == l.idx) ? ExactScalar::i() * PolyElement::x(0) : PolyElement::zero();
        case Letter::E: {
            if (mu == 0)
                return PolyElement::x(0) +
                       PolyElement::scalar(ExactScalar(l.epow) * I *
                                           ExactScalar::kappa_inv_pow(1));
            return PolyElement::x(mu);
        }
    }
    return PolyElement::zero();
}

PolyElement act_letter(const Letter& l, const PolyElement& f);

// Peels the leftmost coordinate of the monomial and recurses through the
// letter's coproduct legs.
PolyElement act_letter_mono(const Letter& l, const Mono& m) {
    bool unit = !m[0] && !m[1] && !m[2] && !m[3];
    if (unit) {
        // counit: 1 for E powers, 0 otherwise
        if (l.kind == Letter::E) return PolyElement::unit();
        return PolyElement::zero();
    }
    int mu;
    Mono rest = m;
    if (m[0]) { mu = 1; rest[0]--; }
    else if (m[1]) { mu = 2; rest[1]--; }
    else if (m[2]) { mu = 3; rest[2]--; }
    else { mu = 0; rest[3]--; }

    PolyElement coord = PolyElement::x(mu);
    PolyElement restp;
    restp.add(rest, ExactScalar::one());

    switch (l.kind) {
        case Letter::P0:
        case Letter::R: {
            // primitive: L(x) rest + x L(rest)
            return nc_mul(letter_on_coord(l, mu), restp) +
                   nc_mul(coord, act_letter_mono(l, rest));
        }
        case Letter::P: {
            return nc_mul(letter_on_coord(l, mu), restp) +
                   nc_mul(act_letter(Letter::e(-1), coord), act_letter_mono(l, rest));
        }
        case Letter::E: {
            return nc_mul(letter_on_coord(l, mu), act_letter_mono(l, rest));
        }
        case Letter::N: {
            PolyElement out = nc_mul(letter_on_coord(l, mu), restp);
            out = out + nc_mul(act_letter(Letter::e(-1), coord), act_letter_mono(l, rest));
            const ExactScalar kinv = ExactScalar::kappa_inv_pow(1);
            for (int a = 1; a <= 3; ++a)
                for (int b = 1; b <= 3; ++b) {
                    int e = epsilon3(l.idx, a, b);
                    if (!e) continue;
                    PolyElement pa = letter_on_coord(Letter::p(a), mu);
                    if (pa.is_zero()) continue;
                    out = out + ExactScalar(e) * kinv *
                                    nc_mul(pa, act_letter_mono(Letter::r(b), rest));
                }
            return out;
        }
    }
    return PolyElement::zero();
}

PolyElement act_letter(const Letter& l, const PolyElement& f) {
    PolyElement out;
    for (const auto& [m, c] : f.terms()) out = out + c * act_letter_mono(l, m);
    return out;
}

} // namespace

PolyElement act(const OperatorElement& h, const PolyElement& f) {
    PolyElement out;
    for (const auto& [w, c] : h.terms()) {
        PolyElement cur = f;
        std::vector<Letter> ls;
        {
            // rebuild the letter sequence of the normal word
            OperatorElement tmp;
            tmp.add(w, ExactScalar::one());
            // letters in canonical order
            for (int g = 0; g < 3; ++g)
                for (int j = 1; j <= 3; ++j)
                    for (int k = 0; k < w.exp[3 * g + j - 1]; ++k)
                        ls.push_back({static_cast<Letter::Kind>(g), static_cast<uint8_t>(j), 0});
            for (int k = 0; k < w.exp[9]; ++k) ls.push_back(Letter::p0());
            if (w.epow) ls.push_back(Letter::e(w.epow));
        }
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
            cur = act_letter(*it, cur);
            if (cur.is_zero()) break;
        }
        out = out + c * cur;
    }
    return out;
}

std::string PolyElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool unit = !m[0] && !m[1] && !m[2] && !m[3];
        os << c.str();
        if (!unit) {
            for (int j = 0; j < 3; ++j) {
                if (m[j] == 1) os << "*x" << (j + 1);
                else if (m[j] > 1) os << "*x" << (j + 1) << "^" << m[j];
            }
            if (m[3] == 1) os << "*x0";
            else if (m[3] > 1) os << "*x0^" << m[3];
        }
    }
    return os.str();
}

} // namespace kforms
