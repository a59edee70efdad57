#include "kforms/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kforms {

int epsilon3(int j, int k, int l) {
    if (j == k || k == l || j == l) return 0;
    // parity of the permutation (j,k,l) of (1,2,3)
    int inv = (j > k) + (j > l) + (k > l);
    return (inv % 2 == 0) ? 1 : -1;
}

namespace {

std::vector<Letter> word_letters(const OpWord& w) {
    std::vector<Letter> out;
    static const Letter::Kind kinds[3] = {Letter::R, Letter::N, Letter::P};
    for (int g = 0; g < 3; ++g)
        for (int j = 1; j <= 3; ++j)
            for (int c = 0; c < w.exp[3 * g + j - 1]; ++c)
                out.push_back({kinds[g], static_cast<uint8_t>(j), 0});
    for (int c = 0; c < w.exp[9]; ++c) out.push_back(Letter::p0());
    if (w.epow != 0) out.push_back(Letter::e(w.epow));
    return out;
}

OpWord letters_word(const std::vector<Letter>& ls) {
    OpWord w;
    for (const auto& l : ls) {
        switch (l.kind) {
            case Letter::R: w.exp[l.idx - 1]++; break;
            case Letter::N: w.exp[3 + l.idx - 1]++; break;
            case Letter::P: w.exp[6 + l.idx - 1]++; break;
            case Letter::P0: w.exp[9]++; break;
            case Letter::E: w.epow += l.epow; break;
        }
    }
    return w;
}

struct Pending {
    std::vector<Letter> word;
    ExactScalar coeff;
};

// kappa/2 (1 - E^{-2}) + 1/(2 kappa) |P|^2, the [N_j, P_k] diagonal block.
void append_np_diag(std::vector<Pending>& out, const std::vector<Letter>& head,
                    const std::vector<Letter>& tail, const ExactScalar& c) {
    const ExactScalar ihalf_kappa = ExactScalar::i() * ExactScalar::term({Rational(1, 2)}, -1);
    const ExactScalar ihalf_kinv = ExactScalar::i() * ExactScalar::term({Rational(1, 2)}, 1);
    auto emit = [&](std::vector<Letter> mid, const ExactScalar& f) {
        std::vector<Letter> w = head;
        w.insert(w.end(), mid.begin(), mid.end());
        w.insert(w.end(), tail.begin(), tail.end());
        out.push_back({std::move(w), c * f});
    };
    emit({}, ihalf_kappa);                    // i kappa/2
    emit({Letter::e(-2)}, -ihalf_kappa);      // -i kappa/2 E^{-2}
    for (int l = 1; l <= 3; ++l)              // i/(2 kappa) P_l P_l
        emit({Letter::p(l), Letter::p(l)}, ihalf_kinv);
}

} // namespace

OperatorElement OperatorElement::unit() {
    OperatorElement x;
    x.terms_[OpWord{}] = ExactScalar::one();
    return x;
}

OperatorElement OperatorElement::scalar(const ExactScalar& c) {
    OperatorElement x;
    if (!c.is_zero()) x.terms_[OpWord{}] = c;
    return x;
}

OperatorElement OperatorElement::p(int j) {
    OperatorElement x;
    OpWord w;
    w.exp[6 + j - 1] = 1;
    x.terms_[w] = ExactScalar::one();
    return x;
}

OperatorElement OperatorElement::p0() {
    OperatorElement x;
    OpWord w;
    w.exp[9] = 1;
    x.terms_[w] = ExactScalar::one();
    return x;
}

OperatorElement OperatorElement::e(int m) {
    OperatorElement x;
    OpWord w;
    w.epow = m;
    x.terms_[w] = ExactScalar::one();
    return x;
}

OperatorElement OperatorElement::n(int j) {
    OperatorElement x;
    OpWord w;
    w.exp[3 + j - 1] = 1;
    x.terms_[w] = ExactScalar::one();
    return x;
}

OperatorElement OperatorElement::r(int j) {
    OperatorElement x;
    OpWord w;
    w.exp[j - 1] = 1;
    x.terms_[w] = ExactScalar::one();
    return x;
}

void OperatorElement::add(const OpWord& w, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = c;
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OperatorElement operator+(const OperatorElement& a, const OperatorElement& b) {
    OperatorElement r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, c);
    return r;
}

OperatorElement operator-(const OperatorElement& a, const OperatorElement& b) {
    OperatorElement r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, -c);
    return r;
}

OperatorElement OperatorElement::operator-() const {
    OperatorElement r;
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

OperatorElement operator*(const ExactScalar& c, const OperatorElement& a) {
    OperatorElement r;
    if (c.is_zero()) return r;
    for (const auto& [w, d] : a.terms_) r.add(w, c * d);
    return r;
}

namespace {

// Rewrites an arbitrary letter sequence to a sum of normal-ordered words.
OperatorElement normalize(std::vector<Pending> stack) {
    OperatorElement out;
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        if (cur.coeff.is_zero()) continue;

        auto& w = cur.word;
        size_t i = 0;
        bool reduced = false;
        for (; i + 1 < w.size(); ++i) {
            const Letter a = w[i];
            const Letter b = w[i + 1];
            if (a.kind == Letter::E && b.kind == Letter::E) {
                // merge E powers
                std::vector<Letter> nw(w.begin(), w.begin() + i);
                int32_t m = a.epow + b.epow;
                if (m != 0) nw.push_back(Letter::e(m));
                nw.insert(nw.end(), w.begin() + i + 2, w.end());
                stack.push_back({std::move(nw), cur.coeff});
                reduced = true;
                break;
            }
            if (a.rank() <= b.rank()) continue;
            reduced = true;

            std::vector<Letter> head(w.begin(), w.begin() + i);
            std::vector<Letter> tail(w.begin() + i + 2, w.end());
            auto swapped = [&]() {
                std::vector<Letter> nw = head;
                nw.push_back(b);
                nw.push_back(a);
                nw.insert(nw.end(), tail.begin(), tail.end());
                return nw;
            };
            auto corr = [&](std::vector<Letter> mid, const ExactScalar& f) {
                std::vector<Letter> nw = head;
                nw.insert(nw.end(), mid.begin(), mid.end());
                nw.insert(nw.end(), tail.begin(), tail.end());
                stack.push_back({std::move(nw), cur.coeff * f});
            };
            const ExactScalar I = ExactScalar::i();
            const ExactScalar Ikinv = I * ExactScalar::kappa_inv_pow(1);

            if (a.kind == Letter::R && b.kind == Letter::R) {
                // R_j R_k = R_k R_j + i eps_{jkl} R_l
                stack.push_back({swapped(), cur.coeff});
                for (int l = 1; l <= 3; ++l) {
                    int e = epsilon3(a.idx, b.idx, l);
                    if (e) corr({Letter::r(l)}, ExactScalar(e) * I);
                }
            } else if (a.kind == Letter::N && b.kind == Letter::R) {
                // N_j R_k = R_k N_j + i eps_{jkl} N_l
                stack.push_back({swapped(), cur.coeff});
                for (int l = 1; l <= 3; ++l) {
                    int e = epsilon3(a.idx, b.idx, l);
                    if (e) corr({Letter::n(l)}, ExactScalar(e) * I);
                }
            } else if (a.kind == Letter::N && b.kind == Letter::N) {
                // N_j N_k = N_k N_j - i eps_{jkl} R_l
                stack.push_back({swapped(), cur.coeff});
                for (int l = 1; l <= 3; ++l) {
                    int e = epsilon3(a.idx, b.idx, l);
                    if (e) corr({Letter::r(l)}, ExactScalar(-e) * I);
                }
            } else if (a.kind == Letter::P && b.kind == Letter::R) {
                // P_j R_k = R_k P_j + i eps_{jkl} P_l
                stack.push_back({swapped(), cur.coeff});
                for (int l = 1; l <= 3; ++l) {
                    int e = epsilon3(a.idx, b.idx, l);
                    if (e) corr({Letter::p(l)}, ExactScalar(e) * I);
                }
            } else if (a.kind == Letter::P && b.kind == Letter::N) {
                // P_j N_k = N_k P_j - [N_k, P_j]
                stack.push_back({swapped(), cur.coeff});
                if (a.idx == b.idx) {
                    std::vector<Pending> diag;
                    append_np_diag(diag, head, tail, -cur.coeff);
                    for (auto& p : diag) stack.push_back(std::move(p));
                }
                corr({Letter::p(b.idx), Letter::p(a.idx)}, Ikinv);
            } else if (a.kind == Letter::P0 && b.kind == Letter::N) {
                // P0 N_k = N_k P0 - i P_k
                stack.push_back({swapped(), cur.coeff});
                corr({Letter::p(b.idx)}, -I);
            } else if (a.kind == Letter::E && b.kind == Letter::N) {
                // E^m N_k = N_k E^m - (i m / kappa) P_k E^m
                stack.push_back({swapped(), cur.coeff});
                corr({Letter::p(b.idx), Letter::e(a.epow)},
                     ExactScalar(-a.epow) * Ikinv);
            } else {
                // commuting pair: (P,P) with j>k, (P0,P), (E,P), (E,P0),
                // (P0,R), (E,R)
                stack.push_back({swapped(), cur.coeff});
            }
            break;
        }
        if (!reduced) out.add(letters_word(w), cur.coeff);
    }
    return out;
}

} // namespace

OperatorElement operator*(const OperatorElement& a, const OperatorElement& b) {
    std::vector<Pending> stack;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            std::vector<Letter> w = word_letters(wa);
            auto lb = word_letters(wb);
            w.insert(w.end(), lb.begin(), lb.end());
            stack.push_back({std::move(w), ca * cb});
        }
    }
    return normalize(std::move(stack));
}

OperatorElement commutator(const OperatorElement& a, const OperatorElement& b) {
    return a * b - b * a;
}

bool OperatorElement::momentum_only() const {
    for (const auto& [w, c] : terms_)
        if (!w.momentum_only()) return false;
    return true;
}

std::complex<double> OperatorElement::wave_eigenvalue(const std::array<double, 4>& k,
                                                      double kappa) const {
    std::complex<double> v{0.0, 0.0};
    for (const auto& [w, c] : terms_) {
        if (!w.momentum_only())
            throw std::domain_error("not diagonal on plane waves");
        double m = 1.0;
        for (int j = 1; j <= 3; ++j) m *= std::pow(k[j], w.exp[6 + j - 1]);
        m *= std::pow(k[0], w.exp[9]);
        m *= std::exp(w.epow * k[0] / kappa);
        v += c.eval(kappa) * m;
    }
    check_finite(v, "wave_eigenvalue");
    return v;
}

std::string OperatorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        static const char* names[10] = {"R1", "R2", "R3", "N1", "N2", "N3",
                                        "P1", "P2", "P3", "P0"};
        for (int g = 0; g < 10; ++g)
            for (int k = 0; k < w.exp[g]; ++k) os << "*" << names[g];
        if (w.epow == 1) os << "*E";
        else if (w.epow != 0) os << "*E^" << w.epow;
    }
    return os.str();
}

// --- tensor square ---------------------------------------------------------

TensorOperator TensorOperator::tensor(const OperatorElement& a, const OperatorElement& b) {
    TensorOperator t;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) t.add(wa, wb, ca * cb);
    return t;
}

void TensorOperator::add(const OpWord& a, const OpWord& b, const ExactScalar& c) {
    if (c.is_zero()) return;
    Key k{a, b};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_[k] = c;
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
    TensorOperator r = a;
    for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
    return r;
}

TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
    TensorOperator r = a;
    for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, -c);
    return r;
}

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
    TensorOperator r;
    for (const auto& [ka, ca] : a.terms_) {
        OperatorElement a1, a2;
        a1.add(ka.first, ExactScalar::one());
        a2.add(ka.second, ExactScalar::one());
        for (const auto& [kb, cb] : b.terms_) {
            OperatorElement b1, b2;
            b1.add(kb.first, ExactScalar::one());
            b2.add(kb.second, ExactScalar::one());
            OperatorElement left = a1 * b1;
            OperatorElement right = a2 * b2;
            ExactScalar c = ca * cb;
            for (const auto& [wl, cl] : left.terms())
                for (const auto& [wr, cr] : right.terms())
                    r.add(wl, wr, c * cl * cr);
        }
    }
    return r;
}

// --- Hopf structure ---------------------------------------------------------

namespace {

// Coproduct legs of a single letter.
std::vector<std::pair<std::pair<OperatorElement, OperatorElement>, ExactScalar>>
letter_coproduct(const Letter& l) {
    using Pair = std::pair<OperatorElement, OperatorElement>;
    std::vector<std::pair<Pair, ExactScalar>> legs;
    const auto one = OperatorElement::unit();
    switch (l.kind) {
        case Letter::R: {
            auto g = OperatorElement::r(l.idx);
            legs.push_back({{g, one}, ExactScalar::one()});
            legs.push_back({{one, g}, ExactScalar::one()});
            break;
        }
        case Letter::N: {
            // Delta N_k = N_k x 1 + E^-1 x N_k + (1/kappa) eps_{klm} P_l x R_m.
            // The 1/kappa coefficient (no i) is forced by the homomorphism
            // property against the [N, P] and [N, E] relations.
            auto g = OperatorElement::n(l.idx);
            legs.push_back({{g, one}, ExactScalar::one()});
            legs.push_back({{OperatorElement::e(-1), g}, ExactScalar::one()});
            for (int a = 1; a <= 3; ++a)
                for (int m = 1; m <= 3; ++m) {
                    int eps = epsilon3(l.idx, a, m);
                    if (eps)
                        legs.push_back({{OperatorElement::p(a), OperatorElement::r(m)},
                                        ExactScalar(eps) * ExactScalar::kappa_inv_pow(1)});
                }
            break;
        }
        case Letter::P: {
            auto g = OperatorElement::p(l.idx);
            legs.push_back({{g, one}, ExactScalar::one()});
            legs.push_back({{OperatorElement::e(-1), g}, ExactScalar::one()});
            break;
        }
        case Letter::P0: {
            auto g = OperatorElement::p0();
            legs.push_back({{g, one}, ExactScalar::one()});
            legs.push_back({{one, g}, ExactScalar::one()});
            break;
        }
        case Letter::E: {
            auto g = OperatorElement::e(l.epow);
            legs.push_back({{g, g}, ExactScalar::one()});
            break;
        }
    }
    return legs;
}

OperatorElement letter_antipode(const Letter& l) {
    switch (l.kind) {
        case Letter::R: return -OperatorElement::r(l.idx);
        case Letter::P0: return -OperatorElement::p0();
        case Letter::E: return OperatorElement::e(-l.epow);
        case Letter::P: return -(OperatorElement::e(1) * OperatorElement::p(l.idx));
        case Letter::N: {
            // -E N_j + (1/kappa) eps_{jkl} E P_k R_l, paired with the
            // coproduct above through the antipode axiom
            OperatorElement s = -(OperatorElement::e(1) * OperatorElement::n(l.idx));
            for (int k = 1; k <= 3; ++k)
                for (int m = 1; m <= 3; ++m) {
                    int eps = epsilon3(l.idx, k, m);
                    if (eps)
                        s = s + ExactScalar(eps) * ExactScalar::kappa_inv_pow(1) *
                                    (OperatorElement::e(1) * OperatorElement::p(k) *
                                     OperatorElement::r(m));
                }
            return s;
        }
    }
    return OperatorElement::zero();
}

} // namespace

TensorOperator coproduct(const OperatorElement& a) {
    TensorOperator out;
    const auto unit = OperatorElement::unit();
    for (const auto& [w, c] : a.terms()) {
        TensorOperator acc = TensorOperator::tensor(unit, unit);
        for (const auto& l : word_letters(w)) {
            TensorOperator dl;
            for (const auto& [pair, f] : letter_coproduct(l)) {
                TensorOperator t = TensorOperator::tensor(pair.first, pair.second);
                for (const auto& [k, d] : t.terms()) dl.add(k.first, k.second, d * f);
            }
            acc = acc * dl;
        }
        for (const auto& [k, d] : acc.terms()) out.add(k.first, k.second, c * d);
    }
    return out;
}

OperatorElement antipode(const OperatorElement& a) {
    OperatorElement out;
    for (const auto& [w, c] : a.terms()) {
        OperatorElement acc = OperatorElement::unit();
        auto ls = word_letters(w);
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) acc = acc * letter_antipode(*it);
        out = out + c * acc;
    }
    return out;
}

ExactScalar counit(const OperatorElement& a) {
    ExactScalar v;
    for (const auto& [w, c] : a.terms())
        if (w.is_pure_epow()) v = v + c;  // eps(E^m) = 1, other letters -> 0
    return v;
}

OperatorElement dagger(const OperatorElement& a) {
    OperatorElement out;
    for (const auto& [w, c] : a.terms()) {
        auto ls = word_letters(w);
        std::reverse(ls.begin(), ls.end());
        std::vector<Pending> st;
        st.push_back({std::move(ls), c.conj()});
        out = out + normalize(std::move(st));
    }
    return out;
}

// --- named families ---------------------------------------------------------

namespace {

OperatorElement op_cosh() {
    return ExactScalar::rational(1, 2) * (OperatorElement::e(1) + OperatorElement::e(-1));
}
OperatorElement op_sinh() {
    return ExactScalar::rational(1, 2) * (OperatorElement::e(1) - OperatorElement::e(-1));
}
OperatorElement op_psq() {
    OperatorElement s;
    for (int j = 1; j <= 3; ++j) s = s + OperatorElement::p(j) * OperatorElement::p(j);
    return s;
}

std::array<std::array<OperatorElement, 5>, 5> build_lambda() {
    std::array<std::array<OperatorElement, 5>, 5> m;
    const auto ch = op_cosh();
    const auto sh = op_sinh();
    const auto psq = op_psq();
    const auto E = OperatorElement::e(1);
    const ExactScalar half_k2 = ExactScalar::term({Rational(1, 2)}, 2);  // 1/(2 kappa^2)
    const ExactScalar kinv = ExactScalar::kappa_inv_pow(1);
    const auto epsq = half_k2 * (E * psq);

    m[0][0] = ch + epsq;
    m[0][4] = -sh - epsq;
    m[4][0] = -sh + epsq;
    m[4][4] = ch - epsq;
    for (int k = 1; k <= 3; ++k) {
        m[0][k] = kinv * OperatorElement::p(k);
        m[4][k] = kinv * OperatorElement::p(k);
        m[k][0] = kinv * (E * OperatorElement::p(k));
        m[k][4] = -(kinv * (E * OperatorElement::p(k)));
        for (int j = 1; j <= 3; ++j)
            m[j][k] = (j == k) ? OperatorElement::unit() : OperatorElement::zero();
    }
    return m;
}

std::array<OperatorElement, 5> build_xi() {
    std::array<OperatorElement, 5> v;
    const ExactScalar kappa = ExactScalar::kappa_inv_pow(-1);
    const ExactScalar half_kinv = ExactScalar::term({Rational(1, 2)}, 1);
    v[0] = -(kappa * op_sinh()) + half_kinv * (OperatorElement::e(1) * op_psq());
    for (int j = 1; j <= 3; ++j) v[j] = OperatorElement::p(j);
    v[4] = kappa * op_cosh() - half_kinv * (OperatorElement::e(1) * op_psq()) -
           OperatorElement::scalar(kappa);
    return v;
}

} // namespace

const OperatorElement& lambda_entry(int a, int b) {
    static const auto m = build_lambda();
    return m[a][b];
}

const OperatorElement& sigma_entry(int a, int b) {
    static const auto m = [] {
        std::array<std::array<OperatorElement, 5>, 5> s;
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) s[a][b] = antipode(lambda_entry(a, b));
        return s;
    }();
    return m[a][b];
}

const OperatorElement& xi(int a) {
    static const auto v = build_xi();
    return v[a];
}

const OperatorElement& chi(int a) {
    static const auto v = [] {
        std::array<OperatorElement, 5> c;
        for (int a = 0; a < 5; ++a) c[a] = -antipode(xi(a));
        return c;
    }();
    return v[a];
}

OperatorElement twist() { return OperatorElement::e(3); }

const OperatorElement& casimir() {
    static const auto box = [] {
        OperatorElement s;
        for (int a = 0; a < 5; ++a) s = s + ExactScalar(eta5(a)) * (xi(a) * xi(a));
        return s;
    }();
    return box;
}

std::vector<So41Failure> so41_check() {
    std::vector<So41Failure> fails;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            OperatorElement s;
            for (int c = 0; c < 5; ++c)
                s = s + ExactScalar(eta5(c)) * (lambda_entry(a, c) * lambda_entry(b, c));
            if (a == b) s = s - OperatorElement::scalar(ExactScalar(eta5(a)));
            if (!s.is_zero()) fails.push_back({a, b, s});
        }
    return fails;
}

namespace {

int epsilon5(const std::array<int, 5>& idx) {
    int inv = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) ++inv;
        }
    return (inv % 2 == 0) ? 1 : -1;
}

using PairKey = std::vector<std::pair<int, int>>;

const OperatorElement& memo_product(std::map<PairKey, OperatorElement>& memo,
                                    PairKey key, bool use_sigma) {
    std::sort(key.begin(), key.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    OperatorElement prod = OperatorElement::unit();
    for (const auto& [a, b] : key)
        prod = prod * (use_sigma ? sigma_entry(a, b) : lambda_entry(a, b));
    return memo.emplace(std::move(key), std::move(prod)).first->second;
}

} // namespace

EpsilonLambdaReport epsilon_lambda_check(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("degree must be 1..4");
    EpsilonLambdaReport rep;
    rep.degree = n;
    std::map<PairKey, OperatorElement> lmemo, smemo;

    std::array<int, 5> a{};
    for (long code = 0; code < 3125; ++code) {
        long c = code;
        for (int i = 0; i < 5; ++i) { a[i] = c % 5; c /= 5; }

        // LHS: sum over b_1..b_n of lambda products against eps(b, tail)
        OperatorElement lhs;
        {
            std::array<int, 5> idx{};
            for (int i = n; i < 5; ++i) idx[i] = a[i];
            std::array<int, 5> b{};
            std::function<void(int)> rec = [&](int pos) {
                if (pos == n) {
                    for (int i = 0; i < n; ++i) idx[i] = b[i];
                    int e = epsilon5(idx);
                    if (!e) return;
                    PairKey key;
                    for (int i = 0; i < n; ++i) key.push_back({a[i], b[i]});
                    lhs = lhs + ExactScalar(e) * memo_product(lmemo, key, false);
                    return;
                }
                for (int v = 0; v < 5; ++v) { b[pos] = v; rec(pos + 1); }
            };
            rec(0);
        }

        // RHS: sum over b_{n+1}..b_5 of S(lambda) products against eps(head, b)
        OperatorElement rhs;
        {
            std::array<int, 5> idx{};
            for (int i = 0; i < n; ++i) idx[i] = a[i];
            std::array<int, 5> b{};
            std::function<void(int)> rec = [&](int pos) {
                if (pos == 5) {
                    for (int i = n; i < 5; ++i) idx[i] = b[i];
                    int e = epsilon5(idx);
                    if (!e) return;
                    PairKey key;
                    for (int i = n; i < 5; ++i) key.push_back({a[i], b[i]});
                    rhs = rhs + ExactScalar(e) * memo_product(smemo, key, true);
                    return;
                }
                for (int v = 0; v < 5; ++v) { b[pos] = v; rec(pos + 1); }
            };
            rec(n);
        }

        ++rep.assignments;
        if (!(lhs == rhs)) ++rep.failures;
    }
    return rep;
}

} // namespace kforms
