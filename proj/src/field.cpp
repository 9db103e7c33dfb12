#include "glq/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace glq {

namespace {

constexpr int kMaxQ = 512;  // keeps the q×q tables small

// Dense polynomial arithmetic over Z_p, coefficients constant-term first.
// Only used at field-construction time.
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(r);
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, int p) {
    a = trim(a);
    int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int da = static_cast<int>(a.size()) - 1;
        int c = a[da];  // m is monic, so the quotient coefficient is just c
        for (int i = 0; i <= dm; ++i) {
            int idx = da - dm + i;
            a[idx] = ((a[idx] - c * m[i]) % p + p) % p;
        }
        a = trim(a);
    }
    return a;
}

bool poly_is_zero(const Poly& a) { return trim(a).empty(); }

// Irreducibility over Z_p by trial division against every monic polynomial
// of lower degree >= 1.
bool is_irreducible(const Poly& m, int p) {
    int deg = static_cast<int>(m.size()) - 1;
    if (deg < 1) return false;
    for (int d = 1; d < deg; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            Poly div(d + 1, 0);
            long t = idx;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(t % p);
                t /= p;
            }
            div[d] = 1;
            if (poly_is_zero(poly_mod(m, div, p))) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(int p, int l, std::vector<int> modulus)
    : p_(p), l_(l), modulus_(std::move(modulus)) {
    long q = 1;
    for (int i = 0; i < l; ++i) q *= p;
    if (q > kMaxQ) throw TooLarge("field order " + std::to_string(q) + " exceeds supported size");
    q_ = static_cast<int>(q);

    // index <-> coefficient vector: index = sum c_i p^i
    auto coeffs_of = [&](int idx) {
        Poly c(l_, 0);
        for (int i = 0; i < l_; ++i) {
            c[i] = idx % p_;
            idx /= p_;
        }
        return c;
    };
    auto index_of = [&](const Poly& c) {
        int idx = 0;
        for (int i = l_ - 1; i >= 0; --i)
            idx = idx * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
        return static_cast<uint16_t>(idx);
    };

    add_.assign(static_cast<size_t>(q_) * q_, 0);
    mul_.assign(static_cast<size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        Poly ca = coeffs_of(a);
        Poly na(l_, 0);
        for (int i = 0; i < l_; ++i) na[i] = (p_ - ca[i]) % p_;
        neg_[a] = index_of(na);
        for (int b = 0; b < q_; ++b) {
            Poly cb = coeffs_of(b);
            Poly s(l_, 0);
            for (int i = 0; i < l_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[static_cast<size_t>(a) * q_ + b] = index_of(s);
            mul_[static_cast<size_t>(a) * q_ + b] = index_of(poly_mod(poly_mul(ca, cb, p_), modulus_, p_));
        }
    }
    // Inverses by exhaustive search; q is tiny.
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[static_cast<size_t>(a) * q_ + b] == 1) {
                inv_[a] = static_cast<uint16_t>(b);
                break;
            }
}

const FieldSpec& FieldSpec::make(int p, int l, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    if (l < 1) throw DegreeMismatch("extension degree must be >= 1");

    std::vector<int> m;
    if (modulus) {
        m = *modulus;
        if (static_cast<int>(m.size()) != l + 1)
            throw DegreeMismatch("modulus must have l+1 coefficients");
        for (int& c : m) c = ((c % p) + p) % p;
        if (m.back() != 1) throw DegreeMismatch("modulus must be monic");
        if (!is_irreducible(m, p)) throw ReducibleModulus("modulus is reducible over Z_p");
    } else if (l == 1) {
        m = {0, 1};  // x itself: F_p = Z_p[x]/(x)
    } else {
        // smallest irreducible, coefficient vectors compared from the
        // constant term up
        long count = 1;
        for (int i = 0; i < l; ++i) count *= p;
        bool found = false;
        for (long rank = 0; rank < count && !found; ++rank) {
            Poly cand(l + 1, 0);
            long t = rank;
            for (int i = l - 1; i >= 0; --i) {
                cand[i] = static_cast<int>(t % p);
                t /= p;
            }
            cand[l] = 1;
            if (is_irreducible(cand, p)) {
                m = cand;
                found = true;
            }
        }
        if (!found) throw ReducibleModulus("no irreducible modulus found");  // unreachable
    }

    static std::mutex mu;
    static std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<FieldSpec>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, l, m);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<FieldSpec>(new FieldSpec(p, l, m))).first;
    return *it->second;
}

uint16_t FieldSpec::inv(uint16_t a) const {
    if (a == 0) throw ZeroInverse("zero has no multiplicative inverse");
    return inv_[a];
}

Scalar FieldSpec::element(uint16_t index) const {
    if (index >= q_) throw Error("element index out of range");
    return Scalar(*this, index);
}

std::vector<Scalar> FieldSpec::elements() const {
    std::vector<Scalar> out;
    out.reserve(q_);
    for (int i = 0; i < q_; ++i) out.emplace_back(*this, static_cast<uint16_t>(i));
    return out;
}

std::vector<int> FieldSpec::coeffs(uint16_t index) const {
    std::vector<int> c(l_, 0);
    int idx = index;
    for (int i = 0; i < l_; ++i) {
        c[i] = idx % p_;
        idx /= p_;
    }
    return c;
}

std::string FieldSpec::to_text(uint16_t index) const {
    if (l_ == 1) return std::to_string(index);
    auto c = coeffs(index);
    std::string out;
    for (int i = 0; i < l_; ++i) {
        if (i) out += ':';
        out += std::to_string(c[i]);
    }
    return out;
}

uint16_t FieldSpec::parse(const std::string& text) const {
    std::vector<int> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(0);
            std::istringstream is(cur);
            if (!(is >> parts.back())) throw ParseError("bad scalar '" + text + "'");
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (cur.empty()) throw ParseError("bad scalar '" + text + "'");
    parts.push_back(0);
    {
        std::istringstream is(cur);
        if (!(is >> parts.back())) throw ParseError("bad scalar '" + text + "'");
    }
    if (static_cast<int>(parts.size()) > l_)
        throw ParseError("scalar '" + text + "' has too many components for degree " +
                         std::to_string(l_));
    long idx = 0;
    long pw = 1;
    for (size_t i = 0; i < parts.size(); ++i) {
        long c = ((parts[i] % p_) + p_) % p_;
        idx += c * pw;
        pw *= p_;
    }
    return static_cast<uint16_t>(idx);
}

}  // namespace glq
