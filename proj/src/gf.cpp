#include "oddcover/gf.hpp"

#include <stdexcept>

namespace oddcover {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

using Poly = std::vector<std::uint32_t>; // coefficients low-to-high

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    // m is monic. Reduce a in place.
    while (a.size() >= m.size()) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::uint64_t cur = a[shift + i];
                cur = (cur + std::uint64_t(p - 1) * lead % p * m[i]) % p;
                a[shift + i] = static_cast<std::uint32_t>(cur);
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    return out;
}

// Decode the packed integer into a monic polynomial of the given degree.
Poly decode_monic(std::uint64_t packed, std::uint32_t degree, std::uint32_t p) {
    Poly poly(degree + 1, 0);
    for (std::uint32_t i = 0; i < degree; ++i) {
        poly[i] = static_cast<std::uint32_t>(packed % p);
        packed /= p;
    }
    poly[degree] = 1;
    return poly;
}

bool is_irreducible(const Poly& candidate, std::uint32_t p) {
    const std::uint32_t degree = static_cast<std::uint32_t>(candidate.size() - 1);
    // Trial division by every monic polynomial of degree 1..degree/2.
    for (std::uint32_t d = 1; 2 * d <= degree; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t packed = 0; packed < count; ++packed) {
            const Poly divisor = decode_monic(packed, d, p);
            if (poly_mod(candidate, divisor, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

GFContext::GFContext(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
    if (!is_prime(p)) throw std::invalid_argument("GFContext: p is not prime");
    if (m < 1) throw std::invalid_argument("GFContext: need m >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > 1u << 16) throw std::invalid_argument("GFContext: field larger than 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);

    // Packed low-to-high coefficients count upward, so the first hit is
    // the lexicographically smallest monic irreducible.
    std::uint64_t non_leading = 1;
    for (std::uint32_t i = 0; i < m; ++i) non_leading *= p;
    for (std::uint64_t packed = 0; packed < non_leading; ++packed) {
        Poly candidate = decode_monic(packed, m, p);
        if (is_irreducible(candidate, p)) {
            irreducible_ = std::move(candidate);
            return;
        }
    }
    throw std::logic_error("GFContext: no irreducible found"); // unreachable
}

void GFContext::check(Elem a) const {
    if (a >= q_) throw std::out_of_range("GFContext: element out of range");
}

GFContext::Elem GFContext::add(Elem a, Elem b) const {
    check(a);
    check(b);
    Elem out = 0, place = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += (a % p_ + b % p_) % p_ * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

GFContext::Elem GFContext::neg(Elem a) const {
    check(a);
    Elem out = 0, place = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += (p_ - a % p_) % p_ * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

GFContext::Elem GFContext::sub(Elem a, Elem b) const { return add(a, neg(b)); }

GFContext::Elem GFContext::mul(Elem a, Elem b) const {
    check(a);
    check(b);
    Poly pa, pb;
    for (Elem t = a; t; t /= p_) pa.push_back(t % p_);
    for (Elem t = b; t; t /= p_) pb.push_back(t % p_);
    const Poly prod = poly_mod(poly_mul(pa, pb, p_), irreducible_, p_);
    Elem out = 0;
    for (std::size_t i = prod.size(); i-- > 0;) out = out * p_ + prod[i];
    return out;
}

GFContext::Elem GFContext::pow(Elem a, std::uint64_t e) const {
    check(a);
    Elem out = 1, base = a;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

std::string GFContext::to_string(Elem a) const {
    check(a);
    if (a == 0) return "0";
    std::string out;
    bool first = true;
    for (std::uint32_t i = 0; a; ++i, a /= p_) {
        const std::uint32_t c = a % p_;
        if (c == 0) continue;
        if (!first) out += "+";
        first = false;
        if (i == 0 || c > 1) out += std::to_string(c);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

GFContext::Elem inner(const GFVec& u, const GFVec& v) {
    if (!(u.ctx == v.ctx)) throw std::invalid_argument("inner: context mismatch");
    if (u.coords.size() != v.coords.size()) throw std::invalid_argument("inner: length mismatch");
    GFContext::Elem acc = 0;
    for (std::size_t i = 0; i < u.coords.size(); ++i)
        acc = u.ctx.add(acc, u.ctx.mul(u.coords[i], v.coords[i]));
    return acc;
}

std::vector<GFVec> projective_normals(const GFContext& ctx, std::size_t k) {
    if (k < 1) throw std::invalid_argument("projective_normals: need k >= 1");
    std::vector<GFVec> out;
    std::vector<GFContext::Elem> coords(k, 0);
    // Odometer over F_q^k, first coordinate most significant.
    while (true) {
        std::size_t lead = k;
        for (std::size_t i = 0; i < k; ++i) {
            if (coords[i] != 0) {
                lead = i;
                break;
            }
        }
        if (lead < k && coords[lead] == 1) out.push_back(GFVec(ctx, coords));
        std::size_t pos = k;
        while (pos-- > 0) {
            if (++coords[pos] < ctx.q()) break;
            coords[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

} // namespace oddcover
