#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oddcover {

/// Arithmetic context for F_q, q = p^m <= 2^16. Elements are encoded as
/// integers in [0, q): the value sum c_i * p^i packs the coefficient
/// vector (c_0, ..., c_{m-1}) of the residue polynomial, low degree
/// first. Multiplication is schoolbook polynomial product followed by
/// reduction modulo the stored irreducible; the fields here are tiny,
/// so clarity wins over table lookups.
class GFContext {
public:
    using Elem = std::uint32_t;

    /// Builds F_{p^m} with the lexicographically smallest monic
    /// irreducible of degree m over F_p (coefficients compared low to
    /// high; for m = 1 this is the polynomial x). Throws if p is not
    /// prime or p^m exceeds 2^16.
    GFContext(std::uint32_t p, std::uint32_t m);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }

    /// Monic irreducible, coefficients low-to-high (size m + 1).
    const std::vector<std::uint32_t>& irreducible() const { return irreducible_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;

    std::string to_string(Elem a) const; // polynomial form, for diagnostics

    bool operator==(const GFContext& o) const {
        return p_ == o.p_ && m_ == o.m_ && irreducible_ == o.irreducible_;
    }

private:
    void check(Elem a) const;

    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<std::uint32_t> irreducible_;
};

/// Vector over F_q^k carrying its context by value (contexts are small).
struct GFVec {
    GFContext ctx;
    std::vector<GFContext::Elem> coords;

    GFVec(GFContext c, std::vector<GFContext::Elem> xs) : ctx(std::move(c)), coords(std::move(xs)) {}
};

/// Inner product sum u_i * v_i in F_q. Throws on context or length
/// mismatch.
GFContext::Elem inner(const GFVec& u, const GFVec& v);

/// One representative per projective point of F_q^k: every nonzero
/// vector scaled so its first nonzero coordinate is 1, enumerated in
/// lexicographic order (first coordinate most significant). Exactly
/// (q^k - 1)/(q - 1) vectors.
std::vector<GFVec> projective_normals(const GFContext& ctx, std::size_t k);

} // namespace oddcover
