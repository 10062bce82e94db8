#pragma once

#include "hv/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hv {

/// The fixed shift vector p of L(p1, p2).
struct AlgebraParams {
    Scalar p1;
    Scalar p2;

    bool is_zero() const { return p1.is_zero() && p2.is_zero(); }
    friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

/// m = (m1, m2) in Z^2.
struct Index {
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;

    bool is_zero() const { return m1 == 0 && m2 == 0; }
    Index operator-() const { return {-m1, -m2}; }
    friend Index operator+(Index a, Index b) { return {a.m1 + b.m1, a.m2 + b.m2}; }
    friend Index operator-(Index a, Index b) { return {a.m1 - b.m1, a.m2 - b.m2}; }
    friend auto operator<=>(const Index&, const Index&) = default;

    std::string to_string() const;
};

/// All m with |m1|, |m2| <= radius, lexicographic from (-radius, -radius).
std::vector<Index> square_window(std::int64_t radius);

/// Whether D1/D2 take part in the acting algebra.
enum class Flavor { PlainL, ExtendedL };

const char* to_string(Flavor f);

enum class GenKind : std::uint8_t { T, E, D1, D2 };

/// Basis element t^m, E(m), d1 or d2. D1/D2 carry a zero index.
struct Generator {
    GenKind kind = GenKind::T;
    Index m;

    static Generator T(Index m) { return {GenKind::T, m}; }
    static Generator E(Index m) { return {GenKind::E, m}; }
    static Generator D1() { return {GenKind::D1, {}}; }
    static Generator D2() { return {GenKind::D2, {}}; }

    bool is_derivation() const { return kind == GenKind::D1 || kind == GenKind::D2; }
    friend auto operator<=>(const Generator&, const Generator&) = default;

    /// "T(m1,m2)", "E(m1,m2)", "D1", "D2".
    std::string to_string() const;
};

/// Parses a generator literal; throws ParseError.
Generator parse_generator(std::string_view text);

/// T(m), E(m) for m in the window, then D1, D2.
std::vector<Generator> generators_in_window(const std::vector<Index>& window, bool with_derivations = true);

/// Finite linear combination of generators. Zero coefficients are dropped.
class LieElement {
public:
    using TermMap = std::map<Generator, Scalar>;

    LieElement() = default;
    LieElement(Generator g, const Scalar& c = Scalar(1)); // NOLINT(implicit)

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Generator& g) const;

    /// ExtendedL iff some D1/D2 term is present.
    Flavor flavor() const;

    void add_term(const Scalar& c, const Generator& g);

    LieElement operator-() const;
    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Scalar& c);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Scalar& c, LieElement a) { return a *= c; }
    friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    TermMap terms_;
};

/// u1*v2 - u2*v1.
Scalar det2(const Scalar& u1, const Scalar& u2, const Scalar& v1, const Scalar& v2);

/// |m + p, n + p|, the structure constant shared by the t/E brackets.
Scalar shifted_det(Index m, Index n, const AlgebraParams& p);

/// Bracket of two basis elements.
LieElement bracket(const Generator& x, const Generator& y, const AlgebraParams& p);

/// Bilinear extension of the generator bracket.
LieElement bracket(const LieElement& x, const LieElement& y, const AlgebraParams& p);

/// The outer derivation fixing every t^m and killing every E(m).
/// Throws UnsupportedDomainError if x has a D1/D2 term.
LieElement outer_derivation(const LieElement& x);

} // namespace hv
