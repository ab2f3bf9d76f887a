#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rigidity {

// Arithmetic in Z/p for a prime p < 2^31.
struct PrimeField {
    std::uint32_t p;

    explicit PrimeField(std::uint32_t prime);

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t reduce(std::int64_t a) const;
};

bool is_prime(std::uint64_t n);
std::uint32_t previous_prime(std::uint32_t n);  // largest prime < n

// Power product in up to 24 variables, exponents packed four per 64-bit word
// (16 bits each) so divisibility tests run wordwise.
class Monomial {
public:
    static constexpr int max_vars = 24;
    static constexpr int max_exponent = 0x7fff;
    static constexpr int words = 6;

    Monomial() = default;

    int exponent(int var) const {
        return static_cast<int>((w_[var >> 2] >> ((var & 3) * 16)) & 0xffff);
    }
    void set_exponent(int var, int value);
    int degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    // a.divides(b): a_i <= b_i for all i
    bool divides(const Monomial& b) const {
        constexpr std::uint64_t H = 0x8000800080008000ull;
        for (int i = 0; i < words; ++i)
            if ((((b.w_[i] | H) - w_[i]) & H) != H) return false;
        return true;
    }
    // true if no variable occurs in both monomials
    bool coprime(const Monomial& b) const {
        constexpr std::uint64_t H = 0x8000800080008000ull;
        constexpr std::uint64_t L = 0x7fff7fff7fff7fffull;
        for (int i = 0; i < words; ++i) {
            std::uint64_t na = (((w_[i] & L) + L) | w_[i]) & H;
            std::uint64_t nb = (((b.w_[i] & L) + L) | b.w_[i]) & H;
            if (na & nb) return false;
        }
        return true;
    }

    static Monomial product(const Monomial& a, const Monomial& b);
    static Monomial quotient(const Monomial& a, const Monomial& b);  // a / b, b must divide a
    static Monomial lcm(const Monomial& a, const Monomial& b);

    // degrevlex: negative if *this < b, 0 if equal, positive if *this > b
    int compare(const Monomial& b) const;

    bool operator==(const Monomial& b) const = default;

    // quick-reject bitmask for divisibility tests
    std::uint64_t divmask() const;

private:
    std::array<std::uint64_t, words> w_{0, 0, 0, 0, 0, 0};
    std::uint32_t deg_ = 0;
};

struct Term {
    Monomial mon;
    std::uint32_t coeff;
};

// Terms sorted in strictly decreasing degrevlex order; zero polynomial has no
// terms.
class Polynomial {
public:
    Polynomial() = default;
    // normalizes: sorts, merges equal monomials, drops zero coefficients
    Polynomial(std::vector<Term> terms, const PrimeField& field);

    bool is_zero() const { return terms_.empty(); }
    const Term& leading() const { return terms_.front(); }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    static Polynomial unchecked(std::vector<Term> sorted_terms);

private:
    std::vector<Term> terms_;
};

// Reduced Groebner basis (degrevlex) of the given generators; deterministic,
// elements monic and sorted by increasing leading monomial.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const PrimeField& field);

// Normal form of f modulo basis (full reduction of all terms).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const PrimeField& field);

// Buchberger criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& basis, const PrimeField& field);

// Dimension of the quotient ring as a vector space, given a reduced Groebner
// basis: the number of monomials outside the leading-term ideal. nullopt if
// the quotient is infinite-dimensional (positive-dimensional solution set).
std::optional<std::uint64_t> quotient_dimension(const std::vector<Polynomial>& basis,
                                                int nvars);

// Debug form "c*x1^e1*x2^e2*..." with terms in basis order, one polynomial
// per line.
std::string dump(const Polynomial& f);
std::string dump(const std::vector<Polynomial>& basis);

}  // namespace rigidity
