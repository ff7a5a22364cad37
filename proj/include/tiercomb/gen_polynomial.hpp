#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tiercomb/weak_composition.hpp"

namespace tiercomb {

// Exact sparse polynomial in q and two families of variables x_1..x_nx,
// y_1..y_ny, with 64-bit integer coefficients. Every coefficient operation
// is overflow-checked and throws std::overflow_error rather than wrap, so
// stored values are always exact.
class GenPolynomial {
public:
    struct Term {
        int q = 0;
        std::vector<int> x;  // exponents, length nx
        std::vector<int> y;  // exponents, length ny
        bool operator==(const Term&) const = default;
        auto operator<=>(const Term&) const = default;
    };

    GenPolynomial() = default;
    GenPolynomial(int nx, int ny) : nx_(nx), ny_(ny) {}

    int nx() const { return nx_; }
    int ny() const { return ny_; }

    // Adds coeff at the given exponent key; zero coefficients are erased.
    void add(const Term& key, long long coeff);
    void add_monomial(int q, const WeakComposition& xc, const WeakComposition& yc,
                      long long coeff = 1);

    long long coefficient(const Term& key) const;
    const std::map<Term, long long>& terms() const { return terms_; }

    void add(const GenPolynomial& other);

    // Value at q = 1 and all variables 1: the total object count.
    long long total() const;

    // Sub-polynomial of the terms with the given q exponent.
    GenPolynomial q_part(int e) const;

    bool operator==(const GenPolynomial&) const = default;

    // One term per line, "coef q^e x^[...] y^[...]", in sorted key order.
    std::string to_text() const;

private:
    int nx_ = 0;
    int ny_ = 0;
    std::map<Term, long long> terms_;
};

enum class VarFamily { X, Y };

// True iff the polynomial is invariant under every adjacent transposition
// of the chosen variable family.
bool check_variable_symmetry(const GenPolynomial& p, VarFamily family);

long long checked_add(long long a, long long b);

}  // namespace tiercomb
