#include "tiercomb/gen_polynomial.hpp"

#include <stdexcept>

namespace tiercomb {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("polynomial coefficient overflow");
    }
    return r;
}

void GenPolynomial::add(const Term& key, long long coeff) {
    if (coeff == 0) return;
    if (static_cast<int>(key.x.size()) != nx_ || static_cast<int>(key.y.size()) != ny_) {
        throw std::invalid_argument("exponent vector length mismatch");
    }
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
}

void GenPolynomial::add_monomial(int q, const WeakComposition& xc, const WeakComposition& yc,
                                 long long coeff) {
    add(Term{q, xc.padded(nx_), yc.padded(ny_)}, coeff);
}

long long GenPolynomial::coefficient(const Term& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
}

void GenPolynomial::add(const GenPolynomial& other) {
    if (other.nx_ != nx_ || other.ny_ != ny_) {
        throw std::invalid_argument("polynomial variable counts differ");
    }
    for (const auto& [key, coeff] : other.terms_) add(key, coeff);
}

long long GenPolynomial::total() const {
    long long sum = 0;
    for (const auto& [key, coeff] : terms_) sum = checked_add(sum, coeff);
    return sum;
}

GenPolynomial GenPolynomial::q_part(int e) const {
    GenPolynomial out(nx_, ny_);
    for (const auto& [key, coeff] : terms_) {
        if (key.q == e) out.terms_.emplace(key, coeff);
    }
    return out;
}

namespace {

void append_exponents(std::string& s, const std::vector<int>& e) {
    s += '[';
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    s += ']';
}

}  // namespace

std::string GenPolynomial::to_text() const {
    std::string out;
    for (const auto& [key, coeff] : terms_) {
        out += std::to_string(coeff);
        out += " q^" + std::to_string(key.q) + " x^";
        append_exponents(out, key.x);
        out += " y^";
        append_exponents(out, key.y);
        out += '\n';
    }
    return out;
}

bool check_variable_symmetry(const GenPolynomial& p, VarFamily family) {
    const int len = family == VarFamily::X ? p.nx() : p.ny();
    for (int i = 0; i + 1 < len; ++i) {
        GenPolynomial swapped(p.nx(), p.ny());
        for (const auto& [key, coeff] : p.terms()) {
            GenPolynomial::Term k = key;
            auto& e = family == VarFamily::X ? k.x : k.y;
            std::swap(e[i], e[i + 1]);
            swapped.add(k, coeff);
        }
        if (!(swapped == p)) return false;
    }
    return true;
}

}  // namespace tiercomb
