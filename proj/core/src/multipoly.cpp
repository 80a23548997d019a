#include "petrie/multipoly.hpp"

#include <numeric>
#include <stdexcept>

namespace petrie {

void Monomial::set_exponent(int var, int e) {
    if (e < 0 || e > kMaxExponent) throw std::overflow_error("monomial exponent out of range");
    exps_.at(static_cast<std::size_t>(var)) = static_cast<std::uint8_t>(e);
}

int Monomial::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    for (int i = 0; i < kMaxVariables; ++i) out.set_exponent(i, exponent(i) + other.exponent(i));
    return out;
}

Monomial Monomial::swapped(int a, int b) const {
    Monomial out = *this;
    std::swap(out.exps_.at(static_cast<std::size_t>(a)), out.exps_.at(static_cast<std::size_t>(b)));
    return out;
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > Monomial::kMaxVariables)
        throw std::invalid_argument("variable count must be between 1 and " +
                                    std::to_string(Monomial::kMaxVariables));
}

MultiPoly MultiPoly::constant(int nvars, Coeff c) {
    MultiPoly p(nvars);
    p.add_term(Monomial{}, c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    if (var < 0 || var >= nvars) throw std::out_of_range("variable index out of range");
    MultiPoly p(nvars);
    Monomial m;
    m.set_exponent(var, 1);
    p.add_term(m, 1);
    return p;
}

Coeff MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(const Monomial& m, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials live in different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    subtract_scaled(o, 1);
    return *this;
}

MultiPoly& MultiPoly::operator*=(Coeff c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v = checked_mul(v, c);
    return *this;
}

void MultiPoly::subtract_scaled(const MultiPoly& o, Coeff c) {
    check_same_ring(o);
    for (const auto& [m, v] : o.terms_) add_term(m, checked_mul(-v, c));
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_ring(b);
    MultiPoly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, checked_mul(ca, cb));
    return out;
}

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) { return a * b; }

int MultiPoly::homogeneous_degree() const noexcept {
    if (terms_.empty()) return -1;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return -1;
    return d;
}

bool MultiPoly::is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i)
        for (const auto& [m, c] : terms_)
            if (coefficient(m.swapped(i, i + 1)) != c) return false;
    return true;
}

MultiPoly MultiPoly::substitute_powers(int k) const {
    if (k < 1) throw std::invalid_argument("power must be positive");
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial p;
        for (int i = 0; i < nvars_; ++i) p.set_exponent(i, m.exponent(i) * k);
        out.add_term(p, c);
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            const int e = m.exponent(i);
            if (e == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(i + 1);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const Coeff a = c < 0 ? -c : c;
        if (mono.empty()) out += std::to_string(a);
        else if (a == 1) out += mono;
        else out += std::to_string(a) + "*" + mono;
    }
    return out;
}

}  // namespace petrie
