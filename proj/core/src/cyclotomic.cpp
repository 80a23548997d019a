#include "petrie/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace petrie {

namespace {

using Poly = std::vector<Coeff>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly multiply(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    return out;
}

// Quotient and remainder by a monic divisor.
std::pair<Poly, Poly> divide_monic(Poly num, const Poly& den) {
    trim(num);
    if (den.empty() || den.back() != 1) throw std::invalid_argument("divisor must be monic");
    const std::size_t dd = den.size() - 1;
    if (num.size() <= dd) return {{}, num};
    Poly q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const Coeff lead = num[i];
        if (lead == 0) continue;
        q[i - dd] = lead;
        for (std::size_t j = 0; j <= dd; ++j)
            num[i - dd + j] = checked_sub(num[i - dd + j], checked_mul(lead, den[j]));
    }
    num.resize(dd);
    trim(num);
    trim(q);
    return {q, num};
}

}  // namespace

std::vector<Coeff> cyclotomic_polynomial(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic order must be positive");
    static std::mutex lock;
    static std::map<int, Poly> cache;
    {
        std::lock_guard guard(lock);
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    Poly num(static_cast<std::size_t>(k) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(k)] = 1;
    Poly den{1};
    for (int d = 1; d < k; ++d)
        if (k % d == 0) den = multiply(den, cyclotomic_polynomial(d));
    auto [q, rem] = divide_monic(num, den);
    if (!rem.empty()) throw std::logic_error("cyclotomic division left a remainder");
    std::lock_guard guard(lock);
    cache.emplace(k, q);
    return q;
}

CyclotomicInt::CyclotomicInt(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("cyclotomic order must be positive");
    coeffs_.assign(cyclotomic_polynomial(k).size() - 1, 0);
}

void CyclotomicInt::reduce(std::vector<Coeff> raw) {
    const Poly phi = cyclotomic_polynomial(k_);
    Poly rem = divide_monic(std::move(raw), phi).second;
    rem.resize(phi.size() - 1, 0);
    coeffs_ = std::move(rem);
}

CyclotomicInt CyclotomicInt::from_powers(int k, const std::vector<Coeff>& coeffs) {
    CyclotomicInt out(k);
    out.reduce(coeffs);
    return out;
}

CyclotomicInt CyclotomicInt::root_power(int k, long long e) {
    if (k < 1) throw std::invalid_argument("cyclotomic order must be positive");
    const long long r = ((e % k) + k) % k;
    std::vector<Coeff> raw(static_cast<std::size_t>(r) + 1, 0);
    raw.back() = 1;
    return from_powers(k, raw);
}

bool CyclotomicInt::is_rational_integer() const noexcept {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::optional<Coeff> CyclotomicInt::to_integer() const {
    if (!is_rational_integer()) return std::nullopt;
    return coeffs_.empty() ? 0 : coeffs_[0];
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    if (o.k_ != k_) throw std::invalid_argument("mixing different roots of unity");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("mixing different roots of unity");
    CyclotomicInt out(a.k_);
    out.reduce(multiply(a.coeffs_, b.coeffs_));
    return out;
}

std::string CyclotomicInt::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Coeff c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const Coeff a = c < 0 ? -c : c;
        const std::string power = i == 0 ? "" : (i == 1 ? "w" : "w^" + std::to_string(i));
        if (power.empty()) out += std::to_string(a);
        else if (a == 1) out += power;
        else out += std::to_string(a) + "*" + power;
    }
    return out.empty() ? "0" : out;
}

}  // namespace petrie
