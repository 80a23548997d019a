#include "petrie/schur_expansion.hpp"

#include <charconv>
#include <stdexcept>

#include <json.hpp>

namespace petrie {

void SchurExpansion::add(const Partition& lambda, Coeff c) {
    if (c == 0) return;
    if (!terms_.empty() && terms_.begin()->first.size() != lambda.size())
        throw std::invalid_argument("Schur expansion must be homogeneous");
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other) {
    for (const auto& [lambda, c] : other.terms_) add(lambda, c);
    return *this;
}

Coeff SchurExpansion::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<int> SchurExpansion::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.size();
}

std::string to_text(const SchurExpansion& e) {
    if (e.empty()) return "0";
    std::string out;
    for (const auto& [lambda, c] : e.terms()) {
        if (!out.empty()) out += ' ';
        out += (c > 0 ? "+" : "") + std::to_string(c) + "*s[";
        for (std::size_t i = 0; i < lambda.length(); ++i) {
            if (i) out += ',';
            out += std::to_string(lambda.parts()[i]);
        }
        out += ']';
    }
    return out;
}

SchurExpansion parse_expansion_text(std::string_view text) {
    SchurExpansion e;
    auto fail = [&] { throw std::invalid_argument("malformed expansion '" + std::string(text) + "'"); };
    std::string_view rest = text;
    auto skip_ws = [&] {
        while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    };
    skip_ws();
    if (rest == "0") return e;
    while (skip_ws(), !rest.empty()) {
        const auto star = rest.find("*s[");
        const auto close = rest.find(']');
        if (star == std::string_view::npos || close == std::string_view::npos || close < star) fail();
        std::string_view num = rest.substr(0, star);
        if (!num.empty() && num.front() == '+') num.remove_prefix(1);
        Coeff c = 0;
        auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), c);
        if (num.empty() || ec != std::errc{} || p != num.data() + num.size()) fail();
        e.add(parse_partition(rest.substr(star + 3, close - star - 3)), c);
        rest.remove_prefix(close + 1);
    }
    return e;
}

std::string to_json(const SchurExpansion& e) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [lambda, c] : e.terms()) terms.push_back({{"lambda", lambda.parts()}, {"coeff", c}});
    return nlohmann::ordered_json{{"terms", terms}}.dump();
}

SchurExpansion expansion_from_json(std::string_view json) {
    SchurExpansion e;
    try {
        const auto doc = nlohmann::json::parse(json);
        for (const auto& t : doc.at("terms"))
            e.add(Partition(t.at("lambda").get<std::vector<int>>()), t.at("coeff").get<Coeff>());
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed expansion JSON: ") + ex.what());
    }
    return e;
}

std::optional<std::pair<Partition, int>> straighten(std::vector<int> alpha) {
    // s_alpha = -s_beta with beta = (.., alpha_{i+1} - 1, alpha_i + 1, ..);
    // equal neighbours after the shift make two determinant rows coincide.
    int sign = 1;
    while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
            if (alpha[i] >= alpha[i + 1]) continue;
            if (alpha[i + 1] == alpha[i] + 1) return std::nullopt;
            const int a = alpha[i];
            alpha[i] = alpha[i + 1] - 1;
            alpha[i + 1] = a + 1;
            sign = -sign;
            changed = true;
        }
        while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
    }
    if (!alpha.empty() && alpha.back() < 0) return std::nullopt;
    return std::pair{Partition(std::move(alpha)), sign};
}

}  // namespace petrie
