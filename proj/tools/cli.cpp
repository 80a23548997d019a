#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include "petrie/oracle.hpp"
#include "petrie/petrie_numbers.hpp"
#include "petrie/tilings.hpp"
#include "petrie/verify.hpp"

namespace petrie::cli {

namespace {

// Bad partitions and inconsistent shapes are reported like flag errors.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Partition partition_flag(const std::string& name, const std::string& text) {
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

SkewShape shape_flags(const Partition& lambda, const Partition& mu) {
    if (!contains(mu, lambda))
        throw UsageError("--mu " + to_string(mu) + " is not contained in --lambda " + to_string(lambda));
    return SkewShape(lambda, mu);
}

struct Options {
    int k = 0;
    int m = 0;
    std::string lambda;
    std::string mu;
    std::string method = "det";
    bool json = false;
    std::optional<int> n;
    bool render = false;
    bool census = false;
    bool chain = false;
    std::string suite = "all";
    int max_size = 9;
    int max_k = 5;
};

int cmd_petrie(const Options& o, std::ostream& out, std::ostream& err) {
    const Partition lambda = partition_flag("lambda", o.lambda);
    const Partition mu = partition_flag("mu", o.mu);
    if (o.method == "core" && !mu.empty()) throw UsageError("--method core requires an empty --mu");

    std::vector<Method> methods;
    if (o.method == "det") methods = {Method::Determinant};
    else if (o.method == "tiling") methods = {Method::Tiling};
    else if (o.method == "core") methods = {Method::Core};
    else {
        methods = {Method::Determinant, Method::Tiling};
        if (mu.empty()) methods.push_back(Method::Core);
    }

    std::vector<std::pair<Method, int>> values;
    for (Method m : methods) values.emplace_back(m, petrie_number(m, o.k, lambda, mu));
    const bool agree = std::all_of(values.begin(), values.end(),
                                   [&](const auto& v) { return v.second == values.front().second; });
    if (!agree) {
        err << "methods disagree:";
        for (const auto& [m, v] : values) err << ' ' << to_string(m) << '=' << v;
        err << '\n';
        return kExitDisagreement;
    }
    out << values.front().second << '\n';
    return kExitOk;
}

int cmd_expand(const Options& o, std::ostream& out) {
    const Partition mu = partition_flag("mu", o.mu);
    const SchurExpansion e = pieri_expand(o.k, o.m, mu);
    if (!o.json) {
        out << to_text(e) << '\n';
        return kExitOk;
    }
    nlohmann::ordered_json doc;
    doc["k"] = o.k;
    doc["m"] = o.m;
    doc["mu"] = mu.parts();
    doc["terms"] = nlohmann::ordered_json::array();
    for (const auto& [lambda, c] : e.terms()) {
        nlohmann::ordered_json term;
        term["lambda"] = lambda.parts();
        term["coeff"] = c;
        doc["terms"].push_back(std::move(term));
    }
    out << doc.dump() << '\n';
    return kExitOk;
}

int cmd_tilings(const Options& o, std::ostream& out) {
    const SkewShape shape = shape_flags(partition_flag("lambda", o.lambda), partition_flag("mu", o.mu));
    if (o.census) {
        const Census c = census(o.k, shape);
        out << "n\ttotal\todd\teven\n";
        for (const auto& [n, e] : c.by_n) {
            if (o.n && *o.n != n) continue;
            out << n << '\t' << e.total << '\t' << e.odd << '\t' << e.even << '\n';
        }
        return kExitOk;
    }
    std::size_t shown = 0;
    for (const ProperTiling& t : enumerate_proper_tilings(o.k, shape)) {
        const int n = t.nu.size() - shape.inner().size();
        if (o.n && *o.n != n) continue;
        out << "n=" << n << " nu=" << to_string(t.nu) << " ribbons=" << t.ribbons.size()
            << " rows=" << t.total_rows() << (t.odd() ? " odd" : " even") << '\n';
        if (o.render) out << render_tiling(shape, t) << '\n';
        ++shown;
    }
    if (shown == 0) out << "no proper tilings\n";
    return kExitOk;
}

int cmd_kcore(const Options& o, std::ostream& out) {
    const Partition lambda = partition_flag("lambda", o.lambda);
    out << to_string(k_core(lambda, o.k)) << '\n';
    if (o.chain) {
        for (const SkewShape& step : ribbon_decomposition(lambda, o.k))
            out << to_string(step.inner()) << " -> " << to_string(step.outer()) << "  rows=" << step.rows()
                << '\n';
        out << "sign " << petrie_core(o.k, lambda) << '\n';
    }
    return kExitOk;
}

int cmd_specialize(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.k < 2) throw UsageError("--k must be at least 2 for root-of-unity evaluation");
    const SkewShape shape = shape_flags(partition_flag("lambda", o.lambda), partition_flag("mu", o.mu));
    const int tiling = specialize_roots(o.k, shape);
    const CyclotomicInt oracle_value = oracle::cyclotomic_eval_schur(o.k, shape);
    out << "tiling " << tiling << '\n';
    out << "oracle " << oracle_value.to_string() << '\n';
    if (oracle_value.to_integer() != tiling) {
        err << "mismatch between dual-tiling value and cyclotomic evaluation\n";
        return kExitDisagreement;
    }
    return kExitOk;
}

using Suite = std::function<std::vector<verify::CheckResult>(int, int)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
    static const std::vector<std::pair<std::string, Suite>> table = {
        {"pieri",
         [](int s, int k) {
             auto r = verify::method_agreement(s, k);
             r.push_back(verify::pieri_vs_oracle(s, k, std::min(s, 4)));
             return r;
         }},
        {"census", [](int s, int k) { return verify::census_laws(s, k); }},
        {"core",
         [](int s, int k) {
             return std::vector{verify::empty_mu_structure(s, k), verify::core_order_independence(s, k)};
         }},
        {"special", [](int s, int) { return std::vector{verify::specializations(s, {2, 3, 4, 6})}; }},
        {"mn", [](int s, int k) { return std::vector{verify::mn_vs_oracle(s, k)}; }},
        {"closed", [](int, int k) { return std::vector{verify::closed_forms(k, k, 4)}; }},
        {"oracle", [](int s, int k) { return verify::oracle_consistency(s, k, s, s); }},
    };
    return table;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.max_size < 1 || o.max_k < 2) throw UsageError("verify needs --max-size >= 1 and --max-k >= 2");
    bool all_passed = true;
    std::vector<std::pair<std::string, bool>> verdicts;
    for (const auto& [name, suite] : suites()) {
        if (o.suite != "all" && o.suite != name) continue;
        bool passed = true;
        for (const auto& r : suite(o.max_size, o.max_k)) {
            out << r.summary() << '\n';
            passed = passed && r.passed();
        }
        verdicts.emplace_back(name, passed);
        all_passed = all_passed && passed;
    }
    out << '\n';
    for (const auto& [name, passed] : verdicts) out << "suite " << name << ": " << (passed ? "PASS" : "FAIL") << '\n';
    return all_passed ? kExitOk : kExitVerifyFailed;
}

int cmd_render(const Options& o, std::ostream& out) {
    out << render(shape_flags(partition_flag("lambda", o.lambda), partition_flag("mu", o.mu)));
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-Petrie numbers, Petrie symmetric function expansions and their verification", "petrie"};
    app.require_subcommand(1);
    Options o;

    auto add_k = [&](CLI::App* sub) { sub->add_option("--k", o.k, "ribbon size k")->required()->check(CLI::Range(1, 1 << 20)); };
    auto add_lambda = [&](CLI::App* sub) {
        sub->add_option("--lambda", o.lambda, "outer partition, e.g. 5,3,1")->required();
    };
    auto add_mu = [&](CLI::App* sub) { sub->add_option("--mu", o.mu, "inner partition (default empty)"); };

    auto* petrie = app.add_subcommand("petrie", "k-Petrie number of lambda/mu");
    add_k(petrie);
    add_lambda(petrie);
    add_mu(petrie);
    petrie->add_option("--method", o.method, "det, tiling, core or all")
        ->check(CLI::IsMember({"det", "tiling", "core", "all"}));

    auto* expand = app.add_subcommand("expand", "Schur expansion of G(k,m) s_mu");
    add_k(expand);
    expand->add_option("--m", o.m, "degree m")->required()->check(CLI::NonNegativeNumber);
    add_mu(expand);
    expand->add_flag("--json", o.json, "structured output");

    auto* tilings = app.add_subcommand("tilings", "proper tilings of lambda/mu");
    add_k(tilings);
    add_lambda(tilings);
    add_mu(tilings);
    tilings->add_option("--n", o.n, "only tilings with |nu/mu| = n")->check(CLI::NonNegativeNumber);
    tilings->add_flag("--render", o.render, "draw each tiling");
    tilings->add_flag("--census", o.census, "print total/odd/even counts per n");

    auto* kcore = app.add_subcommand("kcore", "k-core of lambda");
    add_k(kcore);
    add_lambda(kcore);
    kcore->add_flag("--chain", o.chain, "print a ribbon decomposition chain");

    auto* specialize = app.add_subcommand("specialize", "s_{lambda/mu} at powers of a primitive k-th root of unity");
    add_k(specialize);
    add_lambda(specialize);
    add_mu(specialize);

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive small-case checks");
    std::vector<std::string> suite_names{"all"};
    for (const auto& [name, suite] : suites()) suite_names.push_back(name);
    verify_cmd->add_option("--suite", o.suite, "pieri, census, core, special, mn, closed, oracle or all")
        ->check(CLI::IsMember(suite_names));
    verify_cmd->add_option("--max-size", o.max_size, "largest partition size swept");
    verify_cmd->add_option("--max-k", o.max_k, "largest k swept");

    auto* render_cmd = app.add_subcommand("render", "ASCII diagram of lambda/mu");
    add_lambda(render_cmd);
    add_mu(render_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (petrie->parsed()) return cmd_petrie(o, out, err);
        if (expand->parsed()) return cmd_expand(o, out);
        if (tilings->parsed()) return cmd_tilings(o, out);
        if (kcore->parsed()) return cmd_kcore(o, out);
        if (specialize->parsed()) return cmd_specialize(o, out, err);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
        if (render_cmd->parsed()) return cmd_render(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace petrie::cli
