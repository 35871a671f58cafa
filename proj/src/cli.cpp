#include "twoschur/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "twoschur/decompose.hpp"
#include "twoschur/errors.hpp"
#include "twoschur/format.hpp"
#include "twoschur/idempotent.hpp"
#include "twoschur/serialize.hpp"
#include "twoschur/tensor_oracle.hpp"

namespace twoschur::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Partition parse_lambda(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
        throw UsageError("--lambda expects L1,L2, got '" + text + "'");
    }
    auto parse_part = [&text](const std::string& part) -> Natural {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("--lambda expects non-negative integers, got '" + text + "'");
        }
        try {
            return std::stoull(part);
        } catch (const std::exception&) {
            throw UsageError("--lambda part out of range in '" + text + "'");
        }
    };
    const Partition lambda{parse_part(text.substr(0, comma)), parse_part(text.substr(comma + 1))};
    if (lambda.first < lambda.second) throw UsageError("--lambda needs L1 >= L2, got '" + text + "'");
    return lambda;
}

void require_p3(Natural p)
{
    if (p != 3) throw UsageError("this command is only defined in characteristic 3 (got --p " + std::to_string(p) + ")");
}

std::string show(const Partition& p)
{
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string e_name(Natural m, Natural g)
{
    return "e_{" + std::to_string(m) + "," + std::to_string(g) + "}";
}

// Runs fn over items on `jobs` threads; results keep the input order.
template <typename T, typename R>
std::vector<R> parallel_map(const std::vector<T>& items, unsigned jobs, const std::function<R(const T&)>& fn)
{
    std::vector<std::optional<R>> slots(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t k = next++; k < items.size(); k = next++) slots[k].emplace(fn(items[k]));
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(items.size(), 1))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    std::vector<R> out;
    out.reserve(items.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

void print_report_text(const VerificationReport& report, std::ostream& out)
{
    const Natural m = report.lambda.first - report.lambda.second;
    out << "lambda=" << show(report.lambda) << " m=" << m << " p=" << report.p << ": " << report.summands.size()
        << (report.summands.size() == 1 ? " summand" : " summands") << "\n";
    for (const auto& s : report.summands) {
        out << "  g=" << s.g << "  mu=" << show(s.mu) << "  B=" << signed_residue(s.b_value, report.p) << "  "
            << e_name(m, s.g) << " = " << to_text(s.idempotent) << "\n";
    }
    out << "checks: idempotent=" << std::boolalpha << report.checks.idempotent
        << " orthogonal=" << report.checks.orthogonal << " sum_to_one=" << report.checks.sum_to_one
        << " count_match=" << report.checks.count_match << "\n";
}

int cmd_decompose(const Partition& lambda, Natural p, bool json, std::ostream& out)
{
    require_p3(p);
    const VerificationReport report = verify_complete_set(AlgebraContext(lambda.first, lambda.second, 3));
    if (json) {
        out << to_json(report).dump() << "\n";
    } else {
        print_report_text(report, out);
    }
    return report.ok() ? kExitOk : kExitFailure;
}

int cmd_idempotent(const Partition& lambda, Natural g, Natural p, bool json, bool factors, std::ostream& out)
{
    require_p3(p);
    const AlgebraContext ctx(lambda.first, lambda.second, 3);
    const AlgebraElement e = build(ctx, g);
    if (json) {
        out << to_json(e).dump() << "\n";
        return kExitOk;
    }
    out << e_name(ctx.m(), g) << " = " << to_text(e) << "\n";
    if (big_b(ctx.m(), g, 3) == 0) {
        out << "B(" << ctx.m() << "," << g << ") = C(" << ctx.m() + 2 * g << "," << g
            << ") is 0 mod 3, so Y^mu is not a summand and the idempotent vanishes\n";
    } else if (g > ctx.lambda2()) {
        out << "g=" << g << " exceeds lambda2=" << ctx.lambda2() << ", so the idempotent vanishes in this algebra\n";
    } else if (factors) {
        out << "factors: " << factor_sequence_string(ctx, g) << "\n";
    }
    return kExitOk;
}

int cmd_verify(Natural max_r, Natural p, unsigned jobs, bool json, std::ostream& out)
{
    require_p3(p);
    const auto lambdas = two_row_partitions(max_r);
    const auto reports = parallel_map<Partition, VerificationReport>(lambdas, jobs, [](const Partition& l) {
        return verify_complete_set(AlgebraContext(l.first, l.second, 3));
    });
    std::size_t failures = 0;
    const VerificationReport* first = nullptr;
    for (const auto& r : reports) {
        if (r.ok()) continue;
        ++failures;
        if (first == nullptr) first = &r;
    }
    if (json) {
        nlohmann::json doc = {{"max_r", max_r}, {"partitions", reports.size()}, {"failures", failures}};
        doc["first_counterexample"] = first ? to_json(*first) : nlohmann::json(nullptr);
        out << doc.dump() << "\n";
    } else if (failures == 0) {
        out << "verified " << reports.size() << " partitions with r <= " << max_r << ": all checks pass\n";
    } else {
        out << "FAIL: " << failures << " of " << reports.size() << " partitions with r <= " << max_r << " failed\n";
        out << "first counterexample lambda=" << show(first->lambda) << ": " << first->first_failure << "\n";
    }
    return failures == 0 ? kExitOk : kExitFailure;
}

int cmd_kostka_table(Natural max_r, Natural p, std::ostream& out)
{
    require_prime(p);
    out << "# kostka-table v1 p=" << p << "\n";
    out << "lambda1,lambda2,mu1,mu2,kostka\n";
    for (const auto& lambda : two_row_partitions(max_r)) {
        const Natural r = lambda.first + lambda.second;
        for (Natural mu2 = 0; 2 * mu2 <= r; ++mu2) {
            const Partition mu{r - mu2, mu2};
            out << lambda.first << "," << lambda.second << "," << mu.first << "," << mu.second << ","
                << kostka(lambda, mu, p) << "\n";
        }
    }
    return kExitOk;
}

int cmd_oracle_check(Natural max_r, bool json, std::ostream& out)
{
    if (max_r + 2 > kMaxTensorDegree) throw UsageError("--max-r is limited to " + std::to_string(kMaxTensorDegree - 2));
    const OracleReport report = cross_validate(static_cast<unsigned>(max_r));
    if (json) {
        out << to_json(report).dump() << "\n";
    } else {
        for (const auto& c : report.checks) {
            out << (c.ok() ? "PASS " : "FAIL ") << c.name << " (r <= " << c.max_r << ", " << c.cases
                << " partitions)";
            if (!c.ok()) out << ": " << c.failures << " failures, first: " << c.first_failure;
            out << "\n";
        }
    }
    return report.ok() ? kExitOk : kExitFailure;
}

}  // namespace

unsigned default_jobs()
{
    if (const char* env = std::getenv("SCHUR_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Primitive idempotents of two-row permutation module endomorphism algebras"};
    app.require_subcommand(1);

    std::string lambda_text;
    Natural p = 3;
    Natural g = 0;
    Natural max_r = 0;
    unsigned jobs = default_jobs();
    bool json = false;
    bool factors = false;

    auto* decompose = app.add_subcommand("decompose", "Young-module summands of M^lambda with their idempotents");
    decompose->add_option("--lambda", lambda_text, "Partition as L1,L2")->required();
    decompose->add_option("--p", p, "Characteristic (only 3 is supported)");
    decompose->add_flag("--json", json, "Emit the verification report as JSON");

    auto* idem = app.add_subcommand("idempotent", "Print e_{m,g} in S_F(lambda)");
    idem->add_option("--lambda", lambda_text, "Partition as L1,L2")->required();
    idem->add_option("--g", g, "Index g = lambda2 - mu2")->required();
    idem->add_option("--p", p, "Characteristic (only 3 is supported)");
    idem->add_flag("--json", json, "Emit the element as JSON");
    idem->add_flag("--factors", factors, "Also print the truncated factor sequence");

    auto* verify = app.add_subcommand("verify", "Check the complete-set properties for every lambda with r <= N");
    verify->add_option("--max-r", max_r, "Largest r = lambda1 + lambda2")->required();
    verify->add_option("--p", p, "Characteristic (only 3 is supported)");
    verify->add_option("--jobs", jobs, "Worker threads (default: SCHUR_JOBS or 1)")->check(CLI::PositiveNumber);
    verify->add_flag("--json", json, "Emit a JSON summary");

    auto* table = app.add_subcommand("kostka-table", "CSV of p-Kostka numbers for two-row partitions");
    table->add_option("--max-r", max_r, "Largest r")->required();
    table->add_option("--p", p, "Prime characteristic");

    auto* oracle = app.add_subcommand("oracle-check", "Cross-validate against the tensor-space oracle");
    oracle->add_option("--max-r", max_r, "Largest r")->required();
    oracle->add_flag("--json", json, "Emit a JSON summary");

    std::vector<std::string> argv_store{"twoschur"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (decompose->parsed()) return cmd_decompose(parse_lambda(lambda_text), p, json, out);
        if (idem->parsed()) return cmd_idempotent(parse_lambda(lambda_text), g, p, json, factors, out);
        if (verify->parsed()) return cmd_verify(max_r, p, jobs, json, out);
        if (table->parsed()) return cmd_kostka_table(max_r, p, out);
        if (oracle->parsed()) return cmd_oracle_check(max_r, json, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidPrime& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace twoschur::cli
