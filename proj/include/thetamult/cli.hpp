#pragma once

// Command-line surface: multiplicity queries, skeleton traces, exponent
// vectors, and the oracle-equivalence verification sweep. All output is
// byte-deterministic for a fixed configuration.

#include <atomic>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetamult/partial_perm.hpp"
#include "thetamult/skeleton.hpp"

namespace thetamult {

inline constexpr const char* kSchemaTag = "theta-mult/1";

struct RunConfig {
    std::uint64_t ell = 5;
    int d = 1;
    std::string field_choice = "prime_field";  // or "rational"
    bool strict_zero_mode = false;
    std::string output_format = "json";  // json | csv | tex
    int max_n = 3;                       // verify sweep bound
    int workers = 0;                     // 0 = hardware concurrency
};

namespace cli_detail {

using json = nlohmann::ordered_json;

inline json partition_json(const Partition& p) {
    if (p.is_zero()) return json("0");
    if (p.is_empty()) return json("empty");
    return json(p.parts());
}

inline json table_json(const MultiplicityTable& t) {
    json j;
    j["schema"] = kSchemaTag;
    j["lambda"] = partition_json(t.lambda);
    j["mu"] = partition_json(t.mu);
    j["per_rank"] = t.per_rank;
    j["total"] = t.total;
    j["method"] = t.method;
    j["ell"] = t.ell;
    return j;
}

inline void print_table(std::ostream& out, const MultiplicityTable& t, const std::string& format) {
    if (format == "csv") {
        out << "lambda,mu,r,d_r,method,ell\n";
        for (std::size_t r = 0; r < t.per_rank.size(); ++r)
            out << t.lambda.to_string() << "," << t.mu.to_string() << "," << r << ","
                << t.per_rank[r] << "," << t.method << "," << t.ell << "\n";
        out << t.lambda.to_string() << "," << t.mu.to_string() << ",total," << t.total << ","
            << t.method << "," << t.ell << "\n";
    } else if (format == "tex") {
        out << "\\begin{tabular}{lr}\n\\toprule\n$r$ & $d^r$ \\\\\n\\midrule\n";
        for (std::size_t r = 0; r < t.per_rank.size(); ++r)
            out << r << " & " << t.per_rank[r] << " \\\\\n";
        out << "\\midrule\ntotal & " << t.total << " \\\\\n\\bottomrule\n\\end{tabular}\n";
    } else {
        out << table_json(t).dump(2) << "\n";
    }
}

// "triv:n=K" / "triv:m=K" or a multisegment literal.
inline IrrParam parse_param(const std::string& text, const LineContext& line) {
    if (text.rfind("triv:", 0) == 0) {
        std::string rest = text.substr(5);
        if (rest.rfind("n=", 0) != 0 && rest.rfind("m=", 0) != 0)
            throw std::invalid_argument("trivial-representation literal must be triv:n=K: " + text);
        long long k = std::stoll(rest.substr(2));
        return trivial_rep_param(k, line);
    }
    return IrrParam(Multisegment::parse(text, line));
}

inline json trace_json(const std::vector<TraceStep>& trace) {
    json arr = json::array();
    for (const auto& t : trace) {
        json e;
        e["step"] = t.step;
        e["info"] = t.info;
        arr.push_back(std::move(e));
    }
    return arr;
}

struct VerifyRow {
    int n, m, r;
    Partition lambda, mu;
    long long d_rank_v, d_char_v, d_module_v;
    bool agree;
};

inline std::vector<VerifyRow> run_verify_sweep(int max_n, std::uint64_t ell, int workers) {
    struct Job {
        int n, m, r;
        Partition lambda, mu;
    };
    std::vector<Job> jobs;
    for (int n = 1; n <= max_n; ++n)
        for (int m = 1; m <= max_n; ++m)
            for (const auto& lambda : l_regular_partitions_of(n, static_cast<long long>(ell)))
                for (const auto& mu : l_regular_partitions_of(m, static_cast<long long>(ell)))
                    for (int r = 0; r <= std::min(n, m); ++r)
                        jobs.push_back(Job{n, m, r, lambda, mu});

    std::vector<VerifyRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            const Job& j = jobs[i];
            VerifyRow row;
            row.n = j.n;
            row.m = j.m;
            row.r = j.r;
            row.lambda = j.lambda;
            row.mu = j.mu;
            row.d_rank_v = d_rank(j.lambda, j.mu, j.r);
            row.d_char_v = d_char_oracle(j.lambda, j.mu, j.r);
            row.d_module_v = d_module_oracle(j.lambda, j.mu, j.r, ell);
            row.agree = row.d_rank_v == row.d_char_v && row.d_char_v == row.d_module_v;
            rows[i] = std::move(row);
        }
    };
    int nthreads = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return rows;
}

}  // namespace cli_detail

// Entry point used by the binary and the tests. Returns the exit code:
// 0 success, 1 verification mismatch, 2 parse error, 3 size-limit rejection.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using cli_detail::json;
    CLI::App app{"exact multiplicities of the l-modular theta correspondence in type II"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string lambda_text, mu_text, pi_text, pip_text;
    std::string method = "strip";
    bool allow_oracle = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", cfg.output_format, "json, csv or tex")
            ->check(CLI::IsMember({"json", "csv", "tex"}));
    };

    CLI::App* dmult = app.add_subcommand("dmult", "multiplicity d_{lambda,mu} with per-rank table");
    dmult->add_option("--lambda", lambda_text, "partition literal, e.g. [3,1]")->required();
    dmult->add_option("--mu", mu_text, "partition literal")->required();
    dmult->add_option("--ell", cfg.ell, "prime l")->required();
    dmult->add_option("--method", method, "strip, closed, char or module")
        ->check(CLI::IsMember({"strip", "closed", "char", "module"}));
    add_format(dmult);

    CLI::App* oracle = app.add_subcommand("oracle", "force the module-theoretic brute force");
    oracle->add_option("--lambda", lambda_text)->required();
    oracle->add_option("--mu", mu_text)->required();
    oracle->add_option("--ell", cfg.ell)->required();
    oracle->add_option("--field", cfg.field_choice, "prime_field (F_ell Hom) or rational (Q Specht Hom)")
        ->check(CLI::IsMember({"prime_field", "rational"}));
    add_format(oracle);

    auto add_skeleton_opts = [&](CLI::App* cmd) {
        cmd->add_option("--pi", pi_text, "multisegment literal or triv:n=K")->required();
        cmd->add_option("--pip", pip_text, "multisegment literal or triv:m=K")->required();
        cmd->add_option("--d", cfg.d, "order of q mod l")->required();
        cmd->add_option("--ell", cfg.ell, "prime l")->required();
        cmd->add_flag("--strict-zero", cfg.strict_zero_mode,
                      "return empty (multiplicity 0) instead of the formal zero when n != m mod d");
        add_format(cmd);
    };
    CLI::App* skc = app.add_subcommand("sk", "skeleton map with trace");
    add_skeleton_opts(skc);
    CLI::App* theta = app.add_subcommand("theta", "theta multiplicity dim Hom(S(Mat), pi (x) pi')");
    add_skeleton_opts(theta);
    theta->add_flag("--allow-oracle", allow_oracle,
                    "outside the semisimple range, fall back to the module oracle");

    CLI::App* expo = app.add_subcommand("exponents", "the exponent vector d_i(pi), i mod d");
    expo->add_option("--pi", pi_text, "multisegment literal or triv:n=K")->required();
    expo->add_option("--d", cfg.d)->required();
    expo->add_option("--ell", cfg.ell)->required();
    expo->add_flag("--allow-oracle", allow_oracle);
    add_format(expo);

    CLI::App* verify = app.add_subcommand("verify", "oracle-equivalence sweep; exit 1 on mismatch");
    verify->add_option("--max-n", cfg.max_n, "sweep bound for n, m")->required();
    verify->add_option("--ell", cfg.ell)->required();
    verify->add_option("--workers", cfg.workers, "worker pool size (0 = hardware)");
    add_format(verify);

    std::vector<std::string> argv_copy = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("thetamult");
        for (const auto& a : argv_copy) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (dmult->parsed() || oracle->parsed()) {
            Partition lambda = Partition::parse(lambda_text);
            Partition mu = Partition::parse(mu_text);
            MultiplicityTable table;
            if (oracle->parsed() && cfg.field_choice == "rational") {
                table.lambda = lambda;
                table.mu = mu;
                table.method = "module_oracle_rational";
                table.ell = cfg.ell;
                if (!lambda.degenerate() && !mu.degenerate()) {
                    int rmax = static_cast<int>(std::min(lambda.size(), mu.size()));
                    for (int r = 0; r <= rmax; ++r)
                        table.per_rank.push_back(d_specht_oracle_rational(lambda, mu, r));
                    for (long long v : table.per_rank) table.total += v;
                } else {
                    table.total = (lambda.is_empty() || mu.is_empty()) ? 0 : 1;
                }
            } else {
                MultMethod mm = MultMethod::strip;
                if (oracle->parsed() || method == "module") mm = MultMethod::module_oracle;
                else if (method == "closed") mm = MultMethod::closed_form;
                else if (method == "char") mm = MultMethod::char_oracle;
                table = multiplicity_table(lambda, mu, cfg.ell, mm);
            }
            cli_detail::print_table(out, table, cfg.output_format);
            return 0;
        }

        if (skc->parsed() || theta->parsed()) {
            LineContext line(cfg.d, 1, cfg.ell);
            IrrParam pi = cli_detail::parse_param(pi_text, line);
            IrrParam pip = cli_detail::parse_param(pip_text, line);
            SkeletonResult r = sk(pi, pip, cfg.strict_zero_mode);
            json j;
            j["schema"] = kSchemaTag;
            j["n"] = pi.degree();
            j["m"] = pip.degree();
            j["d"] = cfg.d;
            j["ell"] = cfg.ell;
            j["sk"] = json::array({cli_detail::partition_json(r.first),
                                   cli_detail::partition_json(r.second)});
            if (theta->parsed()) {
                long long mult = d_total(r.first, r.second, cfg.ell,
                                         allow_oracle ? OutOfRangePolicy::module_oracle
                                                      : OutOfRangePolicy::reject);
                j["multiplicity"] = mult;
            }
            j["trace"] = cli_detail::trace_json(r.trace);
            out << j.dump(2) << "\n";
            return 0;
        }

        if (expo->parsed()) {
            LineContext line(cfg.d, 1, cfg.ell);
            IrrParam pi = cli_detail::parse_param(pi_text, line);
            std::vector<long long> exps;
            for (int i = 0; i < cfg.d; ++i)
                exps.push_back(d_i_exponent(pi, i, allow_oracle ? OutOfRangePolicy::module_oracle
                                                                : OutOfRangePolicy::reject));
            json j;
            j["schema"] = kSchemaTag;
            j["n"] = pi.degree();
            j["d"] = cfg.d;
            j["ell"] = cfg.ell;
            j["exponents"] = exps;
            out << j.dump(2) << "\n";
            return 0;
        }

        if (verify->parsed()) {
            auto rows = cli_detail::run_verify_sweep(cfg.max_n, cfg.ell, cfg.workers);
            long long mismatches = 0;
            for (const auto& r : rows)
                if (!r.agree) ++mismatches;
            if (cfg.output_format == "csv" || cfg.output_format == "tex") {
                out << "lambda,mu,r,d_rank,d_char,d_module,agree\n";
                for (const auto& r : rows)
                    out << r.lambda.to_string() << "," << r.mu.to_string() << "," << r.r << ","
                        << r.d_rank_v << "," << r.d_char_v << "," << r.d_module_v << ","
                        << (r.agree ? "yes" : "no") << "\n";
                out << "# mismatches," << mismatches << "\n";
            } else {
                json j;
                j["schema"] = kSchemaTag;
                j["max_n"] = cfg.max_n;
                j["ell"] = cfg.ell;
                json arr = json::array();
                for (const auto& r : rows) {
                    json e;
                    e["lambda"] = cli_detail::partition_json(r.lambda);
                    e["mu"] = cli_detail::partition_json(r.mu);
                    e["r"] = r.r;
                    e["d_rank"] = r.d_rank_v;
                    e["d_char"] = r.d_char_v;
                    e["d_module"] = r.d_module_v;
                    e["agree"] = r.agree;
                    arr.push_back(std::move(e));
                }
                j["rows"] = std::move(arr);
                j["mismatches"] = mismatches;
                out << j.dump(2) << "\n";
            }
            return mismatches == 0 ? 0 : 1;
        }
    } catch (const SizeLimitError& e) {
        err << "size limit: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "rejected: " << e.what() << "\n";
        return 3;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace thetamult
