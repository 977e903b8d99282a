#pragma once

// The sephyp command line. Kept in a header so tests can drive it in-process
// with captured streams.
//
// Exit codes: 0 ok, 2 invalid certificate, 64 parse error, 65 budget exceeded,
// 66 inapplicable flag, 67 not a matroid, 70 internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sephyp/sephyp.hpp"

namespace sephyp::cli {

enum exit_code : int {
    ok = 0,
    invalid_certificate = 2,
    parse_error = 64,
    budget = 65,
    inapplicable = 66,
    not_matroid = 67,
    internal_error = 70,
};

inline int exit_code_for(errc code) {
    switch (code) {
    case errc::invalid_input:
    case errc::invalid_partition:
    case errc::rank_zero:
    case errc::rank_collapse:
        return parse_error;
    case errc::budget_exceeded:
        return budget;
    case errc::not_a_graph:
    case errc::precondition_violated:
    case errc::has_loops:
        return inapplicable;
    case errc::not_a_matroid:
        return not_matroid;
    case errc::oracle_inconsistent:
    case errc::internal:
        return internal_error;
    }
    return internal_error;
}

using json = nlohmann::json;

struct Options {
    std::string output = "text";
    // decide / verify / analyze / matroid / oracle-decide / search-cert
    std::string instance;
    std::string certificate;
    std::string certificate_out;
    std::string method = "lp";
    // analyze
    bool exchangeable = false;
    bool summable = false;
    std::optional<int> monotone;
    bool orderable = false;
    std::string multipartite;
    // matroid
    std::string matroid_command;
    // oracle-decide
    std::optional<std::size_t> max_queries;
    // adversary
    int k = 0;
    // enumerate
    int n = 0;
    std::string cls = "all";
    std::string check = "theorems";
    // search-cert
    std::optional<int> max_support;
};

class Runner {
public:
    Runner(const Options& opt, std::ostream& out, std::ostream& err)
        : opt_(opt), out_(out), err_(err), budgets_(Budgets::from_environment()) {}

    bool json_output() const { return opt_.output == "json"; }

    int decide_cmd() {
        const auto h = load_hypergraph(opt_.instance);
        const auto cert = opt_.method == "fm" ? decide_fm(h, budgets_) : decide(h, budgets_);
        if (!opt_.certificate_out.empty())
            write_file(opt_.certificate_out, io::to_json(cert).dump(2) + "\n");
        if (json_output())
            emit({{"verdict", to_string(cert.kind())}, {"method", opt_.method}, {"certificate", io::to_json(cert)}});
        else
            out_ << to_string(cert.kind()) << "\n";
        return ok;
    }

    int verify_cmd() {
        const auto h = load_hypergraph(opt_.instance);
        const auto cert = io::certificate_from_json(io::read_file(opt_.certificate), h);
        const auto bad = find_certificate_violation(h, cert);
        if (json_output())
            emit({{"valid", !bad}, {"kind", to_string(cert.kind())}, {"violation", bad ? json(*bad) : json(nullptr)}});
        else if (bad)
            out_ << "invalid: " << *bad << "\n";
        else
            out_ << "valid " << to_string(cert.kind()) << " certificate\n";
        return bad ? invalid_certificate : ok;
    }

    int analyze_cmd() {
        const auto h = load_hypergraph(opt_.instance);
        if (opt_.orderable)
            require(h.k() == 2, errc::not_a_graph, "--orderable needs a graph (k = 2), got k=" + std::to_string(h.k()));
        if (opt_.monotone)
            require(*opt_.monotone >= 1 && *opt_.monotone <= h.n(), errc::precondition_violated,
                    "--monotone needs 1 <= r <= n");
        std::optional<Partition> partition;
        if (!opt_.multipartite.empty()) {
            partition = io::partition_from_json(io::read_file(opt_.multipartite), h.n());
            validate_partition(*partition, h.n(), h.k());
        }

        json report = json::object();
        std::vector<std::string> lines;
        if (opt_.exchangeable) {
            const auto w = is_exchangeable(h);
            report["exchangeable"] = w ? json{{"e1", w->e1.one_based()}, {"e2", w->e2.one_based()},
                                              {"v1", w->v1 + 1}, {"v2", w->v2 + 1}}
                                       : json(false);
            lines.push_back(w ? "exchangeable: yes (E1=" + to_string(w->e1) + " E2=" + to_string(w->e2) +
                                    " v1=" + std::to_string(w->v1 + 1) + " v2=" + std::to_string(w->v2 + 1) + ")"
                              : "exchangeable: no");
        }
        if (opt_.summable) {
            const auto q = find_summable_quadruple(h);
            report["summable"] = q ? json{{"e1", q->e1.one_based()}, {"e2", q->e2.one_based()},
                                          {"f1", q->f1.one_based()}, {"f2", q->f2.one_based()}}
                                   : json(false);
            lines.push_back(q ? "summable: yes (E1=" + to_string(q->e1) + " E2=" + to_string(q->e2) +
                                    " F1=" + to_string(q->f1) + " F2=" + to_string(q->f2) + ")"
                              : "summable: no");
        }
        if (opt_.monotone) {
            const int r = *opt_.monotone;
            const bool mono = is_r_monotone(h, r, budgets_);
            report[std::to_string(r) + "-monotone"] = mono;
            lines.push_back(std::to_string(r) + "-monotone: " + (mono ? "yes" : "no"));
        }
        if (opt_.orderable) {
            const auto o = graph_orderable(h);
            if (o) {
                json order = json::array();
                std::string text;
                for (std::size_t i = 0; i < o->order.size(); ++i) {
                    const bool dom = o->tags[i] == OrderTag::dominating;
                    order.push_back({{"vertex", o->order[i] + 1}, {"tag", dom ? "dominating" : "isolated"}});
                    text += (i ? " " : "") + std::to_string(o->order[i] + 1) + (dom ? "d" : "i");
                }
                report["orderable"] = order;
                lines.push_back("orderable: yes (" + text + ")");
            } else {
                report["orderable"] = false;
                lines.push_back("orderable: no");
            }
        }
        if (partition) {
            const bool multi = is_multipartite(h, *partition);
            report["multipartite"] = multi;
            lines.push_back(std::string("multipartite: ") + (multi ? "yes" : "no"));
        }
        if (json_output())
            emit(report);
        else
            for (const auto& l : lines)
                out_ << l << "\n";
        return ok;
    }

    int matroid_cmd() {
        const auto h = load_hypergraph(opt_.instance);
        const auto& sub = opt_.matroid_command;
        if (sub == "verify") {
            const auto failure = find_exchange_failure(h);
            if (json_output()) {
                emit({{"matroid", !failure},
                      {"failure", failure ? json{{"e1", failure->e1.one_based()}, {"e2", failure->e2.one_based()},
                                                 {"v1", failure->v1 + 1}}
                                          : json(nullptr)}});
            } else if (failure) {
                out_ << "matroid: no (E1=" << to_string(failure->e1) << " E2=" << to_string(failure->e2)
                     << " v1=" << failure->v1 + 1 << ": no v2 in E2-E1 completes E1-v1)\n";
            } else {
                out_ << "matroid: yes\n";
            }
            return failure ? not_matroid : ok;
        }
        const BasisMatroid m(h);
        if (sub == "paving" || sub == "binary") {
            const bool yes = sub == "paving" ? is_paving(m) : is_binary(m, budgets_);
            if (json_output())
                emit({{sub, yes}});
            else
                out_ << sub << ": " << (yes ? "yes" : "no") << "\n";
        } else if (sub == "lines") {
            const auto dec = lines(m);
            json ls = json::array();
            for (auto l : dec.lines)
                ls.push_back(l.one_based());
            if (json_output()) {
                emit({{"lines", ls}, {"nontrivial", dec.nontrivial_count}, {"max_line_size", dec.max_line_size()}});
            } else {
                out_ << "lines:";
                for (auto l : dec.lines)
                    out_ << " " << to_string(l);
                out_ << "\nnontrivial: " << dec.nontrivial_count << "\n";
            }
        } else if (sub == "circuits") {
            const auto cs = circuits(m, budgets_);
            if (json_output()) {
                json arr = json::array();
                for (auto c : cs)
                    arr.push_back(c.one_based());
                emit({{"circuits", arr}});
            } else {
                for (auto c : cs)
                    out_ << to_string(c) << "\n";
            }
        } else {
            const auto l = loops(m);
            const auto c = coloops(m);
            if (json_output())
                emit({{"loops", l.one_based()}, {"coloops", c.one_based()}});
            else
                out_ << "loops: " << to_string(l) << "\ncoloops: " << to_string(c) << "\n";
        }
        return ok;
    }

    int oracle_decide_cmd() {
        const auto inst = io::instance_from_json(io::read_file(opt_.instance));
        require(!std::holds_alternative<Hypergraph>(inst), errc::precondition_violated,
                "oracle-decide needs a gf2 or graph instance");
        int k = 0;
        std::optional<IndependenceOracle> oracle;
        if (const auto* m = std::get_if<Gf2Matrix>(&inst)) {
            k = m->rank();
            oracle.emplace(make_oracle(*m));
        } else {
            const auto& g = std::get<Graph>(inst);
            k = g.rank();
            oracle.emplace(make_oracle(g));
        }
        require(k >= 1, errc::rank_zero, "matroid has rank 0");
        oracle->set_limit(opt_.max_queries);
        const int n = oracle->n();
        const auto d = decide_binary_via_oracle(n, k, *oracle);
        const auto bound = static_cast<std::size_t>(n) + binomial(static_cast<std::uint64_t>(n), 2);

        // Cross-check against the LP on the materialized bases when that is possible.
        std::optional<Kind> lp;
        if (k < n) {
            try {
                lp = decide(io::materialize(inst, budgets_), budgets_).kind();
            } catch (const error& e) {
                if (e.code() != errc::budget_exceeded)
                    throw;
            }
        }
        require(!lp || *lp == d.verdict, errc::internal, "oracle verdict disagrees with decide");
        if (json_output()) {
            auto j = io::to_json(d);
            j["n"] = n;
            j["k"] = k;
            j["query_bound"] = bound;
            j["decide"] = lp ? json(std::string(to_string(*lp))) : json(nullptr);
            emit(j);
        } else {
            out_ << to_string(d.verdict) << "\nqueries: " << d.queries_used << " (bound " << bound << ")\n";
            out_ << "decide: " << (lp ? std::string(to_string(*lp)) : std::string("skipped")) << "\n";
        }
        return ok;
    }

    int adversary_cmd() {
        const auto inst = build_adversary(opt_.k, budgets_);
        const int n = 2 * opt_.k;
        struct Run {
            const char* name;
            Strategy strategy;
        };
        const std::vector<Run> runs{{"query-nothing", strategies::query_nothing()},
                                    {"binary-algorithm", strategies::binary_algorithm(n, opt_.k)}};
        json reports = json::array();
        for (const auto& run : runs) {
            const auto rep = run_indistinguishability_check(inst, run.strategy, std::nullopt, budgets_);
            auto j = io::to_json(rep);
            j["strategy"] = run.name;
            reports.push_back(j);
            if (!json_output())
                print_adversary_text(run.name, rep);
        }
        if (json_output())
            emit({{"k", opt_.k}, {"h1", io::to_json(inst.h1)}, {"h2", io::to_json(inst.h2)},
                  {"f1", inst.f1.one_based()}, {"f2", inst.f2.one_based()}, {"reports", reports}});
        return ok;
    }

    int enumerate_cmd() {
        require(opt_.check == "theorems", errc::precondition_violated, "--check supports only 'theorems'");
        const auto cls = parse_instance_class(opt_.cls);
        const auto rep = enumerate_and_check(opt_.n, opt_.k, cls, budgets_);
        const auto& c = rep.counts;
        if (json_output()) {
            json viol = json::array();
            for (const auto& v : rep.violations)
                viol.push_back({{"check", v.check}, {"detail", v.detail}, {"instance", io::to_json(v.instance)}});
            emit({{"n", rep.n}, {"k", rep.k}, {"class", to_string(rep.cls)}, {"scanned", rep.scanned},
                  {"counts", {{"total", c.total}, {"separable", c.separable}, {"equatable", c.equatable},
                              {"exchangeable", c.exchangeable}, {"matroids", c.matroids}, {"paving", c.paving},
                              {"binary", c.binary}}},
                  {"open_question_counterexamples", c.open_question_counterexamples},
                  {"violations", viol}});
        } else {
            out_ << "n=" << rep.n << " k=" << rep.k << " class=" << to_string(rep.cls) << " scanned=" << rep.scanned << "\n"
                 << "total: " << c.total << "\nseparable: " << c.separable << "\nequatable: " << c.equatable
                 << "\nexchangeable: " << c.exchangeable << "\nmatroids: " << c.matroids << "\npaving: " << c.paving
                 << "\nbinary: " << c.binary << "\n2-monotone equatable matroids: " << c.open_question_counterexamples
                 << "\nviolations: " << rep.violations.size() << "\n";
            for (const auto& v : rep.violations)
                out_ << "VIOLATION " << v.check << ": " << v.detail << "\n" << io::to_json(v.instance).dump() << "\n";
        }
        return rep.violations.empty() ? ok : internal_error;
    }

    int search_cert_cmd() {
        const auto h = load_hypergraph(opt_.instance);
        const int s = opt_.max_support.value_or(2 * h.k());
        const auto y = find_binary_certificate(h, s, budgets_);
        if (y && !opt_.certificate_out.empty())
            write_file(opt_.certificate_out, io::to_json(Certificate(*y)).dump(2) + "\n");
        if (json_output()) {
            emit({{"max_support", s}, {"found", y.has_value()}, {"certificate", y ? io::to_json(Certificate(*y)) : json(nullptr)}});
        } else if (y) {
            out_ << "found 0/1 certificate with " << y->entries.size() << " ones:";
            for (const auto& [set, val] : y->entries)
                out_ << " " << to_string(set);
            out_ << "\n";
        } else {
            out_ << "none with at most " << s << " ones\n";
        }
        return ok;
    }

private:
    Hypergraph load_hypergraph(const std::string& path) const {
        return io::materialize(io::instance_from_json(io::read_file(path)), budgets_);
    }

    void emit(const json& j) const { out_ << j.dump(2) << "\n"; }

    static void write_file(const std::string& path, const std::string& text) {
        std::ofstream f(path);
        require(f.good(), errc::invalid_input, "cannot write " + path);
        f << text;
    }

    void print_adversary_text(const char* name, const IndistinguishabilityReport& rep) const {
        out_ << "strategy " << name << ": verdict "
             << (rep.verdict ? std::string(to_string(*rep.verdict)) : std::string("none (budget)")) << ", " << rep.queries
             << " queries, " << rep.ksets_queried << " k-sets\n";
        out_ << "  consistent with h2: " << (rep.consistent_with_h2 ? "yes" : "no")
             << "; pairs touched " << rep.pairs_touched << " of " << rep.complementary_pairs
             << " (thresholds: 2^k-1 = " << rep.query_threshold << ", C(2k,k)/2 = " << rep.complementary_pairs << ")\n";
        if (rep.unqueried_pair) {
            out_ << "  unqueried pair: " << to_string(rep.unqueried_pair->first) << " "
                 << to_string(rep.unqueried_pair->second) << "; alternative is " << to_string(*rep.alternative_kind)
                 << (rep.alternative_consistent ? " and answer-identical" : " but distinguishable") << "\n";
            if (!rep.wrong_on.empty())
                out_ << "  verdict is wrong on " << rep.wrong_on << "\n";
        }
    }

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
    Budgets budgets_;
};

/// Parses argv and runs one subcommand; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Separability and equatability of uniform hypergraphs", "sephyp"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--output", opt.output, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* decide_app = app.add_subcommand("decide", "Decide separable vs equatable with a certificate");
    decide_app->add_option("instance", opt.instance, "Instance JSON")->required();
    decide_app->add_option("--certificate-out", opt.certificate_out, "Write the certificate here");
    decide_app->add_option("--method", opt.method, "lp or fm")->check(CLI::IsMember({"lp", "fm"}));

    auto* verify_app = app.add_subcommand("verify", "Check a certificate against an instance");
    verify_app->add_option("instance", opt.instance, "Instance JSON")->required();
    verify_app->add_option("certificate", opt.certificate, "Certificate JSON")->required();

    auto* analyze_app = app.add_subcommand("analyze", "Structural predicates with witnesses");
    analyze_app->add_option("instance", opt.instance, "Instance JSON")->required();
    analyze_app->add_flag("--exchangeable", opt.exchangeable);
    analyze_app->add_flag("--summable", opt.summable);
    analyze_app->add_option("--monotone", opt.monotone, "r for r-monotonicity");
    analyze_app->add_flag("--orderable", opt.orderable);
    analyze_app->add_option("--multipartite", opt.multipartite, "Partition JSON");

    auto* matroid_app = app.add_subcommand("matroid", "Matroid predicates on the edges as bases");
    matroid_app->add_option("command", opt.matroid_command, "verify|paving|binary|lines|circuits|loops")
        ->required()
        ->check(CLI::IsMember({"verify", "paving", "binary", "lines", "circuits", "loops"}));
    matroid_app->add_option("instance", opt.instance, "Instance JSON")->required();

    auto* oracle_app = app.add_subcommand("oracle-decide", "Decide a binary matroid from independence queries");
    oracle_app->add_option("instance", opt.instance, "gf2 or graph JSON")->required();
    oracle_app->add_option("--max-queries", opt.max_queries, "Query limit");

    auto* adversary_app = app.add_subcommand("adversary", "Indistinguishable paving matroid pair");
    adversary_app->add_option("--k", opt.k, "Rank")->required();

    auto* enumerate_app = app.add_subcommand("enumerate", "Exhaustive theorem verification");
    enumerate_app->add_option("--n", opt.n)->required();
    enumerate_app->add_option("--k", opt.k)->required();
    enumerate_app->add_option("--class", opt.cls)
        ->check(CLI::IsMember({"all", "graphs", "matroids", "paving", "binary", "multipartite"}));
    enumerate_app->add_option("--check", opt.check);

    auto* search_app = app.add_subcommand("search-cert", "Search 0/1 equatable certificates by support size");
    search_app->add_option("instance", opt.instance, "Instance JSON")->required();
    search_app->add_option("--max-support", opt.max_support, "Largest number of ones (default 2k)");
    search_app->add_option("--certificate-out", opt.certificate_out, "Write the certificate here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return parse_error;
    }

    try {
        Runner runner(opt, out, err);
        if (decide_app->parsed())
            return runner.decide_cmd();
        if (verify_app->parsed())
            return runner.verify_cmd();
        if (analyze_app->parsed())
            return runner.analyze_cmd();
        if (matroid_app->parsed())
            return runner.matroid_cmd();
        if (oracle_app->parsed())
            return runner.oracle_decide_cmd();
        if (adversary_app->parsed())
            return runner.adversary_cmd();
        if (enumerate_app->parsed())
            return runner.enumerate_cmd();
        return runner.search_cert_cmd();
    } catch (const error& e) {
        err << "sephyp: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "sephyp: internal: " << e.what() << "\n";
        return internal_error;
    }
}

} // namespace sephyp::cli
