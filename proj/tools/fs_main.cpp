#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fslab/certificates.hpp"
#include "fslab/errors.hpp"
#include "fslab/fs_graph.hpp"
#include "fslab/graph.hpp"
#include "fslab/random_lab.hpp"
#include "fslab/theorems.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

int resolve_max_n() {
    if (const char* env = std::getenv("FS_MAX_N")) {
        try {
            size_t used = 0;
            int v = std::stoi(env, &used);
            if (used != std::string(env).size() || v < 1)
                throw std::invalid_argument("FS_MAX_N must be a positive integer");
            return v;
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("FS_MAX_N must be a positive integer");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("FS_MAX_N out of range");
        }
    }
    return fslab::kFsDefaultMaxN;
}

fslab::Bijection parse_bijection(const std::string& text, int n) {
    if (text.find(',') == std::string::npos) {
        size_t used = 0;
        uint64_t rank = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument("bad bijection rank: " + text);
        if (rank >= fslab::factorial(n))
            throw std::invalid_argument("bijection rank out of range for n=" + std::to_string(n));
        return fslab::unrank_perm(rank, n);
    }
    fslab::Bijection sigma;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) sigma.push_back(std::stoi(item));
    if (static_cast<int>(sigma.size()) != n || !fslab::is_permutation(sigma))
        throw std::invalid_argument("bad bijection string: " + text);
    return sigma;
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << payload << "\n";
}

json report_shell(const std::string& command) {
    json j;
    j["command"] = command;
    j["version"] = kVersion;
    return j;
}

json prediction_json(const fslab::Prediction& p) {
    json j;
    j["verdict"] = fslab::to_string(p.verdict);
    j["reasons"] = json::array();
    for (const auto& r : p.reasons) j["reasons"].push_back(fslab::to_string(r));
    return j;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<fslab::Graph> load_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open corpus file: " + path);
    std::vector<fslab::Graph> graphs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            graphs.push_back(fslab::parse_graph6(line));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (graphs.empty()) throw std::invalid_argument("corpus file is empty: " + path);
    return graphs;
}

fslab::Prediction dispatch_predict(const fslab::Graph& y, int k) {
    if (k == 1) return fslab::predict_star(y);
    if (k == 2) return fslab::predict_k2(y);
    return fslab::predict_kk(y, k);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"friends-and-strangers graph laboratory"};
    app.require_subcommand(1);

    std::string x_spec, y_spec, out_path, sigma_text, from_text, to_text, corpus_path;
    int k = 2, threads = 1, n = 0, n_max = 6, trials = 100, tok_u = 0, tok_v = 1;
    uint64_t seed = 0;
    bool swap_factors = false, oracle_mode = false;
    std::vector<double> p_grid;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write the report to this file instead of stdout");
        cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* c_components = app.add_subcommand("components", "exact component census of FS(X,Y)");
    c_components->add_option("--x", x_spec, "graph X (named spec or file)")->required();
    c_components->add_option("--y", y_spec, "graph Y (named spec or file)")->required();
    c_components->add_flag("--swap-factors", swap_factors, "compute FS(Y,X) instead");
    add_common(c_components);

    auto* c_connected = app.add_subcommand("connected", "connectivity of FS(X,Y)");
    c_connected->add_option("--x", x_spec)->required();
    c_connected->add_option("--y", y_spec)->required();
    c_connected->add_flag("--swap-factors", swap_factors);
    add_common(c_connected);

    auto* c_path = app.add_subcommand("path", "shortest swap path between two bijections");
    c_path->add_option("--x", x_spec)->required();
    c_path->add_option("--y", y_spec)->required();
    c_path->add_option("--from", from_text, "start bijection (rank or comma list)")->required();
    c_path->add_option("--to", to_text, "end bijection (rank or comma list)")->required();
    c_path->add_flag("--swap-factors", swap_factors);
    add_common(c_path);

    auto* c_predict = app.add_subcommand("predict", "theorem-based verdict for FS(K_{k,n-k},Y)");
    c_predict->add_option("--y", y_spec)->required();
    c_predict->add_option("--k", k, "small side size (1 uses the star theorem)")->required();
    add_common(c_predict);

    auto* c_verify = app.add_subcommand("verify", "predictions vs oracle over a corpus");
    c_verify->add_option("--n", n, "graph order")->required();
    c_verify->add_option("--k", k)->required();
    c_verify->add_option("--corpus", corpus_path, "graph6 file instead of the built-in corpus");
    add_common(c_verify);

    auto* c_conj = app.add_subcommand("conjectures", "counterexample scan for Conjectures 1-2");
    c_conj->add_option("--n-max", n_max)->required();
    c_conj->add_option("--k", k)->required();
    add_common(c_conj);

    auto* c_certify = app.add_subcommand("certify", "constructive exchange certificate");
    c_certify->add_option("--x", x_spec)->required();
    c_certify->add_option("--k", k)->required();
    c_certify->add_option("--sigma", sigma_text, "bijection (rank or comma list)")->required();
    c_certify->add_option("--u", tok_u)->required();
    c_certify->add_option("--v", tok_v)->required();
    add_common(c_certify);

    auto* c_sweep = app.add_subcommand("sweep", "Monte-Carlo connectivity sweep over G(n,p)");
    c_sweep->add_option("--n", n)->required();
    c_sweep->add_option("--k", k)->required();
    c_sweep->add_option("--p-grid", p_grid, "ascending probabilities")->required()->delimiter(',');
    c_sweep->add_option("--trials", trials)->check(CLI::PositiveNumber);
    c_sweep->add_option("--seed", seed)->required();
    c_sweep->add_flag("--oracle", oracle_mode, "exhaustive decision instead of predicates");
    add_common(c_sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        int max_n = resolve_max_n();

        if (*c_components || *c_connected || *c_path) {
            fslab::Graph x = fslab::load_graph(x_spec);
            fslab::Graph y = fslab::load_graph(y_spec);
            if (swap_factors) std::swap(x, y);
            json j = report_shell(app.get_subcommands().front()->get_name());
            j["x"] = x_spec;
            j["y"] = y_spec;
            j["swap_factors"] = swap_factors;
            j["n"] = x.order();
            if (*c_components) {
                auto report = fslab::fs_components(x, y, threads, max_n);
                j["component_count"] = report.component_count;
                j["sizes"] = report.sizes;
                j["representatives"] = report.representatives;
            } else if (*c_connected) {
                j["connected"] = fslab::fs_is_connected(x, y, max_n);
            } else {
                auto from = parse_bijection(from_text, x.order());
                auto to = parse_bijection(to_text, x.order());
                auto path = fslab::fs_path(x, y, from, to, max_n);
                j["found"] = path.has_value();
                if (path) {
                    j["length"] = path->size();
                    j["moves"] = path->moves;
                }
            }
            j["elapsed_ms"] = elapsed_ms(t0);
            emit(out_path, j.dump(2));
            return 0;
        }

        if (*c_predict) {
            fslab::Graph y = fslab::load_graph(y_spec);
            json j = report_shell("predict");
            j["y"] = y_spec;
            j["k"] = k;
            j["n"] = y.order();
            j["prediction"] = prediction_json(dispatch_predict(y, k));
            j["elapsed_ms"] = elapsed_ms(t0);
            emit(out_path, j.dump(2));
            return 0;
        }

        if (*c_verify) {
            std::vector<fslab::CorpusComparison> comparisons;
            if (!corpus_path.empty()) {
                comparisons = fslab::verify_corpus(load_graph6_file(corpus_path), k, threads);
            } else {
                comparisons = fslab::verify_corpus(n, k, threads);
            }
            json j = report_shell("verify");
            j["n"] = n;
            j["k"] = k;
            int mismatches = 0;
            j["comparisons"] = json::array();
            for (const auto& c : comparisons) {
                json jc;
                jc["graph6"] = c.graph6;
                jc["predicted"] = prediction_json(c.predicted);
                jc["oracle_connected"] = c.oracle_connected;
                jc["oracle_components"] = c.oracle_components;
                jc["mismatch"] = c.mismatch;
                if (c.mismatch) ++mismatches;
                j["comparisons"].push_back(std::move(jc));
            }
            j["graphs"] = comparisons.size();
            j["mismatches"] = mismatches;
            j["elapsed_ms"] = elapsed_ms(t0);
            emit(out_path, j.dump(2));
            return mismatches == 0 ? 0 : 4;
        }

        if (*c_conj) {
            auto report = fslab::scan_conjectures(n_max, k, threads);
            json j = report_shell("conjectures");
            j["n_max"] = report.n_max;
            j["k"] = report.k;
            j["conjecture1"] = {{"checked", report.conj1_checked},
                                {"unknown_resolved", report.conj1_unknown_resolved},
                                {"counterexamples", report.conj1_counterexamples}};
            j["conjecture2"] = {{"checked", report.conj2_checked},
                                {"counterexamples", report.conj2_counterexamples}};
            j["elapsed_ms"] = elapsed_ms(t0);
            emit(out_path, j.dump(2));
            bool clean =
                report.conj1_counterexamples.empty() && report.conj2_counterexamples.empty();
            return clean ? 0 : 4;
        }

        if (*c_certify) {
            fslab::Graph x = fslab::load_graph(x_spec);
            int order = x.order();
            if (k < 1 || k > order - k)
                throw std::invalid_argument("certify: requires 1 <= k <= n-k");
            auto sigma = parse_bijection(sigma_text, order);
            if (tok_u < 0 || tok_u >= order || tok_v < 0 || tok_v >= order || tok_u == tok_v)
                throw std::invalid_argument("certify: u, v must be distinct tokens");
            fslab::SwapSequence cert;
            bool u_small = tok_u < k, v_small = tok_v < k;
            if (u_small != v_small)
                throw std::invalid_argument(
                    "certify: u, v lie on opposite sides; they are already Y-adjacent");
            if (u_small) {
                if (k == 2) {
                    cert = fslab::exchange_small_side_k2(x, sigma);
                } else {
                    if (tok_u != 0 && tok_v != 0)
                        throw std::invalid_argument(
                            "certify: small-side exchange for k >= 3 requires token 0");
                    cert = fslab::exchange_k_general(x, k, sigma, std::max(tok_u, tok_v));
                }
            } else {
                if (k != 2)
                    throw std::invalid_argument(
                        "certify: big-side exchange is implemented for k = 2 only");
                cert = fslab::exchange_big_side_k2(x, sigma, tok_u, tok_v);
            }
            fslab::Graph y =
                fslab::build_named(fslab::NamedGraphSpec::complete_bipartite(k, order - k));
            auto expected = fslab::swap_tokens(sigma, tok_u, tok_v);
            auto verdict = fslab::validate_sequence(x, y, sigma, cert, expected);
            json j = report_shell("certify");
            j["x"] = x_spec;
            j["k"] = k;
            j["u"] = tok_u;
            j["v"] = tok_v;
            j["moves"] = cert.moves;
            j["start_rank"] = fslab::rank_perm(sigma);
            j["end_rank"] = fslab::rank_perm(expected);
            j["validated"] = verdict.ok;
            j["elapsed_ms"] = elapsed_ms(t0);
            emit(out_path, j.dump(2));
            return verdict.ok ? 0 : 5;
        }

        if (*c_sweep) {
            fslab::SweepConfig cfg;
            cfg.n = n;
            cfg.k = k;
            cfg.p_grid = p_grid;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.mode = oracle_mode ? fslab::DecisionMode::Oracle : fslab::DecisionMode::Predicate;
            cfg.threads = threads;
            cfg.max_n = max_n;
            auto result = fslab::sweep(cfg);
            std::ostringstream csv;
            csv << "p,trials,connected,disconnected,unknown,estimate,stderr\n";
            csv.precision(10);
            for (const auto& pt : result.points)
                csv << pt.p << "," << pt.trials << "," << pt.connected << "," << pt.disconnected
                    << "," << pt.unknown << "," << pt.estimate << "," << pt.std_error << "\n";
            std::string payload = csv.str();
            payload.pop_back();  // emit() appends the final newline
            emit(out_path, payload);
            return 0;
        }
    } catch (const fslab::InstanceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const fslab::CertificateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
