#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scldpc/bounds.hpp"
#include "scldpc/formats.hpp"
#include "scldpc/girth_oracle.hpp"
#include "scldpc/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 2;   // infeasible target / nothing found / exceeds cap semantics
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitBudget = 70;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

std::vector<int> expand_weights(const std::string& text, int a) {
    std::vector<int> w;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            w.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--weights", "'" + piece + "' is not an integer");
        }
    }
    if (w.size() == 1) w.assign(static_cast<std::size_t>(a), w[0]);
    if (static_cast<int>(w.size()) != a)
        throw CLI::ValidationError("--weights", "expected 1 or " + std::to_string(a) + " values");
    return w;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> vals;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            vals.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "'" + piece + "' is not an integer");
        }
    }
    return vals;
}

// Loads either format and lands on a syndrome former.
scldpc::SyndromeFormer load_syndrome_former(const std::string& path, const std::string& format) {
    const std::string text = read_file(path);
    scldpc::TextFormat fmt;
    if (format == "hs")
        fmt = scldpc::TextFormat::hs;
    else if (format == "hx")
        fmt = scldpc::TextFormat::hx;
    else
        fmt = scldpc::detect_format(text);
    if (fmt == scldpc::TextFormat::hs) return scldpc::parse_hs(text);
    return scldpc::poly_to_hs(scldpc::parse_hx(text));
}

const char* proof_name(scldpc::ProofFlag p) {
    switch (p) {
        case scldpc::ProofFlag::complete: return "complete";
        case scldpc::ProofFlag::heuristic: return "heuristic";
        default: return "budget-exceeded";
    }
}

struct SweepCell {
    int a, c;
    std::string bound, search, match;
};

int run(int argc, char** argv) {
    CLI::App app{"Design and verification workbench for time-invariant SC-LDPC syndrome formers"};
    app.require_subcommand(1);
    int workers = 1;

    // ---- bound ----
    auto* bound_cmd = app.add_subcommand("bound", "Lower bound on L_h for a target girth");
    int b_a = 0, b_c = 0, b_g = 6;
    std::string b_w = "2";
    bound_cmd->add_option("-a", b_a, "columns per block of H (rows of H_s)")->required();
    bound_cmd->add_option("-c", b_c, "rows per block of H")->required();
    bound_cmd->add_option("-w,--weights", b_w, "row weight, or comma list of per-row weights");
    bound_cmd->add_option("-g,--girth", b_g, "target girth (6 or 8)");

    // ---- convert ----
    auto* conv_cmd = app.add_subcommand("convert", "Convert between .hs, .hx and alist");
    std::string cv_in, cv_out, cv_to = "auto", cv_format = "auto";
    int cv_window = 0;
    conv_cmd->add_option("input", cv_in, "input file (.hs or .hx)")->required();
    conv_cmd->add_option("-o,--output", cv_out, "output path (default stdout)");
    conv_cmd->add_option("--to", cv_to, "target format: hs, hx or alist (default: the other one)")
        ->check(CLI::IsMember({"auto", "hs", "hx", "alist"}));
    conv_cmd->add_option("--format", cv_format, "input format override")
        ->check(CLI::IsMember({"auto", "hs", "hx"}));
    conv_cmd->add_option("--window", cv_window, "alist only: block columns to expand (default m_h+1)");

    // ---- girth ----
    auto* girth_cmd = app.add_subcommand("girth", "Girth of the semi-infinite Tanner graph");
    std::string g_in, g_format = "auto";
    int g_cap = 12;
    girth_cmd->add_option("input", g_in, "input file (.hs or .hx)")->required();
    girth_cmd->add_option("--cap", g_cap, "largest cycle length searched (even, <= 16)");
    girth_cmd->add_option("--format", g_format, "input format override")
        ->check(CLI::IsMember({"auto", "hs", "hx"}));

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "Full report: parameters, girth, shortest cycles");
    std::string v_in, v_format = "auto";
    int v_cap = 12;
    std::size_t v_max_witnesses = 200;
    verify_cmd->add_option("input", v_in, "input file (.hs or .hx)")->required();
    verify_cmd->add_option("--cap", v_cap, "largest cycle length searched (even, <= 16)");
    verify_cmd->add_option("--max-witnesses", v_max_witnesses, "witness lines printed (0 = all)");
    verify_cmd->add_option("--format", v_format, "input format override")
        ->check(CLI::IsMember({"auto", "hs", "hx"}));

    // ---- search ----
    auto* search_cmd = app.add_subcommand("search", "Minimum-constraint-length code search");
    int s_a = 0, s_c = 0, s_g = 6, s_lh_min = 0, s_lh_max = 0;
    std::string s_w = "2", s_mode = "exhaustive", s_out, s_log;
    std::uint64_t s_budget = 0, s_seed = 1;
    search_cmd->add_option("-a", s_a, "columns per block of H")->required();
    search_cmd->add_option("-c", s_c, "rows per block of H")->required();
    search_cmd->add_option("-w,--weights", s_w, "row weight, or comma list of per-row weights");
    search_cmd->add_option("-g,--girth", s_g, "target girth (even)");
    search_cmd->add_option("--mode", s_mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search_cmd->add_option("--Lh-min", s_lh_min, "first width tried (default: the theoretical bound)");
    search_cmd->add_option("--Lh-max", s_lh_max, "last width tried (default: Lh-min + 32)");
    search_cmd->add_option("--budget", s_budget,
                           "random: candidates drawn; exhaustive: guard on leaves visited");
    search_cmd->add_option("--seed", s_seed, "seed for the candidate streams (random mode)");
    search_cmd->add_option("-o,--output", s_out, "write the found code as .hs");
    search_cmd->add_option("--log", s_log, "JSON-lines progress log");
    search_cmd->add_option("--workers", workers, "worker threads")->envname("SCLDPC_WORKERS");

    // ---- construct ----
    auto* cons_cmd = app.add_subcommand("construct", "Explicit girth-8 constructions (c=1, w=2)");
    std::string k_kind, k_out;
    int k_a = 0;
    cons_cmd->add_option("kind", k_kind, "prop1 (odd deltas) or prop2 (deltas a..2a-1)")
        ->required()
        ->check(CLI::IsMember({"prop1", "prop2"}));
    cons_cmd->add_option("-a", k_a, "number of rows")->required();
    cons_cmd->add_option("-o,--output", k_out, "output path (default stdout)");

    // ---- sweep ----
    auto* sweep_cmd = app.add_subcommand("sweep", "CSV of bound vs exhaustive minimum over a grid");
    int sw_g = 6, sw_w = 2, sw_a_min = 2, sw_a_max = 8, sw_span = 8;
    std::string sw_c_list = "1,2,3,4", sw_out;
    std::uint64_t sw_budget = 200'000'000;
    sweep_cmd->add_option("-w,--weight", sw_w, "uniform row weight");
    sweep_cmd->add_option("-g,--girth", sw_g, "target girth (6 or 8)");
    sweep_cmd->add_option("--c-list", sw_c_list, "comma list of c values");
    sweep_cmd->add_option("--a-min", sw_a_min, "first a");
    sweep_cmd->add_option("--a-max", sw_a_max, "last a");
    sweep_cmd->add_option("--span", sw_span, "widths searched above the bound per cell");
    sweep_cmd->add_option("--budget", sw_budget, "per-cell leaf budget");
    sweep_cmd->add_option("-o,--output", sw_out, "output CSV path (default stdout)");
    sweep_cmd->add_option("--workers", workers, "worker threads")->envname("SCLDPC_WORKERS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the message or the help text
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (bound_cmd->parsed()) {
        if (b_a < 1 || b_c < 1 || b_a <= b_c)
            throw CLI::ValidationError("bound", "need a > c >= 1");
        const auto weights = expand_weights(b_w, b_a);
        const auto result = scldpc::bound_for_girth(b_a, b_c, weights, b_g);
        if (!result) {
            std::cout << "L_h_lower=- v_s_lower=- formula=no-closed-form feasible=unknown\n";
            std::cout << "no closed-form bound for g=" << b_g << "; use search\n";
            return kExitNegative;
        }
        if (!result->feasible) {
            std::cout << "L_h_lower=- v_s_lower=- formula=" << result->formula
                      << " feasible=false\n";
            return kExitNegative;
        }
        std::cout << "L_h_lower=" << *result->Lh_lower << " v_s_lower=" << result->vs_lower(b_a, b_c)
                  << " formula=" << result->formula << " feasible=true\n";
        return kExitOk;
    }

    if (conv_cmd->parsed()) {
        const std::string text = read_file(cv_in);
        scldpc::TextFormat fmt;
        if (cv_format == "hs")
            fmt = scldpc::TextFormat::hs;
        else if (cv_format == "hx")
            fmt = scldpc::TextFormat::hx;
        else
            fmt = scldpc::detect_format(text);
        std::string target = cv_to;
        if (target == "auto") target = fmt == scldpc::TextFormat::hs ? "hx" : "hs";
        if (target == "hs") {
            const auto hs = fmt == scldpc::TextFormat::hs ? scldpc::parse_hs(text)
                                                          : scldpc::poly_to_hs(scldpc::parse_hx(text));
            write_output(cv_out, scldpc::serialize_hs(hs));
        } else if (target == "hx") {
            const auto p = fmt == scldpc::TextFormat::hx ? scldpc::parse_hx(text)
                                                         : scldpc::hs_to_poly(scldpc::parse_hs(text));
            write_output(cv_out, scldpc::serialize_hx(p));
        } else {
            const auto hs = fmt == scldpc::TextFormat::hs ? scldpc::parse_hs(text)
                                                          : scldpc::poly_to_hs(scldpc::parse_hx(text));
            const int W = cv_window > 0 ? cv_window : hs.m_h() + 1;
            write_output(cv_out, scldpc::to_alist(scldpc::expand_window(hs, W)));
        }
        return kExitOk;
    }

    if (girth_cmd->parsed()) {
        if (g_cap < 4 || g_cap % 2 != 0 || g_cap > scldpc::kGirthCapLimit)
            throw CLI::ValidationError("--cap", "must be even, >= 4 and <= 16");
        const auto hs = load_syndrome_former(g_in, g_format);
        const auto g = scldpc::conv_girth(hs, g_cap);
        if (g)
            std::cout << "girth=" << *g << "\n";
        else
            std::cout << "girth=exceeds-cap cap=" << g_cap << "\n";
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        if (v_cap < 4 || v_cap % 2 != 0 || v_cap > scldpc::kGirthCapLimit)
            throw CLI::ValidationError("--cap", "must be even, >= 4 and <= 16");
        const auto hs = load_syndrome_former(v_in, v_format);
        const auto report = scldpc::verify_code(hs, v_cap);
        std::cout << report.to_text(v_max_witnesses == 0 ? SIZE_MAX : v_max_witnesses);
        return kExitOk;
    }

    if (search_cmd->parsed()) {
        if (s_a < 1 || s_c < 1 || s_a <= s_c)
            throw CLI::ValidationError("search", "need a > c >= 1");
        if (s_g < 4 || s_g % 2 != 0)
            throw CLI::ValidationError("--girth", "must be even and >= 4");
        scldpc::SearchSpec spec;
        spec.a = s_a;
        spec.c = s_c;
        spec.row_weights = expand_weights(s_w, s_a);
        spec.girth = s_g;
        spec.mode = s_mode == "random" ? scldpc::SearchMode::random : scldpc::SearchMode::exhaustive;
        spec.seed = s_seed;
        spec.workers = workers;

        const auto floor = scldpc::search_floor(s_a, s_c, spec.row_weights, s_g);
        if (!floor) {
            std::cout << "found=false reason=infeasible-target\n";
            return kExitNegative;
        }
        spec.Lh_min = s_lh_min > 0 ? s_lh_min : *floor;
        spec.Lh_max = s_lh_max > 0 ? s_lh_max : spec.Lh_min + 32;
        spec.budget = s_budget > 0
                          ? s_budget
                          : (spec.mode == scldpc::SearchMode::random ? 1'000'000ULL
                                                                     : 1'000'000'000ULL);

        std::ofstream log;
        scldpc::ProgressFn progress;
        if (!s_log.empty()) {
            log.open(s_log);
            if (!log) throw std::runtime_error("cannot open '" + s_log + "' for writing");
            progress = [&log](std::uint64_t candidates, std::optional<int> best_mh, double elapsed) {
                log << "{\"candidates\":" << candidates << ",\"best_mh\":"
                    << (best_mh ? std::to_string(*best_mh) : "null")
                    << ",\"elapsed_s\":" << elapsed << "}\n";
                log.flush();
            };
        }

        const auto outcome = spec.mode == scldpc::SearchMode::random
                                 ? scldpc::montecarlo_search(spec, progress)
                                 : scldpc::exhaustive_min_Lh(spec, progress);
        if (outcome.best) {
            const auto& hs = *outcome.best;
            std::cout << "found=true L_h=" << hs.L_h() << " m_h=" << hs.m_h()
                      << " v_s=" << (static_cast<long long>(hs.m_h()) + 1) * hs.a();
            if (outcome.girth_found)
                std::cout << " girth=" << *outcome.girth_found;
            else
                std::cout << " girth=>" << std::min(std::max(s_g, 12), scldpc::kGirthCapLimit);
            std::cout << " candidates=" << outcome.candidates << " elapsed_s=" << outcome.elapsed_s
                      << " proof=" << proof_name(outcome.proof) << "\n";
            if (!s_out.empty()) write_output(s_out, scldpc::serialize_hs(hs));
            return kExitOk;
        }
        std::cout << "found=false candidates=" << outcome.candidates
                  << " elapsed_s=" << outcome.elapsed_s << " proof=" << proof_name(outcome.proof)
                  << "\n";
        return outcome.proof == scldpc::ProofFlag::budget_exceeded ? kExitBudget : kExitNegative;
    }

    if (cons_cmd->parsed()) {
        if (k_a < 1) throw CLI::ValidationError("-a", "must be >= 1");
        const auto hs = k_kind == "prop1" ? scldpc::construct_prop1(k_a) : scldpc::construct_prop2(k_a);
        write_output(k_out, scldpc::serialize_hs(hs));
        return kExitOk;
    }

    if (sweep_cmd->parsed()) {
        if (sw_g != 6 && sw_g != 8)
            throw CLI::ValidationError("--girth", "sweep needs a closed-form bound: g must be 6 or 8");
        if (sw_w < 2) throw CLI::ValidationError("--weight", "must be >= 2");
        const auto c_list = parse_int_list(sw_c_list, "--c-list");
        std::ostringstream csv;
        csv << "a,c,bound_Lh,search_Lh,match\n";
        bool any_budget = false;
        for (int c : c_list) {
            for (int a = sw_a_min; a <= sw_a_max; ++a) {
                if (a <= c) continue;  // rate would not be positive
                const std::vector<int> weights(static_cast<std::size_t>(a), sw_w);
                const auto bound = scldpc::bound_for_girth(a, c, weights, sw_g);
                if (!bound->feasible) {
                    csv << a << ',' << c << ",-,-,infeasible\n";
                    continue;
                }
                scldpc::SearchSpec spec;
                spec.a = a;
                spec.c = c;
                spec.row_weights = weights;
                spec.girth = sw_g;
                spec.Lh_min = static_cast<int>(*bound->Lh_lower);
                spec.Lh_max = spec.Lh_min + sw_span;
                spec.budget = sw_budget;
                spec.workers = workers;
                const auto outcome = scldpc::exhaustive_min_Lh(spec);
                if (outcome.proof == scldpc::ProofFlag::budget_exceeded) {
                    csv << a << ',' << c << ',' << *bound->Lh_lower << ",-,budget-exceeded\n";
                    any_budget = true;
                } else if (!outcome.best) {
                    csv << a << ',' << c << ',' << *bound->Lh_lower << ",-,false\n";
                } else {
                    const int found = outcome.best->L_h();
                    csv << a << ',' << c << ',' << *bound->Lh_lower << ',' << found << ','
                        << (found == *bound->Lh_lower ? "true" : "false") << '\n';
                }
            }
        }
        write_output(sw_out, csv.str());
        (void)any_budget;  // cells are marked; the sweep itself still succeeds
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const scldpc::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const scldpc::invalid_params& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const scldpc::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const scldpc::resource_limit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
