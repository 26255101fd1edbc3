// Command-line surface for the coherent-system Hodge polynomial library:
// moduli polynomials with metadata, standard-space builders, consistency
// suites and discrete invariants. Batch-only; exit codes are a contract:
// 0 success, 1 failed check or internal inconsistency, 2 usage error.

#include <CLI11.hpp>

#include "hodge/counts.hpp"
#include "hodge/fforacle.hpp"
#include "hodge/moduli.hpp"
#include "hodge/render.hpp"

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace hodge;

namespace {

constexpr long kFlagLimit = 1000000;

// Numeric flags are parsed in arbitrary precision, then gated into the
// range the library supports.
int bounded_int(const std::string& raw, const std::string& flag) {
    Int v;
    std::string s = raw;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw PreconditionError("--" + flag + ": not an integer: '" + raw + "'");
    if (v < -kFlagLimit || v > kFlagLimit)
        throw PreconditionError("--" + flag + ": magnitude above " +
                                std::to_string(kFlagLimit));
    return static_cast<int>(v.get_si());
}

bool guard_override_from_env() {
    const char* env = std::getenv("HODGE_GUARD_OVERRIDE");
    return env != nullptr && std::string(env) == "1";
}

void warn_large_genus(int g) {
    if (g > 10)
        std::cerr << "warning: genus " << g
                  << " produces very large polynomials; expect slow output\n";
}

void print_polynomial(const BiPoly& p, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Plain: std::cout << to_plain(p) << "\n"; break;
        case OutputFormat::Latex: std::cout << to_latex(p) << "\n"; break;
        case OutputFormat::Json: std::cout << to_json(p).dump() << "\n"; break;
    }
}

std::vector<int> parse_rank_list(const std::string& raw) {
    std::vector<int> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(bounded_int(item, "ranks"));
    }
    if (out.empty()) throw PreconditionError("--ranks: empty list");
    return out;
}

JHType type_from_ranks(int nk, int d, const std::vector<int>& ranks) {
    JHType type;
    for (int r : ranks) {
        if (r <= 0) throw PreconditionError("--ranks: ranks must be positive");
        const long long num = static_cast<long long>(r) * d;
        if (nk == 0 || num % nk != 0)
            throw PreconditionError("--ranks: slope d/(n-k) gives non-integral degree for rank " +
                                    std::to_string(r));
        type.parts.push_back({r, static_cast<int>(num / nk)});
    }
    return type;
}

// ---------------------------------------------------------------- gl ----

struct GlArgs {
    std::string n, d, k, g;
    std::string format = "plain";
    bool poincare = false;
};

int run_gl(const GlArgs& args) {
    const ModuliParams p{bounded_int(args.n, "n"), bounded_int(args.d, "d"),
                         bounded_int(args.k, "k"), bounded_int(args.g, "g")};
    const OutputFormat fmt = parse_format(args.format);
    warn_large_genus(p.g);

    const BiPoly hd = hd_GL(p);
    const long long beta = beta_dim(p);
    const int gcd_ndk = std::gcd(std::gcd(p.n, p.d), p.k);
    const int gcd_nk_d = std::gcd(p.n - p.k, p.d);
    const UniPoly diagonal = diag(hd);
    if (diagonal.has_negative_coeff())
        std::cerr << "warning: diagonal specialization has negative coefficients; "
                     "treat it as a virtual Poincare polynomial only\n";

    std::optional<CheckReport> comparison;
    if (p.d % 2 == 0) comparison = compare_closed_vs_sum(p);

    if (fmt == OutputFormat::Json) {
        nlohmann::ordered_json out{
            {"n", p.n},       {"d", p.d},
            {"k", p.k},       {"g", p.g},
            {"beta", beta},   {"nonempty", is_nonempty(p)},
            {"gcd_ndk", gcd_ndk}, {"gcd_nk_d", gcd_nk_d},
            {"hodge_deligne", to_json(hd)}};
        if (comparison) out["closed_vs_sum"] = to_json(*comparison);
        if (args.poincare) {
            const auto pp = poincare_GL(p);
            out["poincare"] = to_json(pp.poly);
            out["poincare_genuine"] = pp.genuine;
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    const char* comment = (fmt == OutputFormat::Latex) ? "% " : "";
    std::cout << comment << "G_L(n=" << p.n << ", d=" << p.d << ", k=" << p.k
              << ", g=" << p.g << ")\n";
    std::cout << comment << "beta: " << beta << "\n";
    std::cout << comment << "nonempty: " << (is_nonempty(p) ? "true" : "false") << "\n";
    std::cout << comment << "gcd(n,d,k): " << gcd_ndk << "\n";
    std::cout << comment << "gcd(n-k,d): " << gcd_nk_d << "\n";
    if (comparison) {
        std::cout << comment << "closed_vs_sum: "
                  << (comparison->passed
                          ? "match"
                          : "mismatch in " + std::to_string(comparison->diff.size()) +
                                " term(s)")
                  << "\n";
    }
    print_polynomial(hd, fmt);
    if (args.poincare) {
        const auto pp = poincare_GL(p);
        std::cout << comment << (pp.genuine ? "poincare: " : "poincare (virtual): ")
                  << (fmt == OutputFormat::Latex ? to_latex(pp.poly) : to_plain(pp.poly))
                  << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- space ----

int run_space(const std::string& name, const std::map<std::string, std::string>& opts,
              const std::string& format) {
    const OutputFormat fmt = parse_format(format);
    auto need = [&](const std::string& key) -> int {
        auto it = opts.find(key);
        if (it == opts.end() || it->second.empty())
            throw PreconditionError("space " + name + ": missing --" + key);
        return bounded_int(it->second, key);
    };

    BiPoly result;
    if (name == "projective") {
        result = hd_projective(need("n"));
    } else if (name == "grassmannian") {
        result = hd_grassmannian(need("k"), need("N"));
    } else if (name == "jacobian") {
        result = hd_jacobian(need("g"));
    } else if (name == "m2odd") {
        result = hd_m2_odd(need("g"));
    } else if (name == "m2even") {
        result = hd_m2_even(need("g"));
    } else if (name == "sym2") {
        auto it = opts.find("poly");
        if (it == opts.end())
            throw PreconditionError("space sym2: missing --poly (BiPoly JSON)");
        result = hd_sym2(bipoly_from_json(nlohmann::json::parse(it->second)));
    } else if (name == "schubert") {
        result = hd_schubert_stratum({need("k"), need("N"), need("j"), need("mu")});
    } else if (name == "schubert-complement") {
        result = hd_schubert_complement(need("k"), need("N"), need("j"), need("mu-min"));
    } else {
        throw PreconditionError("unknown space: " + name);
    }
    print_polynomial(result, fmt);
    return 0;
}

// ------------------------------------------------------------- check ----

struct SuiteResult {
    std::vector<CheckReport> results;        // fold into the exit code
    std::vector<CheckReport> informational;  // emitted, never fail the run
};

void run_oracle_suite(SuiteResult& out, int max_n, const std::vector<int>& primes) {
    out.results.push_back(ff::verify_point_counts(max_n, primes, guard_override_from_env()));
}

void run_strata_suite(SuiteResult& out) {
    const ModuliParams grid[] = {
        {3, 2, 1, 2}, {3, 4, 1, 2}, {4, 2, 2, 2}, {5, 2, 3, 2}, {3, 2, 1, 3}};
    for (const auto& p : grid) {
        CheckReport report;
        report.name = "strata" + p.str();
        const BiPoly sum = hd_strata_sum(p);
        if (!sum.is_polynomial()) report.fail("strata sum left the polynomial ring");
        if (!sum.is_symmetric_uv()) report.fail("strata sum is not u<->v symmetric");
        if (p.k % 2 == 1) {
            const long long beta = beta_dim(p);
            if (dual_transform(sum, static_cast<int>(beta)) != sum)
                report.fail("not palindromic of weight beta");
            if (diag(sum).has_negative_coeff())
                report.fail("diagonal has negative coefficients");
        }
        out.results.push_back(std::move(report));
        out.informational.push_back(compare_closed_vs_sum(p));
    }
}

void run_duality_suite(SuiteResult& out) {
    CheckReport report;
    report.name = "duality(bracket identity, k<=N<=10)";
    long long cases = 0;
    for (int N = 0; N <= 10; ++N) {
        for (int k = 0; k <= N; ++k) {
            for (int j = 0; j <= N; ++j) {
                const int lo = std::max(0, k + j - N);
                for (int thr = lo; thr <= std::min(k, j) + 1; ++thr) {
                    ++cases;
                    const BiPoly direct = hd_schubert_complement(k, N, j, thr);
                    const BiPoly dualized = hp_schubert_complement_dualized(k, N, j, thr);
                    if (dual_transform(direct, k * (N - k)) != dualized) {
                        std::ostringstream msg;
                        msg << "bracket identity fails at (k=" << k << ",N=" << N
                            << ",j=" << j << ",thr=" << thr << ")";
                        report.fail(msg.str());
                    }
                }
            }
        }
    }
    report.name += " [" + std::to_string(cases) + " cases]";
    out.results.push_back(std::move(report));
}

int run_check(const std::string& suite, bool as_json, int max_n,
              const std::vector<int>& primes) {
    SuiteResult out;
    if (suite == "oracle" || suite == "all") run_oracle_suite(out, max_n, primes);
    if (suite == "strata" || suite == "all") run_strata_suite(out);
    if (suite == "duality" || suite == "all") run_duality_suite(out);
    if (out.results.empty() && out.informational.empty())
        throw PreconditionError("unknown suite: " + suite +
                                " (expected oracle, strata, duality or all)");
    bool all_passed = true;
    for (const auto& r : out.results) all_passed = all_passed && r.passed;

    if (as_json) {
        nlohmann::ordered_json doc;
        doc["results"] = nlohmann::ordered_json::array();
        for (const auto& r : out.results) doc["results"].push_back(to_json(r));
        doc["informational"] = nlohmann::ordered_json::array();
        for (const auto& r : out.informational) doc["informational"].push_back(to_json(r));
        doc["passed"] = all_passed;
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& r : out.results) {
            std::cout << (r.passed ? "ok   " : "FAIL ") << r.name << "\n";
            for (const auto& f : r.failures) std::cout << "       " << f << "\n";
            for (const auto& d : r.diff)
                std::cout << "       u^" << d.eu << " v^" << d.ev << ": "
                          << d.a.get_str() << " vs " << d.b.get_str() << "\n";
        }
        for (const auto& r : out.informational) {
            std::cout << "info " << r.name << ": "
                      << (r.passed ? "match"
                                   : std::to_string(r.diff.size()) + " term(s) differ")
                      << "\n";
        }
    }
    return all_passed ? 0 : 1;
}

// ------------------------------------------------------------ counts ----

int run_counts_codim_w(const ModuliParams& p, OutputFormat fmt) {
    const int gcd_nk_d = std::gcd(p.n - p.k, p.d);
    const long long value = codim_W_bound(p);
    if (fmt == OutputFormat::Json) {
        std::cout << nlohmann::ordered_json{
                         {"value", value},
                         {"formula", "(p-1)/p^2 (n-k)^2 (g-1)"},
                         {"p", gcd_nk_d}}
                         .dump()
                  << "\n";
    } else {
        std::cout << value << "    [(p-1)/p^2 (n-k)^2 (g-1), p = gcd(n-k,d) = "
                  << gcd_nk_d << "]\n";
    }
    return 0;
}

int run_counts_codim_s(const ModuliParams& p, OutputFormat fmt) {
    const auto value = codim_S_bound(p);
    const char* formula = "min ((g-1)n' - k'g + d')(k-k') over subextension triples";
    if (fmt == OutputFormat::Json) {
        nlohmann::ordered_json doc{{"formula", formula}};
        if (value) doc["value"] = *value;
        else doc["value"] = nullptr;
        std::cout << doc.dump() << "\n";
    } else {
        if (value) std::cout << *value;
        else std::cout << "infinity";
        std::cout << "    [" << formula << "]\n";
    }
    return 0;
}

int run_counts_types(int nk, int d, int r, OutputFormat fmt) {
    const auto types = admissible_types(nk, d, r);
    if (fmt == OutputFormat::Json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& t : types) {
            nlohmann::ordered_json parts = nlohmann::ordered_json::array();
            for (const auto& part : t.parts)
                parts.push_back({{"rank", part.rank}, {"degree", part.degree}});
            arr.push_back({{"parts", std::move(parts)}});
        }
        std::cout << arr.dump() << "\n";
    } else {
        if (types.empty()) std::cout << "(none)\n";
        for (const auto& t : types) std::cout << t.str() << "\n";
    }
    return 0;
}

std::string r2_formula(R2Variant v) {
    switch (v) {
        case R2Variant::E: return "dim M~(nk,d) - n1(nk-n1)(g-1)";
        case R2Variant::EPrime: return "dim M~(nk,d) - 2 n1^2 (g-1)";
        case R2Variant::SE: return "dim M~(n1,d1) + dim M~(nk-n1,d-d1)";
        case R2Variant::SEPrime: return "dim M~(n1,d1)";
    }
    return "?";
}

std::string r3_formula(R3Set s) {
    switch (s) {
        case R3Set::S11: return "dim M~(nk,d) - n1 n2 (g-1) - n3(n1+n2)(g-1)";
        case R3Set::S31:
            return "dim M~(nk,d) - (n1+n2)n3(g-1) - 2 n1 n2 (g-1) + 1";
        case R3Set::S12_12:
            return "dim M~(nk,d) - 3 dim M~(n1,d1) - 2 n1 n3 (g-1) + 2";
    }
    return "?";
}

void print_count(long long value, const std::string& formula, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) {
        std::cout << nlohmann::ordered_json{{"value", value}, {"formula", formula}}.dump()
                  << "\n";
    } else {
        std::cout << value << "    [" << formula << "]\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hodge polynomial calculator for coherent-system moduli"};
    app.require_subcommand(1);

    // gl
    GlArgs gl_args;
    auto* gl = app.add_subcommand("gl", "H(G_L(n,d,k)) with dimension and metadata");
    gl->add_option("--n", gl_args.n, "rank")->required();
    gl->add_option("--d", gl_args.d, "degree")->required();
    gl->add_option("--k", gl_args.k, "section-space dimension")->required();
    gl->add_option("--g", gl_args.g, "genus")->required();
    gl->add_option("--format", gl_args.format, "plain | latex | json");
    gl->add_flag("--poincare", gl_args.poincare, "also print the Poincare specialization");

    // space <name>
    auto* space = app.add_subcommand("space", "Hodge-Deligne polynomial of a standard space");
    std::string space_format = "plain";
    std::map<std::string, std::string> space_opts;
    std::vector<std::string> space_names = {
        "projective", "grassmannian", "jacobian", "m2odd",
        "m2even",     "sym2",         "schubert", "schubert-complement"};
    std::vector<CLI::App*> space_subs;
    for (const auto& name : space_names) {
        auto* sub = space->add_subcommand(name);
        for (const char* key : {"n", "k", "N", "j", "g", "mu", "mu-min"})
            sub->add_option("--" + std::string(key), space_opts[key]);
        sub->add_option("--poly", space_opts["poly"], "BiPoly JSON (sym2 input)");
        sub->add_option("--format", space_format, "plain | latex | json");
        space_subs.push_back(sub);
    }
    space->require_subcommand(1);

    // check <suite>
    auto* check = app.add_subcommand("check", "run a consistency suite");
    std::string suite;
    bool check_json = false;
    int check_max_n = 5;
    std::vector<int> check_primes = {2, 3};
    check->add_option("suite", suite, "oracle | strata | duality | all")->required();
    check->add_flag("--json", check_json, "machine-readable report");
    check->add_option("--max-n", check_max_n, "oracle sweep: max ambient dimension");
    check->add_option("--primes", check_primes, "oracle sweep: field sizes");

    // counts <sub>
    auto* counts = app.add_subcommand("counts", "discrete invariants");
    counts->require_subcommand(1);
    std::map<std::string, std::string> c_opts;
    std::string counts_format = "plain";
    auto add_counts_sub = [&](const std::string& name, std::vector<const char*> keys) {
        auto* sub = counts->add_subcommand(name);
        for (const char* key : keys) sub->add_option("--" + std::string(key), c_opts[key]);
        sub->add_option("--format", counts_format, "plain | json");
        return sub;
    };
    auto* cw = add_counts_sub("codim-w", {"n", "d", "k", "g"});
    auto* cs = add_counts_sub("codim-s", {"n", "d", "k", "g"});
    auto* ct = add_counts_sub("types", {"nk", "d", "r"});
    auto* cr2 = add_counts_sub("params-r2", {"nk", "n1", "g", "variant"});
    auto* cgen = add_counts_sub("params-general", {"nk", "d", "g", "ranks"});
    auto* cr3 = add_counts_sub("params-r3", {"nk", "d", "g", "ranks", "set"});

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            app.exit(e);
            return 2;
        }

        auto need = [&](const char* key) -> int {
            if (c_opts[key].empty())
                throw PreconditionError(std::string("missing --") + key);
            return bounded_int(c_opts[key], key);
        };

        if (gl->parsed()) return run_gl(gl_args);
        if (space->parsed()) {
            for (std::size_t i = 0; i < space_subs.size(); ++i)
                if (space_subs[i]->parsed())
                    return run_space(space_names[i], space_opts, space_format);
        }
        if (check->parsed()) return run_check(suite, check_json, check_max_n, check_primes);
        if (counts->parsed()) {
            const OutputFormat fmt = parse_format(counts_format);
            if (cw->parsed())
                return run_counts_codim_w({need("n"), need("d"), need("k"), need("g")}, fmt);
            if (cs->parsed())
                return run_counts_codim_s({need("n"), need("d"), need("k"), need("g")}, fmt);
            if (ct->parsed()) return run_counts_types(need("nk"), need("d"), need("r"), fmt);
            if (cr2->parsed()) {
                const R2Variant variant = parse_r2_variant(c_opts["variant"]);
                print_count(param_count_r2(need("nk"), need("n1"), need("g"), variant),
                            r2_formula(variant), fmt);
                return 0;
            }
            if (cgen->parsed()) {
                const int nk = need("nk"), d = need("d"), g = need("g");
                const JHType type = type_from_ranks(nk, d, parse_rank_list(c_opts["ranks"]));
                print_count(param_count_general(nk, d, g, type),
                            "dim M~(nk,d) - sum_{j<i} n_i n_j (g-1)", fmt);
                return 0;
            }
            if (cr3->parsed()) {
                const int nk = need("nk"), d = need("d"), g = need("g");
                const JHType type = type_from_ranks(nk, d, parse_rank_list(c_opts["ranks"]));
                const R3Set set = parse_r3_set(c_opts["set"]);
                print_count(param_count_r3(nk, d, g, type, set), r3_formula(set), fmt);
                return 0;
            }
        }
        throw PreconditionError("no subcommand given");
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SlopeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadVariant& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what()
                  << " (set HODGE_GUARD_OVERRIDE=1 to lift)\n";
        return 2;
    } catch (const NotApplicable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
