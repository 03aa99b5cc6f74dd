#include "linfield/cli.hpp"

#include "linfield/json_io.hpp"
#include "linfield/numtheory.hpp"
#include "linfield/qsp.hpp"
#include "linfield/trinomial.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace linfield {

namespace {

const char* yn(bool b) { return b ? "true" : "false"; }

std::string fixed3(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

u64 parse_u64(const std::string& s, const std::string& what) {
    size_t used = 0;
    u64 v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        throw out_of_range_error(what + ": not a number: '" + s + "'");
    }
    if (s.empty() || used != s.size())
        throw out_of_range_error(what + ": not a number: '" + s + "'");
    return v;
}

// "a0=1,a2=1,a10=1" -> {0: 1, 2: 1, 10: 1}
std::map<unsigned, u64> parse_coeff_list(const std::string& text) {
    std::map<unsigned, u64> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto eq = tok.find('=');
        if (tok.size() < 4 || tok[0] != 'a' || eq == std::string::npos || eq < 2)
            throw out_of_range_error("--coeffs entries must look like a<i>=<code>, got '" + tok +
                                     "'");
        unsigned idx = static_cast<unsigned>(parse_u64(tok.substr(1, eq - 1), "--coeffs index"));
        u64 code = parse_u64(tok.substr(eq + 1), "--coeffs value");
        if (!out.emplace(idx, code).second)
            throw out_of_range_error("--coeffs lists a" + std::to_string(idx) + " twice");
    }
    if (out.empty())
        throw out_of_range_error("--coeffs must list at least one coefficient");
    return out;
}

// Missing a_d means monic; an explicit a_d = 0 is rejected rather than
// silently reinterpreted as a lower-degree polynomial.
LinearizedPoly poly_from_coeffs(const FieldSpec& f, unsigned d,
                                const std::map<unsigned, u64>& codes) {
    if (d < 1)
        throw out_of_range_error("--d must be >= 1");
    std::vector<FieldElement> coeffs(d + 1, zero(f));
    bool have_top = false;
    for (const auto& [i, code] : codes) {
        if (i > d)
            throw out_of_range_error("coefficient a" + std::to_string(i) + " exceeds --d " +
                                     std::to_string(d));
        if (i == d) {
            if (code == 0)
                throw out_of_range_error("leading coefficient a" + std::to_string(d) +
                                         " must be nonzero");
            have_top = true;
        }
        coeffs[i] = decode(f, code);
    }
    if (!have_top)
        coeffs[d] = one(f);
    return make_linearized(f, std::move(coeffs));
}

std::pair<u64, unsigned> factor_prime_power(u64 q) {
    if (q < 2)
        throw out_of_range_error("q must be >= 2");
    u64 p = q;
    for (u64 c = 2; c * c <= q; ++c)
        if (q % c == 0) {
            p = c;
            break;
        }
    unsigned s = 0;
    u64 x = q;
    while (x % p == 0) {
        x /= p;
        ++s;
    }
    if (x != 1)
        throw out_of_range_error("q = " + std::to_string(q) + " is not a prime power");
    return {p, s};
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw error("cannot open output file: " + path);
    file << text;
    file.flush();
    if (!file.good())
        throw error("write to output file failed: " + path);
}

std::string gcd_poly_string(const GcdResult& r) {
    if (r.is_trivial)
        return "1";
    return "x^" + std::to_string(r.g) + (r.const_sign < 0 ? "-1" : "+1");
}

int sign_of(char c, const std::string& whole) {
    if (c == '+' || c == 'p')
        return +1;
    if (c == '-' || c == 'm')
        return -1;
    throw out_of_range_error("--signs must be two of +/- (or p/m), got '" + whole + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rank, splitting and attack-cost tools for q-linearized polynomials"};
    app.name("linfield");
    app.require_subcommand(1);

    struct Common {
        bool json = false;
        std::string out_path;
    };
    auto add_common = [](CLI::App* sub, Common& c) {
        sub->add_flag("--json", c.json, "emit JSON instead of text");
        sub->add_option("--out", c.out_path, "write output to this file instead of stdout");
    };

    int rc = 0;

    // ---- nullity ----
    struct {
        u64 p = 2;
        unsigned s = 1, n = 1, d = 1;
        std::string coeffs;
        bool kernel = false, dump_matrix = false;
        Common c;
    } nul;
    {
        auto* sub = app.add_subcommand("nullity",
                                       "rank/nullity of one linearized polynomial over GF((p^s)^n)");
        sub->add_option("--p", nul.p, "characteristic (prime)")->required();
        sub->add_option("--s", nul.s, "q = p^s")->capture_default_str();
        sub->add_option("--n", nul.n, "extension degree over GF(q)")->required();
        sub->add_option("--d", nul.d, "q-degree of the polynomial")->required();
        sub->add_option("--coeffs", nul.coeffs,
                        "comma list a<i>=<code>; a_d defaults to 1 when omitted")
            ->required();
        sub->add_flag("--kernel", nul.kernel, "also print a GF(q)-basis of the root space");
        sub->add_flag("--dump-matrix", nul.dump_matrix,
                      "also print the order-n twisted companion product");
        add_common(sub, nul.c);
        sub->callback([&] {
            FieldSpec f = make_field(nul.p, nul.s, nul.n);
            LinearizedPoly L = poly_from_coeffs(f, nul.d, parse_coeff_list(nul.coeffs));
            unsigned k = nullity_fast(L);
            nlohmann::json j{{"nullity", k}, {"d", L.d()}};
            std::string text = "nullity " + std::to_string(k) + "\n";
            if (nul.kernel) {
                auto basis = kernel_basis(L);
                std::vector<u64> codes;
                for (const auto& v : basis) {
                    codes.push_back(encode(f, v));
                    text += "kernel " + std::to_string(codes.back()) + "\n";
                }
                j["kernel"] = codes;
            }
            if (nul.dump_matrix) {
                FieldMatrix A = twisted_companion_product(L, f.n);
                std::vector<std::vector<u64>> rows(A.rows);
                text += "matrix\n";
                for (unsigned r = 0; r < A.rows; ++r) {
                    for (unsigned cidx = 0; cidx < A.cols; ++cidx) {
                        rows[r].push_back(encode(f, A.at(r, cidx)));
                        text += (cidx ? " " : "") + std::to_string(rows[r].back());
                    }
                    text += "\n";
                }
                j["matrix"] = rows;
            }
            emit(nul.c.out_path, nul.c.json ? j.dump() + "\n" : text, out);
        });
    }

    // ---- search ----
    struct {
        u64 p = 2;
        unsigned s = 1, n = 1, d = 2;
        std::string mode = "both";
        unsigned workers = 1;
        bool count_only = false;
        Common c;
    } srch;
    {
        auto* sub = app.add_subcommand("search",
                                       "enumerate the completely splitting trinomial pairs (a, b)");
        sub->add_option("--p", srch.p, "characteristic (prime)")->required();
        sub->add_option("--s", srch.s, "q = p^s")->capture_default_str();
        sub->add_option("--n", srch.n, "extension degree over GF(q)")->required();
        sub->add_option("--d", srch.d, "q-degree of the trinomial (>= 2)")->required();
        sub->add_option("--mode", srch.mode, "theorem | exhaustive | both")
            ->check(CLI::IsMember({"theorem", "exhaustive", "both"}))
            ->capture_default_str();
        sub->add_option("--workers", srch.workers, "sweep threads (never changes the output)")
            ->check(CLI::Range(1u, 64u))
            ->capture_default_str();
        sub->add_flag("--count-only", srch.count_only,
                      "print only the closed-form count, without enumerating");
        add_common(sub, srch.c);
        sub->callback([&] {
            FieldSpec f = make_field(srch.p, srch.s, srch.n);
            if (srch.count_only) {
                bigint cnt = count_splitting(f, srch.d);
                emit(srch.c.out_path,
                     srch.c.json ? nlohmann::json{{"count", cnt.str()}}.dump() + "\n"
                                 : "count " + cnt.str() + "\n",
                     out);
                return;
            }
            SearchMode m = srch.mode == "theorem"      ? SearchMode::Theorem
                           : srch.mode == "exhaustive" ? SearchMode::Exhaustive
                                                       : SearchMode::Both;
            auto pairs = enumerate_splitting(f, srch.d, m, srch.workers);
            std::string text = "count " + std::to_string(pairs.size()) + "\n";
            nlohmann::json jp = nlohmann::json::array();
            for (const auto& pr : pairs) {
                text += std::to_string(pr.a_code) + " " + std::to_string(pr.b_code) + "\n";
                jp.push_back({pr.a_code, pr.b_code});
            }
            nlohmann::json j{{"count", pairs.size()}, {"pairs", jp}};
            emit(srch.c.out_path, srch.c.json ? j.dump() + "\n" : text, out);
        });
    }

    // ---- verify ----
    struct {
        int part = 0;
        u64 q = 2;
        unsigned d = 2;
        std::vector<unsigned> ns;
        std::string mode = "auto";
        unsigned workers = 1;
        u64 samples = 100000;
        u64 seed = 0x51B153ED;
        Common c;
    } ver;
    {
        auto* sub = app.add_subcommand("verify",
                                       "test the splitting characterization against brute force");
        sub->add_option("--part", ver.part, "which case of the characterization (1, 2 or 3)")
            ->check(CLI::Range(1, 3))
            ->required();
        sub->add_option("--q", ver.q, "base field size (prime power)")->required();
        sub->add_option("--d", ver.d, "q-degree of the trinomial (>= 2)")->required();
        sub->add_option("--n", ver.ns, "extension degrees, comma separated")
            ->delimiter(',')
            ->required();
        sub->add_option("--mode", ver.mode, "auto | exhaustive | sample")
            ->check(CLI::IsMember({"auto", "exhaustive", "sample"}))
            ->capture_default_str();
        sub->add_option("--workers", ver.workers, "threads (never changes the report)")
            ->check(CLI::Range(1u, 64u))
            ->capture_default_str();
        sub->add_option("--samples", ver.samples, "random pairs per n in sample mode")
            ->capture_default_str();
        sub->add_option("--seed", ver.seed, "sampling seed")->capture_default_str();
        add_common(sub, ver.c);
        sub->callback([&] {
            auto [p, s] = factor_prime_power(ver.q);
            VerifyOptions vo;
            vo.mode = ver.mode == "exhaustive" ? VerifyOptions::Mode::Exhaustive
                      : ver.mode == "sample"   ? VerifyOptions::Mode::Sample
                                               : VerifyOptions::Mode::Auto;
            vo.workers = ver.workers;
            vo.samples = ver.samples;
            vo.seed = ver.seed;
            std::string text;
            nlohmann::json reports = nlohmann::json::array();
            u64 total = 0;
            for (unsigned n : ver.ns) {
                FieldSpec f = make_field(p, s, n);
                VerifyReport rep = verify_characterization(f, ver.d, ver.part, vo);
                total += rep.counterexample_count;
                text += "n " + std::to_string(rep.n) + " mode " +
                        (rep.exhaustive ? "exhaustive" : "sample") + " pairs " +
                        std::to_string(rep.pairs_checked) + " candidates " +
                        std::to_string(rep.candidates_checked) + " samples " +
                        std::to_string(rep.samples_checked) + " splitting " +
                        std::to_string(rep.splitting_count) + " counterexamples " +
                        std::to_string(rep.counterexample_count) + "\n";
                reports.push_back(verify_report_to_json(rep));
            }
            text += std::to_string(total) + " counterexamples\n";
            nlohmann::json j{{"reports", reports}, {"total_counterexamples", total}};
            emit(ver.c.out_path, ver.c.json ? j.dump() + "\n" : text, out);
            if (total > 0) {
                err << "verify: " << total << " prediction mismatches\n";
                rc = 2;
            }
        });
    }

    // ---- gcd ----
    struct {
        unsigned k = 1, l = 1;
        std::string signs;
        Common c;
    } gc;
    {
        auto* sub = app.add_subcommand("gcd", "gcd of x^k +/- 1 and x^l +/- 1 over the rationals");
        sub->add_option("--k", gc.k, "first exponent")->required();
        sub->add_option("--l", gc.l, "second exponent")->required();
        sub->add_option("--signs", gc.signs,
                        "two characters, one per polynomial: ++, +-, -+ or -- (p/m also accepted)")
            ->required();
        add_common(sub, gc.c);
        sub->callback([&] {
            if (gc.signs.size() != 2)
                throw out_of_range_error("--signs must be exactly two characters");
            SignedPowerPoly A{gc.k, sign_of(gc.signs[0], gc.signs)};
            SignedPowerPoly B{gc.l, sign_of(gc.signs[1], gc.signs)};
            GcdResult r = gcd_power_polys(A, B);
            if (gc.k <= 512 && gc.l <= 512) {
                GcdResult o = gcd_power_polys_oracle(A, B);
                if (!(o == r))
                    throw invariant_violation_error(
                        "gcd closed form disagrees with the Euclidean oracle");
            }
            nlohmann::json j{{"trivial", r.is_trivial}, {"g", r.g}, {"poly", gcd_poly_string(r)}};
            if (!r.is_trivial)
                j["const_sign"] = r.const_sign;
            emit(gc.c.out_path, gc.c.json ? j.dump() + "\n" : gcd_poly_string(r) + "\n", out);
        });
    }

    // ---- binom ----
    struct {
        u64 n = 0, p = 2;
        std::optional<u64> i;
        Common c;
    } bn;
    {
        auto* sub = app.add_subcommand(
            "binom", "binomial coefficients mod p; without --i, the inner-vanishing test");
        sub->add_option("--n", bn.n, "row index")->required();
        sub->add_option("--p", bn.p, "prime modulus")->required();
        sub->add_option("--i", bn.i, "column index; omit to test all 0 < i < n");
        add_common(sub, bn.c);
        sub->callback([&] {
            if (!is_prime_u64(bn.p))
                throw not_prime_error("--p must be prime, got " + std::to_string(bn.p));
            if (bn.i) {
                u64 v = binom_mod(bn.n, *bn.i, bn.p);
                nlohmann::json j{{"n", bn.n}, {"i", *bn.i}, {"p", bn.p}, {"value", v}};
                std::string text = "n " + std::to_string(bn.n) + " i " + std::to_string(*bn.i) +
                                   " p " + std::to_string(bn.p) + " value " + std::to_string(v) +
                                   "\n";
                emit(bn.c.out_path, bn.c.json ? j.dump() + "\n" : text, out);
                return;
            }
            if (bn.n < 1)
                throw out_of_range_error("--n must be >= 1");
            bool inner = all_inner_binoms_zero(bn.n, bn.p);
            bool power = is_power_of(bn.n, bn.p);
            if (inner != power)
                throw invariant_violation_error(
                    "inner binomial vanishing disagrees with the power-of-p test at n = " +
                    std::to_string(bn.n));
            nlohmann::json j{
                {"n", bn.n}, {"p", bn.p}, {"inner_binoms_zero", inner}, {"power_of_p", power}};
            std::string text = "n " + std::to_string(bn.n) + " p " + std::to_string(bn.p) +
                               " inner_binoms_zero " + yn(inner) + " power_of_p " + yn(power) +
                               "\n";
            emit(bn.c.out_path, bn.c.json ? j.dump() + "\n" : text, out);
        });
    }

    // ---- expos ----
    struct {
        u64 q = 2;
        unsigned d = 2;
        Common c;
    } ex;
    {
        auto* sub = app.add_subcommand(
            "expos", "divisibility and coverage of the boundary exponent pair (e1, e2)");
        sub->add_option("--q", ex.q, "base field size (any integer >= 2)")->required();
        sub->add_option("--d", ex.d, "q-degree (>= 2)")->required();
        add_common(sub, ex.c);
        sub->callback([&] {
            if (ex.q < 2 || ex.d < 2)
                throw out_of_range_error("expos needs q >= 2 and d >= 2");
            unsigned n = ex.d * (ex.d - 1) + 1;
            auto [e1, e2] = boundary_exponents(ex.q, ex.d);
            bool div = boundary_exponent_divisibility(ex.q, ex.d);
            bool cov = exponent_coverage(ex.d);
            bool holds = exponent_lemma_check(ex.q, ex.d);
            nlohmann::json j{{"q", ex.q},           {"d", ex.d},
                             {"n", n},              {"e1", e1.str()},
                             {"e2", e2.str()},      {"divisibility", div},
                             {"coverage", cov},     {"holds", holds}};
            std::string text = "q " + std::to_string(ex.q) + " d " + std::to_string(ex.d) + " n " +
                               std::to_string(n) + " divisibility " + yn(div) + " coverage " +
                               yn(cov) + " holds " + yn(holds) + "\n";
            emit(ex.c.out_path, ex.c.json ? j.dump() + "\n" : text, out);
        });
    }

    // ---- qsp ----
    struct {
        u64 p = 2;
        unsigned s = 1, n = 1, d = 1;
        std::string coeffs;
        Common c;
    } qs;
    {
        auto* sub = app.add_subcommand(
            "qsp", "does this linearized polynomial qualify as a quasi-subfield kernel?");
        sub->add_option("--p", qs.p, "characteristic (prime)")->required();
        sub->add_option("--s", qs.s, "q = p^s")->capture_default_str();
        sub->add_option("--n", qs.n, "extension degree over GF(q)")->required();
        sub->add_option("--d", qs.d, "q-degree of the polynomial")->required();
        sub->add_option("--coeffs", qs.coeffs,
                        "comma list a<i>=<code>; a_d defaults to 1 when omitted")
            ->required();
        add_common(sub, qs.c);
        sub->callback([&] {
            FieldSpec f = make_field(qs.p, qs.s, qs.n);
            LinearizedPoly L = poly_from_coeffs(f, qs.d, parse_coeff_list(qs.coeffs));
            LinearizedPoly M = monic(L);
            std::optional<unsigned> j_low;
            for (unsigned i = 0; i < M.d(); ++i)
                if (!M.coeffs[i].is_zero())
                    j_low = i;
            unsigned k = nullity_fast(M);
            bool cond = j_low && lambda_degree_condition(*j_low, M.d(), f.n);
            bool verdict = is_quasi_subfield(L);
            nlohmann::json j{{"quasi_subfield", verdict},
                             {"nullity", k},
                             {"j", j_low ? nlohmann::json(*j_low) : nlohmann::json(nullptr)},
                             {"degree_condition", cond}};
            std::string text = std::string("quasi_subfield ") + yn(verdict) + " nullity " +
                               std::to_string(k) + " j " +
                               (j_low ? std::to_string(*j_low) : std::string("none")) +
                               " degree_condition " + yn(cond) + "\n";
            emit(qs.c.out_path, qs.c.json ? j.dump() + "\n" : text, out);
        });
    }

    // ---- scan ----
    struct {
        u64 q = 2;
        unsigned n = 1;
        unsigned d_lo = 1, d_hi = 1, m_lo = 2, m_hi = 2;
        u64 deg_lambda = 1;
        Common c;
    } sc;
    {
        auto* sub = app.add_subcommand("scan", "attack-cost model over a grid of (d, m)");
        sub->add_option("--q", sc.q, "base field size")->required();
        sub->add_option("--n", sc.n, "extension degree")->required();
        sub->add_option("--d-lo", sc.d_lo, "smallest d")->required();
        sub->add_option("--d-hi", sc.d_hi, "largest d")->required();
        sub->add_option("--m-lo", sc.m_lo, "smallest m")->capture_default_str();
        sub->add_option("--m-hi", sc.m_hi, "largest m")->capture_default_str();
        sub->add_option("--deg-lambda", sc.deg_lambda, "degree of the auxiliary map")
            ->capture_default_str();
        add_common(sub, sc.c);
        sub->callback([&] {
            auto rows = scan_parameters(sc.q, sc.n, sc.d_lo, sc.d_hi, sc.m_lo, sc.m_hi,
                                        sc.deg_lambda);
            std::string text = "q\tn\td\tm\tdeg_lambda\tlog2_relation\tlog2_linalg\tlog2_total"
                               "\twindow\tbeats_generic\tbeats_bruteforce\n";
            nlohmann::json jr = nlohmann::json::array();
            for (const auto& r : rows) {
                text += std::to_string(sc.q) + "\t" + std::to_string(sc.n) + "\t" +
                        std::to_string(r.d) + "\t" + std::to_string(r.m) + "\t" +
                        std::to_string(sc.deg_lambda) + "\t" + fixed3(r.est.log2_relation_term) +
                        "\t" + fixed3(r.est.log2_linear_algebra_term) + "\t" +
                        fixed3(r.est.log2_total) + "\t" + yn(r.window_ok) + "\t" +
                        yn(r.est.beats_generic) + "\t" + yn(r.est.beats_bruteforce) + "\n";
                jr.push_back(scan_row_to_json(r, sc.q, sc.n, sc.deg_lambda));
            }
            emit(sc.c.out_path, sc.c.json ? nlohmann::json{{"rows", jr}}.dump() + "\n" : text,
                 out);
        });
    }

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("linfield");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(storage.size());
    for (auto& s : storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const invariant_violation_error& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

} // namespace linfield
