#include "pp8/cli.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pp8/equiv.hpp"
#include "pp8/hermite.hpp"
#include "pp8/pptest.hpp"
#include "pp8/search.hpp"

namespace pp8 {

namespace {

struct CoeffSyntaxError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// accepted coefficient forms: "0", "1", "e", "e^k"
FieldElement parse_elem(const FieldCtx& F, const std::string& tok) {
    if (tok == "0") return F.zero();
    if (tok == "1") return F.one();
    if (tok == "e") return F.generator();
    if (tok.rfind("e^", 0) == 0) {
        try {
            size_t used = 0;
            long long k = std::stoll(tok.substr(2), &used);
            if (used == tok.size() - 2) return F.from_exp(k);
        } catch (const std::exception&) {
        }
    }
    throw CoeffSyntaxError("bad coefficient '" + tok + "' (accepted forms: 0, 1, e^k)");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::string format_elem(const FieldCtx& F, FieldElement a, bool basis_hex) {
    if (basis_hex) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "0x%X", a.bits);
        return buf;
    }
    return std::to_string(F.to_log(a).code);
}

Octic parse_octic(const FieldCtx& F, const std::string& coeffs) {
    auto toks = split_commas(coeffs);
    if (toks.size() == 7) {
        std::array<FieldElement, 7> c;
        for (int i = 0; i < 7; ++i) c[i] = parse_elem(F, toks[i]);
        return Octic::normalized(F, c[0], c[1], c[2], c[3], c[4], c[5], c[6]);
    }
    if (toks.size() == 9) {
        std::array<FieldElement, 9> c{};
        for (int i = 0; i < 9; ++i) c[8 - i] = parse_elem(F, toks[i]);
        return Octic::general(F, c);
    }
    throw CoeffSyntaxError("--coeffs needs 7 values a7,...,a1 (or 9 values a8,...,a0)");
}

std::string timestamp_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::string modulus_hex(uint32_t m) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%X", m);
    return buf;
}

nlohmann::json classification_json(const Classification& c, bool frobenius_filter) {
    nlohmann::json j;
    j["r"] = c.r;
    j["modulus"] = modulus_hex(c.ctx->modulus());
    j["classes"] = nlohmann::json::array();
    for (const auto& rec : c.records) {
        if (frobenius_filter && !rec.frobenius_rep) continue;
        auto logs = tuple_logs(rec.octic);
        nlohmann::json e;
        const char* names[7] = {"a7", "a6", "a5", "a4", "a3", "a2", "a1"};
        for (int i = 0; i < 7; ++i) e[names[i]] = logs[i];
        j["classes"].push_back(e);
    }
    j["proof_steps"] = nlohmann::json::array();
    if (c.report)
        for (const auto& s : c.report->steps)
            j["proof_steps"].push_back({{"name", s.name}, {"status", s.pass ? "PASS" : "FAIL"}});
    return j;
}

void print_classification_text(std::ostream& os, const Classification& c, bool frobenius_filter) {
    for (const auto& rec : c.records) {
        if (frobenius_filter && !rec.frobenius_rep) continue;
        auto logs = tuple_logs(rec.octic);
        for (int i = 0; i < 7; ++i) os << (i ? " " : "") << logs[i];
        os << "\n";
    }
    if (c.report) {
        for (const auto& s : c.report->steps) {
            os << (s.pass ? "PASS " : "FAIL ") << s.name << "\n";
            if (!s.pass && !s.detail.empty()) os << "     " << s.detail << "\n";
        }
        os << (c.report->all_pass()
                   ? "OVERALL: PASS (no non-exceptional degree-8 PP over F_2^" + std::to_string(c.r) + ")"
                   : "OVERALL: FAIL")
           << "\n";
    }
}

int run_hc(const FieldCtx& F, long long k, const std::vector<std::string>& sets, bool reduce,
           bool basis_hex, std::ostream& out) {
    std::array<std::optional<std::string>, 7> given;  // index i -> a_{i+1}
    for (const auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq < 2 || s[0] != 'a')
            throw CoeffSyntaxError("--set expects aN=VALUE, got '" + s + "'");
        int idx = std::stoi(s.substr(1, eq - 1));
        if (idx < 1 || idx > 7) throw CoeffSyntaxError("--set: variable must be a1..a7");
        given[idx - 1] = s.substr(eq + 1);
    }

    std::vector<int> free_vars;
    bool pure_f2 = true;
    for (int i = 0; i < 7; ++i) {
        if (!given[i]) {
            free_vars.push_back(i + 1);
        } else if (*given[i] != "0" && *given[i] != "1") {
            pure_f2 = false;
        }
    }

    if (free_vars.empty()) {
        HcCoeffs<FieldElement> c{parse_elem(F, *given[6]), parse_elem(F, *given[5]),
                                 parse_elem(F, *given[4]), parse_elem(F, *given[3]),
                                 parse_elem(F, *given[2]), parse_elem(F, *given[1]),
                                 parse_elem(F, *given[0])};
        out << format_elem(F, hc(F, k, c), basis_hex) << "\n";
        return 0;
    }
    if (pure_f2) {
        std::array<SparsePoly7, 7> a;
        for (int i = 0; i < 7; ++i) {
            if (!given[i]) a[i] = SparsePoly7::var(i + 1);
            else a[i] = (*given[i] == "1") ? SparsePoly7::one() : SparsePoly7::zero();
        }
        SparsePoly7 res = hc(Sym7Domain{}, F.r(), k, {a[6], a[5], a[4], a[3], a[2], a[1], a[0]});
        if (reduce) res = sp_reduce_exponents(res, F.q());
        out << to_string(res) << "\n";
        return 0;
    }
    if (free_vars.size() == 1) {
        FieldPolyDomain PD(F, reduce);
        std::array<FieldPoly, 7> a;
        for (int i = 0; i < 7; ++i) {
            if (!given[i]) a[i] = PD.variable();
            else a[i] = PD.constant(parse_elem(F, *given[i]));
        }
        FieldPoly res = hc(PD, F.r(), k, {a[6], a[5], a[4], a[3], a[2], a[1], a[0]});
        if (reduce) res = poly_reduce_exponents(F, res, F.q());
        out << to_string(F, res, "a" + std::to_string(free_vars[0])) << "\n";
        return 0;
    }
    throw CoeffSyntaxError(
        "field constants other than 0/1 need all variables set, or exactly one left free");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"degree-8 permutation polynomials over GF(2^r): Hermite-criterion engine, "
                 "permutation tests, and classification up to linear transformations"};
    app.require_subcommand(1);

    int r = 0;
    long long k = 0;
    std::string coeffs, format = "text", out_path;
    std::vector<std::string> sets;
    bool frobenius = false, basis_hex = false, reduce = false;
    int threads = 1;

    auto* c_hc = app.add_subcommand("hc", "Hermite sum, concrete or symbolic");
    c_hc->add_option("--r", r)->required();
    c_hc->add_option("--k", k)->required();
    c_hc->add_option("--set", sets, "assign a variable, e.g. --set a5=e^3 or --set a6=1");
    c_hc->add_flag("--reduce", reduce, "fold exponents modulo a^q - a");
    c_hc->add_flag("--basis", basis_hex, "print elements as polynomial-basis hex");

    auto* c_ispp = app.add_subcommand("is-pp", "permutation test for x^8 + sum a_i x^i");
    c_ispp->add_option("--r", r)->required();
    c_ispp->add_option("--coeffs", coeffs, "a7,a6,a5,a4,a3,a2,a1")->required();

    auto* c_isex = app.add_subcommand("is-exceptional", "exceptionality test (r > 3)");
    c_isex->add_option("--r", r)->required();
    c_isex->add_option("--coeffs", coeffs)->required();

    auto* c_norm = app.add_subcommand("normalize", "normal form and witness");
    c_norm->add_option("--r", r)->required();
    c_norm->add_option("--coeffs", coeffs, "a7,...,a1 or a8,...,a0")->required();
    c_norm->add_flag("--basis", basis_hex);

    auto* c_cls = app.add_subcommand("classify", "classes for r=4..6, proof replay for r=7..9");
    c_cls->add_option("--r", r)->required();
    c_cls->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    c_cls->add_flag("--frobenius-reduce", frobenius, "keep only representatives with a5 in gamma(r)");
    c_cls->add_option("--out", out_path, "write results (with a timestamp) to this file");
    c_cls->add_option("--threads", threads)->check(CLI::PositiveNumber);

    auto* c_ver = app.add_subcommand("verify", "replay the nonexistence proof for r=7..9");
    c_ver->add_option("--r", r)->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(c_hc)) {
            FieldCtx F = make_ctx(r);
            return run_hc(F, k, sets, reduce, basis_hex, out);
        }
        if (app.got_subcommand(c_ispp)) {
            FieldCtx F = make_ctx(r);
            bool pp = is_pp_wan(parse_octic(F, coeffs));
            out << (pp ? "PP" : "not PP") << "\n";
            return pp ? 0 : 1;
        }
        if (app.got_subcommand(c_isex)) {
            FieldCtx F = make_ctx(r);
            bool ex = is_exceptional_deg8(parse_octic(F, coeffs));
            out << (ex ? "exceptional" : "not exceptional") << "\n";
            return ex ? 0 : 1;
        }
        if (app.got_subcommand(c_norm)) {
            FieldCtx F = make_ctx(r);
            NormalForm nf = normalize(parse_octic(F, coeffs));
            auto logs = tuple_logs(nf.octic);
            out << "normal form:";
            for (auto l : logs) out << " " << l;
            out << "\nwitness: s=" << format_elem(F, nf.witness.s, basis_hex)
                << " t=" << format_elem(F, nf.witness.t, basis_hex)
                << " u=" << format_elem(F, nf.witness.u, basis_hex)
                << " v=" << format_elem(F, nf.witness.v, basis_hex) << "\n";
            return 0;
        }
        if (app.got_subcommand(c_cls)) {
            Classification c = classify(r, SearchOptions{threads});
            bool pass = !c.report || c.report->all_pass();
            if (!out_path.empty()) {
                std::ofstream file(out_path);
                if (!file) throw std::runtime_error("cannot write " + out_path);
                if (format == "json") {
                    auto j = classification_json(c, frobenius);
                    j["generated_at"] = timestamp_now();
                    file << j.dump(2) << "\n";
                } else {
                    file << "# pp8 classify r=" << c.r << " modulus=" << modulus_hex(c.ctx->modulus())
                         << " generated_at=" << timestamp_now() << "\n";
                    print_classification_text(file, c, frobenius);
                }
                out << "wrote " << out_path << "\n";
            } else if (format == "json") {
                out << classification_json(c, frobenius).dump(2) << "\n";
            } else {
                print_classification_text(out, c, frobenius);
            }
            return pass ? 0 : 1;
        }
        if (app.got_subcommand(c_ver)) {
            if (r < 7 || r > 9) {
                err << "verify: --r must be 7, 8 or 9\n";
                return 2;
            }
            Classification c = classify(r);
            print_classification_text(out, c, false);
            return c.report->all_pass() ? 0 : 1;
        }
    } catch (const CoeffSyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace pp8
