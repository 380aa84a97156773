#include "rps/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rps/certify.hpp"
#include "rps/density.hpp"
#include "rps/errors.hpp"
#include "rps/symmetric.hpp"

namespace rps::cli {

namespace {

using nlohmann::json;

void print_kv(std::ostream& out, std::string_view key, const std::string& value) {
    out << std::left << std::setw(14) << key << value << "\n";
}

json enclosure_json(const Enclosure& e) {
    return {{"N", e.terms_used}, {"lo", to_string(e.lo)}, {"hi", to_string(e.hi)}};
}

json built_json(const BuiltSequence& b) {
    return {{"n", b.n}, {"s", b.exponents.values()}, {"value", to_string(b.value)}};
}

void print_built(std::ostream& out, const BuiltSequence& b) {
    print_kv(out, "n", std::to_string(b.n));
    print_kv(out, "s", to_string(b.exponents));
    print_kv(out, "value", to_string(b.value));
}

struct Options {
    std::string poly;
    std::string seq;
    std::string target;
    std::string eps;
    std::string value;
    std::string cert_file;
    std::uint64_t terms = 0;
    std::uint64_t kmax = 0;
    unsigned depth = 64;
    std::uint64_t kstart = 1;
    std::uint32_t k = 0;
    bool complete = false;
    std::uint32_t nmax = 0;
    std::uint32_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t n = 0;
    std::string xi;
    bool json_out = false;
};

int dispatch(const std::string& verb, const Options& o, std::ostream& out, std::ostream& err);

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact reciprocal power sums: certificates, enclosures, density tools"};
    app.require_subcommand(1);
    Options o;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", o.json_out, "canonical JSON output"); };

    auto* c_eval = app.add_subcommand("eval", "exact value of the reciprocal power sum");
    c_eval->add_option("--poly", o.poly, "coefficients low-to-high, e.g. 1,0,1")->required();
    c_eval->add_option("--seq", o.seq, "positive exponents s_1,...,s_n")->required();
    add_json(c_eval);

    auto* c_cert = app.add_subcommand("certify", "emit a non-integrality certificate");
    c_cert->add_option("--poly", o.poly)->required();
    c_cert->add_option("--seq", o.seq)->required();
    add_json(c_cert);

    auto* c_verify = app.add_subcommand("verify", "re-check a certificate file");
    c_verify->add_option("cert", o.cert_file, "certificate JSON file")->required();
    add_json(c_verify);

    auto* c_alpha = app.add_subcommand("alpha", "rigorous enclosure of the full series value");
    c_alpha->add_option("--poly", o.poly)->required();
    c_alpha->add_option("--terms", o.terms, "partial-sum length")->required();
    add_json(c_alpha);

    auto* c_kakeya = app.add_subcommand("kakeya", "decide the tail-dominance condition per k");
    c_kakeya->add_option("--poly", o.poly)->required();
    c_kakeya->add_option("--kmax", o.kmax)->required();
    c_kakeya->add_option("--depth", o.depth, "doubling rounds per k (default 64)");
    add_json(c_kakeya);

    auto* c_approx = app.add_subcommand("approx", "greedy subseries selection below a target");
    c_approx->add_option("--poly", o.poly)->required();
    c_approx->add_option("--target", o.target, "rational num/den")->required();
    c_approx->add_option("--eps", o.eps, "rational num/den")->required();
    c_approx->add_option("--kstart", o.kstart, "first index eligible (default 1)");
    add_json(c_approx);

    auto* c_build = app.add_subcommand("build", "construct an exponent sequence hitting "
                                                "(target-eps, target)");
    c_build->add_option("--poly", o.poly)->required();
    c_build->add_option("--target", o.target)->required();
    c_build->add_option("--eps", o.eps)->required();
    add_json(c_build);

    auto* c_straddle = app.add_subcommand("straddle", "bracket 1 from both sides (f = x^2+1)");
    c_straddle->add_option("--eps", o.eps)->required();
    add_json(c_straddle);

    auto* c_lfilter = app.add_subcommand("lfilter", "denominator test for the unattainable set L");
    c_lfilter->add_option("value", o.value, "rational num/den")->required();
    add_json(c_lfilter);

    auto* c_symfun = app.add_subcommand("symfun", "elementary or complete symmetric sum");
    c_symfun->add_option("--poly", o.poly)->required();
    c_symfun->add_option("--seq", o.seq)->required();
    c_symfun->add_option("--k", o.k)->required();
    c_symfun->add_flag("--complete", o.complete, "non-decreasing index tuples");
    add_json(c_symfun);

    auto* c_scan = app.add_subcommand("scan", "hunt integer-valued symmetric sums");
    c_scan->add_option("--poly", o.poly)->required();
    c_scan->add_option("--nmax", o.nmax)->required();
    c_scan->add_option("--trials", o.trials)->required();
    c_scan->add_option("--seed", o.seed)->required();
    add_json(c_scan);

    auto* c_primes = app.add_subcommand("primes", "prime searches");
    c_primes->require_subcommand(1);
    auto* c_cover = c_primes->add_subcommand("cover", "covering prime for an index bound");
    c_cover->add_option("n", o.n)->required();
    add_json(c_cover);
    auto* c_erdos = c_primes->add_subcommand("erdos", "smallest prime = 1 (mod 4) in (xi, 2*xi]");
    c_erdos->add_option("xi", o.xi)->required();
    add_json(c_erdos);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::string verb = app.get_subcommands().front()->get_name();
    if (verb == "primes")
        verb = c_primes->get_subcommands().front()->get_name();

    try {
        return dispatch(verb, o, out, err);
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

namespace {

int dispatch(const std::string& verb, const Options& o, std::ostream& out, std::ostream& err) {
    if (verb == "eval") {
        Poly f = parse_poly(o.poly);
        ExponentSeq s = parse_exponent_seq(o.seq);
        Rational h = hsum(f, s);
        if (o.json_out) {
            json j{{"f", to_string(f)}, {"n", s.size()}, {"s", s.values()}, {"value", to_string(h)}};
            out << j.dump() << "\n";
        } else {
            print_kv(out, "value", to_string(h));
        }
        return 0;
    }
    if (verb == "certify") {
        Poly f = parse_poly(o.poly);
        ExponentSeq s = parse_exponent_seq(o.seq);
        Certificate c = certify_noninteger(f, s);
        if (o.json_out) {
            out << certificate_to_json(c) << "\n";
        } else {
            print_kv(out, "f", to_string(c.f));
            print_kv(out, "s", to_string(c.s));
            print_kv(out, "n", std::to_string(c.n()));
            if (c.is_interval()) {
                const auto& ic = c.interval();
                print_kv(out, "kind", "interval");
                print_kv(out, "floor", std::to_string(ic.floor_value));
                print_kv(out, "branch", to_string(ic.branch));
                print_kv(out, "bound_witness", to_string(ic.bound_witness));
            } else {
                const auto& pc = c.padic();
                print_kv(out, "kind", "padic");
                print_kv(out, "p", std::to_string(pc.p));
                print_kv(out, "r_p", std::to_string(pc.r_p));
                print_kv(out, "case", std::to_string(pc.case_tag));
                print_kv(out, "valuation", std::to_string(pc.claimed_valuation));
            }
        }
        return 0;
    }
    if (verb == "verify") {
        std::ifstream in(o.cert_file);
        if (!in)
            throw input_error("cannot open certificate file: " + o.cert_file);
        std::stringstream buf;
        buf << in.rdbuf();
        Certificate c = certificate_from_json(buf.str());
        VerifyResult r = verify_certificate(c.f, c.s, c);
        if (o.json_out) {
            json j{{"valid", r.ok}, {"reason", r.reason}};
            out << j.dump() << "\n";
        } else {
            print_kv(out, "valid", r.ok ? "true" : "false");
            print_kv(out, "reason", r.reason);
        }
        return r.ok ? 0 : 1;
    }
    if (verb == "alpha") {
        Enclosure e = alpha_enclosure(parse_poly(o.poly), o.terms);
        if (o.json_out) {
            out << enclosure_json(e).dump() << "\n";
        } else {
            print_kv(out, "N", std::to_string(e.terms_used));
            print_kv(out, "lo", to_string(e.lo));
            print_kv(out, "hi", to_string(e.hi));
        }
        return 0;
    }
    if (verb == "kakeya") {
        auto verdicts = kakeya_check_all(parse_poly(o.poly), o.kmax, o.depth);
        bool all_hold = true;
        for (const auto& v : verdicts)
            all_hold = all_hold && v.verdict == KakeyaStatus::Holds;
        if (o.json_out) {
            json arr = json::array();
            for (const auto& v : verdicts)
                arr.push_back({{"k", v.k},
                               {"verdict", to_string(v.verdict)},
                               {"depth", v.witness_depth}});
            json j{{"all_hold", all_hold}, {"k_max", o.kmax}, {"verdicts", arr}};
            out << j.dump() << "\n";
        } else {
            for (const auto& v : verdicts)
                out << "k=" << v.k << " " << to_string(v.verdict) << " (tail terms "
                    << v.witness_depth << ")\n";
            print_kv(out, "all_hold", all_hold ? "true" : "false");
        }
        return 0;
    }
    if (verb == "approx") {
        GreedySelection sel = greedy_subseries(parse_poly(o.poly), parse_rational(o.target),
                                               parse_rational(o.eps), o.kstart);
        if (o.json_out) {
            json j{{"indices", sel.indices}, {"value", to_string(sel.value)}};
            out << j.dump() << "\n";
        } else {
            std::string idx;
            for (std::size_t i = 0; i < sel.indices.size(); ++i) {
                if (i) idx += ',';
                idx += std::to_string(sel.indices[i]);
            }
            print_kv(out, "indices", idx);
            print_kv(out, "value", to_string(sel.value));
        }
        return 0;
    }
    if (verb == "build") {
        BuiltSequence b = build_sequence(parse_poly(o.poly), parse_rational(o.target),
                                         parse_rational(o.eps));
        if (o.json_out)
            out << built_json(b).dump() << "\n";
        else
            print_built(out, b);
        return 0;
    }
    if (verb == "straddle") {
        auto [below, above] = straddle_one(parse_rational(o.eps));
        if (o.json_out) {
            json j{{"above", built_json(above)}, {"below", built_json(below)}};
            out << j.dump() << "\n";
        } else {
            out << "below 1:\n";
            print_built(out, below);
            out << "above 1:\n";
            print_built(out, above);
        }
        return 0;
    }
    if (verb == "lfilter") {
        LVerdict v = l_filter(parse_rational(o.value));
        if (o.json_out) {
            json j{{"verdict", to_string(v)}};
            out << j.dump() << "\n";
        } else {
            print_kv(out, "verdict", to_string(v));
        }
        return 0;
    }
    if (verb == "symfun") {
        Poly f = parse_poly(o.poly);
        ExponentSeq s = parse_exponent_seq(o.seq);
        Rational v = o.complete ? complete_symmetric(f, s, o.k) : elementary_symmetric(f, s, o.k);
        if (o.json_out) {
            json j{{"k", o.k},
                   {"kind", o.complete ? "complete" : "elementary"},
                   {"value", to_string(v)}};
            out << j.dump() << "\n";
        } else {
            print_kv(out, "value", to_string(v));
        }
        return 0;
    }
    if (verb == "scan") {
        ScanReport r = conjecture_scan(parse_poly(o.poly), o.nmax, o.trials, o.seed);
        if (o.json_out) {
            json hits = json::array();
            for (const auto& h : r.hits)
                hits.push_back({{"trial", h.trial},
                                {"n", h.n},
                                {"k", h.k},
                                {"kind", h.complete_kind ? "complete" : "elementary"},
                                {"value", to_string(h.value)}});
            json j{{"hits", hits},
                   {"largest_hit_n", r.largest_hit_n},
                   {"n_candidate", r.n_candidate()},
                   {"n_max", r.n_max},
                   {"seed", r.seed},
                   {"trials", r.trials}};
            out << j.dump() << "\n";
        } else {
            for (const auto& h : r.hits)
                out << "trial " << h.trial << " n=" << h.n << " k=" << h.k << " "
                    << (h.complete_kind ? "complete" : "elementary") << " = "
                    << to_string(h.value) << "\n";
            print_kv(out, "hits", std::to_string(r.hits.size()));
            print_kv(out, "largest_hit_n", std::to_string(r.largest_hit_n));
            print_kv(out, "n_candidate", std::to_string(r.n_candidate()));
        }
        return 0;
    }
    if (verb == "cover") {
        CoveringPrime cp = covering_prime(o.n);
        if (o.json_out) {
            json j{{"p", cp.p}, {"r_p", cp.r_p}};
            out << j.dump() << "\n";
        } else {
            print_kv(out, "p", std::to_string(cp.p));
            print_kv(out, "r_p", std::to_string(cp.r_p));
        }
        return 0;
    }
    if (verb == "erdos") {
        std::uint64_t p = erdos_prime(parse_rational(o.xi));
        if (o.json_out) {
            json j{{"p", p}};
            out << j.dump() << "\n";
        } else {
            print_kv(out, "p", std::to_string(p));
        }
        return 0;
    }
    err << "error: unknown command '" << verb << "'\n";
    return 2;
}

} // namespace

} // namespace rps::cli
