// seifert-contact: command-line front end.
//
// Exit codes: 0 success, 2 invalid input, 3 internal cross-check failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seifert/continued_fraction.hpp"
#include "seifert/error.hpp"
#include "seifert/report.hpp"
#include "seifert/seifert_data.hpp"

using namespace seifert;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitCrossCheck = 3;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Sign parse_sign(const std::string& s) {
    if (s == "+" || s == "plus") return Sign::plus;
    if (s == "-" || s == "minus") return Sign::minus;
    throw Error(ErrorKind::InvalidArgument, "sign must be + or -, got '" + s + "'");
}

std::vector<Integer> parse_integer_list(const std::string& text) {
    std::vector<Integer> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const Rational v = Rational::parse(piece);
        if (!v.is_integer()) throw Error(ErrorKind::InvalidArgument, "expected an integer, got '" + piece + "'");
        out.push_back(v.numerator());
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorKind::InvalidArgument, e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contact surgery, Seifert invariants and non-fillability certificates in exact arithmetic"};
    app.require_subcommand(1);
    bool json = false;

    // cf
    auto* cf = app.add_subcommand("cf", "Negative continued fraction expansion or evaluation");
    std::string cf_expand, cf_value;
    auto* cf_expand_opt = cf->add_option("--expand", cf_expand, "Rational r < 0 to expand");
    auto* cf_value_opt = cf->add_option("--value", cf_value, "Comma separated entries c0,c1,... to evaluate");
    cf_expand_opt->excludes(cf_value_opt);
    cf->add_flag("--json", json);

    // convert
    auto* conv = app.add_subcommand("convert", "Turn a contact r-surgery into contact (+1)/(-1) surgeries");
    std::string conv_r;
    long conv_tb = kDefaultRootTb, conv_rot = kDefaultRootRot;
    bool conv_choices = false;
    conv->add_option("--r", conv_r, "Contact surgery coefficient p/q")->required();
    conv->add_option("--tb", conv_tb, "Thurston-Bennequin number of K")->capture_default_str();
    conv->add_option("--rot", conv_rot, "Rotation number of K")->capture_default_str();
    conv->add_flag("--choices", conv_choices, "List every stabilization choice");
    conv->add_flag("--json", json);

    // normalize
    auto* norm = app.add_subcommand("normalize", "Seifert normal form via Rolfsen twists");
    long norm_g = 1;
    long norm_n = 0;
    std::vector<std::string> norm_pairs;
    norm->add_option("--g", norm_g, "Base genus")->required();
    norm->add_option("--n", norm_n, "Euler number of the circle bundle")->required();
    norm->add_option("--pair", norm_pairs, "Exceptional fiber alpha,beta (repeatable)");
    norm->add_flag("--json", json);

    // report
    auto* rep = app.add_subcommand("report", "Full report for xi^{+-}_r on M(g, n; (alpha, 1))");
    long rep_g = 1, rep_n = 2, rep_alpha = 1, rep_r = 1;
    std::string rep_sign = "+";
    rep->add_option("--g", rep_g)->required();
    rep->add_option("--n", rep_n)->required();
    rep->add_option("--alpha", rep_alpha)->required();
    rep->add_option("--sign", rep_sign, "+ or -")->required();
    rep->add_option("--r", rep_r, "Rotation number of the last knot")->required();
    rep->add_flag("--json", json);

    // sweep
    auto* sw = app.add_subcommand("sweep", "Run the identity suite over a parameter grid");
    std::string sw_g = "1..3", sw_n, sw_alpha = "1..15";
    bool sw_mu_only = false;
    sw->add_option("--g-range", sw_g, "a..b")->capture_default_str();
    sw->add_option("--n-range", sw_n, "a..b (default 2g..2g+4 per genus)");
    sw->add_option("--alpha-range", sw_alpha, "a..b")->capture_default_str();
    sw->add_flag("--mu-only", sw_mu_only, "Check only the order of mu");
    sw->add_flag("--json", json);

    // obstruction
    auto* obs = app.add_subcommand("obstruction", "Certify that Lambda_{d+2} embeds in no diagonal lattice");
    long obs_g = 1;
    obs->add_option("--g", obs_g)->required();
    obs->add_flag("--json", json);

    // witness
    auto* wit = app.add_subcommand("witness", "Find alpha with `count` contact structures of distinct c1 order");
    long wit_g = 1, wit_count = 1, wit_max = 5000;
    wit->add_option("--g", wit_g)->required();
    wit->add_option("--count", wit_count)->required();
    wit->add_option("--max-primes", wit_max, "Prime search cap")->capture_default_str();
    wit->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (cf->parsed()) {
            if (!cf_expand_opt->count() && !cf_value_opt->count())
                throw Error(ErrorKind::InvalidArgument, "cf needs --expand or --value");
            if (cf_expand_opt->count()) {
                const Rational r = parse_rational(cf_expand);
                const auto e = neg_cf_expand(r);
                if (json) {
                    Json out{{"r", r.to_string()}, {"entries", Json::array()}, {"stabilization_counts", Json::array()}};
                    for (const auto& c : e.entries()) out["entries"].push_back(c.get_str());
                    for (const auto& s : stabilization_counts(e)) out["stabilization_counts"].push_back(s.get_str());
                    emit(out);
                } else {
                    std::cout << r << " = [";
                    for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? ", " : "") << e.entries()[i];
                    std::cout << "]\n";
                }
            } else {
                const NegContinuedFraction e(parse_integer_list(cf_value));
                const Rational v = neg_cf_value(e);
                if (json) {
                    emit(Json{{"value", v.to_string()}});
                } else {
                    std::cout << v << "\n";
                }
            }
            return 0;
        }

        if (conv->parsed()) {
            const Rational r = parse_rational(conv_r);
            const auto d = convert(r, conv_tb, conv_rot);
            if (json) {
                Json out = to_json(d);
                out["r"] = r.to_string();
                if (conv_choices) {
                    out["choices"] = Json::array();
                    for (const auto& c : enumerate_choices(d)) out["choices"].push_back(to_json(c));
                }
                emit(out);
            } else {
                std::cout << render_text(d, r);
                if (conv_choices) {
                    for (const auto& c : enumerate_choices(d)) {
                        std::cout << "  rotations [";
                        for (std::size_t i = 0; i < c.rotations.size(); ++i)
                            std::cout << (i ? ", " : "") << c.rotations[i];
                        std::cout << "]\n";
                    }
                }
            }
            return 0;
        }

        if (norm->parsed()) {
            SeifertInvariants inv;
            inv.g = norm_g;
            inv.n = norm_n;
            for (const auto& p : norm_pairs) {
                const auto v = parse_integer_list(p);
                if (v.size() != 2) throw Error(ErrorKind::InvalidArgument, "pair must be alpha,beta, got '" + p + "'");
                inv.pairs.push_back({v[0], v[1]});
            }
            const auto out = normalize(inv);
            std::optional<std::vector<Rational>> coefficients;
            try {
                coefficients = coefficients_from_seifert(out);
            } catch (const Error&) {
            }
            if (json) {
                Json j{{"g", std::to_string(out.g)}, {"n", out.n.get_str()}, {"euler", out.euler().to_string()}};
                j["pairs"] = Json::array();
                for (const auto& p : out.pairs) j["pairs"].push_back(Json::array({p.alpha.get_str(), p.beta.get_str()}));
                j["coefficients"] = nullptr;
                if (coefficients) {
                    j["coefficients"] = Json::array();
                    for (const auto& c : *coefficients) j["coefficients"].push_back(c.to_string());
                }
                emit(j);
            } else {
                std::cout << "M(" << out.g << "," << out.n;
                if (!out.pairs.empty()) std::cout << ";";
                for (std::size_t i = 0; i < out.pairs.size(); ++i)
                    std::cout << (i ? "," : "") << "(" << out.pairs[i].alpha << "," << out.pairs[i].beta << ")";
                std::cout << "), e = " << out.euler() << "\n";
                if (coefficients) {
                    std::cout << "contact coefficients:";
                    for (const auto& c : *coefficients) std::cout << " " << c;
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (rep->parsed()) {
            const FamilyParams p{rep_g, rep_n, rep_alpha, parse_sign(rep_sign), rep_r};
            const auto report = build_structure_report(p);
            if (json) {
                emit(to_json(report));
            } else {
                std::cout << render_text(report);
            }
            if (!report.all_checks_pass()) {
                std::cerr << "internal cross-check failed\n";
                return kExitCrossCheck;
            }
            return 0;
        }

        if (sw->parsed()) {
            SweepOptions o;
            o.g = parse_range(sw_g);
            if (!sw_n.empty()) o.n = parse_range(sw_n);
            o.alpha = parse_range(sw_alpha);
            o.mu_only = sw_mu_only;
            const auto summary = run_sweep(o);
            if (json) {
                emit(to_json(summary));
            } else {
                std::cout << render_text(summary);
            }
            return summary.total_failed() == 0 ? 0 : kExitCrossCheck;
        }

        if (obs->parsed()) {
            const auto r = nonfillability_obstruction(obs_g);
            if (json) {
                emit(to_json(r));
            } else {
                std::cout << render_text(r);
            }
            return 0;
        }

        if (wit->parsed()) {
            const auto w = distinct_witness(wit_g, wit_count, wit_max);
            if (json) {
                emit(to_json(w));
            } else {
                std::cout << render_text(w);
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return 0;
}
