#include "seifert/report.hpp"

#include <sstream>

#include "seifert/continued_fraction.hpp"
#include "seifert/error.hpp"

namespace seifert {

namespace {

constexpr std::size_t kMaxListedFailures = 20;

std::string manifold_name(long g, const Integer& n, const Integer& alpha) {
    return "M(" + std::to_string(g) + "," + n.get_str() + ";(" + alpha.get_str() + ",1))";
}

Json strings(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

Json strings(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

std::string join(const std::vector<Integer>& v, const char* sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].get_str();
    return s;
}

Json to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const MoyVerdict& v) {
    return Json{{"reducibles_only", v.reducibles_only},
                {"dirac_kernels_trivial", v.dirac_kernels_trivial},
                {"canonical_degree", v.canonical_degree.to_string()},
                {"period", v.period.to_string()},
                {"representative_degree", v.representative.to_string()},
                {"degrees_in_window", strings(v.witness_degrees)},
                {"anchored", v.anchored}};
}

Json to_json(const SpinCClass& c) {
    return Json{{"basepoint", c.basepoint == Basepoint::canonical ? "canonical" : "contact"},
                {"modulus", c.modulus.get_str()},
                {"offset", c.offset.get_str()},
                {"c1_coefficient", c.c1_coefficient.get_str()},
                {"c1_order", c.c1_order.get_str()}};
}

}  // namespace

StabilizationChoice family_choice(const PlusMinusDiagram& diagram, const FamilyParams& p) {
    check_admissible(p);
    const Integer excess = p.n - 2 * p.g;
    StabilizationChoice choice;
    Integer rot = diagram.root_rot;
    for (std::size_t i = 0; i < diagram.components.size(); ++i) {
        const auto& comp = diagram.components[i];
        Integer pos = 0, neg = 0;
        if (comp.stab_count != 0) {
            const bool last = i + 1 == diagram.components.size();
            if (excess == 0 || !last) {
                if (excess == 0) {
                    pos = (p.alpha + p.r) / 2;
                    neg = (p.alpha - p.r) / 2;
                } else {
                    (p.sign == Sign::plus ? pos : neg) = 1;
                }
            } else if (p.sign == Sign::plus) {
                pos = (p.alpha + p.r - 2) / 2;
                neg = (p.alpha - p.r) / 2;
            } else {
                pos = (p.alpha + p.r) / 2;
                neg = (p.alpha - p.r - 2) / 2;
            }
        }
        if (pos + neg != comp.stab_count || pos < 0 || neg < 0)
            throw Error(ErrorKind::InvalidArgument, "diagram does not match the family shape");
        rot += pos - neg;
        choice.signs.emplace_back(pos, neg);
        choice.rotations.push_back(rot);
    }
    choice.rotation = choice.rotations.empty() ? diagram.root_rot : choice.rotations.back();
    return choice;
}

bool StructureReport::all_checks_pass() const {
    for (const auto& [name, ok] : cross_checks) {
        if (!ok) return false;
    }
    return true;
}

StructureReport build_structure_report(const FamilyParams& p) {
    check_admissible(p);
    StructureReport rep;
    rep.params = p;
    const SeifertInvariants manifold = family_manifold(p.g, p.n, p.alpha);
    const Integer modulus = family_modulus(p.n, p.alpha);
    const Integer excess = p.n - 2 * p.g;

    rep.r1 = family_coefficient(p.g, p.n, p.alpha);
    rep.diagram = convert(rep.r1);
    rep.choice = family_choice(rep.diagram, p);

    rep.presentation = presentation(manifold);
    rep.homology = homology(rep.presentation);
    rep.mu_order = mu_order(manifold);
    rep.offset = spinc_offset(p);
    if (excess == 0) rep.c1 = c1_class(manifold, p.r);

    rep.dedekind = dedekind_context(p);
    rep.omega_long = omega_red_long(p);
    rep.omega_closed = omega_red_closed(p);
    rep.fill = fillability_verdict(p);
    rep.moy = moy_check(p);

    rep.d = d_range(p.g);
    if (excess == 0 && rep.d && *rep.d + 2 <= kReportMaxLatticeQ) rep.obstruction = nonfillability_obstruction(p.g);

    const Integer bracket = excess * excess * p.alpha - p.r * p.r * p.n + sign_value(p.sign) * 2 * excess * p.r;
    const Rational display = Rational(bracket, Integer(4 * modulus)) - Rational(Integer(2 * p.g + 3), Integer(2));

    auto& cc = rep.cross_checks;
    cc["omega_red_identity"] = rep.omega_long == rep.omega_closed;
    cc["gap_law"] = rep.fill.gap == Rational(2 * p.g + 1);
    cc["d3_canonical_display"] = rep.fill.canonical.value == display;
    cc["mu_order"] = rep.mu_order == modulus;
    cc["torsion_order"] = rep.homology.torsion == std::vector<Integer>{modulus} || modulus == 1;
    cc["moy_verdict"] = rep.moy.reducibles_only && rep.moy.dirac_kernels_trivial;
    cc["moy_sandwich"] = rep.moy.canonical_degree < rep.moy.representative && rep.moy.representative < rep.moy.period;
    cc["rho_in_unit_interval"] = rep.dedekind.rho > Rational(0) && rep.dedekind.rho < Rational(1);
    cc["choice_rotation"] = rep.choice.rotation == rep.diagram.root_rot + p.r;
    if (rep.c1) {
        // c1(t_can) = (alpha + 2) PD(mu) when n = 2g.
        cc["c1_offset_consistency"] =
            mod_floor(rep.c1->c1_coefficient - rep.offset.c1_coefficient - (p.alpha + 2), modulus) == 0;
    }
    return rep;
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Integer& v) { return v.get_str(); }

Json to_json(const PlusMinusDiagram& d) {
    Json comps = Json::array();
    std::vector<Integer> stabs;
    for (const auto& c : d.components) {
        stabs.push_back(c.stab_count);
        comps.push_back(Json{{"contact_coefficient", c.contact_coefficient.to_string()},
                             {"stab_count", c.stab_count.get_str()},
                             {"parent", c.parent ? Json(std::to_string(*c.parent)) : Json(nullptr)},
                             {"tb", c.tb.get_str()},
                             {"smooth_coefficient", smooth_coefficient(c).to_string()}});
    }
    return Json{{"components", std::move(comps)},
                {"plus_count", std::to_string(d.plus_count)},
                {"minus_count", std::to_string(d.components.size() - d.plus_count)},
                {"root_tb", d.root_tb.get_str()},
                {"root_rot", d.root_rot.get_str()},
                {"stabilization_counts", strings(stabs)},
                {"choice_count", choice_count(d).get_str()}};
}

Json to_json(const StabilizationChoice& c) {
    Json signs = Json::array();
    for (const auto& [pos, neg] : c.signs) signs.push_back(Json::array({pos.get_str(), neg.get_str()}));
    return Json{{"signs", std::move(signs)}, {"rotations", strings(c.rotations)}, {"rotation", c.rotation.get_str()}};
}

Json to_json(const ObstructionReport& r) {
    Json gram = Json::array();
    for (const auto& row : r.lattice.gram) {
        Json jr = Json::array();
        for (auto v : row) jr.push_back(std::to_string(v));
        gram.push_back(std::move(jr));
    }
    Json out{{"g", std::to_string(r.g)},
             {"d", std::to_string(r.d)},
             {"q", std::to_string(r.q)},
             {"gram", std::move(gram)},
             {"column_bound", std::to_string(r.search.column_bound)},
             {"nodes", std::to_string(r.search.nodes)},
             {"embeds", r.search.embedding.has_value()},
             {"obstruction_holds", r.obstruction_holds}};
    if (r.search.embedding) {
        Json rows = Json::array();
        for (const auto& v : r.search.embedding->vectors) {
            Json jr = Json::array();
            for (auto x : v) jr.push_back(std::to_string(x));
            rows.push_back(std::move(jr));
        }
        out["embedding"] = std::move(rows);
    }
    return out;
}

Json to_json(const DistinctWitness& w) {
    return Json{{"g", std::to_string(w.g)},
                {"alpha", w.alpha.get_str()},
                {"manifold", manifold_name(w.g, Integer(2 * w.g), w.alpha)},
                {"primes", strings(w.primes)},
                {"rotations", strings(w.rotations)},
                {"c1_orders", strings(w.orders)}};
}

Json to_json(const StructureReport& r) {
    const auto& p = r.params;
    Json input{{"g", std::to_string(p.g)},
               {"n", p.n.get_str()},
               {"alpha", p.alpha.get_str()},
               {"sign", std::string(to_string(p.sign))},
               {"r", p.r.get_str()},
               {"r1", r.r1.to_string()},
               {"manifold", manifold_name(p.g, p.n, p.alpha)}};

    Json diagram = to_json(r.diagram);
    diagram["selected_choice"] = to_json(r.choice);

    Json homology{{"free_rank", std::to_string(r.homology.free_rank)},
                  {"torsion", strings(r.homology.torsion)},
                  {"mu_order", r.mu_order.get_str()},
                  {"presentation", to_json(r.presentation.matrix)}};

    Json spin_c{{"offset_from_canonical", to_json(r.offset)}, {"c1", r.c1 ? to_json(*r.c1) : Json(nullptr)}};

    const auto& dk = r.dedekind;
    Json invariants{{"dedekind",
                     Json{{"l", dk.l.to_string()},
                          {"rho", dk.rho.to_string()},
                          {"gamma", dk.gamma.to_string()},
                          {"S", dk.s.to_string()},
                          {"S_rho", dk.s_rho.to_string()},
                          {"F_rho", dk.f_rho.to_string()}}},
                    {"omega_red_long", r.omega_long.to_string()},
                    {"omega_red_closed", r.omega_closed.to_string()},
                    {"d3_contact", r.fill.contact.value.to_string()},
                    {"d3_canonical", r.fill.canonical.value.to_string()},
                    {"gap", r.fill.gap.to_string()},
                    {"moy", to_json(r.moy)}};

    const bool lattice_proved = r.obstruction && r.obstruction->obstruction_holds;
    std::vector<std::string> basis;
    if (!r.fill.gap.is_zero()) basis.emplace_back("d3 gap");
    if (lattice_proved) basis.emplace_back("diagonal lattice obstruction");

    Json lattice;
    if (r.obstruction) {
        lattice = Json{{"status", r.obstruction->obstruction_holds ? "certified" : "lattice embeds"},
                       {"d", std::to_string(r.obstruction->d)},
                       {"q", std::to_string(r.obstruction->q)}};
    } else if (p.n != 2 * p.g) {
        lattice = Json{{"status", "not applicable (n > 2g)"}};
    } else if (!r.d) {
        lattice = Json{{"status", "hypothesis fails (no d)"}};
    } else {
        lattice = Json{{"status", "not searched (q above desk-scale limit)"},
                       {"d", std::to_string(*r.d)},
                       {"q", std::to_string(*r.d + 2)}};
    }

    Json checks = Json::object();
    for (const auto& [name, ok] : r.cross_checks) checks[name] = ok;

    Json verdicts{{"tight", r.fill.tight},
                  {"tightness_basis", "cited: contact Ozsvath-Szabo invariant argument, not computed"},
                  {"fillable", basis.empty() ? "conjectured not fillable" : "not fillable (proved)"},
                  {"fillability_basis", basis},
                  {"lattice_obstruction", std::move(lattice)},
                  {"cross_checks", std::move(checks)}};

    return Json{{"input", std::move(input)},       {"diagram", std::move(diagram)},
                {"homology", std::move(homology)}, {"spin_c", std::move(spin_c)},
                {"invariants", std::move(invariants)}, {"verdicts", std::move(verdicts)}};
}

std::string render_text(const PlusMinusDiagram& d, const Rational& r) {
    std::ostringstream os;
    os << "contact " << r << "-surgery on K (tb " << d.root_tb << ", rot " << d.root_rot << ")\n";
    os << "  #  coeff  parent  stabs  tb   smooth\n";
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        const auto& c = d.components[i];
        os << "  " << i << "  " << (c.contact_coefficient.sign() > 0 ? "+1" : "-1") << "     "
           << (c.parent ? std::to_string(*c.parent) : std::string("K")) << "       " << c.stab_count << "      "
           << c.tb << "   " << smooth_coefficient(c) << "\n";
    }
    std::vector<Integer> stabs;
    for (const auto& c : d.components) stabs.push_back(c.stab_count);
    os << "stabilization counts: [" << join(stabs) << "]\n";
    os << "(+1) components: " << d.plus_count << ", (-1) components: " << d.components.size() - d.plus_count << "\n";
    os << "stabilization choices: " << choice_count(d) << "\n";
    return os.str();
}

std::string render_text(const StructureReport& r) {
    const auto& p = r.params;
    std::ostringstream os;
    os << "structure xi^" << to_string(p.sign) << "_" << p.r << " on " << manifold_name(p.g, p.n, p.alpha)
       << ", r1 = " << r.r1 << "\n\n";
    os << render_text(r.diagram, r.r1);
    os << "selected rotations: [" << join(r.choice.rotations) << "]\n\n";
    os << "H1 = Z^" << r.homology.free_rank;
    for (const auto& t : r.homology.torsion) os << " + Z/" << t;
    os << ", order of mu = " << r.mu_order << "\n";
    os << "Spin^c: t_can + " << r.offset.offset << " PD(mu) (mod " << r.offset.modulus << ")\n";
    if (r.c1) os << "c1 = " << r.c1->c1_coefficient << " PD(mu), order " << r.c1->c1_order << "\n";
    os << "\nl = " << r.dedekind.l << ", rho = " << r.dedekind.rho << ", gamma = " << r.dedekind.gamma
       << ", S = " << r.dedekind.s << ", S_rho = " << r.dedekind.s_rho << ", F_rho = " << r.dedekind.f_rho << "\n";
    os << "omega_red: long " << r.omega_long << ", closed " << r.omega_closed << "\n";
    os << "d3(xi) = " << r.fill.contact.value << ", d3(Xi) = " << r.fill.canonical.value << ", gap = " << r.fill.gap
       << "\n";
    os << "MOY: reducibles only " << (r.moy.reducibles_only ? "yes" : "no") << ", Dirac kernels trivial "
       << (r.moy.dirac_kernels_trivial ? "yes" : "no") << " (deg K = " << r.moy.canonical_degree
       << ", deg L_k = " << r.moy.representative << ", period " << r.moy.period << ")\n";
    if (r.obstruction) {
        os << "lattice: Lambda_" << r.obstruction->q << (r.obstruction->obstruction_holds ? " embeds in no D_m" : " embeds")
           << "\n";
    }
    os << "\ntight: yes (cited)\n";
    os << "fillable: " << (r.fill.gap.is_zero() ? "conjectured not fillable" : "not fillable (proved)") << "\n";
    os << "cross-checks:";
    for (const auto& [name, ok] : r.cross_checks) os << " " << name << "=" << (ok ? "ok" : "FAIL");
    os << "\n";
    return os.str();
}

std::string render_text(const ObstructionReport& r) {
    std::ostringstream os;
    os << "g = " << r.g << ", d = " << r.d << ", searching Lambda_" << r.q << " (rank " << r.lattice.rank() << ")\n";
    for (const auto& row : r.lattice.gram) {
        os << "  ";
        for (auto v : row) os << (v >= 0 ? " " : "") << v << " ";
        os << "\n";
    }
    os << "column bound " << r.search.column_bound << ", nodes visited " << r.search.nodes << "\n";
    if (r.obstruction_holds) {
        os << "certified: Lambda_" << r.q << " embeds in no diagonal lattice D_m\n";
        os << "a negative definite filling would glue to a closed definite manifold with non-diagonal form\n";
    } else {
        os << "Lambda_" << r.q << " embeds in D_" << r.search.embedding->dimension << "; no obstruction\n";
    }
    return os.str();
}

std::string render_text(const DistinctWitness& w) {
    std::ostringstream os;
    os << "g = " << w.g << ", alpha = " << w.alpha << " on " << manifold_name(w.g, Integer(2 * w.g), w.alpha) << "\n";
    os << "primes:    [" << join(w.primes) << "]\n";
    os << "rotations: [" << join(w.rotations) << "]\n";
    os << "c1 orders: [" << join(w.orders) << "]\n";
    return os.str();
}

IntRange parse_range(const std::string& text) {
    auto parse = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const long v = std::stol(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "malformed range '" + text + "'");
        }
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long v = parse(text);
        return {v, v};
    }
    return {parse(text.substr(0, dots)), parse(text.substr(dots + 2))};
}

long SweepSummary::total_checked() const {
    long t = 0;
    for (const auto& [name, c] : checks) t += c.checked;
    return t;
}

long SweepSummary::total_failed() const {
    long t = 0;
    for (const auto& [name, c] : checks) t += c.failed;
    return t;
}

SweepSummary run_sweep(const SweepOptions& options) {
    SweepSummary s;
    auto record = [&](const std::string& check, bool ok, const std::string& where) {
        auto& t = s.checks[check];
        ++t.checked;
        if (!ok) {
            ++t.failed;
            if (s.failures.size() < kMaxListedFailures) s.failures.push_back(check + " at " + where);
        }
    };

    for (long g = options.g.lo; g <= options.g.hi; ++g) {
        if (g < 1) continue;
        const IntRange ns = options.n ? *options.n : IntRange{2 * g, 2 * g + 4};
        for (long nv = std::max(ns.lo, 2 * g); nv <= ns.hi; ++nv) {
            const Integer n = nv;
            for (long av = std::max(options.alpha.lo, 1L); av <= options.alpha.hi; ++av) {
                const Integer alpha = av;
                const std::string where_m = manifold_name(g, n, alpha);
                record("mu_order", mu_order(family_manifold(g, n, alpha)) == family_modulus(n, alpha), where_m);
                if (options.mu_only) continue;

                for (Sign sign : {Sign::plus, Sign::minus}) {
                    for (Integer r = -alpha; r <= alpha; r += 2) {
                        const FamilyParams p{g, n, alpha, sign, r};
                        if (sign == Sign::plus && r == -alpha) continue;
                        if (sign == Sign::minus && r == alpha) continue;
                        const std::string where =
                            where_m + " sign " + std::string(to_string(sign)) + " r " + r.get_str();
                        const Rational lng = omega_red_long(p);
                        const Rational cls = omega_red_closed(p);
                        record("omega_red_identity", lng == cls, where);
                        const FillabilityReport f = fillability_verdict(p);
                        record("gap_law", f.gap == Rational(2 * g + 1), where);
                        const DedekindContext dk = dedekind_context(p);
                        record("rho_in_unit_interval", dk.rho > Rational(0) && dk.rho < Rational(1), where);
                        const MoyVerdict v = moy_check(p);
                        record("moy_verdict", v.reducibles_only && v.dirac_kernels_trivial, where);
                    }
                }
                if (nv == 2 * g) {
                    // Every rotation -alpha <= r <= alpha, r = alpha (mod 2).
                    for (Integer r = -alpha; r <= alpha; r += 2) {
                        const Integer k = mod_floor(Integer((r - alpha - 2) / 2), family_modulus(n, alpha));
                        const MoyVerdict v = moy_check(g, n, alpha, k);
                        const bool sandwich = v.canonical_degree < v.representative &&
                                              v.representative < Rational(2 * g) + Rational(Integer(1), alpha);
                        record("moy_sandwich", sandwich && v.reducibles_only && v.dirac_kernels_trivial,
                               where_m + " r " + r.get_str());
                    }
                }
            }
        }
    }
    return s;
}

Json to_json(const SweepSummary& s) {
    Json checks = Json::object();
    for (const auto& [name, t] : s.checks)
        checks[name] = Json{{"checked", std::to_string(t.checked)}, {"failed", std::to_string(t.failed)}};
    return Json{{"checks", std::move(checks)},
                {"total_checked", std::to_string(s.total_checked())},
                {"total_failed", std::to_string(s.total_failed())},
                {"failures", s.failures}};
}

std::string render_text(const SweepSummary& s) {
    std::ostringstream os;
    for (const auto& [name, t] : s.checks)
        os << name << ": " << (t.checked - t.failed) << "/" << t.checked << " pass\n";
    os << "total: " << s.total_checked() << " checks, " << s.total_failed() << " failed\n";
    for (const auto& f : s.failures) os << "  FAIL " << f << "\n";
    return os.str();
}

}  // namespace seifert
