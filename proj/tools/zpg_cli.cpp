#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "zpg/catalog.hpp"
#include "zpg/explicit.hpp"
#include "zpg/measure.hpp"
#include "zpg/schur.hpp"
#include "zpg/verify.hpp"

using namespace zpg;
using nlohmann::json;

namespace {

std::string S(const BigInt& x) { return to_string(x); }
std::string S(const Rational& x) { return to_string(x); }
double D(const Rational& x) { return x.convert_to<double>(); }

std::string char_str(const Character& c) { return join_ints(c.c); }

// "1,0;0,1" -> elements; "" -> none
std::vector<Elem> parse_elements(const AbelianGroup& G, const std::string& s) {
    std::vector<Elem> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (!tok.empty()) out.push_back(parse_element(G, tok));
    return out;
}

ModuleType parse_type(Int Q, const std::string& s) { return make_type(Q, parse_int_list(s)); }

Idempotent pick_idempotent(const AbelianGroup& G, Int p, Int idx) {
    auto all = enumerate_idempotents(G, p);
    if (idx < 0 || idx >= static_cast<Int>(all.size()))
        throw InputError("idempotent index out of range (0.." + std::to_string(all.size() - 1) + ")");
    return all[static_cast<size_t>(idx)];
}

json bracket_json(const Bracket& b) {
    return {{"lo", S(b.lo)}, {"hi", S(b.hi)}, {"lo_decimal", D(b.lo)}, {"hi_decimal", D(b.hi)},
            {"width_decimal", D(b.width())}, {"heuristic", b.heuristic}};
}

std::string csv_field(const json& v) {
    std::string s;
    if (v.is_string()) s = v.get<std::string>();
    else if (v.is_null()) s = "";
    else s = v.dump();
    bool quote = s.find_first_of(",\"\r\n") != std::string::npos;
    if (!quote) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

// CSV columns follow the key order of the first record (nlohmann sorts keys); later records may add none.
void emit(const json& provenance, const std::vector<json>& records, const std::string& format,
          const std::vector<std::string>& columns = {}) {
    if (format == "csv") {
        std::cout << "# provenance: " << provenance.dump() << "\n";
        std::vector<std::string> cols = columns;
        if (cols.empty() && !records.empty())
            for (auto& [k, v] : records.front().items()) cols.push_back(k);
        for (size_t i = 0; i < cols.size(); ++i) std::cout << (i ? "," : "") << csv_field(cols[i]);
        std::cout << "\n";
        for (auto& r : records) {
            for (size_t i = 0; i < cols.size(); ++i) std::cout << (i ? "," : "") << csv_field(r.contains(cols[i]) ? r[cols[i]] : json());
            std::cout << "\n";
        }
    } else {
        std::cout << json{{"provenance", provenance}}.dump() << "\n";
        for (auto& r : records) std::cout << r.dump() << "\n";
    }
}

json request_echo(CLI::App* sub) {
    json args = json::object();
    for (const CLI::Option* o : sub->get_options()) {
        if (o->get_lnames().empty() || o->get_lnames()[0] == "help") continue;
        std::string name = o->get_lnames()[0];
        if (o->count() > 0) {
            auto res = o->results();
            args[name] = res.size() == 1 ? json(res[0]) : json(res);
        } else if (!o->get_default_str().empty()) {
            args[name] = o->get_default_str();
        }
    }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zpg: idempotent DVR modules, extension statistics, Schur lattice counts, CL measures"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::map<CLI::App*, std::string> formats;
    auto fmt_opt = [&](CLI::App* s, const std::string& def) {
        formats[s] = def;
        s->add_option("--format", formats[s], "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    };

    std::string gamma, Mstr, Nstr, Hstr, Vstr, suite = "all", inertia, decomposition, variant = "I";
    Int p = 2, eidx = 0, Q = 2, d = 1, q = 3, n = 2, v = 1, B = 12, B0 = -1, K = 64, prec = 5, trials = 100000, threads = 0, Id = 1;
    std::uint64_t seed = 1;
    bool timings = false;

    auto* idem = app.add_subcommand("idem", "list primitive idempotents of Q_p[Gamma]");
    auto* ie = app.add_subcommand("ie", "threshold ideal and the per-element valuation table");
    auto* ram = app.add_subcommand("ramtype", "classify a ramification type");
    auto* counts = app.add_subcommand("counts", "hom/sur/aut counts from partition formulas");
    auto* wt = app.add_subcommand("weight", "weight identity for an I-closure");
    auto* orc = app.add_subcommand("oracle", "brute-force hom/sur/aut on explicit realizations");
    auto* ext = app.add_subcommand("ext", "extensions of Gamma by an e-typed module, with d_g tables");
    auto* b2 = app.add_subcommand("b2", "lattice count b for H x| Z/2");
    auto* rat = app.add_subcommand("ratio", "moment ratio |(wedge^2 M)[2^{v-1}]| / |M|, M = 2H");
    auto* meas = app.add_subcommand("measure", "measure of a module type");
    auto* mom = app.add_subcommand("moment", "truncated Sur-moment bracket");
    auto* samp = app.add_subcommand("sample", "cokernel sampler frequency table");
    auto* ver = app.add_subcommand("verify", "run verification suites");
    auto* col = app.add_subcommand("collisions", "cyclic quotients carrying more than one idempotent");

    for (auto* s : {idem, ie, ram, orc, ext, col}) {
        s->add_option("--gamma", gamma, "invariant factors, e.g. 2,4")->required();
        s->add_option("--p", p, "prime")->required();
    }
    for (auto* s : {ie, ram, orc, ext}) s->add_option("--e", eidx, "idempotent index as listed by idem")->capture_default_str();
    ram->add_option("--variant", variant, "I or A")->check(CLI::IsMember({"I", "A"}))->capture_default_str();
    ram->add_option("--I", Id, "ideal exponent d (I = m^d), variant I")->capture_default_str();
    ram->add_option("--inertia", inertia, "inertia generators, ';'-separated")->required();
    ram->add_option("--decomposition", decomposition, "decomposition generators, ';'-separated")->required();
    for (auto* s : {counts, wt, meas, mom, samp}) s->add_option("--Q", Q, "residue field size")->required();
    counts->add_option("--M", Mstr, "partition")->required();
    counts->add_option("--N", Nstr, "partition")->required();
    wt->add_option("--M", Mstr, "partition")->required();
    wt->add_option("--H", Hstr, "partition")->required();
    wt->add_option("--d", d, "I = m^d")->required();
    orc->add_option("--M", Mstr, "partition")->required();
    orc->add_option("--N", Nstr, "partition")->required();
    ext->add_option("--H", Hstr, "partition of H as an e-module")->required();
    b2->add_option("--H", Hstr, "2-group, e.g. 4,4")->required();
    b2->add_option("--q", q, "odd prime power")->required();
    b2->add_option("--n", n, "lattice size")->required();
    rat->add_option("--H", Hstr, "2-group")->required();
    rat->add_option("--v", v, "val_2(q-1)")->required();
    meas->add_option("--M", Mstr, "partition (empty for the zero module)")->required();
    meas->add_option("--K", K, "product truncation index")->capture_default_str();
    mom->add_option("--V", Vstr, "partition")->required();
    mom->add_option("--B", B, "truncation size")->capture_default_str();
    mom->add_option("--B0", B0, "first size of the nested sequence (default: B)");
    mom->add_option("--K", K, "product truncation index")->capture_default_str();
    samp->add_option("--n", n, "matrix is n x (n+1)")->required();
    samp->add_option("--prec", prec, "precision m^prec")->required();
    samp->add_option("--trials", trials)->capture_default_str();
    samp->add_option("--seed", seed, "64-bit seed")->capture_default_str();
    samp->add_option("--threads", threads, "0: ZPG_THREADS or hardware concurrency");
    ver->add_option("--suite", suite, "rings, modules, groups, schur, measure or all")
        ->check(CLI::IsMember({"rings", "modules", "groups", "schur", "measure", "all"}))
        ->capture_default_str();
    ver->add_flag("--timings", timings, "include wall-clock seconds (breaks byte-identical output)");
    for (auto* s : {idem, ie, ram, counts, wt, orc, ext, b2, rat, meas, mom, col, ver}) fmt_opt(s, "json");
    fmt_opt(samp, "csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string format = formats[sub];
    json prov{{"tool", "zpg"}, {"version", kVersion}, {"command", sub->get_name()}, {"args", request_echo(sub)}, {"seed", nullptr}};
    if (sub == samp) prov["seed"] = std::to_string(seed);
    std::vector<json> out;
    int rc = 0;

    try {
        if (sub == idem || sub == ie || sub == ram || sub == col) {
            AbelianGroup G = parse_group(gamma);
            if (!is_prime(p)) throw InputError("p must be prime");
            auto idems = enumerate_idempotents(G, p);
            if (sub == idem) {
                for (size_t i = 0; i < idems.size(); ++i) {
                    auto& e = idems[i];
                    json reps = json::array();
                    for (auto& c : e.orbit) reps.push_back(char_str(c));
                    out.push_back({{"index", i}, {"orbit_reps", reps}, {"n", e.n}, {"p_part", e.p_part}, {"m_prime", e.m_prime},
                                   {"e_ram", e.e_ram}, {"f", e.f}, {"Q", e.Q ? json(e.Q) : json(std::to_string(p) + "^" + std::to_string(e.f))},
                                   {"uniformizer", to_string(e.uniformizer)}, {"Ie_valuation", threshold_ideal(e).d},
                                   {"cyclic_quotient_order", e.cyclic_quotient_order()}});
                }
            } else if (sub == ie) {
                Idempotent e = pick_idempotent(G, p, eidx);
                IdealPower I = threshold_ideal(e);
                out.push_back({{"index", eidx}, {"n", e.n}, {"Ie_valuation", I.d}, {"whole_ring", I.whole_ring()}, {"proper", !I.whole_ring()}});
                for (Int i = 1; i < G.order(); ++i) {
                    Elem g = G.element(i);
                    auto v1 = one_minus_chi_valuation(e, g);
                    out.push_back({{"g", join_ints(g)}, {"annihilator", to_string(gamma_annihilation(e, g))},
                                   {"v_one_minus_chi", v1 ? json(*v1) : json("inf")}, {"ideal_valuation", ideal_image_valuation(e, g).d}});
                }
            } else if (sub == ram) {
                Idempotent e = pick_idempotent(G, p, eidx);
                auto ig = parse_elements(G, inertia), dg = parse_elements(G, decomposition);
                bool qual = variant == "I" ? ramtype_qualifies(e, IdealPower{Id}, ig, dg) : ramtype_qualifies_A(e, ig, dg);
                out.push_back({{"index", eidx}, {"variant", variant}, {"I", variant == "I" ? json(Id) : json(nullptr)}, {"qualifies", qual}});
            } else {
                for (auto& c : cyclic_quotient_collisions(G, p)) {
                    json idx = json::array();
                    for (auto i : c.idempotent_indices) idx.push_back(i);
                    out.push_back({{"quotient_order", c.quotient_order}, {"kernel_size", c.kernel.size()}, {"idempotents", idx}});
                }
            }
        } else if (sub == counts) {
            ModuleType M = parse_type(Q, Mstr), N = parse_type(Q, Nstr);
            out.push_back({{"Q", Q}, {"M", M.str()}, {"N", N.str()}, {"hom", S(hom_count(M, N))}, {"sur", S(sur_count(M, N))},
                           {"aut_M", S(aut_count(M))}, {"aut_N", S(aut_count(N))}, {"submodules_of_N_iso_M", S(submodule_type_count(N, M))}});
        } else if (sub == wt) {
            ModuleType M = parse_type(Q, Mstr), H = parse_type(Q, Hstr);
            bool closure = !H.parts.empty();
            for (Int x : H.parts) closure = closure && x > d;
            IdealOps om = ideal_ops(M, d), oh = ideal_ops(H, d);
            BigInt lhs = sur_count(M, H), w = weight(M, H, d), rhs = w * sur_count(om.IM, oh.IM);
            out.push_back({{"Q", Q}, {"M", M.str()}, {"H", H.str()}, {"d", d}, {"H_is_I_closure", closure}, {"IM", om.IM.str()},
                           {"IH", oh.IM.str()}, {"weight", S(w)}, {"sur_M_H", S(lhs)}, {"sur_IM_IH", S(sur_count(om.IM, oh.IM))},
                           {"identity_holds", lhs == rhs}});
        } else if (sub == orc) {
            AbelianGroup G = parse_group(gamma);
            Idempotent e = pick_idempotent(G, p, eidx);
            if (!e.Q) throw InputError("residue field too large for realization");
            ModuleType M = parse_type(e.Q, Mstr), N = parse_type(e.Q, Nstr);
            ExplicitModule XM = realize(e, M), XN = realize(e, N);
            OracleCounts oc = oracle_counts(XM, XN);
            BigInt aut = oracle_counts(XM, XM).sur;
            bool agree = oc.hom == hom_count(M, N) && oc.sur == sur_count(M, N) && aut == aut_count(M);
            out.push_back({{"index", eidx}, {"Q", e.Q}, {"M", M.str()}, {"N", N.str()}, {"hom", S(oc.hom)}, {"sur", S(oc.sur)}, {"aut_M", S(aut)},
                           {"formula_hom", S(hom_count(M, N))}, {"formula_sur", S(sur_count(M, N))}, {"formula_aut_M", S(aut_count(M))},
                           {"agree", agree}});
        } else if (sub == ext) {
            AbelianGroup G = parse_group(gamma);
            Idempotent e = pick_idempotent(G, p, eidx);
            if (!e.Q) throw InputError("residue field too large for realization");
            ModuleType Ht = parse_type(e.Q, Hstr);
            ExplicitModule H = realize(e, Ht);
            std::vector<Int> orbits;
            for (Int i = 0; i < G.order(); ++i) {
                ABSets s = ab_sets(H, G.element(i));
                orbits.push_back(orbit_count(H, s.Aminus, s.Bminus));
            }
            auto exts = enumerate_extensions(H);
            out.push_back({{"record", "summary"}, {"H", Ht.str()}, {"h2_size", S(h2_size(H))}, {"extensions", exts.size()},
                           {"splitting_count_formula", S(aut_extension_count(H, find_adapted_basis(H)))}});
            for (size_t k = 0; k < exts.size(); ++k) {
                json tab = json::array();
                bool all_eq = true;
                for (Int i = 0; i < G.order(); ++i) {
                    ConjugacyStats st = conjugacy_stats(exts[k], G.element(i));
                    all_eq = all_eq && st.d == orbits[static_cast<size_t>(i)];
                    tab.push_back({{"g", join_ints(G.element(i))}, {"c_size", st.c_size}, {"d", st.d}, {"orbits_A_minus_mod_B_minus", orbits[static_cast<size_t>(i)]}});
                }
                out.push_back({{"record", "extension"}, {"index", k}, {"split", exts[k].is_split_cocycle_zero()},
                               {"splitting_count", splitting_count(exts[k])}, {"d_equals_orbits_everywhere", all_eq}, {"d_table", tab}});
            }
        } else if (sub == b2) {
            auto H = parse_two_group(Hstr);
            if (q % 2 == 0 || q < 3) throw InputError("q must be odd and >= 3");
            Int vq = val_p(q - 1, 2);
            BigInt a = b_exact(H, q, n), b = b_closed(H, vq, n);
            out.push_back({{"H", join_ints(H)}, {"q", q}, {"n", n}, {"v", vq}, {"b_exact", S(a)}, {"b_closed", S(b)}, {"agree", a == b}});
        } else if (sub == rat) {
            auto H = parse_two_group(Hstr);
            if (v < 1) throw InputError("v must be >= 1");
            out.push_back({{"H", join_ints(H)}, {"v", v}, {"ratio", S(moment_ratio(H, v))}, {"wedge_torsion", S(wedge_torsion(H, v))}});
        } else if (sub == meas) {
            ModuleType M = parse_type(Q, Mstr);
            Bracket b = measure(Q, M, K);
            json r = bracket_json(b);
            r["Q"] = Q;
            r["M"] = M.str();
            r["weight"] = S(measure_weight(M));
            out.push_back(r);
        } else if (sub == mom) {
            ModuleType V = parse_type(Q, Vstr);
            Int b0 = B0 < 0 ? B : B0;
            if (b0 > B) throw InputError("--B0 exceeds --B");
            auto bs = nested_moment_brackets(Q, V, b0, B, K);
            Rational target(BigInt(1), V.size());
            for (size_t i = 0; i < bs.size(); ++i) {
                MomentResult mr = moment_truncated(Q, V, b0 + static_cast<Int>(i), K);
                json r = bracket_json(bs[i]);
                r["Q"] = Q;
                r["V"] = V.str();
                r["B"] = b0 + static_cast<Int>(i);
                r["partial"] = S(mr.partial);
                r["tail_estimate_decimal"] = D(mr.tail_estimate);
                r["target"] = S(target);
                r["contains_target"] = bs[i].contains(target);
                out.push_back(r);
            }
        } else if (sub == samp) {
            SampleTable t = sample(Q, n, prec, trials, seed, threads);
            prov["threads"] = t.threads_used;
            std::vector<std::pair<std::string, Int>> rows(t.counts.begin(), t.counts.end());
            std::sort(rows.begin(), rows.end(), [](auto& a, auto& b) { return a.second != b.second ? a.second > b.second : a.first < b.first; });
            for (auto& [k, c] : rows) {
                json r{{"type", k}, {"count", c}, {"frequency", static_cast<double>(c) / static_cast<double>(trials)}};
                if (k == "OVERFLOW") {
                    r["law_n"] = nullptr;
                    r["measure"] = nullptr;
                } else {
                    ModuleType M = parse_type(Q, k);
                    r["law_n"] = D(exact_cokernel_prob(Q, n, M));
                    r["measure"] = D(measure(Q, M).hi);
                }
                out.push_back(r);
            }
            emit(prov, out, format, {"type", "count", "frequency", "law_n", "measure"});
            return 0;
        } else if (sub == ver) {
            Int failed = 0, passed = 0;
            for (auto& r : run_suite(suite)) {
                json j = to_json(r);
                if (!timings) j.erase("seconds");
                (r.pass ? passed : failed)++;
                if (format == "csv" && j.contains("counterexample")) j["counterexample"] = j["counterexample"].dump();
                out.push_back(j);
            }
            if (format == "json") out.push_back({{"summary", suite}, {"passed", passed}, {"failed", failed}});
            rc = failed ? 1 : 0;
            emit(prov, out, format, format == "csv" ? std::vector<std::string>{"suite", "check", "pass", "cases", "note", "counterexample"} : std::vector<std::string>{});
            return rc;
        }
    } catch (const InputError& ex) {
        std::cerr << json{{"error", ex.what()}, {"kind", "input"}}.dump() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << json{{"error", ex.what()}, {"kind", "internal"}}.dump() << "\n";
        return 1;
    }
    emit(prov, out, format);
    return rc;
}
