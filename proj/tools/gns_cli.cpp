// Command line front end: single-instance commands wrapping the library
// operations, plus a batch scan with checkpointing and worker threads.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gns/config.hpp"
#include "gns/criteria.hpp"
#include "gns/engine.hpp"
#include "gns/errors.hpp"

using namespace gns;

namespace {

std::string zvec_str(const ZVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s;
}

std::string poly_str(const OPoly& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (i) s += " ";
        s += zvec_str(p.c[i]);
    }
    return s + "]";
}

std::string list_str(const std::vector<ZVec>& l) {
    std::string s = "[";
    for (size_t i = 0; i < l.size(); ++i) {
        if (i) s += " ";
        s += zvec_str(l[i]);
    }
    return s + "]";
}

std::string witness_str(const Witness& w) {
    std::string s = "h=" + std::to_string(w.h);
    s += ";digits=" + list_str(w.digits);
    s += ";q1=" + poly_str(w.q1);
    s += ";q2=" + poly_str(w.q2);
    s += ";cycle=[";
    for (size_t i = 0; i < w.cycle.size(); ++i) {
        if (i) s += ";";
        s += poly_str(w.cycle[i]);
    }
    return s + "]";
}

std::string fmt_double(double d) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", d);
    return buf;
}

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::FinitenessHolds: return "FinitenessHolds";
        case Verdict::FinitenessFails: return "FinitenessFails";
        default: return "Inconclusive";
    }
}

const char* reason_str(FailReason r) {
    switch (r) {
        case FailReason::NotExpansive: return "NotExpansive";
        case FailReason::Cycle: return "Cycle";
        case FailReason::DegenerateDigits: return "DegenerateDigits";
        default: return "None";
    }
}

struct Common {
    std::string config_path;
    std::string format = "human";
    long precision_bits = 0;
    long step_cap = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("config", config_path, "configuration file")->required();
        cmd->add_option("--format", format, "human or records")
            ->check(CLI::IsMember({"human", "records"}));
        cmd->add_option("--precision-bits", precision_bits, "working precision in bits");
        cmd->add_option("--step-cap", step_cap, "expansion step cap");
    }

    Config load() const {
        Config cfg = parse_config_file(config_path);
        if (precision_bits > 0) cfg.precision_bits = (mpfr_prec_t)precision_bits;
        if (cfg.precision_bits == 0) cfg.precision_bits = kDefaultPrec;
        if (step_cap > 0) cfg.step_cap = step_cap;
        return cfg;
    }

    bool records() const { return format == "records"; }
};

GnsInstance make_instance(const Config& cfg) {
    if (cfg.coeffs.empty()) throw ValidationError("config has no [polynomial] section");
    if (!cfg.domain) throw ValidationError("config has no [domain] section");
    Order o = Order::make(cfg.min_poly);
    OPoly p = op_normalize(o, cfg.coeffs);
    return GnsInstance::make(std::move(o), cfg.domain, std::move(p));
}

std::string instance_key(const Config& cfg) {
    std::string s = "order=[";
    for (size_t i = 0; i < cfg.min_poly.size(); ++i) {
        if (i) s += " ";
        s += cfg.min_poly[i].get_str();
    }
    s += "]\tdomain=" + cfg.domain_desc;
    return s;
}

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return (long)std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int cmd_digits(const Common& c) {
    Config cfg = c.load();
    GnsInstance inst = make_instance(cfg);
    if (c.records()) {
        std::cout << "cmd=digits\t" << instance_key(cfg) << "\tp=" << poly_str(inst.p())
                  << "\tdigits=" << list_str(inst.digit_set().elements()) << "\n";
    } else {
        std::cout << inst.digit_set().format();
    }
    return 0;
}

int cmd_decide(const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    Config cfg = c.load();
    GnsInstance inst = make_instance(cfg);
    DecisionReport rep = inst.decide(cfg.precision_bits);
    if (c.records()) {
        std::cout << "cmd=decide\t" << instance_key(cfg) << "\tp=" << poly_str(inst.p())
                  << "\tverdict=" << verdict_str(rep.verdict)
                  << "\treason=" << reason_str(rep.reason)
                  << "\tc=" << fmt_double(rep.bound_c) << "\tbox_states=" << rep.box_states
                  << "\tstates_checked=" << rep.states_checked
                  << "\tcycles_found=" << rep.cycles_found << "\twitness="
                  << (rep.witness ? witness_str(*rep.witness) : std::string())
                  << "\telapsed_ms=" << elapsed_ms(t0) << "\n";
    } else {
        std::cout << "verdict: " << verdict_str(rep.verdict) << "\n";
        if (rep.verdict == Verdict::FinitenessFails)
            std::cout << "reason: " << reason_str(rep.reason) << "\n";
        if (rep.reason != FailReason::NotExpansive &&
            rep.reason != FailReason::DegenerateDigits &&
            rep.verdict != Verdict::Inconclusive) {
            std::cout << "C: " << fmt_double(rep.bound_c) << "\n"
                      << "box_states: " << rep.box_states << "\n"
                      << "states_checked: " << rep.states_checked << "\n"
                      << "cycles_found: " << rep.cycles_found << "\n";
        }
        if (rep.witness) std::cout << "witness: " << witness_str(*rep.witness) << "\n";
    }
    return rep.verdict == Verdict::Inconclusive ? 2 : 0;
}

int cmd_expand(const Common& c, const std::string& poly_arg) {
    Config cfg = c.load();
    GnsInstance inst = make_instance(cfg);
    OPoly a = op_normalize(inst.order(), parse_poly_string(poly_arg));
    auto res = inst.expand(a, cfg.step_cap);
    if (std::holds_alternative<Expansion>(res)) {
        const auto& exp = std::get<Expansion>(res);
        if (c.records()) {
            std::cout << "cmd=expand\t" << instance_key(cfg) << "\tp=" << poly_str(inst.p())
                      << "\ta=" << poly_str(a) << "\tdigits=" << list_str(exp.digits)
                      << "\tlength=" << exp.length() << "\n";
        } else {
            for (size_t i = 0; i < exp.digits.size(); ++i) {
                if (i) std::cout << " ";
                std::cout << zvec_str(exp.digits[i]);
            }
            std::cout << "\n";
        }
        return 0;
    }
    const auto& cyc = std::get<std::vector<OPoly>>(res);
    if (c.records()) {
        std::cout << "cmd=expand\t" << instance_key(cfg) << "\tp=" << poly_str(inst.p())
                  << "\ta=" << poly_str(a) << "\tnonterminating=1\tcycle=";
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) std::cout << ";";
            std::cout << poly_str(cyc[i]);
        }
        std::cout << "\n";
    } else {
        std::cout << "non-terminating, cycle:";
        for (const auto& s : cyc) std::cout << " " << poly_str(s);
        std::cout << "\n";
    }
    return 0;
}

int cmd_dominant(const Common& c) {
    Config cfg = c.load();
    GnsInstance inst = make_instance(cfg);
    DominantReport rep = check_dominant(inst, cfg.size_cap);
    if (c.records()) {
        std::cout << "cmd=dominant\t" << instance_key(cfg) << "\tp=" << poly_str(inst.p())
                  << "\tpass=" << (rep.pass ? 1 : 0)
                  << "\tfailed_condition=" << rep.failed_condition
                  << "\tcounterexample=" << rep.counterexample
                  << "\tdelta_size=" << rep.delta.size() << "\tz_size=" << rep.z_size << "\n";
    } else {
        std::cout << "dominant: " << (rep.pass ? "pass" : "fail") << "\n";
        if (!rep.pass)
            std::cout << "failed condition: (" << rep.failed_condition << ") "
                      << rep.counterexample << "\n";
        std::cout << "|Delta|: " << rep.delta.size() << "\n|Z|: " << rep.z_size << "\n";
    }
    return 0;
}

int cmd_shift_search(const Common& c, const std::string& direction, const std::string& mode,
                     long max_m) {
    Config cfg = c.load();
    Order o = Order::make(cfg.min_poly);
    if (cfg.coeffs.empty()) throw ValidationError("config has no [polynomial] section");
    if (!cfg.domain) throw ValidationError("config has no [domain] section");
    OPoly p = op_normalize(o, cfg.coeffs);
    ZVec dir = direction.empty() ? o.one() : parse_coord_vector(direction);
    while ((int)dir.size() < o.degree()) dir.push_back(0);
    ShiftMode sm = (mode == "add") ? ShiftMode::add : ShiftMode::compose;
    ShiftSearchResult res = shift_search(o, cfg.domain, p, dir, sm, max_m, cfg.size_cap);
    if (c.records()) {
        std::cout << "cmd=shift-search\t" << instance_key(cfg) << "\tp=" << poly_str(p)
                  << "\tdirection=" << zvec_str(dir) << "\tmode=" << mode
                  << "\tm=" << (res.m ? std::to_string(*res.m) : std::string("NotFound"))
                  << "\thypothesis_met=" << (res.hypothesis_met ? 1 : 0) << "\ttrail=";
        for (size_t i = 0; i < res.trail.size(); ++i) {
            if (i) std::cout << ";";
            std::cout << res.trail[i].m << ":"
                      << (res.trail[i].pass ? "pass" : "fail") << ":"
                      << res.trail[i].failed_condition;
        }
        std::cout << "\n";
    } else {
        if (res.m)
            std::cout << "minimal m: " << *res.m << "\n";
        else
            std::cout << "no m <= " << max_m << " passes the dominant condition\n";
        std::cout << "hypothesis_met: " << (res.hypothesis_met ? "yes" : "no") << "\n";
        for (const auto& e : res.trail)
            std::cout << "m=" << e.m << " " << (e.pass ? "pass" : "fail")
                      << (e.pass ? "" : " condition " + std::to_string(e.failed_condition))
                      << "\n";
    }
    return 0;
}

int cmd_witness_family(const Common& c, long min_m, long max_m) {
    Config cfg = c.load();
    Order o = Order::make(cfg.min_poly);
    if (cfg.coeffs.empty()) throw ValidationError("config has no [polynomial] section");
    if (!cfg.domain) throw ValidationError("config has no [domain] section");
    OPoly p = op_normalize(o, cfg.coeffs);
    auto recs = non_finiteness_family(o, cfg.domain, p, min_m, max_m);
    for (const auto& r : recs) {
        if (c.records()) {
            std::cout << "cmd=witness-family\t" << instance_key(cfg) << "\tp=" << poly_str(p)
                      << "\tm=" << r.m << "\tflagged=" << (r.flagged ? 1 : 0)
                      << "\tdegenerate=" << (r.degenerate ? 1 : 0) << "\twitness="
                      << (r.witness ? witness_str(*r.witness) : std::string()) << "\n";
        } else {
            std::cout << "m=" << r.m << " " << (r.flagged ? "flagged" : "not flagged")
                      << (r.degenerate ? " (degenerate)" : "");
            if (r.witness) std::cout << " " << witness_str(*r.witness);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_hypotheses(const Common& c, long tiling_samples, unsigned long seed) {
    Config cfg = c.load();
    if (!cfg.domain) throw ValidationError("config has no [domain] section");
    HypothesisFlags f = cfg.domain->hypothesis_flags();
    std::string tiling;
    if (tiling_samples > 0) {
        TilingReport rep = cfg.domain->verify_tiling(tiling_samples, seed);
        tiling = std::to_string(rep.failures) + "/" + std::to_string(rep.samples);
    }
    if (c.records()) {
        std::cout << "cmd=hypotheses\t" << instance_key(cfg)
                  << "\tzero_in_int=" << f.zero_in_int
                  << "\tzero_in_int_plus=" << f.zero_in_int_plus
                  << "\tzero_in_int_union=" << f.zero_in_int_union
                  << "\tzero_in_int_minus_shift=" << f.zero_in_int_minus_shift;
        if (!tiling.empty()) std::cout << "\ttiling_failures=" << tiling;
        std::cout << "\n";
    } else {
        std::cout << "0 in int(F): " << (f.zero_in_int ? "yes" : "no") << "\n"
                  << "0 in int+(F): " << (f.zero_in_int_plus ? "yes" : "no") << "\n"
                  << "0 in int(F u (F-e1)): " << (f.zero_in_int_union ? "yes" : "no") << "\n"
                  << "0 in int-(cl F - e1): " << (f.zero_in_int_minus_shift ? "yes" : "no")
                  << "\n";
        if (!tiling.empty()) std::cout << "tiling failures: " << tiling << "\n";
    }
    return 0;
}

// ---------------- scan ----------------

struct ScanRow {
    size_t domain_idx;
    std::vector<long> coords;  // flattened coefficient coordinates
};

std::string scan_row_result(const Config& cfg, const Order& o, const ScanSpec& spec,
                            const ScanRow& row, size_t row_idx) {
    const int k = o.degree();
    const size_t nc = spec.ranges.size();
    std::vector<ZVec> coeffs(nc + 1, ZVec(k, 0));
    for (size_t j = 0; j < nc; ++j)
        for (int c = 0; c < k; ++c) coeffs[j][c] = row.coords[j * k + c];
    coeffs[nc][0] = 1;  // monic
    OPoly p = op_normalize(o, coeffs);

    std::ostringstream os;
    os << "row=" << row_idx << "\tdomain=" << spec.domain_descs[row.domain_idx]
       << "\tp=" << poly_str(p);
    try {
        GnsInstance inst = GnsInstance::make(o, spec.domains[row.domain_idx], p);
        if (spec.command == "dominant") {
            DominantReport rep = check_dominant(inst, cfg.size_cap);
            os << "\tpass=" << (rep.pass ? 1 : 0)
               << "\tfailed_condition=" << rep.failed_condition;
        } else {
            DecisionReport rep = inst.decide(cfg.precision_bits);
            os << "\tverdict=" << verdict_str(rep.verdict)
               << "\treason=" << reason_str(rep.reason) << "\tc=" << fmt_double(rep.bound_c)
               << "\tstates_checked=" << rep.states_checked
               << "\tcycles_found=" << rep.cycles_found;
        }
    } catch (const Error& e) {
        os << "\terror=" << e.what();
    }
    os << "\n";
    return os.str();
}

int cmd_scan(const Common& c, int workers, const std::string& checkpoint) {
    Config cfg = c.load();
    if (!cfg.scan) throw ValidationError("config has no [scan] section");
    const ScanSpec& spec = *cfg.scan;
    Order o = Order::make(cfg.min_poly);
    const int k = o.degree();

    // materialize rows: domain outermost, then coefficient odometer with the
    // last flattened coordinate fastest
    std::vector<ScanRow> rows;
    const size_t dim = spec.ranges.size() * (size_t)k;
    std::vector<long> lo(dim), hi(dim);
    for (size_t j = 0; j < spec.ranges.size(); ++j)
        for (int cc = 0; cc < k; ++cc) {
            lo[j * k + cc] = spec.ranges[j][cc].first;
            hi[j * k + cc] = spec.ranges[j][cc].second;
        }
    for (size_t di = 0; di < spec.domains.size(); ++di) {
        std::vector<long> cur = lo;
        while (true) {
            rows.push_back({di, cur});
            int j = (int)dim - 1;
            for (; j >= 0; --j) {
                if (++cur[j] <= hi[j]) break;
                cur[j] = lo[j];
            }
            if (j < 0) break;
        }
    }

    size_t start = 0;
    if (!checkpoint.empty()) {
        std::ifstream in(checkpoint);
        long long last = -1;
        if (in >> last && last >= 0) start = (size_t)last + 1;
    }

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!spec.output.empty()) {
        file_out.open(spec.output, start > 0 ? std::ios::app : std::ios::out);
        if (!file_out) throw ValidationError("cannot open scan output " + spec.output);
        out = &file_out;
    }

    const int nworkers = std::max(1, workers);
    const size_t block = 64;
    for (size_t b = start; b < rows.size(); b += block) {
        size_t e = std::min(rows.size(), b + block);
        std::vector<std::string> results(e - b);
        std::atomic<size_t> next(b);
        auto work = [&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= e) return;
                results[i - b] = scan_row_result(cfg, o, spec, rows[i], i);
            }
        };
        if (nworkers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < nworkers; ++w) pool.emplace_back(work);
            for (auto& t : pool) t.join();
        }
        for (const auto& r : results) *out << r;
        out->flush();
        if (!checkpoint.empty()) {
            std::ofstream ck(checkpoint, std::ios::trunc);
            ck << (e - 1) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized number systems over monogenic orders"};
    app.require_subcommand(1);

    Common c_digits, c_decide, c_expand, c_dominant, c_shift, c_family, c_hyp, c_scan;
    std::string expand_poly, shift_direction, shift_mode = "compose", scan_checkpoint;
    long shift_max_m = 50, family_min_m = 1, family_max_m = 12;
    long tiling_samples = 0;
    unsigned long tiling_seed = 1;
    int scan_workers = 1;

    c_digits.attach(app.add_subcommand("digits", "print the digit set"));
    c_decide.attach(app.add_subcommand("decide", "decide the finiteness property"));
    auto* sc_expand = app.add_subcommand("expand", "digit expansion of a polynomial");
    c_expand.attach(sc_expand);
    sc_expand->add_option("--poly", expand_poly, "polynomial to expand, ascending coefficients")
        ->required();
    c_dominant.attach(app.add_subcommand("dominant", "check the dominant condition"));
    auto* sc_shift = app.add_subcommand("shift-search", "minimal dominant-passing shift");
    c_shift.attach(sc_shift);
    sc_shift->add_option("--direction", shift_direction, "shift direction (coordinate vector)");
    sc_shift->add_option("--mode", shift_mode, "compose or add")
        ->check(CLI::IsMember({"compose", "add"}));
    sc_shift->add_option("--max-m", shift_max_m, "search bound");
    auto* sc_family = app.add_subcommand("witness-family", "h=1 non-finiteness family test");
    c_family.attach(sc_family);
    sc_family->add_option("--min-m", family_min_m, "first m");
    sc_family->add_option("--max-m", family_max_m, "last m");
    auto* sc_hyp = app.add_subcommand("hypotheses", "domain hypothesis flags");
    c_hyp.attach(sc_hyp);
    sc_hyp->add_option("--tiling-samples", tiling_samples, "also sample-test the tiling");
    sc_hyp->add_option("--seed", tiling_seed, "tiling sample seed");
    auto* sc_scan = app.add_subcommand("scan", "batch sweep from the [scan] section");
    c_scan.attach(sc_scan);
    sc_scan->add_option("--workers", scan_workers, "worker threads");
    sc_scan->add_option("--checkpoint", scan_checkpoint, "resume checkpoint file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand("digits")) return cmd_digits(c_digits);
        if (app.got_subcommand("decide")) return cmd_decide(c_decide);
        if (app.got_subcommand("expand")) return cmd_expand(c_expand, expand_poly);
        if (app.got_subcommand("dominant")) return cmd_dominant(c_dominant);
        if (app.got_subcommand("shift-search"))
            return cmd_shift_search(c_shift, shift_direction, shift_mode, shift_max_m);
        if (app.got_subcommand("witness-family"))
            return cmd_witness_family(c_family, family_min_m, family_max_m);
        if (app.got_subcommand("hypotheses"))
            return cmd_hypotheses(c_hyp, tiling_samples, tiling_seed);
        if (app.got_subcommand("scan")) return cmd_scan(c_scan, scan_workers, scan_checkpoint);
    } catch (const EnclosureFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const StepCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
