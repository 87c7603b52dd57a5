#include "gns/config.hpp"

#include <fstream>
#include <sstream>

#include "gns/errors.hpp"

namespace gns {

namespace {

struct Line {
    int no;
    std::string text;
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

mpq_class parse_rat(const std::string& tok, int line) {
    size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class z(tok);
            return mpq_class(z);
        }
        mpz_class num(tok.substr(0, slash));
        mpz_class den(tok.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + tok + "'", line, 1);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + tok + "'", line, 1);
    }
}

mpz_class parse_int(const std::string& tok, int line) {
    try {
        return mpz_class(tok);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed integer '" + tok + "'", line, 1);
    }
}

long parse_long(const std::string& tok, int line) {
    mpz_class z = parse_int(tok, line);
    if (!z.fits_slong_p()) throw ParseError("value out of range '" + tok + "'", line, 1);
    return z.get_si();
}

// comma-separated integer vector, e.g. "2" or "2,0"
ZVec parse_zvec(const std::string& tok, int line) {
    ZVec v;
    size_t pos = 0;
    while (pos <= tok.size()) {
        size_t comma = tok.find(',', pos);
        std::string part = (comma == std::string::npos) ? tok.substr(pos)
                                                        : tok.substr(pos, comma - pos);
        v.push_back(parse_int(part, line));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return v;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(trim(s.substr(pos)));
            break;
        }
        out.push_back(trim(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

DomainPtr build_domain(const std::string& family, const std::vector<mpq_class>& params,
                       int line) {
    if (family == "box") {
        if (params.empty()) throw ParseError("box needs at least one offset", line, 1);
        return std::make_shared<BoxDomain>(QVec(params.begin(), params.end()));
    }
    if (family == "sail" || family == "sail_euclidean") {
        if (params.size() != 2)
            throw ParseError("sail needs omega_re and omega_im_sq", line, 1);
        auto variant = family == "sail" ? SailDomain::Variant::norm_form
                                        : SailDomain::Variant::euclidean;
        return std::make_shared<SailDomain>(params[0], params[1], variant);
    }
    throw ParseError("unknown domain family '" + family + "'", line, 1);
}

}  // namespace

DomainPtr parse_domain_spec(const std::string& spec) {
    std::string s = trim(spec);
    size_t open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw ParseError("domain spec must look like family(params)", 0, 1);
    std::string family = s.substr(0, open);
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    std::vector<mpq_class> params;
    for (const auto& t : split_commas(inner))
        if (!t.empty()) params.push_back(parse_rat(t, 0));
    return build_domain(family, params, 0);
}

Config parse_config(const std::string& text) {
    Config cfg;
    std::string section;
    std::string dom_family;
    std::vector<mpq_class> dom_offsets;
    std::optional<mpq_class> omega_re, omega_im_sq;
    bool have_poly = false, have_scan = false;
    ScanSpec scan;
    std::vector<std::vector<long>> scan_lo, scan_hi;
    int scan_lo_line = 0;

    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("unterminated section header", lineno, (int)line.size());
            section = trim(line.substr(1, line.size() - 2));
            if (section != "order" && section != "polynomial" && section != "domain" &&
                section != "engine" && section != "scan")
                throw ParseError("unknown section [" + section + "]", lineno, 1);
            if (section == "scan") have_scan = true;
            continue;
        }

        size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno, 1);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ParseError("key '" + key + "' outside any section", lineno, 1);

        if (section == "order") {
            if (key != "min_poly")
                throw ParseError("unknown key '" + key + "' in [order]", lineno, 1);
            for (const auto& t : split_ws(value)) cfg.min_poly.push_back(parse_int(t, lineno));
        } else if (section == "polynomial") {
            if (key != "coeffs")
                throw ParseError("unknown key '" + key + "' in [polynomial]", lineno, 1);
            have_poly = true;
            for (const auto& t : split_ws(value)) cfg.coeffs.push_back(parse_zvec(t, lineno));
        } else if (section == "domain") {
            if (key == "family")
                dom_family = value;
            else if (key == "offsets")
                for (const auto& t : split_ws(value)) dom_offsets.push_back(parse_rat(t, lineno));
            else if (key == "omega_re")
                omega_re = parse_rat(value, lineno);
            else if (key == "omega_im_sq")
                omega_im_sq = parse_rat(value, lineno);
            else
                throw ParseError("unknown key '" + key + "' in [domain]", lineno, 1);
        } else if (section == "engine") {
            if (key == "precision_bits")
                cfg.precision_bits = (mpfr_prec_t)parse_long(value, lineno);
            else if (key == "step_cap")
                cfg.step_cap = parse_long(value, lineno);
            else if (key == "size_cap")
                cfg.size_cap = parse_long(value, lineno);
            else
                throw ParseError("unknown key '" + key + "' in [engine]", lineno, 1);
        } else if (section == "scan") {
            if (key == "coeff_lo" || key == "coeff_hi") {
                auto& dst = key == "coeff_lo" ? scan_lo : scan_hi;
                if (key == "coeff_lo") scan_lo_line = lineno;
                for (const auto& t : split_ws(value)) {
                    ZVec v = parse_zvec(t, lineno);
                    std::vector<long> row;
                    for (const auto& z : v) {
                        if (!z.fits_slong_p())
                            throw ParseError("range bound out of range", lineno, 1);
                        row.push_back(z.get_si());
                    }
                    dst.push_back(std::move(row));
                }
            } else if (key == "domains") {
                for (const auto& t : split_ws(value)) {
                    try {
                        scan.domains.push_back(parse_domain_spec(t));
                    } catch (const ParseError& e) {
                        throw ParseError(e.what(), lineno, 1);
                    }
                    scan.domain_descs.push_back(t);
                }
            } else if (key == "command") {
                if (value != "decide" && value != "dominant")
                    throw ParseError("scan command must be decide or dominant", lineno, 1);
                scan.command = value;
            } else if (key == "output") {
                scan.output = value;
            } else {
                throw ParseError("unknown key '" + key + "' in [scan]", lineno, 1);
            }
        }
    }

    if (cfg.min_poly.size() < 2) throw ValidationError("[order] min_poly missing or constant");
    if (cfg.min_poly.back() != 1) throw ValidationError("min_poly must be monic");
    const int k = (int)cfg.min_poly.size() - 1;

    if (have_poly) {
        if (cfg.coeffs.size() < 2) throw ValidationError("polynomial must have degree >= 1");
        for (const auto& c : cfg.coeffs)
            if ((int)c.size() != k)
                throw ValidationError("polynomial coefficient dimension != order degree");
        ZVec lead = cfg.coeffs.back();
        bool monic = lead[0] == 1;
        for (int i = 1; i < k; ++i) monic = monic && lead[i] == 0;
        if (!monic) throw ValidationError("polynomial must be monic");
    }

    if (!dom_family.empty()) {
        std::vector<mpq_class> params;
        if (dom_family == "box") {
            params = dom_offsets;
        } else {
            if (!omega_re || !omega_im_sq)
                throw ValidationError("sail domain needs omega_re and omega_im_sq");
            params = {*omega_re, *omega_im_sq};
        }
        cfg.domain = build_domain(dom_family, params, 0);
        if (cfg.domain->dimension() != k)
            throw ValidationError("domain dimension != order degree");
        std::ostringstream os;
        os << dom_family << "(";
        for (size_t i = 0; i < params.size(); ++i) {
            if (i) os << ",";
            os << params[i].get_str();
        }
        os << ")";
        cfg.domain_desc = os.str();
    }

    if (have_scan) {
        if (scan_lo.size() != scan_hi.size() || scan_lo.empty())
            throw ParseError("coeff_lo and coeff_hi must both be present with equal length",
                             scan_lo_line ? scan_lo_line : 1, 1);
        for (size_t j = 0; j < scan_lo.size(); ++j) {
            if ((int)scan_lo[j].size() != k || (int)scan_hi[j].size() != k)
                throw ValidationError("scan range dimension != order degree");
            std::vector<std::pair<long, long>> row;
            for (int c = 0; c < k; ++c) {
                if (scan_lo[j][c] > scan_hi[j][c])
                    throw ValidationError("scan range has lo > hi");
                row.emplace_back(scan_lo[j][c], scan_hi[j][c]);
            }
            scan.ranges.push_back(std::move(row));
        }
        if (scan.domains.empty()) {
            if (!cfg.domain) throw ValidationError("scan needs domains or a [domain] section");
            scan.domains.push_back(cfg.domain);
            scan.domain_descs.push_back(cfg.domain_desc);
        }
        if (scan.command.empty()) scan.command = "decide";
        cfg.scan = std::move(scan);
    }

    return cfg;
}

ZVec parse_coord_vector(const std::string& token) { return parse_zvec(token, 0); }

std::vector<ZVec> parse_poly_string(const std::string& s) {
    std::vector<ZVec> out;
    for (const auto& t : split_ws(s)) out.push_back(parse_zvec(t, 0));
    return out;
}

mpq_class parse_rational(const std::string& token) { return parse_rat(token, 0); }

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str());
}

}  // namespace gns
