#ifndef GNS_CONFIG_HPP
#define GNS_CONFIG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gns/domain.hpp"
#include "gns/order.hpp"

namespace gns {

// Batch sweep description: the cartesian product of per-coefficient
// coordinate ranges, crossed with a list of domains, iterated in
// lexicographic order (domain outermost, then coefficients, first
// coefficient's first coordinate slowest).
struct ScanSpec {
    // ranges[j][c] = [lo, hi] for coefficient j (ascending), coordinate c;
    // the leading coefficient 1 is appended implicitly
    std::vector<std::vector<std::pair<long, long>>> ranges;
    std::vector<DomainPtr> domains;
    std::vector<std::string> domain_descs;
    std::string command;  // decide | dominant
    std::string output;   // empty = stdout
};

struct Config {
    ZVec min_poly;               // ascending, monic
    std::vector<ZVec> coeffs;    // polynomial coefficients, ascending
    DomainPtr domain;
    std::string domain_desc;
    mpfr_prec_t precision_bits = 0;  // 0 = library default
    long step_cap = 100000;
    long size_cap = 1000000;
    std::optional<ScanSpec> scan;
};

// Strict parser: unknown sections/keys are errors; throws ParseError with
// line/column, ValidationError for semantic problems.
Config parse_config(const std::string& text);
Config parse_config_file(const std::string& path);

// inline domain spec: box(q,...), sail(re,im_sq), sail_euclidean(re,im_sq)
DomainPtr parse_domain_spec(const std::string& spec);

// "2,0" -> (2,0); plain integers for k = 1
ZVec parse_coord_vector(const std::string& token);
// whitespace-separated coordinate vectors, ascending degree
std::vector<ZVec> parse_poly_string(const std::string& s);
// rational "n/d" or integer
mpq_class parse_rational(const std::string& token);

}  // namespace gns

#endif
