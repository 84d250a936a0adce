#pragma once

#include <iosfwd>
#include <string>

#include "plk/groebner.hpp"

namespace plk {

/// Text form of a polynomial, e.g. "p[1,4]*p[2,3] - p[1,3]*p[2,4] + p[1,2]*p[3,4]".
/// Terms are sorted by total degree descending, ties by the first variable
/// whose exponents differ (the smaller exponent prints first). Coefficients
/// print as "num/den" with "/1" omitted; unit coefficients are dropped unless
/// the term is constant. parse_polynomial is the exact inverse.
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m);

Polynomial parse_polynomial(const std::string& text);
Variable parse_variable(const std::string& text);

/// Ideal file: '#' comments and blank lines are skipped; one header line
///   order: lex|revlex vars=[v1,v2,...]          (variable order, largest first)
///   order: elim keep=[k1,...] vars=[v1,...]     (discarded block listed first)
/// followed by one polynomial per line. The ambient ring is the vars list.
struct IdealFile {
    Ideal ideal;
    MonomialOrder order;
};

IdealFile read_ideal_file(std::istream& in);
void write_ideal_file(std::ostream& out, const Ideal& ideal, const MonomialOrder& order);

}  // namespace plk
