#ifndef FPP_EQ_IO_HPP
#define FPP_EQ_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "fpp/arith.hpp"
#include "fpp/poly.hpp"

namespace fpp {

// Equation file format: '#' starts a comment, one homogeneous polynomial per
// non-empty line, variables U0..U9 (or Z1..Z6 for image equations), terms
// joined by +/-, term = coefficient '*' monomial, coefficient one of
//   integer | a/c | (a + b*w)/c        with w = sqrt(-7), c a positive integer.
std::vector<Poly<QuadElt>> parse_equations(const std::string& text);
Poly<QuadElt> parse_polynomial(const std::string& line);

std::string serialize_equation(const Poly<QuadElt>& f);
std::string serialize_equations(const std::vector<Poly<QuadElt>>& eqs);

std::vector<Poly<QuadElt>> load_equation_file(const std::string& path);
void save_equation_file(const std::string& path, const std::vector<Poly<QuadElt>>& eqs,
                        const std::string& header_comment = "");

// Fixture container: named polynomials and named projective points,
//   name = <polynomial>
//   name = [c0 : c1 : ... : cN]
struct Fixtures {
    std::map<std::string, Poly<QuadElt>> polys;
    std::map<std::string, std::vector<Rat>> points;

    const Poly<QuadElt>& poly(const std::string& name) const;
    const std::vector<Rat>& point(const std::string& name) const;
};

Fixtures load_fixtures(const std::string& path);

}  // namespace fpp

#endif
