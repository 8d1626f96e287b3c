#ifndef WITTSIG_IO_HPP
#define WITTSIG_IO_HPP

#include <json.hpp>
#include <string>

#include "wittsig/decide.hpp"
#include "wittsig/forms.hpp"
#include "wittsig/sigfunc.hpp"

namespace wittsig {

using Json = nlohmann::json;

// Rationals serialize as canonical decimal strings ("p" or "p/q", q > 0).
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

// {"m": m, "coeffs": ["p/q", ...]} with exactly phi(m) entries.
Json to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclotomic_from_json(const Json& j);

// {"m": m, "terms": {"<exp>": [coeff strings]}}.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// {"num": ..., "den": ...}.
Json to_json(const RationalFunction& f);
RationalFunction ratfunc_from_json(const Json& j);

// {"m": m, "epsilon": e, "gram": [[...]]}.
Json to_json(const HermitianForm& f);
HermitianForm form_from_json(const Json& j);

// The form-file schema: {"m", "epsilon", "summands": [{"coeff", "gram"}]}.
// Nested conductors may divide the top-level m (each summand lives in the
// subfield it needs).
Json to_json(const WittElement& w);
WittElement witt_from_json(const Json& j);

// {"m", "epsilon", "theta": [[...]], "f": [[...]]}.
Json to_json(const IsometryTriple& t);
IsometryTriple triple_from_json(const Json& j);

Json to_json(const CirclePoint& c);
Json to_json(const SignatureStepFunction& s);
Json to_json(const Decision& d);

// CSV rows (angle_turns_lo, angle_turns_hi, value); exact boundaries print
// their exact angle, isolated boundaries their interval midpoint.
std::string step_function_csv(const SignatureStepFunction& s);

// Parses and fully validates a form file (schema, hermitian symmetry,
// conductor compatibility). Error messages carry entry coordinates.
WittElement parse_form_file(const std::string& text);
WittElement load_form_file(const std::string& path);

}  // namespace wittsig

#endif
