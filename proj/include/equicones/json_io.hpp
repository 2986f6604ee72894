#ifndef EQUICONES_JSON_IO_HPP
#define EQUICONES_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "equicones/bar.hpp"
#include "equicones/barss.hpp"
#include "equicones/bases.hpp"
#include "equicones/graded_module.hpp"
#include "equicones/m2.hpp"
#include "equicones/presentation.hpp"
#include "equicones/twistss.hpp"

namespace equicones {

using Json = nlohmann::ordered_json;

Json to_json(BiDegree d);
BiDegree bidegree_from_json(const Json& j);

Json to_json(const M2Element& e);
M2Element m2_from_json(const Json& j);

Json to_json(const Summand& s);
Summand summand_from_json(const Json& j);

Json to_json(const GradedModule& m);
GradedModule module_from_json(const Json& j);

Json to_json(const HopfPresentation& p);
HopfPresentation presentation_from_json(const Json& j);

Json to_json(const Page& page);

Json to_json(const BwReport& rep);
Json basis_to_json(const std::vector<CircleMonomial>& gens);
Json basis_to_json(const std::vector<Monomial>& monomials);
Json to_json(const TorTable& t);
Json to_json(const std::vector<LedgerEntry>& ledger);
Json to_json(const NormCandidateResult& r);

std::string dims_to_csv(const DimTable& t);

/* token parsers (inverse of the token() printers) */
Sym sym_from_token(const std::string& tok);
CircleMonomial letter_from_token(const std::string& tok);
Monomial monomial_from_token(const std::string& tok);

}  // namespace equicones

#endif
