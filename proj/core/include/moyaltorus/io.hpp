#pragma once

#include <iosfwd>
#include <string>

#include "fock.hpp"
#include "heisenberg.hpp"
#include "moyal.hpp"
#include "nctorus.hpp"
#include "schrodinger.hpp"

namespace moyaltorus {

// CSV with header "q,re,im", 17 significant digits.
void write_wavefunction_csv(std::ostream& os, const PositionWavefunction& psi);
void write_wavefunction_csv(const std::string& path, const PositionWavefunction& psi);
PositionWavefunction read_wavefunction_csv(std::istream& is);
PositionWavefunction read_wavefunction_csv(const std::string& path);

// Row-major matrix dump, each entry as "re,im" pairs.
void write_operator_csv(std::ostream& os, const GridOperator& A);

// JSON codecs; schemas:
//   GroupElement  {"q":[...],"p":[...],"z":...}
//   SymbolSum     {"terms":[{"amp_re":..,"amp_im":..,"a_q":..,"a_p":..}]}
//   TorusElement  {"theta":..,"terms":[{"m":..,"n":..,"re":..,"im":..}]}
//   FockVector    {"mu":..,"coeffs":[[re,im],...]}
std::string to_json(const GroupElement& g);
GroupElement group_element_from_json(const std::string& text);

std::string to_json(const SymbolSum& F);
SymbolSum symbol_sum_from_json(const std::string& text);

std::string to_json(const TorusElement& A);
TorusElement torus_element_from_json(const std::string& text);

std::string to_json(const FockVector& phi);
FockVector fock_vector_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace moyaltorus
