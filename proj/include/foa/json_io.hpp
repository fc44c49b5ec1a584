#ifndef FOA_JSON_IO_HPP
#define FOA_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "foa/automaton.hpp"
#include "foa/structure.hpp"
#include "foa/theory.hpp"

namespace foa {

using Json = nlohmann::ordered_json;

// Serialization is byte-stable: fields and tables are emitted in declaration
// order, tuples in table order. Loaders reject symbol names carrying the
// reserved prime or step decorations; '#'-decorated names are accepted so that
// generated automata round-trip.

Json signature_to_json(const Signature& sig);
Signature signature_from_json(const Json& j);

Json structure_to_json(const Structure& st);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j, SignaturePtr sig);

Json theory_to_json(const Theory& t);
Theory theory_from_json(const Json& j, SignaturePtr sigma);

Json automaton_to_json(const Automaton& a);
Automaton automaton_from_json(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace foa

#endif
