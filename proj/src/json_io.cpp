#include "foa/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "foa/errors.hpp"
#include "foa/enumerate.hpp"
#include "foa/parser.hpp"
#include "foa/printer.hpp"

namespace foa {

namespace {

void check_loaded_name(const std::string& name, bool allow_numeral, const std::string& where) {
  if (name.find('\'') != std::string::npos || name.find('@') != std::string::npos)
    throw ValidationError(where + ": symbol name '" + name + "' uses a reserved decoration");
  bool numeral = !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
                   return std::isdigit(static_cast<unsigned char>(c));
                 });
  if (numeral) {
    if (!allow_numeral)
      throw ValidationError(where + ": numeral names are reserved for constants ('" + name + "')");
    return;
  }
  if (!valid_symbol_name(name))
    throw ValidationError(where + ": invalid symbol name '" + name + "'");
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ValidationError(where + ": expected a string");
    out.push_back(e.get<std::string>());
  }
  return out;
}

} // namespace

Json signature_to_json(const Signature& sig) {
  Json j;
  j["sorts"] = sig.sorts();
  Json consts = Json::array();
  for (const auto& c : sig.constants())
    consts.push_back(Json{{"name", c.name}, {"sort", c.sort}, {"rigid", c.rigid}});
  j["constants"] = std::move(consts);
  Json funcs = Json::array();
  for (const auto& f : sig.functions())
    funcs.push_back(
        Json{{"name", f.name}, {"args", f.args}, {"result", f.result}, {"rigid", f.rigid}});
  j["functions"] = std::move(funcs);
  Json preds = Json::array();
  for (const auto& p : sig.predicates())
    preds.push_back(Json{{"name", p.name}, {"args", p.args}, {"rigid", p.rigid}});
  j["predicates"] = std::move(preds);
  return j;
}

Signature signature_from_json(const Json& j) {
  Signature sig;
  if (!j.is_object()) throw ValidationError("signature: expected an object");
  for (const auto& s : string_list(j.value("sorts", Json::array()), "signature.sorts"))
    sig.add_sort(s);
  for (const auto& c : j.value("constants", Json::array())) {
    if (!c.contains("name") || !c.contains("sort"))
      throw ValidationError("signature.constants: entries need name and sort");
    std::string name = c["name"].get<std::string>();
    check_loaded_name(name, true, "signature.constants");
    sig.add_constant(name, c["sort"].get<std::string>(), c.value("rigid", false));
  }
  for (const auto& f : j.value("functions", Json::array())) {
    if (!f.contains("name") || !f.contains("args") || !f.contains("result"))
      throw ValidationError("signature.functions: entries need name, args, result");
    std::string name = f["name"].get<std::string>();
    check_loaded_name(name, false, "signature.functions");
    sig.add_function(name, string_list(f["args"], "signature.functions.args"),
                     f["result"].get<std::string>(), f.value("rigid", false));
  }
  for (const auto& p : j.value("predicates", Json::array())) {
    if (!p.contains("name") || !p.contains("args"))
      throw ValidationError("signature.predicates: entries need name and args");
    std::string name = p["name"].get<std::string>();
    check_loaded_name(name, false, "signature.predicates");
    sig.add_predicate(name, string_list(p["args"], "signature.predicates.args"),
                      p.value("rigid", false));
  }
  return sig;
}

Json structure_to_json(const Structure& st) {
  const Signature& sig = *st.signature();
  Json j;
  Json consts = Json::object();
  for (const auto& c : sig.constants()) consts[c.name] = st.constant(c.name);
  j["constants"] = std::move(consts);
  Json funcs = Json::object();
  for (const auto& f : sig.functions()) {
    Json entries = Json::array();
    for (const auto& [args, v] : st.function_table(f.name))
      entries.push_back(Json::array({args, v}));
    funcs[f.name] = std::move(entries);
  }
  j["functions"] = std::move(funcs);
  Json preds = Json::object();
  for (const auto& p : sig.predicates()) {
    Json tuples = Json::array();
    for (const auto& t : st.predicate_table(p.name)) tuples.push_back(t);
    preds[p.name] = std::move(tuples);
  }
  j["predicates"] = std::move(preds);
  return j;
}

Json word_to_json(const Word& w) {
  Json j;
  j["signature"] = signature_to_json(*w.sig);
  Json domains = Json::object();
  if (!w.letters.empty())
    for (const auto& sort : w.sig->sorts()) domains[sort] = w.letters[0].domain(sort);
  j["domains"] = std::move(domains);
  Json letters = Json::array();
  for (const auto& l : w.letters) letters.push_back(structure_to_json(l));
  j["letters"] = std::move(letters);
  return j;
}

namespace {

Structure letter_from_json(const Json& j, SignaturePtr sig, const DomainMap& domains,
                           size_t index) {
  const std::string where = "letters[" + std::to_string(index) + "]";
  Structure st(sig);
  for (const auto& [sort, dom] : domains) st.set_domain(sort, dom);
  for (const auto& c : sig->constants()) {
    const Json& cj = j.value("constants", Json::object());
    if (!cj.contains(c.name))
      throw ValidationError(where + ": constant '" + c.name + "' is uninterpreted");
    st.set_constant(c.name, cj[c.name].get<std::string>());
  }
  for (const auto& f : sig->functions()) {
    const Json& fj = j.value("functions", Json::object());
    if (!fj.contains(f.name))
      throw ValidationError(where + ": function '" + f.name + "' is uninterpreted");
    for (const auto& entry : fj[f.name]) {
      if (!entry.is_array() || entry.size() != 2)
        throw ValidationError(where + ": function entries are [args, value] pairs");
      st.set_function_entry(f.name, string_list(entry[0], where), entry[1].get<std::string>());
    }
  }
  for (const auto& p : sig->predicates()) {
    const Json& pj = j.value("predicates", Json::object());
    std::set<std::vector<std::string>> table;
    if (pj.contains(p.name))
      for (const auto& t : pj[p.name]) table.insert(string_list(t, where));
    st.set_predicate(p.name, std::move(table));
  }
  st.validate();
  return st;
}

} // namespace

Word word_from_json(const Json& j, SignaturePtr sig) {
  if (!j.is_object()) throw ValidationError("word: expected an object");
  if (!sig) {
    if (!j.contains("signature")) throw ValidationError("word: missing signature");
    sig = std::make_shared<Signature>(signature_from_json(j["signature"]));
  }
  DomainMap domains;
  const Json domains_json = j.value("domains", Json::object());
  for (const auto& [sort, dom] : domains_json.items())
    domains[sort] = string_list(dom, "word.domains");
  for (const auto& sort : sig->sorts())
    if (!domains.count(sort) && j.contains("letters") && !j["letters"].empty())
      throw ValidationError("word.domains: missing domain for sort '" + sort + "'");
  Word w;
  w.sig = sig;
  size_t i = 0;
  for (const auto& lj : j.value("letters", Json::array()))
    w.letters.push_back(letter_from_json(lj, sig, domains, i++));
  return w;
}

Json theory_to_json(const Theory& t) {
  Json j;
  Json axioms = Json::array();
  for (const auto& a : t.axioms) axioms.push_back(print_formula(a));
  j["axioms"] = std::move(axioms);
  if (t.smt) {
    Json smt;
    smt["logic"] = t.smt->logic;
    smt["sorts"] = t.smt->sorts;
    smt["symbols"] = t.smt->symbols;
    j["smt"] = std::move(smt);
  }
  return j;
}

Theory theory_from_json(const Json& j, SignaturePtr sigma) {
  Theory t;
  if (!j.is_object()) throw ValidationError("theory: expected an object");
  ParseContext ctx{{sigma}, false};
  for (const auto& a : j.value("axioms", Json::array())) {
    FormulaPtr f = parse_formula(a.get<std::string>(), ctx);
    if (!is_sentence(f)) throw ValidationError("theory.axioms: axioms must be sentences");
    if (has_temporal(f)) throw ValidationError("theory.axioms: axioms must be first-order");
    t.axioms.push_back(f);
  }
  if (j.contains("smt")) {
    SmtConfig cfg;
    const Json& s = j["smt"];
    cfg.logic = s.value("logic", "");
    const Json sort_map = s.value("sorts", Json::object());
    for (const auto& [k, v] : sort_map.items()) cfg.sorts[k] = v.get<std::string>();
    const Json symbol_map = s.value("symbols", Json::object());
    for (const auto& [k, v] : symbol_map.items()) {
      if (!sigma->has_symbol(k))
        throw ValidationError("theory.smt.symbols: '" + k + "' is not in the signature");
      cfg.symbols[k] = v.get<std::string>();
    }
    t.smt = std::move(cfg);
  }
  return t;
}

Json automaton_to_json(const Automaton& a) {
  Json j;
  j["format"] = "foa.automaton/1";
  j["kind"] = a.is_sigma11() ? "sigma11" : "fo";
  j["word_signature"] = signature_to_json(*a.word_sig);
  j["state_signature"] = signature_to_json(*a.state_sig);
  j["init"] = print_formula(a.init);
  j["trans"] = print_formula(a.trans);
  j["final"] = print_formula(a.fin);
  return j;
}

Automaton automaton_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("automaton: expected an object");
  if (j.value("format", "") != "foa.automaton/1")
    throw ValidationError("automaton: unknown format tag");
  Automaton a;
  a.word_sig = std::make_shared<Signature>(signature_from_json(j.at("word_signature")));
  a.state_sig = std::make_shared<Signature>(signature_from_json(j.at("state_signature")));
  auto primed = std::make_shared<Signature>(a.state_sig->primed());
  ParseContext cond_ctx{{a.state_sig, a.word_sig}, false};
  ParseContext trans_ctx{{a.state_sig, a.word_sig, primed}, false};
  a.init = parse_formula(j.at("init").get<std::string>(), cond_ctx);
  a.trans = parse_formula(j.at("trans").get<std::string>(), trans_ctx);
  a.fin = parse_formula(j.at("final").get<std::string>(), cond_ctx);
  validate_automaton(a);
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file '" + path + "'");
  out << content;
}

} // namespace foa
