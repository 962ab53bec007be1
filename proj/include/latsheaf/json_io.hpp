#ifndef LATSHEAF_JSON_IO_HPP
#define LATSHEAF_JSON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "latsheaf/blo.hpp"
#include "latsheaf/classify.hpp"
#include "latsheaf/congruences.hpp"
#include "latsheaf/core.hpp"
#include "latsheaf/enumerate.hpp"
#include "latsheaf/epi.hpp"
#include "latsheaf/ideals.hpp"
#include "latsheaf/lattice.hpp"
#include "latsheaf/priestley.hpp"
#include "latsheaf/sheaf.hpp"

namespace latsheaf {

using Json = nlohmann::ordered_json;

// --------------------------------------------------------------------------
// Algebra format, shared by every command:
//   { "name": ..., "elements": [...], "leq": [[a,b], ...],
//     "operators": { op: { elem: elem, ... }, ... } }
// "leq" lists the full strict order in element order; on input any generating
// pair set is accepted and closed.

inline Json algebra_to_json(const std::string& name, const Algebra& A) {
  const Lattice& L = A.lattice;
  Json j;
  j["name"] = name;
  j["elements"] = Json::array();
  for (Elem x = 0; x < L.size(); ++x) j["elements"].push_back(L.name(x));
  j["leq"] = Json::array();
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y)
      if (x != y && L.leq(x, y)) j["leq"].push_back({L.name(x), L.name(y)});
  if (A.op_count() > 0) {
    Json ops = Json::object();
    for (int i = 0; i < A.op_count(); ++i) {
      Json table = Json::object();
      for (Elem x = 0; x < L.size(); ++x) table[L.name(x)] = L.name(A.apply(i, x));
      ops[A.op_names[i]] = std::move(table);
    }
    j["operators"] = std::move(ops);
  }
  return j;
}

inline Json lattice_to_json(const std::string& name, const Lattice& L) {
  return algebra_to_json(name, make_algebra(L, {}, {}));
}

struct NamedAlgebra {
  std::string name;
  Algebra algebra;
};

inline NamedAlgebra algebra_from_json(const Json& j) {
  require(j.is_object(), errc::bad_input, "algebra must be a JSON object");
  require(j.contains("elements") && j["elements"].is_array(), errc::bad_input,
          "missing \"elements\" array");
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    require(e.is_string(), errc::bad_input, "element names must be strings");
    names.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("leq")) {
    require(j["leq"].is_array(), errc::bad_input, "\"leq\" must be an array");
    for (const auto& p : j["leq"]) {
      require(p.is_array() && p.size() == 2 && p[0].is_string() && p[1].is_string(),
              errc::bad_input, "\"leq\" entries must be pairs of element names");
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  Lattice L = make_lattice(names, pairs);

  std::vector<std::string> op_names;
  std::vector<std::vector<Elem>> tables;
  if (j.contains("operators")) {
    require(j["operators"].is_object(), errc::bad_input,
            "\"operators\" must be an object");
    for (const auto& [op, table] : j["operators"].items()) {
      require(table.is_object(), errc::bad_input,
              "operator \"" + op + "\" must map elements to elements");
      std::vector<Elem> t(L.size(), -1);
      for (const auto& [from, to] : table.items()) {
        auto a = L.index_of(from);
        require(a.has_value(), errc::bad_input,
                "operator \"" + op + "\": unknown element \"" + from + "\"");
        require(to.is_string(), errc::bad_input, "operator \"" + op + "\" images must be element names");
        auto b = L.index_of(to.get<std::string>());
        require(b.has_value(), errc::bad_input,
                "operator \"" + op + "\": unknown image \"" + to.get<std::string>() + "\"");
        t[*a] = *b;
      }
      for (Elem x = 0; x < L.size(); ++x)
        require(t[x] >= 0, errc::bad_input,
                "operator \"" + op + "\" has no image for \"" + L.name(x) + "\"");
      op_names.push_back(op);
      tables.push_back(std::move(t));
    }
  }
  NamedAlgebra out;
  out.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  out.algebra = make_algebra(L, op_names, tables);
  return out;
}

// --------------------------------------------------------------------------
// Masks, partitions, congruences.

inline Json mask_to_json(const Lattice& L, Mask m) {
  Json arr = Json::array();
  for (Elem x = 0; x < L.size(); ++x)
    if (mask_has(m, x)) arr.push_back(L.name(x));
  return arr;
}

inline Json partition_to_json(const Lattice& L, const Partition& P) {
  Json arr = Json::array();
  for (const auto& block : P.blocks()) {
    Json b = Json::array();
    for (Elem x : block) b.push_back(L.name(x));
    arr.push_back(std::move(b));
  }
  return arr;
}

// --------------------------------------------------------------------------
// Spectra and dual spaces.

inline Json spectrum_to_json(const Spectrum& S) {
  Json j;
  j["points"] = Json::array();
  for (int p = 0; p < S.point_count(); ++p)
    j["points"].push_back(mask_to_json(S.source, S.points[p]));
  j["order"] = Json::array();
  for (int p = 0; p < S.point_count(); ++p)
    for (int q = 0; q < S.point_count(); ++q)
      if (p != q && S.leq(p, q)) j["order"].push_back({p, q});
  Json base = Json::object();
  for (Elem a = 0; a < S.source.size(); ++a) {
    Json pts = Json::array();
    for (int p = 0; p < S.point_count(); ++p)
      if (mask_has(S.basic_n[a], p)) pts.push_back(p);
    base["N_" + S.source.name(a)] = std::move(pts);
  }
  j["base"] = std::move(base);
  return j;
}

inline Json dual_space_to_json(const DualSpace& D) {
  Json j;
  j["J"] = Json::array();
  for (int i : D.J) j["J"].push_back(D.source.op_names[i]);
  j["mode"] = quotient_mode_name(D.mode);
  j["base"] = spectrum_to_json(D.base);
  j["stalks"] = Json::array();
  j["maps"] = Json::array();
  for (int p = 0; p < D.point_count(); ++p) {
    j["stalks"].push_back(
        algebra_to_json("stalk" + std::to_string(p), D.stalks[p]));
    Json table = Json::object();
    for (Elem x = 0; x < D.source.size(); ++x)
      table[D.source.lattice.name(x)] = D.stalks[p].lattice.name(D.to_stalk[p][x]);
    j["maps"].push_back(std::move(table));
  }
  return j;
}

inline Json section_to_json(const DualSpace& D, const Section& s) {
  Json arr = Json::array();
  for (int p = 0; p < D.point_count(); ++p)
    arr.push_back(D.stalks[p].lattice.name(s[p]));
  return arr;
}

// --------------------------------------------------------------------------
// Reports.

inline Json validation_to_json(const std::vector<AxiomViolation>& v) {
  Json j;
  j["valid"] = v.empty();
  j["violations"] = Json::array();
  for (const auto& a : v) j["violations"].push_back({{"axiom", a.axiom}, {"witness", a.witness}});
  return j;
}

inline Json roundtrip_to_json(const RoundTrip& R) {
  Json j;
  j["witness"] = "a -> N_a";
  Json w = Json::object();
  for (Elem a = 0; a < R.space.source.size(); ++a)
    w[R.space.source.name(a)] = R.downsets.name(R.witness[a]);
  j["map"] = std::move(w);
  j["homomorphism"] = R.homomorphism;
  j["injective"] = R.injective;
  j["surjective"] = R.surjective;
  j["isomorphic"] = R.isomorphic;
  return j;
}

inline Json gs_report_to_json(const CorrespondenceReport& R) {
  Json j;
  j["distributive"] = R.distributive;
  j["relatively_complemented"] = R.relatively_complemented;
  j["predicate"] = R.predicate;
  j["ideal_count"] = R.ideal_count;
  j["congruence_count"] = R.congruence_count;
  j["injective"] = R.injective;
  j["surjective"] = R.surjective;
  j["order_isomorphic"] = R.order_isomorphic;
  j["correspondence"] = R.correspondence;
  j["equivalence"] = R.equivalence;
  return j;
}

inline Json eta_report_to_json(const EtaReport& R) {
  Json j;
  j["sections"] = R.sections.sections.size();
  j["homomorphism"] = R.homomorphism;
  j["injective"] = R.injective;
  j["surjective"] = R.surjective;
  j["isomorphism"] = R.isomorphism;
  j["kernel_identity"] = R.kernel_identity;
  j["kernel_matches_injectivity"] = R.kernel_matches_injectivity;
  const Lattice& L = R.space.source.lattice;
  if (R.merged.first >= 0)
    j["merged_pair"] = {L.name(R.merged.first), L.name(R.merged.second)};
  if (R.unreached >= 0) j["unreached_section"] = R.unreached;
  return j;
}

inline Json classify_to_json(const Algebra& A, const RegularityReport& R) {
  Json j;
  j["J"] = Json::array();
  for (int i : R.J) j["J"].push_back(A.op_names[i]);
  j["points"] = Json::array();
  for (const auto& p : R.points) {
    Json rec;
    rec["point"] = mask_to_json(A.lattice, p.point);
    rec["generated_ideal"] = mask_to_json(A.lattice, p.generated_ideal);
    rec["ideal_prime"] = p.ideal_prime;
    rec["ideal_maximal"] = p.ideal_maximal;
    rec["class_congruence_maximal"] = p.class_congruence_maximal;
    j["points"].push_back(std::move(rec));
  }
  j["regular"] = R.regular;
  j["strongly_regular"] = R.strongly_regular;
  j["congruence_strongly_regular"] = R.congruence_strongly_regular;
  j["simple"] = R.simple;
  j["semisimple_stalks"] = R.semisimple_stalks;
  return j;
}

inline Json equivalence_to_json(const EquivalenceReport& R) {
  Json j;
  j["relatively_complemented"] = R.relatively_complemented;
  j["strongly_regular"] = R.strongly_regular;
  j["centrally_generated"] = R.centrally_generated;
  j["stalks_simple"] = R.stalks_simple;
  j["pairwise_equal"] = R.pairwise_equal;
  return j;
}

inline Json regular_ideal_report_to_json(const DualSpace& D, const RegularIdealReport& R) {
  Json j;
  j["gamma_size"] = R.gamma_size;
  j["open_count"] = R.opens.size();
  j["regular_ideal_count"] = R.regular_generators.size();
  Json opens = Json::array();
  for (Mask m : R.opens) {
    Json pts = Json::array();
    for (int p = 0; p < D.point_count(); ++p)
      if (mask_has(m, p)) pts.push_back(p);
    opens.push_back(std::move(pts));
  }
  j["opens"] = std::move(opens);
  j["ideals_to_opens"] = R.ideals_to_opens;
  j["opens_to_ideals"] = R.opens_to_ideals;
  j["inverse_on_opens"] = R.inverse_on_opens;
  j["inverse_on_ideals"] = R.inverse_on_ideals;
  j["order_preserving"] = R.order_preserving;
  j["bijective"] = R.bijective;
  j["failures"] = Json::array();
  for (const auto& f : R.failures) j["failures"].push_back(f);
  return j;
}

inline Json es_report_to_json(const Universe& U, const std::vector<std::string>& names,
                              const EsReport& R) {
  Json j;
  j["universe"] = Json::array();
  for (const auto& n : names) j["universe"].push_back(n);
  j["homomorphisms"] = Json::array();
  for (const auto& h : R.homs) {
    Json rec;
    rec["source"] = names[h.source];
    rec["target"] = names[h.target];
    Json table = Json::object();
    const Lattice& LA = U.algebras[h.source].lattice;
    const Lattice& LB = U.algebras[h.target].lattice;
    for (Elem x = 0; x < LA.size(); ++x) table[LA.name(x)] = LB.name(h.map[x]);
    rec["map"] = std::move(table);
    rec["injective"] = h.injective;
    rec["surjective"] = h.surjective;
    rec["epi_wrt_universe"] = h.epi;
    rec["mono_wrt_universe"] = h.mono;
    rec["conformal"] = h.conformal;
    j["homomorphisms"].push_back(std::move(rec));
  }
  j["hom_count"] = R.homs.size();
  j["non_surjective_epis"] = Json::array();
  for (int i : R.non_surjective_epis) j["non_surjective_epis"].push_back(i);
  return j;
}

inline Json corpus_to_json(const std::vector<CorpusEntry>& corpus) {
  Json j;
  j["count"] = corpus.size();
  j["algebras"] = Json::array();
  for (const auto& e : corpus) j["algebras"].push_back(algebra_to_json(e.label, e.algebra));
  return j;
}

inline Json lattice_list_to_json(const std::vector<Lattice>& ls, const std::string& stem) {
  Json j;
  j["count"] = ls.size();
  j["lattices"] = Json::array();
  for (std::size_t i = 0; i < ls.size(); ++i)
    j["lattices"].push_back(
        lattice_to_json(stem + std::to_string(ls[i].size()) + "_" + std::to_string(i), ls[i]));
  return j;
}

}  // namespace latsheaf

#endif  // LATSHEAF_JSON_IO_HPP
