// Batch front end: reads algebra files, dispatches one subcommand, emits a
// JSON or markdown report. Exit codes: 0 success, 1 property violation found
// by a check command, 2 input error, 3 resource bound exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "latsheaf/latsheaf.hpp"

namespace {

using latsheaf::Json;

struct CommandManifest {
  std::string command;
  std::string input;
  std::string J;  // comma-separated operator names
  std::string mode = "collapse";
  int max_size = 6;
  std::string universe;
  std::string out;
  std::string format = "json";
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  latsheaf::require(in.good(), latsheaf::errc::bad_input, "cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    latsheaf::fail(latsheaf::errc::bad_input, "'" + path + "': " + e.what());
  }
}

latsheaf::NamedAlgebra load_algebra(const CommandManifest& m) {
  latsheaf::require(!m.input.empty(), latsheaf::errc::bad_manifest,
                    "--input is required for this command");
  return latsheaf::algebra_from_json(read_json_file(m.input));
}

std::vector<int> resolve_j(const latsheaf::Algebra& A, const std::string& csv) {
  std::vector<int> out;
  std::istringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    int i = A.op_index(part);
    latsheaf::require(i >= 0, latsheaf::errc::bad_input, "no operator named '" + part + "'");
    out.push_back(i);
  }
  return out;
}

latsheaf::QuotientMode resolve_mode(const std::string& mode) {
  if (mode == "collapse") return latsheaf::QuotientMode::collapse;
  if (mode == "class") return latsheaf::QuotientMode::by_class;
  latsheaf::fail(latsheaf::errc::bad_manifest, "--mode must be collapse or class");
}

// Markdown rendering: scalars become "key: value" lines, containers are
// summarized by size; the verdict line leads.
void render_md(std::ostream& os, const std::string& command, const std::string& verdict,
               const Json& j) {
  os << "# " << command << "\n\n";
  os << "**" << verdict << "**\n\n";
  for (const auto& [key, value] : j.items()) {
    os << "- " << key << ": ";
    if (value.is_structured())
      os << "(" << value.size() << " entries)";
    else
      os << value.dump();
    os << "\n";
  }
}

int emit(const CommandManifest& m, const std::string& verdict, const Json& j,
         bool violation) {
  std::ostringstream body;
  if (m.format == "md")
    render_md(body, m.command, verdict, j);
  else
    body << j.dump(2) << "\n";

  if (m.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(m.out);
    latsheaf::require(out.good(), latsheaf::errc::bad_input, "cannot write '" + m.out + "'");
    out << body.str();
    std::cout << verdict << "\n";
  }
  return violation ? 1 : 0;
}

latsheaf::Universe load_universe(const CommandManifest& m, std::vector<std::string>& names) {
  latsheaf::require(!m.universe.empty(), latsheaf::errc::bad_manifest,
                    "--universe <path|bound> is required");
  latsheaf::Universe U;

  char* end = nullptr;
  long bound = std::strtol(m.universe.c_str(), &end, 10);
  if (end != m.universe.c_str() && *end == '\0') {
    latsheaf::require(bound >= 1 && bound <= 6, latsheaf::errc::too_large,
                      "universe bound must be between 1 and 6");
    auto ls = latsheaf::distributive_lattices_up_to(static_cast<int>(bound));
    std::vector<int> per_size(bound + 1, 0);
    for (const auto& L : ls) {
      names.push_back("dl" + std::to_string(L.size()) + "_" +
                      std::to_string(per_size[L.size()]++));
      U.algebras.push_back(latsheaf::make_algebra(L, {}, {}));
    }
    U.provenance = "enumerated";
    return U;
  }

  Json j = read_json_file(m.universe);
  latsheaf::require(j.contains("algebras") && j["algebras"].is_array(),
                    latsheaf::errc::bad_input, "universe file needs an \"algebras\" array");
  for (const auto& a : j["algebras"]) {
    auto na = latsheaf::algebra_from_json(a);
    auto bad = latsheaf::validate_algebra(na.algebra);
    if (!bad.empty())
      latsheaf::fail(latsheaf::errc::bad_input, "universe member '" + na.name +
                                                    "' fails validation: " + bad.front().axiom);
    bool dup = false;
    for (const auto& seen : U.algebras)
      if (seen.op_names == na.algebra.op_names && latsheaf::isomorphic(seen, na.algebra)) {
        dup = true;
        break;
      }
    if (!dup) {
      names.push_back(na.name.empty() ? "a" + std::to_string(U.algebras.size()) : na.name);
      U.algebras.push_back(std::move(na.algebra));
    }
  }
  U.provenance = "user-supplied";
  return U;
}

int run(const CommandManifest& m) {
  latsheaf::require(m.format == "json" || m.format == "md", latsheaf::errc::bad_manifest,
                    "--format must be json or md");

  if (m.command == "validate") {
    auto na = load_algebra(m);
    auto v = latsheaf::validate_algebra(na.algebra);
    Json j = latsheaf::validation_to_json(v);
    std::string verdict =
        v.empty() ? "valid" : std::to_string(v.size()) + " axiom violation(s)";
    return emit(m, verdict, j, !v.empty());
  }

  if (m.command == "spectrum") {
    auto na = load_algebra(m);
    auto S = latsheaf::spectrum(na.algebra.lattice);
    Json j = latsheaf::spectrum_to_json(S);
    j["separated"] = latsheaf::separation_check(S).order_separated;
    j["separated_dual_convention"] = latsheaf::separation_check(S, true).order_separated;
    std::string verdict = std::to_string(S.point_count()) + " point(s)";
    return emit(m, verdict, j, false);
  }

  if (m.command == "dualize") {
    auto na = load_algebra(m);
    auto D = latsheaf::dual_space(na.algebra, resolve_j(na.algebra, m.J), resolve_mode(m.mode));
    Json j = latsheaf::dual_space_to_json(D);
    std::string verdict = std::to_string(D.point_count()) + " point(s), mode " + m.mode;
    return emit(m, verdict, j, false);
  }

  if (m.command == "represent") {
    auto na = load_algebra(m);
    auto R = latsheaf::eta_report(na.algebra, resolve_j(na.algebra, m.J), resolve_mode(m.mode));
    Json j = latsheaf::eta_report_to_json(R);
    std::string verdict = std::string("isomorphism=") + (R.isomorphism ? "true" : "false");
    return emit(m, verdict, j, false);
  }

  if (m.command == "classify") {
    auto na = load_algebra(m);
    auto R = latsheaf::classify(na.algebra, resolve_j(na.algebra, m.J));
    Json j = latsheaf::classify_to_json(na.algebra, R);
    std::ostringstream v;
    v << "regular=" << (R.regular ? "true" : "false")
      << " strongly_regular=" << (R.strongly_regular ? "true" : "false")
      << " congruence_strongly_regular=" << (R.congruence_strongly_regular ? "true" : "false");
    return emit(m, v.str(), j, false);
  }

  if (m.command == "gs-check") {
    auto na = load_algebra(m);
    auto R = latsheaf::ideal_congruence_correspondence(na.algebra.lattice);
    Json j = latsheaf::gs_report_to_json(R);
    std::ostringstream v;
    v << "correspondence=" << (R.correspondence ? "true" : "false")
      << " predicate=" << (R.predicate ? "true" : "false")
      << " equivalence=" << (R.equivalence ? "true" : "false");
    return emit(m, v.str(), j, !R.equivalence);
  }

  if (m.command == "regular-ideals") {
    auto na = load_algebra(m);
    auto D = latsheaf::dual_space(na.algebra, resolve_j(na.algebra, m.J), resolve_mode(m.mode));
    auto R = latsheaf::regular_ideal_openset_iso(D);
    Json j = latsheaf::regular_ideal_report_to_json(D, R);
    std::string verdict = std::string("bijective=") + (R.bijective ? "true" : "false");
    return emit(m, verdict, j, false);
  }

  if (m.command == "epi-sweep") {
    std::vector<std::string> names;
    auto U = load_universe(m, names);
    auto R = latsheaf::es_experiment(U);
    Json j = latsheaf::es_report_to_json(U, names, R);
    j["provenance"] = U.provenance;
    std::string verdict = std::to_string(R.homs.size()) + " homomorphism(s), " +
                          std::to_string(R.non_surjective_epis.size()) +
                          " non-surjective epimorphism(s)";
    return emit(m, verdict, j, false);
  }

  if (m.command == "enumerate") {
    latsheaf::require(m.max_size >= 1 && m.max_size <= 8, latsheaf::errc::too_large,
                      "--max-size must be between 1 and 8");
    auto ls = latsheaf::distributive_lattices_up_to(m.max_size);
    Json j = latsheaf::lattice_list_to_json(ls, "dl");
    std::string verdict = std::to_string(ls.size()) + " distributive lattice(s) up to size " +
                          std::to_string(m.max_size);
    return emit(m, verdict, j, false);
  }

  latsheaf::fail(latsheaf::errc::bad_manifest, "unknown command '" + m.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite distributive lattices with operators: duality, sheaves, and sweeps"};
  app.require_subcommand(1);

  CommandManifest m;
  auto add_common = [&](CLI::App* sub, bool input, bool wants_j, bool wants_mode) {
    if (input) sub->add_option("--input", m.input, "algebra JSON file");
    if (wants_j) sub->add_option("--J", m.J, "comma-separated operator names");
    if (wants_mode) sub->add_option("--mode", m.mode, "quotient mode: collapse|class");
    sub->add_option("--out", m.out, "write the report here instead of stdout");
    sub->add_option("--format", m.format, "json|md");
  };

  add_common(app.add_subcommand("validate", "check all algebra axioms"), true, false, false);
  add_common(app.add_subcommand("spectrum", "prime spectrum of the underlying lattice"),
             true, false, false);
  add_common(app.add_subcommand("dualize", "dual space with stalks"), true, true, true);
  add_common(app.add_subcommand("represent", "representation map report"), true, true, true);
  add_common(app.add_subcommand("classify", "regularity hierarchy report"), true, true, false);
  add_common(app.add_subcommand("gs-check", "ideal/congruence correspondence report"),
             true, false, false);
  add_common(app.add_subcommand("regular-ideals", "regular-ideal vs open-set report"),
             true, true, true);
  auto* sweep = app.add_subcommand("epi-sweep", "exhaustive epi/mono sweep over a universe");
  sweep->add_option("--universe", m.universe, "universe file or size bound");
  add_common(sweep, false, false, false);
  auto* enumerate = app.add_subcommand("enumerate", "distributive lattices up to a size");
  enumerate->add_option("--max-size", m.max_size, "largest lattice size to emit");
  add_common(enumerate, false, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  m.command = app.get_subcommands().front()->get_name();
  try {
    return run(m);
  } catch (const latsheaf::Error& e) {
    std::cerr << "error [" << latsheaf::errc_name(e.code()) << "]: " << e.what() << "\n";
    return e.code() == latsheaf::errc::too_large ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
