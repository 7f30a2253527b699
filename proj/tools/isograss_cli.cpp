// Command-line front end for the isograss library.
//
//   isograss classify    --in S.json
//   isograss enumerate   --case real-orthogonal --p 2 --q 2 --p1 1 --q1 1 --r 1 --format csv
//   isograss canonical   --case symplectic --n 6 --m 1 --tuple 0,4,0,2
//   isograss open-orbits --case unitary --p 4 --q 4 --p1 2 --q1 2 --r 3
//   isograss witness     --in S.json --in S2.json
//   isograss verify      --seed 42 --trials 100 --threads 1

#include "isograss/errors.hpp"
#include "isograss/form_space.hpp"
#include "isograss/invariants.hpp"
#include "isograss/io.hpp"
#include "isograss/oracle.hpp"
#include "isograss/orbits.hpp"
#include "isograss/verify.hpp"
#include "isograss/witness.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace isograss;

namespace {

struct Options {
  std::string case_name;
  std::optional<int> p, q, p1, q1, n, m, r;
  std::string tuple;
  std::vector<std::string> in;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 42;
  int trials = 100;
  unsigned threads = 1;
  std::vector<std::string> suites;
  int max_ambient = 8;
  int max_symplectic_ambient = 10;
  std::string formula = "standard";
};

void add_group_flags(CLI::App* cmd, Options& o, bool with_r, bool with_tuple) {
  cmd->add_option("--case", o.case_name,
                  "real-orthogonal | unitary | complex-orthogonal | symplectic")
      ->required();
  cmd->add_option("--p", o.p, "signature p of V (real-orthogonal, unitary)");
  cmd->add_option("--q", o.q, "signature q of V (real-orthogonal, unitary)");
  cmd->add_option("--p1", o.p1, "signature p1 of U (real-orthogonal, unitary)");
  cmd->add_option("--q1", o.q1, "signature q1 of U (real-orthogonal, unitary)");
  cmd->add_option("--n", o.n, "dim V (complex-orthogonal) or half of it (symplectic)");
  cmd->add_option("--m", o.m, "dim U (complex-orthogonal) or half of it (symplectic)");
  if (with_r) cmd->add_option("--r", o.r, "isotropic dimension")->required();
  if (with_tuple)
    cmd->add_option("--tuple", o.tuple, "orbit tuple, comma separated (e.g. 0,0,0,1,0)")
        ->required();
  cmd->add_option("--out", o.out, "output path (default: stdout)");
}

GroupParams group_params(CaseTag c, const Options& o) {
  auto need = [](const std::optional<int>& v, const char* flag) {
    if (!v) throw ParseError(std::string("missing --") + flag);
    return *v;
  };
  if (is_signed_case(c))
    return GroupParams::signed_params(need(o.p, "p"), need(o.q, "q"), need(o.p1, "p1"),
                                      need(o.q1, "q1"));
  return GroupParams::nm(need(o.n, "n"), need(o.m, "m"));
}

OrbitParams parse_tuple(CaseTag c, const std::string& text) {
  std::vector<int> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      entries.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("--tuple: '" + item + "' is not a nonnegative integer");
    }
  }
  return OrbitParams::from_entries(c, entries);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_text_file(o.out, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_classify(const Options& o) {
  if (o.in.size() != 1) throw ParseError("classify takes exactly one --in file");
  const Subspace s = subspace_from_json(read_json_file(o.in[0]));
  const CaseTag c = s.space().case_tag();
  const GroupParams& g = s.space().params();
  const OrbitParams t = classify(s);
  emit(o, dump(orbit_info_to_json(c, g, orbit_info(c, g, t))));
  return 0;
}

int cmd_enumerate(const Options& o) {
  const CaseTag c = parse_case(o.case_name);
  const GroupParams g = group_params(c, o);
  const auto orbits = enumerate_orbits(c, g, *o.r);
  if (o.format == "csv")
    emit(o, atlas_to_csv(c, g, orbits));
  else if (o.format == "json")
    emit(o, dump(atlas_to_json(c, g, *o.r, orbits)));
  else
    throw ParseError("--format must be json or csv");
  return 0;
}

int cmd_canonical(const Options& o) {
  const CaseTag c = parse_case(o.case_name);
  const GroupParams g = group_params(c, o);
  emit(o, dump(subspace_to_json(canonical_rep(standard_space(c, g), parse_tuple(c, o.tuple)))));
  return 0;
}

int cmd_open_orbits(const Options& o) {
  const CaseTag c = parse_case(o.case_name);
  const GroupParams g = group_params(c, o);
  Json j;
  j["case"] = std::string(to_string(c));
  j["params"] = params_to_json(c, g);
  j["r"] = *o.r;
  Json list = Json::array();
  for (const auto& t : open_orbits(c, g, *o.r)) list.push_back(tuple_to_json(t));
  j["open_orbits"] = list;
  emit(o, dump(j));
  return 0;
}

Json matrix_json(const Matrix& m, Field f) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j), f));
    rows.push_back(row);
  }
  return rows;
}

int cmd_witness(const Options& o) {
  if (o.in.size() != 2) throw ParseError("witness takes two --in files (S, then S2)");
  const Subspace s = subspace_from_json(read_json_file(o.in[0]));
  const Subspace s2 = subspace_from_json(read_json_file(o.in[1]));
  if (!(s.space() == s2.space())) throw PreconditionError("the two subspaces live in different spaces");
  const IsometryElement h = orbit_witness(s, s2);
  const Field f = s.space().field();
  Json j;
  j["case"] = std::string(to_string(s.space().case_tag()));
  j["params"] = params_to_json(s.space().case_tag(), s.space().params());
  j["tuple"] = tuple_to_json(classify(s));
  j["g1"] = matrix_json(h.h1, f);
  j["g2"] = matrix_json(h.h2, f);
  emit(o, dump(j));
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.threads = o.threads;
  cfg.max_ambient = o.max_ambient;
  cfg.max_symplectic_ambient = o.max_symplectic_ambient;
  if (!o.suites.empty()) cfg.suites = o.suites;
  if (!o.case_name.empty()) cfg.cases = {parse_case(o.case_name)};
  if (o.formula == "published-unitary")
    cfg.formula = unitary_stabilizer_dim_published;
  else if (o.formula != "standard")
    throw ParseError("--formula must be standard or published-unitary");
  const VerifyReport report = run_verification(cfg);
  emit(o, report.summary());
  return report.passed() ? 0 : static_cast<int>(ExitCode::VerificationFailure);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Orbits of symmetric subgroups on isotropic Grassmannians (exact arithmetic).\n"
      "Commands: classify, enumerate, canonical, open-orbits, witness, verify."};
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "orbit tuple and orbit data of a subspace file");
  classify_cmd->add_option("--in", o.in, "subspace JSON file")->required();
  classify_cmd->add_option("--out", o.out, "output path (default: stdout)");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "orbit atlas of Gr_G(r)");
  add_group_flags(enumerate_cmd, o, true, false);
  enumerate_cmd->add_option("--format", o.format, "json | csv");

  auto* canonical_cmd = app.add_subcommand("canonical", "canonical representative of an orbit");
  add_group_flags(canonical_cmd, o, false, true);

  auto* open_cmd = app.add_subcommand("open-orbits", "open orbits in Gr_G(r)");
  add_group_flags(open_cmd, o, true, false);

  auto* witness_cmd =
      app.add_subcommand("witness", "an element of H mapping one subspace onto another");
  witness_cmd->add_option("--in", o.in, "two subspace JSON files: S, then S2")->required();
  witness_cmd->add_option("--out", o.out, "output path (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("--seed", o.seed, "random seed");
  verify_cmd->add_option("--trials", o.trials, "samples per representative");
  verify_cmd->add_option("--threads", o.threads, "worker threads (output is thread-independent)");
  verify_cmd->add_option("--case", o.case_name, "restrict to one case");
  verify_cmd->add_option("--suites", o.suites, "suites to run (default: the five core suites)")
      ->delimiter(',');
  verify_cmd->add_option("--max-ambient", o.max_ambient, "largest ambient dimension");
  verify_cmd->add_option("--max-symplectic-ambient", o.max_symplectic_ambient,
                         "largest symplectic ambient dimension");
  verify_cmd->add_option("--formula", o.formula,
                         "stabilizer formula under test: standard | published-unitary");
  verify_cmd->add_option("--out", o.out, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::Usage);
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*enumerate_cmd) return cmd_enumerate(o);
    if (*canonical_cmd) return cmd_canonical(o);
    if (*open_cmd) return cmd_open_orbits(o);
    if (*witness_cmd) return cmd_witness(o);
    if (*verify_cmd) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Consistency);
  }
  return static_cast<int>(ExitCode::Usage);
}
