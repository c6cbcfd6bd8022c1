// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "sigmamp/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "sigmamp/catalog.hpp"
#include "sigmamp/constructions.hpp"
#include "sigmamp/error.hpp"
#include "sigmamp/grs.hpp"
#include "sigmamp/json_io.hpp"
#include "sigmamp/nsc.hpp"
#include "sigmamp/reproduce.hpp"

namespace sigmamp::cli {

using io::json;

namespace {

struct Globals {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  std::string catalog = "catalog.jsonl";

  EnumerationOptions enumeration() const { return {budget, threads}; }
};

json header() { return json{{"schema", io::kSchemaVersion}, {"tool_version", io::kToolVersion}}; }

json with_header(const json& body) {
  json out = header();
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

void emit(std::ostream& out, const json& body) { out << with_header(body).dump(2) << '\n'; }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw BadInput(std::string("input has no '") + key + "' member");
  return j.at(key);
}

json distance_json(std::size_t d) { return d == kUnbounded ? json("inf") : json(d); }

json optional_distance(const std::optional<std::size_t>& d) { return d ? distance_json(*d) : json(); }

std::string kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::bad_input: return "bad_input";
    case ErrorKind::verification_failed: return "verification_failed";
    case ErrorKind::budget_exceeded: return "budget_exceeded";
  }
  return "bad_input";
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::bad_input: return kBadInput;
    case ErrorKind::verification_failed: return kVerificationFailed;
    case ErrorKind::budget_exceeded: return kBudgetExceeded;
  }
  return kBadInput;
}

int report_error(std::ostream& err, ErrorKind kind, const std::string& message) {
  err << with_header(json{{"error", {{"kind", kind_name(kind)}, {"message", message}}}}).dump() << '\n';
  return exit_code(kind);
}

// ---------------------------------------------------------------------------
// Input documents.

// A code entry is a code object, {"grs": {"n", "k", "flavor", "e"}}, or
// {"sigma_dual_of": i} naming an earlier entry (0-based) under sigma'.
std::vector<LinearCode> codes_from_json(const json& arr, const Field& f, const std::optional<Isometry>& sigma_prime,
                                        const Globals& g) {
  if (!arr.is_array() || arr.empty()) throw BadInput("'codes' must be a non-empty array");
  std::vector<LinearCode> out;
  for (const json& c : arr) {
    if (c.contains("grs")) {
      const json& spec = c.at("grs");
      const GrsFlavor flavor = grs_flavor_from_string(spec.value("flavor", std::string("euclidean")));
      GrsSearchOptions so;
      so.seed = spec.value("seed", std::uint64_t{1});
      const GrsSpec found = find_self_orthogonal_grs(f, member(spec, "n").get<std::size_t>(),
                                                     member(spec, "k").get<std::size_t>(), flavor,
                                                     spec.value("e", 0u), so);
      out.push_back(grs_code(f, found, g.enumeration()));
    } else if (c.contains("sigma_dual_of")) {
      const auto i = c.at("sigma_dual_of").get<std::size_t>();
      if (i >= out.size()) throw BadInput("sigma_dual_of must name an earlier code");
      if (!sigma_prime) throw BadInput("sigma_dual_of needs a sigma_prime");
      out.push_back(sigma_dual(out[i], *sigma_prime));
    } else {
      out.push_back(io::code_from_json(c, f));
    }
  }
  return out;
}

std::optional<std::vector<std::size_t>> sizes(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<std::vector<std::size_t>>();
}

json code_summary(const LinearCode& c) {
  return json{{"n", c.length()}, {"k", c.dimension()}};
}

json construction_json(const ConstructionResult& r, const std::vector<LinearCode>& inputs, bool exact,
                       const Globals& g) {
  json in = json::array();
  for (const LinearCode& c : inputs) in.push_back(code_summary(c));
  json verified{{"self_orthogonal", is_self_orthogonal(r.code.derived, r.sigma)}};
  if (exact) {
    const DistanceReport d = min_distance(r.code.derived, g.enumeration());
    const DistanceReport dd = min_distance(sigma_dual(r.code.derived, r.sigma), g.enumeration());
    verified["exact_distance"] = {{"d", distance_json(d.d)}, {"strategy", to_string(d.strategy)}};
    verified["exact_dual_distance"] = {{"d", distance_json(dd.d)}, {"strategy", to_string(dd.strategy)}};
    verified["bounds_hold"] = (!r.claimed_d_bound || d.d >= *r.claimed_d_bound) &&
                              (!r.claimed_dual_bound || dd.d >= *r.claimed_dual_bound);
  }
  json out{{"theorem", r.theorem},
           {"field", io::field_to_json(r.code.defining.field())},
           {"inputs", in},
           {"defining", io::rows_to_json(r.code.defining)},
           {"sigma", io::isometry_to_json(r.sigma)}};
  if (r.structure)
    out["structure"] = {{"outer", io::rows_to_json(r.structure->outer)},
                        {"inner", io::isometry_to_json(r.structure->inner)}};
  out["n"] = r.code.derived.length();
  out["dim"] = r.code.derived.dimension();
  out["d_bound"] = optional_distance(r.claimed_d_bound);
  out["dual_bound"] = optional_distance(r.claimed_dual_bound);
  if (r.aux) out["aux"] = io::rows_to_json(*r.aux);
  if (r.lift) out["lift"] = io::certificate_to_json(*r.lift);
  out["code"] = io::code_to_json(r.code.derived);
  out["verified"] = verified;
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

int construct(const std::string& theorem, const json& doc, bool exact, const Globals& g, std::ostream& out) {
  const Field f = io::find_field(doc);
  ConstructionOptions opts{g.enumeration(), sizes(doc, "input_distances"), sizes(doc, "input_dual_distances")};
  if (theorem == "i") {
    const KronIsometry sp = io::kron_from_json(member(doc, "sigma_prime"), f);
    const std::vector<LinearCode> codes = codes_from_json(member(doc, "codes"), f, sp.inner, g);
    const MatrixProductCode mp = mp_build(codes, io::matrix_from_json(member(doc, "defining"), f));
    const Elem t = doc.contains("t") ? io::elem_from_json(f, doc.at("t")) : f.one();
    emit(out, construction_json(construction1(mp, sp, t, opts), codes, exact, g));
    return kOk;
  }
  const Isometry sp = io::isometry_from_json(member(doc, "sigma_prime"), f);
  const std::vector<LinearCode> codes = codes_from_json(member(doc, "codes"), f, sp, g);
  if (theorem == "ii") {
    const Matrix a = io::matrix_from_json(member(doc, "defining"), f);
    const Matrix m_tilde = io::matrix_from_json(member(doc, "m_tilde"), f);
    emit(out, construction_json(construction2(a, m_tilde, codes, sp, opts), codes, exact, g));
    return kOk;
  }
  if (theorem == "iii") {
    const Matrix a = io::matrix_from_json(member(doc, "defining"), f);
    const Matrix m = io::matrix_from_json(member(doc, "m"), f);
    emit(out, construction_json(construction3(a, m, codes, sp, opts), codes, exact, g));
    return kOk;
  }
  if (theorem == "iv") {
    std::optional<Matrix> a, d;
    json search;
    if (doc.contains("defining")) {
      a = io::matrix_from_json(doc.at("defining"), f);
    } else {
      const std::uint64_t seed = doc.value("seed", std::uint64_t{1});
      auto hit = search_construction4_matrix(f, codes.size(), sp.e(), seed, g.budget);
      if (!hit) throw BudgetExceeded("no Toeplitz A with diagonal Q pi_e(A) A found; raise --budget");
      a = hit->a;
      d = hit->d;
      search = {{"seed", seed}, {"candidates", hit->candidates}};
    }
    if (doc.contains("d")) {
      d = io::matrix_from_json(doc.at("d"), f);
    } else if (!d) {
      const Matrix d_inv = Matrix::anti_identity(f, a->rows()) * a->frobenius(sp.e()) * *a;
      if (!d_inv.is_diagonal() || det(d_inv).is_zero())
        throw BadInput("Q pi_e(A) A is not an invertible diagonal matrix; supply 'd'");
      d = inverse(d_inv);
    }
    if (doc.value("mode", std::string("self_orthogonal")) == "dual") {
      const MatrixProductCode dual = construction4_dual(*a, *d, codes, sp);
      json body{{"theorem", "IV"},
                {"mode", "dual"},
                {"field", io::field_to_json(f)},
                {"defining", io::rows_to_json(*a)},
                {"d", io::rows_to_json(*d)},
                {"dual_defining", io::rows_to_json(dual.defining)},
                {"dual", io::code_to_json(dual.derived)},
                {"verified", {{"matches_direct_dual", true}}}};
      if (!search.empty()) body["search"] = search;
      emit(out, body);
      return kOk;
    }
    json body = construction_json(construction4(*a, *d, codes, sp, opts), codes, exact, g);
    if (!search.empty()) body["search"] = search;
    json individually = json::array();
    for (const LinearCode& c : codes) individually.push_back(is_self_orthogonal(c, sp));
    body["inputs_self_orthogonal"] = individually;
    emit(out, body);
    return kOk;
  }
  throw BadInput("construction must be one of i, ii, iii, iv");
}

// ---------------------------------------------------------------------------

json nsc_json(const NscReport& r) {
  json out{{"nsc", r.nsc}, {"minors_evaluated", r.minors_evaluated}};
  if (r.witness) out["witness"] = {{"ell", r.witness->ell}, {"cols", r.witness->cols}};
  else out["witness"] = nullptr;
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

// A file holding catalog records: one record, a JSON array of records, a
// document with a "record" member, or JSON lines of any of those.
std::vector<json> record_documents(const std::string& path) {
  std::vector<json> docs;
  try {
    docs.push_back(io::read_json_file(path));
  } catch (const BadInput&) {
    for (const std::string& l : read_lines(path)) {
      try {
        docs.push_back(json::parse(l));
      } catch (const json::exception& e) {
        throw BadInput("'" + path + "' is neither JSON nor JSON lines: " + e.what());
      }
    }
  }
  std::vector<json> out;
  for (const json& d : docs) {
    if (d.is_array()) {
      for (const json& x : d) out.push_back(x);
    } else if (d.contains("record")) {
      out.push_back(d.at("record"));
    } else if (d.contains("records")) {
      for (const json& x : d.at("records")) out.push_back(x);
    } else {
      out.push_back(d);
    }
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"smp: sigma self-orthogonal matrix-product codes"};
  app.name("smp");
  app.require_subcommand(1);
  Globals g;
  app.add_option("--budget", g.budget, "Max codewords visited by one exact enumeration (default 2^24)")
      ->envname("SMP_BUDGET")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for enumeration and sampling")->check(CLI::Range(1u, 256u));
  app.add_option("--catalog", g.catalog, "JSON-lines catalog path")->envname("SMP_CATALOG")->capture_default_str();

  // field
  auto* field_cmd = app.add_subcommand("field", "Describe GF(p^h)");
  std::uint64_t field_q = 0;
  std::uint32_t field_p = 0;
  unsigned field_h = 0;
  std::vector<std::uint32_t> field_modulus;
  bool field_elements = false;
  field_cmd->add_option("--q", field_q, "Field order");
  field_cmd->add_option("--p", field_p, "Characteristic");
  field_cmd->add_option("--degree", field_h, "Extension degree h");
  field_cmd->add_option("--modulus", field_modulus, "Monic modulus, low to high coefficients")->delimiter(',');
  field_cmd->add_flag("--elements", field_elements, "List every element with its coefficients and log");

  // nsc
  auto* nsc_cmd = app.add_subcommand("nsc", "Test whether every leading-row minor is non-singular");
  std::string nsc_file;
  nsc_cmd->add_option("file", nsc_file, "Matrix JSON")->required();

  // quasi
  auto* quasi_cmd = app.add_subcommand("quasi", "Quasi-sigma matrices");
  quasi_cmd->require_subcommand(1);
  auto* sample_cmd = quasi_cmd->add_subcommand("sample", "Randomized generation campaign");
  std::uint64_t sample_q = 0, sample_trials = 10000, sample_seed = 7;
  std::size_t sample_s = 0;
  unsigned sample_e = 0;
  std::optional<unsigned> sample_threads;
  std::string sample_out, sample_m_tilde;
  bool sample_catalog = false;
  sample_cmd->add_option("--q", sample_q, "Field order")->required();
  sample_cmd->add_option("--s", sample_s, "Matrix size")->required();
  sample_cmd->add_option("--e", sample_e, "Frobenius exponent")->required();
  sample_cmd->add_option("--trials", sample_trials, "Number of trials")->capture_default_str();
  sample_cmd->add_option("--seed", sample_seed, "Master seed")->capture_default_str();
  sample_cmd->add_option("--threads", sample_threads, "Worker threads (overrides the global flag)");
  sample_cmd->add_option("--out", sample_out, "Write every certificate as a catalog record (JSON lines)");
  sample_cmd->add_option("--m-tilde", sample_m_tilde, "Monomial matrix JSON (default identity)");
  sample_cmd->add_flag("--add-to-catalog", sample_catalog, "Append certificates to the catalog");
  auto* lift_cmd = quasi_cmd->add_subcommand("lift", "Lift an NSC matrix to a quasi-sigma matrix");
  std::string lift_file;
  lift_cmd->add_option("file", lift_file, "{\"A\": matrix, \"m_tilde\": matrix?, \"e\": int}")->required();

  // tau-od
  auto* tau_cmd = app.add_subcommand("tau-od", "Test NSC with monomial A A^T");
  std::string tau_file;
  tau_cmd->add_option("file", tau_file, "Matrix JSON")->required();

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Run a self-orthogonal construction");
  std::string construct_which, construct_file;
  bool construct_exact = false;
  construct_cmd->add_option("theorem", construct_which, "i, ii, iii or iv")
      ->required()
      ->check(CLI::IsMember({"i", "ii", "iii", "iv"}));
  construct_cmd->add_option("file", construct_file, "Input JSON")->required();
  construct_cmd->add_flag("--exact", construct_exact, "Also compute exact distances of the code and its sigma dual");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check self-orthogonality, dual containment and hull");
  std::string verify_file;
  verify_cmd->add_option("file", verify_file, "{\"code\" | \"mp\", \"sigma\" | \"sigma_prime\", \"checks\"?}")
      ->required();

  // distance
  auto* distance_cmd = app.add_subcommand("distance", "Exact minimum distance");
  std::string distance_file;
  bool distance_dual = false;
  distance_cmd->add_option("file", distance_file, "Code JSON, optionally with \"sigma\"")->required();
  distance_cmd->add_flag("--dual", distance_dual, "Use the sigma dual (Euclidean without \"sigma\")");

  // reproduce
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Regression against published examples and tables");
  std::string reproduce_item;
  ReproduceOptions ropts;
  reproduce_cmd->add_option("item", reproduce_item, "Item name, 'list' or 'all'")->required();
  reproduce_cmd->add_option("--trials", ropts.trials, "Trials for sampling items")->capture_default_str();
  reproduce_cmd->add_option("--seed", ropts.seed, "Master seed for sampling items")->capture_default_str();
  reproduce_cmd->add_option("--tolerance", ropts.rate_tolerance, "Absolute tolerance on sampling rates")
      ->capture_default_str();

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "Persistent certificate catalog");
  catalog_cmd->require_subcommand(1);
  auto* cat_add = catalog_cmd->add_subcommand("add", "Validate and append records");
  std::string cat_add_file;
  cat_add->add_option("file", cat_add_file, "Record JSON, JSON lines, or a command output with \"record\"")
      ->required();
  auto* cat_list = catalog_cmd->add_subcommand("list", "List records");
  bool cat_list_full = false;
  cat_list->add_flag("--full", cat_list_full, "Print whole records");
  auto* cat_check = catalog_cmd->add_subcommand("check", "Revalidate every record, quarantining failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return report_error(err, ErrorKind::bad_input, e.what());
  }

  try {
    if (*field_cmd) {
      Field f = Field::make(2, 1);
      if (field_q) {
        if (field_p || field_h) throw BadInput("give either --q or --p/--degree");
        f = field_modulus.empty() ? io::field_of_order(field_q) : [&] {
          const Field base = io::field_of_order(field_q);
          return Field::make(base.characteristic(), base.degree(), field_modulus);
        }();
      } else {
        if (!field_p || !field_h) throw BadInput("field needs --q or both --p and --degree");
        f = field_modulus.empty() ? io::default_field(field_p, field_h) : Field::make(field_p, field_h, field_modulus);
      }
      json body{{"field", io::field_to_json(f)},
                {"name", f.name()},
                {"order", f.order()},
                {"omega", io::elem_detail(f, f.omega())}};
      json sub = json::array();
      for (unsigned g2 = 1; g2 <= f.degree(); ++g2)
        if (f.degree() % g2 == 0) sub.push_back(g2);
      body["subfield_degrees"] = sub;
      if (field_elements) {
        json elems = json::array();
        for (std::uint32_t r = 0; r < f.order(); ++r) elems.push_back(io::elem_detail(f, Elem{r}));
        body["elements"] = elems;
      }
      emit(out, body);
      return kOk;
    }
    if (*nsc_cmd) {
      const Matrix a = io::matrix_from_json(io::read_json_file(nsc_file));
      const NscReport r = check_nsc(a);
      emit(out, nsc_json(r));
      return r.nsc ? kOk : kVerificationFailed;
    }
    if (*sample_cmd) {
      const Field f = io::field_of_order(sample_q);
      if (sample_e >= f.degree()) throw BadInput("--e must be below the extension degree");
      const Matrix m_tilde = sample_m_tilde.empty()
                                 ? Matrix::identity(f, sample_s)
                                 : io::matrix_from_json(io::read_json_file(sample_m_tilde), f);
      const unsigned threads = sample_threads.value_or(g.threads);
      const CampaignResult c = sampling_campaign(f, sample_s, sample_e, m_tilde, sample_trials, sample_seed, threads);
      std::map<std::string, std::uint64_t> by_candidate;
      for (const TrialRecord& t : c.records) ++by_candidate[t.candidate];
      json cands = json::object();
      for (const auto& [k, v] : by_candidate) cands[k] = v;
      std::size_t added = 0;
      if (!sample_out.empty() || sample_catalog) {
        std::ofstream file;
        if (!sample_out.empty()) {
          file.open(sample_out, std::ios::trunc);
          if (!file) throw BadInput("cannot write '" + sample_out + "'");
        }
        const Catalog cat(g.catalog);
        for (const TrialRecord& t : c.records) {
          const CatalogRecord rec = make_record(t.certificate, {sample_seed, t.trial});
          if (file.is_open()) file << rec.body.dump() << '\n';
          if (sample_catalog && cat.add(rec)) ++added;
        }
      }
      const double rate = sample_trials ? static_cast<double>(c.successes) / static_cast<double>(sample_trials) : 0.0;
      json body{{"field", io::field_to_json(f)},
                {"q", sample_q},
                {"s", sample_s},
                {"e", sample_e},
                {"seed", sample_seed},
                {"trials", c.trials},
                {"successes", c.successes},
                {"rate", rate},
                {"nsc_retry_exhausted", c.errors},
                {"candidates", cands}};
      if (sample_catalog) body["catalog_added"] = added;
      emit(out, body);
      return kOk;
    }
    if (*lift_cmd) {
      const json doc = io::read_json_file(lift_file);
      const Field f = io::find_field(doc);
      const Matrix a = io::matrix_from_json(member(doc, "A"), f);
      const Matrix m_tilde =
          doc.contains("m_tilde") ? io::matrix_from_json(doc.at("m_tilde"), f) : Matrix::identity(f, a.rows());
      const unsigned e = doc.value("e", 0u);
      const QuasiCertificate c = lift_to_quasi(a, m_tilde, e);
      json body = io::certificate_to_json(c);
      body["nsc"] = is_nsc(c.product);
      body["record"] = make_record(c).body;
      emit(out, body);
      return kOk;
    }
    if (*tau_cmd) {
      const Matrix a = io::matrix_from_json(io::read_json_file(tau_file));
      const TauOdResult r = is_tau_od(a);
      json body{{"tau_od", r.certificate.has_value()}};
      if (r.certificate) {
        body["d"] = io::rows_to_json(r.certificate->d);
        body["p"] = io::rows_to_json(r.certificate->p);
        body["record"] = make_record(a, *r.certificate).body;
      } else {
        body["reason"] = r.reason;
      }
      emit(out, body);
      return r.certificate ? kOk : kVerificationFailed;
    }
    if (*construct_cmd) return construct(construct_which, io::read_json_file(construct_file), construct_exact, g, out);
    if (*verify_cmd) {
      const json doc = io::read_json_file(verify_file);
      const Field f = io::find_field(doc);
      std::optional<LinearCode> code;
      std::optional<MatrixProductCode> mp;
      std::optional<KronIsometry> ks;
      std::optional<Isometry> sigma;
      if (doc.contains("mp")) {
        mp = io::mp_from_json(doc.at("mp"));
        code = mp->derived;
      } else {
        code = io::code_from_json(member(doc, "code"), f);
      }
      if (doc.contains("sigma_prime")) {
        ks = io::kron_from_json(doc.at("sigma_prime"), f);
        sigma = ks->flatten();
      } else {
        sigma = io::isometry_from_json(member(doc, "sigma"), f);
      }
      std::vector<std::string> checks = {"self_orthogonal", "dual_containing", "hull"};
      if (doc.contains("checks")) checks = doc.at("checks").get<std::vector<std::string>>();
      json results = json::object();
      bool all = true;
      for (const std::string& c : checks) {
        if (c == "self_orthogonal") {
          const bool v = is_self_orthogonal(*code, *sigma);
          results[c] = v;
          all = all && (!doc.contains("checks") || v);
        } else if (c == "dual_containing") {
          const bool v = is_dual_containing(*code, *sigma);
          results[c] = v;
          all = all && (!doc.contains("checks") || v);
        } else if (c == "hull") {
          const LinearCode hull = intersect(*code, sigma_dual(*code, *sigma));
          json h{{"dim", hull.dimension()}, {"code", io::code_to_json(hull)}};
          if (mp && ks) {
            try {
              const MatrixProductCode formula = mp_sigma_hull(*mp, *ks);
              h["formula_matches"] = formula.derived == hull;
              all = all && formula.derived == hull;
            } catch (const BadInput& e) {
              h["formula"] = e.what();
            }
          }
          results[c] = h;
        } else {
          throw BadInput("unknown check '" + c + "'");
        }
      }
      emit(out, json{{"n", code->length()}, {"k", code->dimension()}, {"sigma", io::isometry_to_json(*sigma)},
                     {"results", results}});
      return all ? kOk : kVerificationFailed;
    }
    if (*distance_cmd) {
      const json doc = io::read_json_file(distance_file);
      const Field f = io::find_field(doc);
      const json& code_doc = doc.contains("code") ? doc.at("code") : doc;
      LinearCode c = io::code_from_json(code_doc, f);
      if (distance_dual)
        c = doc.contains("sigma") ? sigma_dual(c, io::isometry_from_json(doc.at("sigma"), f)) : euclidean_dual(c);
      const DistanceReport r = min_distance(c, g.enumeration());
      emit(out, json{{"n", c.length()},
                     {"k", c.dimension()},
                     {"d", distance_json(r.d)},
                     {"strategy", to_string(r.strategy)},
                     {"enumerator", io::enumerator_to_json(r.enumerator)}});
      return kOk;
    }
    if (*reproduce_cmd) {
      ropts.enumeration = g.enumeration();
      ropts.threads = g.threads;
      if (reproduce_item == "list") {
        emit(out, json{{"items", reproduce_items()}});
        return kOk;
      }
      std::vector<std::string> items{reproduce_item};
      if (reproduce_item == "all") items = reproduce_items();
      json reports = json::array();
      bool ok = true;
      for (const std::string& item : items) {
        const ReproduceReport r = reproduce(item, ropts);
        ok = ok && r.passed();
        json j = report_to_json(r);
        j.erase("schema");
        reports.push_back(j);
      }
      emit(out, items.size() == 1 ? reports.front() : json{{"passed", ok}, {"reports", reports}});
      return ok ? kOk : kVerificationFailed;
    }
    if (*cat_add) {
      const Catalog cat(g.catalog);
      std::size_t added = 0, duplicate = 0;
      for (const json& d : record_documents(cat_add_file)) {
        if (cat.add(parse_record(d))) ++added;
        else ++duplicate;
      }
      emit(out, json{{"catalog", g.catalog}, {"added", added}, {"duplicates", duplicate}});
      return kOk;
    }
    if (*cat_list) {
      json records = json::array();
      for (const CatalogRecord& r : Catalog(g.catalog).load()) {
        if (cat_list_full) {
          records.push_back(r.body);
          continue;
        }
        const Field f = io::field_from_json(r.body.at("field"));
        records.push_back(json{{"id", r.id()},
                               {"kind", r.kind()},
                               {"field", f.name()},
                               {"s", r.body.at("matrix").size()},
                               {"provenance", r.body.at("provenance")}});
      }
      emit(out, json{{"catalog", g.catalog}, {"count", records.size()}, {"records", records}});
      return kOk;
    }
    if (*cat_check) {
      const Catalog cat(g.catalog);
      const CatalogCheck c = cat.check();
      json q = json::array();
      for (const auto& x : c.quarantined) q.push_back(json{{"line", x.line}, {"reason", x.reason}});
      emit(out, json{{"catalog", g.catalog},
                     {"valid", c.valid},
                     {"quarantined", q},
                     {"quarantine_file", c.quarantined.empty() ? json() : json(cat.quarantine_path())}});
      return c.quarantined.empty() ? kOk : kVerificationFailed;
    }
    return report_error(err, ErrorKind::bad_input, "no command given");
  } catch (const Error& e) {
    return report_error(err, e.kind(), e.what());
  } catch (const json::exception& e) {
    return report_error(err, ErrorKind::bad_input, std::string("malformed JSON input: ") + e.what());
  }
}

}  // namespace sigmamp::cli
