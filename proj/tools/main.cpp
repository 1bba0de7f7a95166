// Command-line front end: twist-word computations on extended mapping
// class groups, linking-matrix signatures, cyclotomic scalars, and the
// randomized verification suites.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emcg/verify.hpp"

using json = nlohmann::json;
using namespace emcg;

namespace {

json matrix_json(const MatZ& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(static_cast<long>(m(i, j).get_si()));
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const MatZ& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

Lagrangian parse_lagrangian(const SymplecticSpace& sp, const std::string& text) {
  if (text == "std") return Lagrangian::standard(sp);
  // basis vectors separated by ';', entries by ','
  MatQ gens(sp.dim(), 0);
  std::stringstream ss(text);
  std::string vec;
  std::vector<VecQ> cols;
  while (std::getline(ss, vec, ';')) {
    std::stringstream vs(vec);
    std::string entry;
    VecQ v(sp.dim());
    Eigen::Index i = 0;
    while (std::getline(vs, entry, ',')) {
      if (i >= sp.dim()) throw std::invalid_argument("lagrangian vector too long");
      v(i++) = Rational(entry);
    }
    if (i != sp.dim()) throw std::invalid_argument("lagrangian vector too short");
    cols.push_back(v);
  }
  gens.resize(sp.dim(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    gens.col(static_cast<Eigen::Index>(c)) = cols[c];
  return Lagrangian(sp, Subspace::span(gens));  // ctor checks lagrangian-ness
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("EMCG_SEED")) return std::stoull(env);
  return 1;
}

void emit(const json& out, const std::string& format) {
  if (format == "json") {
    std::cout << out.dump(2) << "\n";
    return;
  }
  // text: flat key: value lines; matrices printed as blocks
  for (auto it = out.begin(); it != out.end(); ++it) {
    if (it.key() == "schema") continue;
    if (it->is_string())
      std::cout << it.key() << ": " << it->get<std::string>() << "\n";
    else
      std::cout << it.key() << ": " << it->dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extended mapping class group calculator"};
  app.require_subcommand(1);

  int genus = 1;
  std::string lambda_text = "std";
  std::string format = "json";
  bool permissive = false;
  std::uint64_t seed = default_seed();

  auto add_common = [&](CLI::App* cmd, bool with_lambda = true) {
    cmd->add_option("--genus", genus, "surface genus");
    if (with_lambda)
      cmd->add_option("--lambda", lambda_text,
                      "lagrangian: 'std' or basis vectors 'a1,..;b1,..'");
    cmd->add_option("--format", format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--permissive", permissive,
                  "admit non-primitive curve classes");
  };

  // maslov
  auto* cmd_maslov = app.add_subcommand("maslov", "Maslov index of a lagrangian triple");
  std::vector<std::string> lag3;
  add_common(cmd_maslov, false);
  cmd_maslov->add_option("--l1", lag3.emplace_back(), "first lagrangian")->required();
  std::string l2t, l3t;
  cmd_maslov->add_option("--l2", l2t, "second lagrangian")->required();
  cmd_maslov->add_option("--l3", l3t, "third lagrangian")->required();

  // compose
  auto* cmd_compose = app.add_subcommand(
      "compose", "compose lifted twist words and explicit elements");
  std::vector<std::string> factors;
  add_common(cmd_compose);
  cmd_compose
      ->add_option("factors", factors,
                   "factors, each 'word:<twist word>' or 'elem:<word>:<n>'")
      ->required();

  // nlambda
  auto* cmd_nlambda = app.add_subcommand(
      "nlambda", "n_lambda, k, j_lambda and the cocycle table for a mapping class");
  std::string word_text, gword_text;
  add_common(cmd_nlambda);
  cmd_nlambda->add_option("--word", word_text, "twist word for f")->required();
  cmd_nlambda->add_option("--g", gword_text,
                          "optional second word g for the phi/tau entries");

  // linking
  auto* cmd_linking = app.add_subcommand("linking", "linking matrix of a twist word");
  bool omit_unlink = false;
  add_common(cmd_linking);
  cmd_linking->add_option("--word", word_text, "twist word")->required();
  cmd_linking->add_flag("--omit-unlink", omit_unlink,
                        "L_lambda(w): leave out the zero-framed unlink");

  // member
  auto* cmd_member = app.add_subcommand("member", "membership level of (f, n)");
  long weight = 0;
  add_common(cmd_member);
  cmd_member->add_option("--f", word_text, "twist word for f")->required();
  cmd_member->add_option("--n", weight, "integer weight")->required();

  // cyclo
  auto* cmd_cyclo = app.add_subcommand("cyclo", "cyclotomic scalar table");
  long prime = 5, color = 0;
  cmd_cyclo->add_option("-p,--prime", prime, "odd prime >= 5")->required();
  cmd_cyclo->add_option("-c,--color", color, "color in {0,...,p-2}");
  cmd_cyclo->add_option("--format", format, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "randomized property suites");
  std::string suite;
  int trials = 100;
  add_common(cmd_verify, false);
  cmd_verify->add_option("suite", suite, "suite name or 'all'")->required();
  cmd_verify->add_option("--trials", trials, "trial count");
  cmd_verify->add_option("--seed", seed, "rng seed");

  CLI11_PARSE(app, argc, argv);

  try {
    json out;
    out["schema"] = 1;

    if (*cmd_maslov) {
      SymplecticSpace sp(genus);
      long mu = maslov(parse_lagrangian(sp, lag3[0]), parse_lagrangian(sp, l2t),
                       parse_lagrangian(sp, l3t));
      out["maslov"] = mu;
      emit(out, format);
      return 0;
    }

    if (*cmd_compose) {
      SymplecticSpace sp(genus);
      Lagrangian lam = parse_lagrangian(sp, lambda_text);
      ExtendedElement acc = ExtendedElement::identity(lam);
      for (const std::string& f : factors) {
        if (f.rfind("word:", 0) == 0) {
          TwistWord w = parse_word(sp, f.substr(5), permissive);
          acc = acc.compose(compose_word(w, lam));
        } else if (f.rfind("elem:", 0) == 0) {
          std::size_t colon = f.rfind(':');
          TwistWord w = parse_word(sp, f.substr(5, colon - 5), permissive);
          long n = std::stol(f.substr(colon + 1));
          acc = acc.compose(ExtendedElement(lam, word_action(w), n));
        } else {
          throw std::invalid_argument("factor must start with word: or elem:");
        }
      }
      out["matrix"] = matrix_json(acc.mapping_class().matrix());
      out["weight"] = acc.weight();
      if (format == "text")
        out["matrix"] = matrix_text(acc.mapping_class().matrix());
      emit(out, format);
      return 0;
    }

    if (*cmd_nlambda) {
      SymplecticSpace sp(genus);
      Lagrangian lam = parse_lagrangian(sp, lambda_text);
      MappingClass f = word_action(parse_word(sp, word_text, permissive));
      out["n_lambda"] = n_lambda(lam, f);
      out["k"] = turaev_k(f);
      out["j_lambda"] = walker_j(lam, f);
      out["sig_star_f_lambda"] = star_f_lambda_signature(f, lam);
      out["dim_image"] = static_cast<long>(coinvariant_dim(f));
      out["det_sign_star_f"] = star_f_det_sign(f);
      if (!gword_text.empty()) {
        MappingClass g = word_action(parse_word(sp, gword_text, permissive));
        out["phi"] = turaev_phi(g, f);
        out["tau"] = meyer_tau(g, f);
        out["m_lambda"] = maslov_cocycle(lam, g, f);
      }
      emit(out, format);
      return 0;
    }

    if (*cmd_linking) {
      SymplecticSpace sp(genus);
      Lagrangian lam = parse_lagrangian(sp, lambda_text);
      TwistWord w = parse_word(sp, word_text, permissive);
      FramedLinkMatrix l = linking_matrix(w, lam, !omit_unlink);
      Signature sig = signature(to_rational(l.matrix));
      out["sigma"] = sig.sigma();
      out["b_plus"] = sig.positives;
      out["b_minus"] = sig.negatives;
      out["b_zero"] = sig.zeros;
      out["e"] = exponent_sum(w);
      if (!omit_unlink) {
        out["n0_lambda"] = sig.sigma();
        out["n_lambda_word"] = exponent_sum(w) + sig.sigma();
      }
      if (format == "text")
        out["matrix"] = matrix_text(l.matrix);
      else
        out["matrix"] = matrix_json(l.matrix);
      emit(out, format);
      return 0;
    }

    if (*cmd_member) {
      SymplecticSpace sp(genus);
      Lagrangian lam = parse_lagrangian(sp, lambda_text);
      MappingClass f = word_action(parse_word(sp, word_text, permissive));
      MembershipLevel lvl = membership(lam, ExtendedElement(lam, f, weight));
      out["level"] = lvl == MembershipLevel::plusplus ? "plusplus"
                     : lvl == MembershipLevel::plus   ? "plus"
                                                      : "full";
      out["n_lambda"] = n_lambda(lam, f);
      emit(out, format);
      return 0;
    }

    if (*cmd_cyclo) {
      ScalarRelations sr = scalar_relations(prime, color);
      out["p"] = prime;
      out["color"] = color;
      out["tt6"] = sr.tt6.str();
      out["tt3"] = sr.tt3.str();
      out["half_twist"] = sr.half.str();
      out["mu_twist"] = mu_twist(prime, color).str();
      out["kappa_squared"] = CycloElement::kappa_squared(prime).str();
      auto k2h = CycloElement::kappa_squared(prime).reduce_mod_h();
      out["kappa_squared_mod_h"] = k2h.base;
      emit(out, format);
      return 0;
    }

    if (*cmd_verify) {
      const auto& suites = verify_suites();
      std::vector<std::string> names;
      if (suite == "all")
        for (const auto& [n, fn] : suites) names.push_back(n);
      else
        names.push_back(suite);
      bool all_pass = true;
      json results = json::array();
      for (const std::string& name : names) {
        auto it = suites.find(name);
        if (it == suites.end()) {
          std::cerr << "unknown suite: " << name << "\n";
          return 2;
        }
        VerifyResult r = it->second(genus, trials, seed);
        all_pass = all_pass && r.passed;
        json entry;
        entry["suite"] = r.suite;
        entry["trials"] = r.trials;
        entry["passed"] = r.passed;
        if (!r.counterexample.empty()) entry["counterexample"] = r.counterexample;
        if (!r.notes.empty()) entry["notes"] = r.notes;
        results.push_back(entry);
        if (format == "text")
          std::cout << (r.passed ? "pass" : "FAIL") << "  " << r.suite
                    << (r.counterexample.empty() ? "" : "  " + r.counterexample)
                    << "\n";
      }
      if (format == "json") {
        out["results"] = results;
        out["passed"] = all_pass;
        std::cout << out.dump(2) << "\n";
      }
      return all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    json err;
    err["schema"] = 1;
    err["error"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
  return 0;
}
