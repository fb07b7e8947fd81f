#include "dyngal/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <functional>
#include <sstream>

#include "dyngal/asv.hpp"
#include "dyngal/carlitz.hpp"
#include "dyngal/criterion.hpp"
#include "dyngal/expr.hpp"
#include "dyngal/frobscan.hpp"
#include "dyngal/phigroup.hpp"

namespace dyngal::cli {

namespace P = dyngal::poly;
using json = nlohmann::ordered_json;

namespace {

json jcoords(const gf::Field& k, gf::Fq a) { return json(k.coords(a)); }

json jpoly(const gf::Field& k, const ff::Poly& a) {
  json out = json::array();
  for (auto c : a.c) out.push_back(jcoords(k, c));
  return out;
}

json jratfunc(const gf::Field& k, const ff::RatFunc& u) {
  return json{{"num", jpoly(k, u.num)}, {"den", jpoly(k, u.den)},
              {"text", ff::to_string(k, u)}};
}

json jasform(const gf::Field& k, const asv::ASForm& form) {
  json poly_part = json::array();
  for (auto& [i, c] : form.poly_part) poly_part.push_back(json::array({i, jcoords(k, c)}));
  json pole_parts = json::array();
  for (auto& pp : form.pole_parts) {
    json terms = json::array();
    for (auto& [i, g] : pp.terms) terms.push_back(json::array({i, jpoly(k, g)}));
    pole_parts.push_back(json::array({jpoly(k, pp.place), terms}));
  }
  return json{{"constant_trace", form.constant_trace},
              {"poly_part", poly_part},
              {"pole_parts", pole_parts},
              {"text", asv::to_string(k, form)}};
}

json jphielem(const gf::Field& k, const phig::PhiGroup& G, const phig::PhiGroup::Elem& e) {
  json g = json::array(), f = json::array();
  for (int i = 0; i < G.level(); ++i) {
    g.push_back(jcoords(k, G.rn_digit(e.g, i)));
    f.push_back(jcoords(k, G.rn_digit(e.f, i)));
  }
  return json{{"G", g}, {"F", f}};
}

json jsubgroup(const gf::Field& k, const phig::PhiGroup& G, const phig::Subgroup& M,
               std::size_t ambient_order) {
  json gens = json::array();
  for (const auto& e : M.gens) gens.push_back(jphielem(k, G, e));
  return json{{"order", M.order()},
              {"index", ambient_order / M.order()},
              {"generators", gens}};
}

struct Options {
  int p = 0;
  int r = 1;
  std::vector<int> modulus;
  bool as_json = false;
  bool assert_surjective = false;
};

gf::Field make_field(const Options& o) { return gf::Field::make(o.p, o.r, o.modulus); }

void emit(const json& j, bool as_json, std::ostream& out) {
  if (as_json) {
    out << j.dump(2) << "\n";
    return;
  }
  // Text mode: flat key/value rendering.
  std::function<void(const json&, const std::string&)> walk = [&](const json& v,
                                                                  const std::string& key) {
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it)
        walk(it.value(), key.empty() ? it.key() : key + "." + it.key());
    } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
      std::size_t i = 0;
      for (auto& item : v) walk(item, key + "[" + std::to_string(i++) + "]");
    } else {
      out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  };
  walk(j, "");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for dynamical Galois groups of x^q + t0 x + s0 over F_q(t)"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  std::string modulus_str;
  app.add_option("--p", opt.p, "characteristic (prime)")->required();
  app.add_option("--r", opt.r, "extension degree over F_p (q = p^r)");
  app.add_option("--modulus", modulus_str,
                 "modulus coefficients of F_q over F_p, low-to-high, e.g. 1,1,1");
  app.add_flag("--json", opt.as_json, "emit a JSON report");
  app.add_flag("--assert-surjective", opt.assert_surjective,
               "exit 1 unless the verdict is surjective/certified");

  std::string u_str, ell_str, m_str, t0_str, s0_str = "0";
  std::vector<std::string> us_str;
  int n = 1, trunc = criterion::kDefaultTruncation, max_deg = 0, ell = 0;
  bool want_maximal = false, want_commutators = false, full_phi_target = false;
  bool serial = false;

  auto* cmd_asred = app.add_subcommand("asred", "canonical Artin-Schreier form of u");
  cmd_asred->add_option("u", u_str)->required();

  auto* cmd_asindep =
      app.add_subcommand("asindep", "F_p-independence of classes in V(K)");
  cmd_asindep->add_option("u", us_str)->required()->expected(-1);

  auto* cmd_kummer = app.add_subcommand("kummer", "is u an ell-th power in F_q(t)?");
  cmd_kummer->add_option("u", u_str)->required();
  cmd_kummer->add_option("--ell", ell, "exponent")->required();

  auto* cmd_carlitz = app.add_subcommand("carlitz", "Carlitz module image of M");
  cmd_carlitz->add_option("M", m_str)->required();

  auto* cmd_iterate = app.add_subcommand("iterate", "n-th iterate of x^q + t0 x + s0");
  cmd_iterate->add_option("--t0", t0_str)->required();
  cmd_iterate->add_option("--s0", s0_str);
  cmd_iterate->add_option("-n,--n", n)->required();

  auto* cmd_disc = app.add_subcommand("disc", "discriminant of the n-th iterate");
  cmd_disc->add_option("--t0", t0_str)->required();
  cmd_disc->add_option("--s0", s0_str);
  cmd_disc->add_option("-n,--n", n)->required();

  auto* cmd_group = app.add_subcommand("group", "level-n groups and their subgroups");
  cmd_group->add_option("-n,--n", n)->required();
  cmd_group->add_flag("--maximal", want_maximal, "list maximal subgroups");
  cmd_group->add_flag("--commutators", want_commutators, "commutator subgroup");
  cmd_group->add_flag("--phi", full_phi_target,
                      "target the full Phi_n instead of Phi_{n,1}");

  auto* cmd_criterion = app.add_subcommand("criterion", "surjectivity criterion");
  cmd_criterion->add_option("--t0", t0_str)->required();
  cmd_criterion->add_option("--s0", s0_str);
  cmd_criterion->add_option("--trunc", trunc, "truncation for the independence family");

  auto* cmd_frobenius =
      app.add_subcommand("frobenius", "certify G_n by Frobenius cycle types");
  cmd_frobenius->add_option("--t0", t0_str)->required();
  cmd_frobenius->add_option("--s0", s0_str);
  cmd_frobenius->add_option("-n,--n", n)->required();
  cmd_frobenius->add_option("--max-deg", max_deg, "place degree budget (default per q)");
  cmd_frobenius->add_flag("--serial", serial, "disable the parallel place scan");

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("dyngal");
    for (auto& a : argv_copy) argv.push_back(a.c_str());
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "argument error: " << e.what() << "\n";
    return 2;
  }

  int exit_code = 0;
  try {
    if (!modulus_str.empty()) {
      std::stringstream ss(modulus_str);
      std::string item;
      while (std::getline(ss, item, ',')) opt.modulus.push_back(std::stoi(item));
    }
    gf::Field k = make_field(opt);
    json report{{"schema_version", 1}, {"field", k.describe()}};

    if (*cmd_asred) {
      auto u = expr::eval_string(k, u_str);
      report["command"] = "asred";
      report["input"] = ff::to_string(k, u);
      report["form"] = jasform(k, asv::as_reduce(k, u));
      report["in_U"] = asv::is_in_U(k, u);
    } else if (*cmd_asindep) {
      std::vector<ff::RatFunc> us;
      for (auto& s : us_str) us.push_back(expr::eval_string(k, s));
      auto indep = asv::as_independent(k, us);
      report["command"] = "asindep";
      json inputs = json::array();
      for (auto& u : us) inputs.push_back(ff::to_string(k, u));
      report["inputs"] = inputs;
      report["independent"] = indep.independent;
      if (!indep.independent) report["dependency"] = indep.dependency;
    } else if (*cmd_kummer) {
      auto u = expr::eval_string(k, u_str);
      if (u.is_zero()) throw std::domain_error("kummer: u must be nonzero");
      auto test = criterion::kummer_power_test(k, u, ell);
      report["command"] = "kummer";
      report["input"] = ff::to_string(k, u);
      report["ell"] = ell;
      report["is_power"] = test.is_power;
      if (test.is_power)
        report["root"] = ff::to_string(k, *test.root);
      else
        report["obstruction"] = test.obstruction;
    } else if (*cmd_carlitz) {
      auto m = expr::eval_string(k, m_str);
      if (P::deg(m.den) != 0)
        throw std::domain_error("carlitz: operand must be a polynomial in t");
      auto tw = carlitz::carlitz_phi(k, m.num);
      report["command"] = "carlitz";
      report["M"] = ff::to_string(k, m);
      json coeffs = json::array();
      for (auto& c : tw.coeffs) coeffs.push_back(jratfunc(k, c));
      report["tau_coeffs"] = coeffs;
      report["text"] = carlitz::to_string(k, tw);
    } else if (*cmd_iterate) {
      auto t0 = expr::eval_string(k, t0_str);
      auto s0 = expr::eval_string(k, s0_str);
      auto fn = carlitz::iterate_f(k, t0, s0, n);
      report["command"] = "iterate";
      report["n"] = n;
      auto dense = carlitz::to_dense(k, fn);
      json monomials = json::array();
      for (std::size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero())
          monomials.push_back(json::array({i, ff::to_string(k, dense[i])}));
      report["monomials"] = monomials;
      report["text"] = carlitz::to_string(k, fn);
      report["monomial_support_ok"] = carlitz::monomial_support_check(k, t0, s0, n);
    } else if (*cmd_disc) {
      auto t0 = expr::eval_string(k, t0_str);
      auto s0 = expr::eval_string(k, s0_str);
      auto d = carlitz::disc_check(k, t0, s0, n);
      report["command"] = "disc";
      report["n"] = n;
      report["disc"] = ff::to_string(k, d.disc);
      report["expected"] = "t0^(n q^n) = " + ff::to_string(k, d.expected);
      report["matches"] = d.matches;
      report["sign"] = d.sign;
    } else if (*cmd_group) {
      phig::PhiGroup G(k, n);
      auto phi = phig::full_phi(G);
      auto phi1 = phig::full_phi1(G);
      report["command"] = "group";
      report["q"] = k.q();
      report["n"] = n;
      report["phi_order"] = phi.order();
      report["phi1_order"] = phi1.order();
      const phig::Subgroup& target = full_phi_target ? phi : phi1;
      report["target"] = full_phi_target ? "Phi_n" : "Phi_n_1";
      if (!full_phi_target) report["character_dim"] = phig::character_dim(G, phi1);
      if (want_commutators) {
        auto comm = phig::commutator_subgroup(G, target);
        json cj = jsubgroup(k, G, comm, target.order());
        // Is it exactly the translations with zero constant term?
        bool augmentation = true;
        for (const auto& e : comm.elems)
          if (e.f != G.rn_one() || G.rn_digit(e.g, 0) != 0) augmentation = false;
        cj["equals_augmentation_translations"] =
            augmentation && comm.order() * std::size_t(k.q()) == G.rn_size();
        report["commutator_subgroup"] = cj;
      }
      if (want_maximal) {
        auto ms = phig::maximal_subgroups(G, target);
        json mj = json::array();
        for (auto& m : ms) {
          json one = jsubgroup(k, G, m, target.order());
          one["normal"] = phig::is_normal_in(G, m, target);
          mj.push_back(one);
        }
        report["maximal_subgroups"] = mj;
      }
    } else if (*cmd_criterion) {
      auto t0 = expr::eval_string(k, t0_str);
      auto s0 = expr::eval_string(k, s0_str);
      if (t0.is_zero()) throw std::domain_error("criterion: t0 must be nonzero");
      auto rep = criterion::run_criterion(k, t0, s0, trunc);
      report["command"] = "criterion";
      report["t0"] = ff::to_string(k, t0);
      report["s0"] = ff::to_string(k, s0);
      report["verdict"] = criterion::to_string(rep.verdict);
      report["target"] = rep.target;
      json conds = json::array();
      for (auto& c : rep.conditions)
        conds.push_back(json{{"name", c.name},
                             {"holds", c.holds},
                             {"certificate", c.certificate},
                             {"notes", c.notes}});
      report["conditions"] = conds;
      report["truncation"] = rep.truncation;
      report["warnings"] = rep.warnings;
      if (rep.theta) report["theta"] = ff::to_string(k, *rep.theta);
      if (rep.infinite_certificate)
        report["infinite_certificate"] =
            json{{"place", ff::to_string(k, rep.infinite_certificate->place)},
                 {"order", rep.infinite_certificate->m}};
      if (rep.dependency) report["dependency"] = *rep.dependency;
      if (opt.assert_surjective && rep.verdict != criterion::Verdict::SurjectivePhi &&
          rep.verdict != criterion::Verdict::SurjectivePhi1)
        exit_code = 1;
    } else if (*cmd_frobenius) {
      auto t0 = expr::eval_string(k, t0_str);
      auto s0 = expr::eval_string(k, s0_str);
      if (max_deg == 0) max_deg = frobscan::default_max_deg(k.q());
      auto res = frobscan::certify(k, t0, s0, n, max_deg, !serial);
      report["command"] = "frobenius";
      report["target"] = res.target;
      report["n"] = res.level;
      report["target_order"] = res.target_order;
      report["max_deg"] = max_deg;
      json samples = json::array();
      for (auto& s : res.samples)
        samples.push_back(json{{"place", P::to_string(k, s.place, "t")},
                               {"cycle_type", s.cycle_type}});
      report["samples"] = samples;
      report["observed_types"] = res.observed;
      report["status"] =
          res.status == frobscan::Status::Certified ? "Certified" : "Inconclusive";
      phig::PhiGroup G(k, n);
      json survivors = json::array();
      for (auto& m : res.survivors) survivors.push_back(jsubgroup(k, G, m, res.target_order));
      report["survivors"] = survivors;
      if (opt.assert_surjective && res.status != frobscan::Status::Certified) exit_code = 1;
    }

    emit(report, opt.as_json, out);
    return exit_code;
  } catch (const expr::ParseError& e) {
    err << "syntax error at offset " << e.offset << ": " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace dyngal::cli
