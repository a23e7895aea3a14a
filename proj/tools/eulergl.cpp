// Command-line driver: compute equivariant reduced Euler characteristics of
// subspace posets, emit value tables, run the identity suites, and compare
// the closed formulas against the brute-force group enumeration.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eulergl/identities.hpp"
#include "eulergl/oracle.hpp"
#include "eulergl/serialize.hpp"

using namespace eulergl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

Int parse_q(const std::string& s) { return Int(s, 10); }

void require_prime_power_arg(const Int& q, bool allow_negative) {
  if (q >= 2) {
    if (!is_prime_power(q))
      throw domain_error("q = " + to_decimal(q) + " is not a prime power");
    return;
  }
  if (allow_negative && q <= -2) {
    if (!is_prime_power(-q))
      throw domain_error("|q| = " + to_decimal(-q) + " is not a prime power");
    return;
  }
  throw domain_error("q = " + to_decimal(q) + " is outside the accepted range");
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw domain_error("cannot open output file '" + path + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "eulergl: exact equivariant reduced Euler characteristics of the "
      "subspace posets of finite vector spaces.\n"
      "Values are exact (arbitrary precision); all JSON output renders "
      "integers as decimal strings.\n"
      "Set EULERGL_GUARD_OVERRIDE=1 to lift the enumeration guards of the "
      "oracle commands."};
  app.require_subcommand(1);

  // chi -------------------------------------------------------------------
  unsigned chi_r = 2, chi_n = 1;
  std::string chi_q;
  bool chi_formal = false;
  bool chi_json = false;
  auto* chi = app.add_subcommand(
      "chi", "One value chi_r(n, q), numeric at a prime power or as an "
             "integer polynomial in q (--formal)");
  chi->add_option("--r", chi_r, "tuple rank r >= 1")->required();
  chi->add_option("--n", chi_n, "dimension n >= 1")->required();
  auto* chi_qopt = chi->add_option("--q", chi_q, "prime power q");
  chi->add_flag("--formal", chi_formal, "return the polynomial in q");
  chi->add_flag("--json", chi_json, "wrap the numeric value in JSON");

  // pchi ------------------------------------------------------------------
  unsigned pchi_r = 2, pchi_n = 1, pchi_p = 2;
  std::string pchi_q;
  bool pchi_json = false;
  auto* pchi = app.add_subcommand(
      "pchi", "One p-primary value chi^p_r(n, q); q may be a negative 2-adic "
              "representative such as -3");
  pchi->add_option("--r", pchi_r, "tuple rank r >= 1")->required();
  pchi->add_option("--n", pchi_n, "dimension n >= 1")->required();
  pchi->add_option("--p", pchi_p, "the prime p")->required();
  pchi->add_option("--q", pchi_q, "prime power q (or -q for one)")->required();
  pchi->add_flag("--json", pchi_json, "wrap the value in JSON");

  // genfun ----------------------------------------------------------------
  unsigned gf_r = 2, gf_p = 0;
  std::string gf_q;
  bool gf_formal = false;
  size_t gf_order = 12;
  auto* gf = app.add_subcommand(
      "genfun", "The generating function F_r(x) (or F^p_r(x)) to a given "
                "order, as a JSON coefficient array");
  gf->add_option("--r", gf_r, "tuple rank r >= 1")->required();
  auto* gf_qopt = gf->add_option("--q", gf_q, "prime power q");
  gf->add_option("--p", gf_p, "prime for the p-primary family");
  gf->add_flag("--formal", gf_formal, "coefficients as polynomials in q");
  gf->add_option("--order", gf_order, "truncation order (default 12)");

  // table -----------------------------------------------------------------
  std::string t_q;
  unsigned t_rmax = 3, t_nmax = 6, t_p = 0;
  std::string t_format = "csv", t_out;
  auto* table = app.add_subcommand(
      "table", "Matrix of values for r = 1..rmax, n = 1..nmax at one q. "
               "Plain tables list -chi_r(n,q); with --p the table lists "
               "chi^p_r(n,q) itself");
  table->add_option("--q", t_q, "prime power q")->required();
  table->add_option("--rmax", t_rmax, "largest r")->required();
  table->add_option("--nmax", t_nmax, "largest n")->required();
  table->add_option("--p", t_p, "prime for the p-primary family");
  table->add_option("--format", t_format, "csv|json|md (default csv)");
  table->add_option("--out", t_out, "output path (default stdout)");

  // verify ----------------------------------------------------------------
  std::string v_suite = "all";
  size_t v_order = 0;
  unsigned long v_seed = 0;
  unsigned v_r = 0, v_p = 0, v_e = 0, v_s = 0;
  std::string v_q;
  bool v_list = false;
  auto* verify = app.add_subcommand(
      "verify", "Run the named identity suite (or all of them) and print one "
                "line per check; exits 1 on any failure");
  verify->add_option("--suite", v_suite, "identity name or 'all' (see --list)");
  auto* v_order_opt =
      verify->add_option("--order", v_order, "override the truncation order");
  auto* v_seed_opt =
      verify->add_option("--seed", v_seed, "seed for randomized checks");
  auto* v_r_opt = verify->add_option("--r", v_r, "narrow to one r");
  auto* v_q_opt = verify->add_option("--q", v_q, "narrow to one q");
  auto* v_p_opt = verify->add_option("--p", v_p, "narrow to one p");
  auto* v_e_opt = verify->add_option("--e", v_e, "narrow to one e");
  auto* v_s_opt = verify->add_option("--s", v_s, "narrow to one s");
  verify->add_flag("--list", v_list, "list identity names and exit");

  // oracle ----------------------------------------------------------------
  unsigned o_r = 2, o_n = 2, o_p = 0;
  std::string o_q;
  auto* oracle = app.add_subcommand(
      "oracle", "Compare the brute-force normalized sum over commuting "
                "tuples with the closed formula; emits one JSON record");
  oracle->add_option("--r", o_r, "tuple rank r >= 1")->required();
  oracle->add_option("--n", o_n, "dimension n >= 1")->required();
  oracle->add_option("--q", o_q, "prime power q (small; guarded)")->required();
  oracle->add_option("--p", o_p, "prime for the p-primary variant");

  // count -----------------------------------------------------------------
  unsigned c_multisets = 0, c_d = 0, c_p = 0;
  std::string c_q;
  bool c_bar = false, c_brute = false;
  auto* count = app.add_subcommand(
      "count", "Counting utilities: |M_n| for n = 1..N, or irreducible "
               "polynomial counts A(d)(q), Abar(d)(q), A^p(d)(q)");
  count->add_option("--multisets", c_multisets,
                    "print |M_1|..|M_N| for this N");
  count->add_option("--d", c_d, "degree d for irreducible counts");
  count->add_option("--q", c_q, "prime power q");
  count->add_option("--p", c_p, "count only p-power-order polynomials");
  count->add_flag("--bar", c_bar, "exclude the polynomial t (Abar)");
  count->add_flag("--brute", c_brute,
                  "cross-check against field enumeration (guarded)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*chi) {
      if (chi_formal && !chi_qopt->empty())
        throw domain_error("chi: --q and --formal are mutually exclusive");
      if (!chi_formal && chi_qopt->empty())
        throw domain_error("chi: exactly one of --q or --formal is required");
      if (chi_formal) {
        QPolynomial p = chi_poly(chi_r, chi_n);
        Json out;
        out["r"] = chi_r;
        out["n"] = chi_n;
        out["coefficients"] = to_json(p);
        out["pretty"] = p.to_string();
        std::cout << out.dump() << "\n";
      } else {
        Int q = parse_q(chi_q);
        require_prime_power_arg(q, false);
        Int v = chi_recursive_at(chi_r, chi_n, q);
        if (chi_json) {
          Json out;
          out["r"] = chi_r;
          out["n"] = chi_n;
          out["q"] = to_decimal(q);
          out["value"] = to_decimal(v);
          std::cout << out.dump() << "\n";
        } else {
          std::cout << to_decimal(v) << "\n";
        }
      }
      return kExitOk;
    }

    if (*pchi) {
      Int q = parse_q(pchi_q);
      require_prime_power_arg(q, true);
      Int v = p_chi_at(pchi_r, pchi_p, q, pchi_n);
      if (pchi_json) {
        Json out;
        out["r"] = pchi_r;
        out["n"] = pchi_n;
        out["p"] = pchi_p;
        out["q"] = to_decimal(q);
        out["value"] = to_decimal(v);
        std::cout << out.dump() << "\n";
      } else {
        std::cout << to_decimal(v) << "\n";
      }
      return kExitOk;
    }

    if (*gf) {
      Json out;
      out["r"] = gf_r;
      out["order"] = gf_order;
      if (gf_formal) {
        if (gf_p != 0)
          throw domain_error("genfun: the p-primary family is not polynomial "
                             "in q; --formal excludes --p");
        if (!gf_qopt->empty())
          throw domain_error("genfun: --q and --formal are mutually "
                             "exclusive");
        out["coefficients"] = to_json(genfun_poly(gf_r, gf_order));
      } else {
        if (gf_qopt->empty())
          throw domain_error("genfun: --q is required unless --formal");
        Int q = parse_q(gf_q);
        require_prime_power_arg(q, gf_p != 0);
        if (gf_p != 0) {
          out["p"] = gf_p;
          out["q"] = to_decimal(q);
          out["coefficients"] = to_json(p_genfun_at(gf_r, gf_p, q, gf_order));
        } else {
          out["q"] = to_decimal(q);
          out["coefficients"] = to_json(genfun_at(gf_r, q, gf_order));
        }
      }
      std::cout << out.dump() << "\n";
      return kExitOk;
    }

    if (*table) {
      Int q = parse_q(t_q);
      require_prime_power_arg(q, t_p != 0);
      std::vector<std::vector<Int>> rows;
      std::vector<std::string> row_labels, col_labels;
      for (unsigned n = 1; n <= t_nmax; ++n)
        col_labels.push_back("n=" + std::to_string(n));
      for (unsigned r = 1; r <= t_rmax; ++r) {
        row_labels.push_back("r=" + std::to_string(r));
        IntSeries s =
            t_p ? p_genfun_at(r, t_p, q, t_nmax) : genfun_at(r, q, t_nmax);
        std::vector<Int> row;
        for (unsigned n = 1; n <= t_nmax; ++n)
          row.push_back(t_p ? s[n] : -s[n]);  // plain tables list -chi
        rows.push_back(std::move(row));
      }
      write_out(format_table(rows, table_format_from_string(t_format),
                             row_labels, col_labels),
                t_out);
      return kExitOk;
    }

    if (*verify) {
      if (v_list) {
        for (const auto& name : identity_names()) std::cout << name << "\n";
        return kExitOk;
      }
      IdentityParams params;
      if (!v_order_opt->empty()) params.order = v_order;
      if (!v_seed_opt->empty()) params.seed = v_seed;
      bool narrowing = !v_r_opt->empty() || !v_q_opt->empty() ||
                       !v_p_opt->empty() || !v_e_opt->empty() ||
                       !v_s_opt->empty();
      if (v_suite == "all" && narrowing)
        throw domain_error("verify: parameter narrowing requires a named "
                           "suite (the grids differ per identity)");
      if (!v_r_opt->empty()) params.r = v_r;
      if (!v_q_opt->empty()) params.q = parse_q(v_q);
      if (!v_p_opt->empty()) params.p = v_p;
      if (!v_e_opt->empty()) params.e = v_e;
      if (!v_s_opt->empty()) params.s = v_s;
      auto reports = (v_suite == "all") ? verify_all(params)
                                        : verify_identity(v_suite, params);
      bool ok = true;
      for (const auto& rep : reports) {
        std::cout << rep.to_string() << "\n";
        ok = ok && rep.pass;
      }
      std::cout << (ok ? "all checks passed" : "FAILURES present") << " ("
                << reports.size() << " checks)\n";
      return ok ? kExitOk : kExitMismatch;
    }

    if (*oracle) {
      Int q = parse_q(o_q);
      require_prime_power_arg(q, false);
      auto pe = is_prime_power(q);
      FqField F((unsigned)pe->first.get_ui(), (unsigned)pe->second);
      Int oracle_value =
          o_p ? oracle_chi_p(o_r, o_p, o_n, F) : oracle_chi(o_r, o_n, F);
      Int formula_value =
          o_p ? p_chi_at(o_r, o_p, q, o_n) : chi_recursive_at(o_r, o_n, q);
      Json rec;
      rec["r"] = o_r;
      rec["n"] = o_n;
      rec["q"] = to_decimal(q);
      if (o_p) rec["p"] = o_p;
      rec["oracle_value"] = to_decimal(oracle_value);
      rec["formula_value"] = to_decimal(formula_value);
      rec["match"] = (oracle_value == formula_value);
      std::cout << rec.dump() << "\n";
      return oracle_value == formula_value ? kExitOk : kExitMismatch;
    }

    if (*count) {
      if (c_multisets) {
        Json arr = Json::array();
        for (unsigned n = 1; n <= c_multisets; ++n)
          arr.push_back(to_decimal(multiset_count(n)));
        std::cout << arr.dump() << "\n";
        return kExitOk;
      }
      if (c_d == 0 || c_q.empty())
        throw domain_error("count: need --multisets N, or --d and --q");
      Int q = parse_q(c_q);
      require_prime_power_arg(q, false);
      Int formula = c_p ? count_ppower_irreducibles(c_d, c_p, q)
                        : (c_bar ? count_irreducibles_bar(c_d, q)
                                 : count_irreducibles(c_d, q));
      if (!c_brute) {
        std::cout << to_decimal(formula) << "\n";
        return kExitOk;
      }
      if (c_bar)
        throw domain_error("count: --brute enumerates A and A^p only");
      auto pe = is_prime_power(q);
      FqField F((unsigned)pe->first.get_ui(), (unsigned)pe->second);
      Int brute = count_irreducible_brute(
          c_d, F, c_p ? std::optional<unsigned>(c_p) : std::nullopt);
      Json rec;
      rec["d"] = c_d;
      rec["q"] = to_decimal(q);
      if (c_p) rec["p"] = c_p;
      rec["formula_value"] = to_decimal(formula);
      rec["oracle_value"] = to_decimal(brute);
      rec["match"] = (formula == brute);
      std::cout << rec.dump() << "\n";
      return formula == brute ? kExitOk : kExitMismatch;
    }
  } catch (const invariant_error& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
