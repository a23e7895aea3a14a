// Acceptance suite: one criterion per run block, one pass/fail line each.
//
//  1. value table at q = 2, 3, 4 (r <= 10, n <= 6) against the CSV fixtures
//  2. quotient polynomial tables for r = 4, 5, 6, 7
//  3. p-primary value tables for p = 2, 3, 5 (r = 2, 3, n <= 6)
//  4. brute-force oracle = formula, plain family
//  5. brute-force oracle = formula, p-primary family
//  6. the full identity catalog on its default grids
//  7. combinatorial counts (multiset family, irreducible polynomials)
//
// Exits nonzero if any criterion fails.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eulergl/identities.hpp"
#include "eulergl/oracle.hpp"

using namespace eulergl;

namespace {

struct Criterion {
  int number;
  std::string label;
  bool pass = true;
  std::vector<std::string> failures = {};

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

std::string data_path(const std::string& name) {
  return std::string(EULERGL_TEST_DATA_DIR) + "/" + name;
}

std::vector<std::vector<std::string>> read_csv(const std::string& name) {
  std::ifstream f(data_path(name));
  if (!f) throw std::runtime_error("missing fixture " + name);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::vector<std::string> read_lines(const std::string& name) {
  std::ifstream f(data_path(name));
  if (!f) throw std::runtime_error("missing fixture " + name);
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(line);
  }
  return rows;
}

void criterion_value_tables(Criterion& c) {
  for (unsigned q : {2u, 3u, 4u}) {
    auto rows = read_csv("minus_chi_q" + std::to_string(q) + ".csv");
    c.expect(rows.size() == 10, "q=" + std::to_string(q) + ": want 10 rows");
    for (const auto& row : rows) {
      unsigned r = (unsigned)std::stoul(row[0]);
      IntSeries s = genfun_at(r, q, 6);
      for (unsigned n = 1; n <= 6; ++n) {
        Int expect = int_from_decimal(row[n]);
        if (-s[n] != expect)
          c.expect(false, "(r=" + std::to_string(r) + ", n=" +
                              std::to_string(n) + ", q=" + std::to_string(q) +
                              ") expected " + to_decimal(expect) + ", got " +
                              to_decimal(-s[n]));
      }
    }
  }
}

void criterion_quotient_polys(Criterion& c) {
  struct Family { unsigned r; unsigned nmax; unsigned qm1_pow; bool qpow; };
  for (auto fam : {Family{4, 10, 3, false}, Family{5, 10, 4, true},
                   Family{6, 6, 5, false}, Family{7, 5, 6, true}}) {
    auto lines = read_lines("quot_r" + std::to_string(fam.r) + ".csv");
    c.expect(lines.size() == fam.nmax,
             "r=" + std::to_string(fam.r) + ": want " +
                 std::to_string(fam.nmax) + " lines");
    PolySeries F = genfun_poly(fam.r, fam.nmax);
    for (unsigned n = 1; n <= fam.nmax && n <= lines.size(); ++n) {
      QPolynomial quot = -F[n];
      bool exact = true;
      for (unsigned k = 0; k < fam.qm1_pow && exact; ++k) {
        auto d = quot.div_linear_exact(Int(1));
        if (!d) exact = false; else quot = *d;
      }
      if (exact && fam.qpow) {
        auto d = quot.div_qpow_exact(n - 1);
        if (!d) exact = false; else quot = *d;
      }
      if (!exact) {
        c.expect(false, "(r=" + std::to_string(fam.r) + ", n=" +
                            std::to_string(n) + ") quotient not exact");
        continue;
      }
      QPolynomial expect = parse_polynomial(lines[n - 1]);
      if (!(quot == expect))
        c.expect(false, "(r=" + std::to_string(fam.r) + ", n=" +
                            std::to_string(n) + ") expected " +
                            expect.to_string() + ", got " + quot.to_string());
    }
  }
}

void criterion_p_primary_tables(Criterion& c) {
  for (unsigned p : {2u, 3u, 5u}) {
    auto rows = read_csv("pchi_p" + std::to_string(p) + ".csv");
    for (const auto& row : rows) {
      unsigned r = (unsigned)std::stoul(row[0]);
      Int q = int_from_decimal(row[1]);
      IntSeries s = p_genfun_at(r, p, q, 6);
      for (unsigned n = 1; n <= 6; ++n) {
        Int expect = int_from_decimal(row[n + 1]);
        if (s[n] != expect)
          c.expect(false, "(r=" + std::to_string(r) + ", n=" +
                              std::to_string(n) + ", q=" + to_decimal(q) +
                              ", p=" + std::to_string(p) + ") expected " +
                              to_decimal(expect) + ", got " + to_decimal(s[n]));
      }
    }
  }
}

void criterion_oracle_plain(Criterion& c) {
  const std::vector<std::pair<unsigned, unsigned>> grid = {
      {1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3},
      {1, 4}, {2, 4}, {1, 5}, {2, 5}};
  for (auto [n, q] : grid) {
    auto pe = is_prime_power(q);
    FqField F((unsigned)pe->first.get_ui(), (unsigned)pe->second);
    GlContext ctx(n, F);
    for (unsigned r : {1u, 2u, 3u}) {
      Int oracle = ctx.equivariant_chi(ctx.full_mask(), ctx.all_elements(), r);
      Int formula = chi_recursive_at(r, n, q);
      if (oracle != formula)
        c.expect(false, "(r=" + std::to_string(r) + ", n=" + std::to_string(n) +
                            ", q=" + std::to_string(q) + ") oracle " +
                            to_decimal(oracle) + " != formula " +
                            to_decimal(formula));
    }
  }
}

void criterion_oracle_p_primary(Criterion& c) {
  for (auto [n, q] : std::vector<std::pair<unsigned, unsigned>>{
           {1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5}}) {
    auto pe = is_prime_power(q);
    FqField F((unsigned)pe->first.get_ui(), (unsigned)pe->second);
    GlContext ctx(n, F);
    for (unsigned p : {2u, 3u})
      for (unsigned r : {1u, 2u, 3u}) {
        Int oracle =
            ctx.equivariant_chi(ctx.full_mask(), ctx.all_elements(), r, p);
        Int formula = p_chi_at(r, p, q, n);
        if (oracle != formula)
          c.expect(false, "(r=" + std::to_string(r) + ", p=" +
                              std::to_string(p) + ", n=" + std::to_string(n) +
                              ", q=" + std::to_string(q) + ") oracle " +
                              to_decimal(oracle) + " != formula " +
                              to_decimal(formula));
      }
  }
}

void criterion_identities(Criterion& c) {
  for (const auto& rep : verify_all())
    if (!rep.pass) c.expect(false, rep.to_string());
}

void criterion_counts(Criterion& c) {
  const std::vector<long> expect = {1, 3, 5, 11, 17, 34, 52, 94, 145, 244};
  for (unsigned n = 1; n <= 10; ++n)
    if (multiset_count(n) != expect[n - 1])
      c.expect(false, "|M_" + std::to_string(n) + "| != " +
                          std::to_string(expect[n - 1]));
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    auto pe = is_prime_power(q);
    FqField F((unsigned)pe->first.get_ui(), (unsigned)pe->second);
    for (unsigned d = 1; d <= 4; ++d) {
      if (count_irreducible_brute(d, F) != count_irreducibles(d, q))
        c.expect(false, "A(" + std::to_string(d) + ")(" + std::to_string(q) +
                            ") brute mismatch");
      for (unsigned p : {2u, 3u, 5u})
        if (count_irreducible_brute(d, F, p) !=
            count_ppower_irreducibles(d, p, q))
          c.expect(false, "A^" + std::to_string(p) + "(" + std::to_string(d) +
                              ")(" + std::to_string(q) + ") brute mismatch");
    }
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "value tables q=2,3,4 (r<=10, n<=6)"},
      {2, "quotient polynomial tables r=4,5,6,7"},
      {3, "p-primary tables p=2,3,5 (r=2,3, n<=6)"},
      {4, "oracle = formula on the plain grid"},
      {5, "oracle = formula on the p-primary grid"},
      {6, "identity catalog on default grids"},
      {7, "combinatorial counts"},
  };
  void (*runners[])(Criterion&) = {
      criterion_value_tables,  criterion_quotient_polys,
      criterion_p_primary_tables, criterion_oracle_plain,
      criterion_oracle_p_primary, criterion_identities,
      criterion_counts,
  };

  bool all_pass = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto& c = criteria[i];
    auto t0 = std::chrono::steady_clock::now();
    try {
      runners[i](c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    std::printf("criterion %d (%s): %s (%.2fs)\n", c.number, c.label.c_str(),
                c.pass ? "PASS" : "FAIL", secs);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    all_pass = all_pass && c.pass;
  }
  std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}
