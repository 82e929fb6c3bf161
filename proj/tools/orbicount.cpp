// orbicount: exact commuting-tuple counts and orbifold Euler characteristics
// for symmetric groups and wreath products C_i Wr S_n.
//
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
// error, 3 guard exceeded. Stdout carries data, stderr diagnostics. All big
// integers are printed as exact decimal strings.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <orbicount/orbicount.hpp>

namespace {

using orbicount::CheckReport;
using orbicount::Int;
using orbicount::Rat;

// One output table: rows (n, cells) with fixed column names. Text gets a
// leading "# title" line, CSV a header row, JSON {params, rows}.
struct Table {
  std::string title;
  std::map<std::string, std::string> params;
  std::vector<std::string> columns;                // cell names after n
  std::vector<std::vector<std::string>> rows;      // rows[r] aligns with columns
};

void print_table(const Table& t, const std::string& format) {
  if (format == "csv") {
    std::string header = "n";
    for (const auto& c : t.columns) header += "," + c;
    std::cout << header << "\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      std::cout << r;
      for (const auto& cell : t.rows[r]) std::cout << "," << cell;
      std::cout << "\n";
    }
    return;
  }
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      nlohmann::json row = {{"n", r}};
      for (std::size_t c = 0; c < t.columns.size(); ++c) row[t.columns[c]] = t.rows[r][c];
      rows.push_back(row);
    }
    nlohmann::json out = {{"params", t.params}, {"rows", rows}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "# " << t.title << "\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::cout << r;
    for (const auto& cell : t.rows[r]) std::cout << " " << cell;
    std::cout << "\n";
  }
}

int run_count(int m, int max_n, int wreath_i, const std::string& format) {
  Table t;
  t.columns = {"count"};
  if (wreath_i >= 1) {
    const auto table = orbicount::wreath_com_count_table(wreath_i, m, max_n);
    t.title = "|Com(C_" + std::to_string(wreath_i) + " Wr S_n, " + std::to_string(m) + ")| for n = 0.." +
              std::to_string(max_n);
    t.params = {{"family", "wreath"},
                {"i", std::to_string(wreath_i)},
                {"m", std::to_string(m)},
                {"max_n", std::to_string(max_n)}};
    for (const auto& c : table.counts) t.rows.push_back({c.str()});
  } else {
    const auto table = orbicount::com_count_table(m, max_n);
    t.title = "|Com(S_n, " + std::to_string(m) + ")| for n = 0.." + std::to_string(max_n);
    t.params = {{"family", "symmetric"}, {"m", std::to_string(m)}, {"max_n", std::to_string(max_n)}};
    for (const auto& c : table.counts) t.rows.push_back({c.str()});
  }
  print_table(t, format);
  return 0;
}

int run_chi(int m, long long chi, int max_n, const std::string& format) {
  const auto s = orbicount::sym_series<Int>(m, chi, max_n);
  Table t;
  t.title = "chi_" + std::to_string(m) + "(M^n, S_n) with chi(M) = " + std::to_string(chi) + " for n = 0.." +
            std::to_string(max_n);
  t.params = {{"m", std::to_string(m)}, {"chi", std::to_string(chi)}, {"max_n", std::to_string(max_n)}};
  t.columns = {"count"};
  for (int n = 0; n <= max_n; ++n) t.rows.push_back({s.coeff(n).str()});
  print_table(t, format);
  return 0;
}

int run_series(int m, long long chi, int order, bool egf, const std::string& format) {
  Table t;
  t.params = {{"m", std::to_string(m)},
              {"chi", std::to_string(chi)},
              {"order", std::to_string(order)},
              {"egf", egf ? "true" : "false"}};
  if (egf) {
    // n!-scaled coefficients through the rational instantiation, printed as
    // exact numerator/denominator pairs (the run doubles as an integrality
    // witness: denominators must come out 1).
    const auto s = orbicount::sym_series<Rat>(m, chi, order);
    t.title = "n! * [u^n] series(m=" + std::to_string(m) + ", chi=" + std::to_string(chi) + "), order " +
              std::to_string(order);
    t.columns = {"numerator", "denominator"};
    for (int n = 0; n <= order; ++n) {
      const Rat v = s.coeff(n) * Rat(orbicount::factorial(n));
      t.rows.push_back({boost::multiprecision::numerator(v).str(), boost::multiprecision::denominator(v).str()});
    }
  } else {
    const auto s = orbicount::sym_series<Int>(m, chi, order);
    t.title = "[u^n] series(m=" + std::to_string(m) + ", chi=" + std::to_string(chi) + "), order " +
              std::to_string(order);
    t.columns = {"count"};
    for (int n = 0; n <= order; ++n) t.rows.push_back({s.coeff(n).str()});
  }
  print_table(t, format);
  return 0;
}

// Deliberately broken identity used to exercise the failure path end to end:
// corrupt E(1) of the tuple-pair exponent table and compare the resulting
// product against the partition oracle.
CheckReport fault_report() {
  auto table = orbicount::exponent_table(2, 1, 8);
  table.exponents[0] += 1;
  const auto s = orbicount::euler_product<Int>(table, 1);
  const auto p = orbicount::partition_numbers(8);
  CheckReport rep;
  rep.suite = "fault-injection";
  rep.params = {{"max_order", "8"}, {"skipped_rows", "0"}};
  for (int n = 0; n <= 8; ++n)
    rep.rows.push_back(orbicount::detail::make_row({{"n", std::to_string(n)}},
                                                   s.coeff(n), p[static_cast<std::size_t>(n)]));
  return rep;
}

struct VerifyArgs {
  std::string suite = "all";
  int max_n = -1;  // -1: per-suite default
  int max_m = -1;
  std::vector<long long> chi_set;
  std::vector<int> i_set;
  std::vector<int> m_set;
  long long max_group_order = orbicount::kMaxWreathTupleOrder;
  long long node_budget = orbicount::kDefaultNodeBudget;
  bool inject_fault = false;
};

int run_verify(const VerifyArgs& a, const std::string& format) {
  const std::vector<int> i_set = a.i_set.empty() ? std::vector<int>{1, 2, 3} : a.i_set;
  const std::vector<int> m_set = a.m_set.empty() ? std::vector<int>{2, 3} : a.m_set;

  std::vector<CheckReport> reports;
  const bool all = a.suite == "all";
  if (all || a.suite == "eq1")
    reports.push_back(orbicount::check_eq1(a.max_n < 0 ? 4 : a.max_n, a.max_m < 0 ? 3 : a.max_m,
                                           a.chi_set.empty() ? std::vector<long long>{-2, -1, 0, 1, 2, 3} : a.chi_set));
  if (all || a.suite == "t1")
    reports.push_back(orbicount::check_lemma_t1(a.max_n < 0 ? 8 : a.max_n, a.max_m < 0 ? 3 : a.max_m,
                                                a.chi_set.empty() ? std::vector<long long>{1, 2, 3} : a.chi_set));
  if (all || a.suite == "induction")
    reports.push_back(orbicount::check_induction(i_set, a.max_n < 0 ? 5 : a.max_n, m_set, a.max_group_order,
                                                 a.node_budget));
  if (all || a.suite == "structure")
    reports.push_back(orbicount::check_structure(i_set, a.max_n < 0 ? 4 : a.max_n,
                                                 std::max<long long>(a.max_group_order, orbicount::kMaxWreathEnumOrder)));
  if (a.inject_fault) reports.push_back(fault_report());

  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();

  if (format == "json") {
    if (reports.size() == 1) {
      std::cout << to_json(reports.front()).dump(2) << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      std::cout << arr.dump(2) << "\n";
    }
  } else if (format == "csv") {
    std::cout << "suite,params,lhs,rhs,pass\n";
    for (const auto& r : reports)
      for (const auto& row : r.rows) {
        std::string params;
        for (const auto& [k, v] : row.params) {
          if (!params.empty()) params += " ";
          params += k + "=" + v;
        }
        std::cout << r.suite << "," << params << "," << row.lhs << "," << row.rhs << ","
                  << (row.pass ? "true" : "false") << "\n";
      }
  } else {
    for (const auto& r : reports) std::cout << to_text(r);
    std::cout << (pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact commuting-tuple counts and orbifold Euler characteristics for S_n and C_i Wr S_n"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto format_check = CLI::IsMember({"text", "json", "csv"});

  auto* count = app.add_subcommand("count", "|Com(S_n, m)| or |Com(C_i Wr S_n, m)| for n = 0..max-n");
  int count_m = 0, count_max_n = 0, count_wreath_i = 0;
  count->add_option("--m", count_m, "tuple length m >= 1")->required();
  count->add_option("--max-n", count_max_n, "largest n")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--wreath-i", count_wreath_i, "count in C_i Wr S_n instead of S_n")->check(CLI::PositiveNumber);
  count->add_option("--format", format, "text|json|csv")->check(format_check);

  auto* chi = app.add_subcommand("chi", "orbifold Euler characteristics of symmetric products");
  int chi_m = 0, chi_max_n = 0;
  long long chi_val = 1;
  chi->add_option("--m", chi_m, "tuple length m >= 1")->required();
  chi->add_option("--chi", chi_val, "Euler characteristic of M (any integer)")->required();
  chi->add_option("--max-n", chi_max_n, "largest n")->required()->check(CLI::NonNegativeNumber);
  chi->add_option("--format", format, "text|json|csv")->check(format_check);

  auto* series = app.add_subcommand("series", "coefficients of the generating function");
  int series_m = 0, series_order = 0;
  long long series_chi = 1;
  bool series_egf = false;
  series->add_option("--m", series_m, "tuple length m >= 1")->required();
  series->add_option("--chi", series_chi, "Euler characteristic of M (any integer)")->required();
  series->add_option("--order", series_order, "truncation order")->required()->check(CLI::NonNegativeNumber);
  series->add_flag("--egf", series_egf, "print n!-scaled coefficients as exact numerator/denominator pairs");
  series->add_option("--format", format, "text|json|csv")->check(format_check);

  auto* verify = app.add_subcommand("verify", "cross-check the identities; exit 0 iff all rows pass");
  VerifyArgs va;
  verify->add_option("--suite", va.suite, "eq1|t1|induction|structure|all")
      ->check(CLI::IsMember({"eq1", "t1", "induction", "structure", "all"}));
  verify->add_option("--max-n", va.max_n, "largest n (t1: truncation order)");
  verify->add_option("--max-m", va.max_m, "largest tuple length (eq1, t1)");
  verify->add_option("--chi", va.chi_set, "chi values to sweep (eq1, t1), comma separated")->delimiter(',');
  verify->add_option("--i", va.i_set, "wreath base orders to sweep (induction, structure)")->delimiter(',');
  verify->add_option("--m-set", va.m_set, "tuple lengths to sweep (induction)")->delimiter(',');
  auto* order_opt =
      verify->add_option("--max-group-order", va.max_group_order, "guard override: largest group to enumerate");
  auto* budget_opt = verify->add_option("--node-budget", va.node_budget, "guard override: recursion node budget");
  verify->add_flag("--inject-fault", va.inject_fault)->group("");  // test fixture: adds a failing suite
  verify->add_option("--format", format, "text|json|csv")->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) return run_count(count_m, count_max_n, count_wreath_i, format);
    if (*chi) return run_chi(chi_m, chi_val, chi_max_n, format);
    if (*series) return run_series(series_m, series_chi, series_order, series_egf, format);
    if (*order_opt) std::cerr << "warning: --max-group-order overrides a safety guard; large groups are expensive\n";
    if (*budget_opt) std::cerr << "warning: --node-budget overrides a safety guard; deep recursions are expensive\n";
    return run_verify(va, format);
  } catch (const orbicount::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
