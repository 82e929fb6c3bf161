#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbicount/arith.hpp"
#include "orbicount/formula.hpp"
#include "orbicount/perm.hpp"
#include "orbicount/series.hpp"
#include "orbicount/wreath.hpp"

namespace orbicount {

// One compared identity instance. All values are exact decimal strings; the
// row passes iff lhs == rhs as big integers.
struct CheckRow {
  std::map<std::string, std::string> params;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

// Result of sweeping one identity over a parameter range. Rows appear in
// sweep order and never abort early; rows whose inputs exceed an enumeration
// guard are skipped and tallied under params["skipped_rows"].
struct CheckReport {
  std::string suite;
  std::map<std::string, std::string> params;
  std::vector<CheckRow> rows;

  bool pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

namespace detail {

template <class T>
std::string join_set(const std::vector<T>& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k != 0) out += ",";
    out += std::to_string(v[k]);
  }
  return out + "}";
}

inline CheckRow make_row(std::map<std::string, std::string> params, const Int& lhs, const Int& rhs) {
  CheckRow row;
  row.params = std::move(params);
  row.lhs = lhs.str();
  row.rhs = rhs.str();
  row.pass = lhs == rhs;
  return row;
}

}  // namespace detail

// chi-weighted tuple sum against the series path: for every swept (n, m,
// chi), sum of chi^components over Com(S_n, m) == n! * [u^n] of the degree-n
// symmetric-product series. Triples beyond the brute-force guards are
// skipped.
inline CheckReport check_eq1(int max_n, int max_m, const std::vector<long long>& chi_set) {
  CheckReport rep;
  rep.suite = "eq1";
  rep.params = {{"max_n", std::to_string(max_n)},
                {"max_m", std::to_string(max_m)},
                {"chi_set", detail::join_set(chi_set)}};
  long long skipped = 0;
  for (int n = 0; n <= max_n; ++n)
    for (int m = 1; m <= max_m; ++m)
      for (long long chi : chi_set) {
        Int lhs;
        try {
          lhs = chi_weighted_sum(n, m, chi);
        } catch (const GuardExceeded&) {
          ++skipped;
          continue;
        }
        rep.rows.push_back(detail::make_row(
            {{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"chi", std::to_string(chi)}},
            lhs, factorial(n) * orbifold_chi(m, chi, n)));
      }
  rep.params["skipped_rows"] = std::to_string(skipped);
  return rep;
}

// Power identity of the count series: the chi-weighted series equals the
// chi-th power of the chi = 1 series, coefficient by coefficient. chi must
// be a nonnegative integer here (the power is literal).
inline CheckReport check_lemma_t1(int max_order, int max_m, const std::vector<long long>& chi_set) {
  for (long long chi : chi_set)
    if (chi < 0) throw std::invalid_argument("check_lemma_t1: chi_set must be nonnegative");
  CheckReport rep;
  rep.suite = "t1";
  rep.params = {{"max_order", std::to_string(max_order)},
                {"max_m", std::to_string(max_m)},
                {"chi_set", detail::join_set(chi_set)}};
  for (int m = 1; m <= max_m; ++m) {
    const auto base = sym_series<Int>(m, 1, max_order);
    for (long long chi : chi_set) {
      const auto lhs = sym_series<Int>(m, chi, max_order);
      const auto rhs = series_pow(base, static_cast<unsigned long>(chi));
      for (int n = 0; n <= max_order; ++n)
        rep.rows.push_back(detail::make_row(
            {{"m", std::to_string(m)}, {"chi", std::to_string(chi)}, {"n", std::to_string(n)}},
            lhs.coeff(n), rhs.coeff(n)));
    }
  }
  rep.params["skipped_rows"] = "0";
  return rep;
}

// Three-path agreement in wreath products: the enumeration path and the
// class recursion each against the series path. Two rows per in-guard
// triple, labelled by params["path"]. Brute-force rows are skipped when the
// group order exceeds max_group_order (predictable up front); exhausting
// node_budget mid-recursion is an error and propagates.
inline CheckReport check_induction(const std::vector<int>& i_set, int max_n, const std::vector<int>& m_set,
                                   long long max_group_order = kMaxWreathTupleOrder,
                                   long long node_budget = kDefaultNodeBudget) {
  for (int m : m_set)
    if (m < 2) throw std::invalid_argument("check_induction: m_set entries must be >= 2");
  CheckReport rep;
  rep.suite = "induction";
  rep.params = {{"i_set", detail::join_set(i_set)},
                {"max_n", std::to_string(max_n)},
                {"m_set", detail::join_set(m_set)},
                {"max_group_order", std::to_string(max_group_order)},
                {"node_budget", std::to_string(node_budget)}};
  long long skipped = 0;
  for (int i : i_set)
    for (int n = 0; n <= max_n; ++n)
      for (int m : m_set) {
        const Int series = wreath_com_count(i, m, n);
        auto params = [&](const char* path) {
          return std::map<std::string, std::string>{
              {"i", std::to_string(i)}, {"n", std::to_string(n)}, {"m", std::to_string(m)}, {"path", path}};
        };
        try {
          rep.rows.push_back(detail::make_row(params("brute"), wr_brute_force_com(i, n, m, max_group_order), series));
        } catch (const GuardExceeded&) {
          ++skipped;
        }
        rep.rows.push_back(detail::make_row(params("recursive"), com_count_recursive(i, n, m, node_budget), series));
      }
  rep.params["skipped_rows"] = std::to_string(skipped);
  return rep;
}

// Centralizer structure: for every class of C_i Wr S_n, the number of
// enumerated elements commuting with the class representative equals the
// direct-product order formula. Groups too large to enumerate are skipped
// whole.
inline CheckReport check_structure(const std::vector<int>& i_set, int max_n,
                                   long long max_group_order = kMaxWreathEnumOrder) {
  CheckReport rep;
  rep.suite = "structure";
  rep.params = {{"i_set", detail::join_set(i_set)},
                {"max_n", std::to_string(max_n)},
                {"max_group_order", std::to_string(max_group_order)}};
  long long skipped = 0;
  for (int i : i_set)
    for (int n = 0; n <= max_n; ++n) {
      std::vector<WreathElement> els;
      try {
        els = enumerate_wreath_group(i, n, max_group_order);
      } catch (const GuardExceeded&) {
        skipped += static_cast<long long>(enumerate_class_data(i, n).size());
        continue;
      }
      for (const auto& d : enumerate_class_data(i, n)) {
        const WreathElement r = class_representative(d);
        Int found = 0;
        for (const auto& x : els)
          if (wr_multiply(x, r) == wr_multiply(r, x)) ++found;
        rep.rows.push_back(detail::make_row(
            {{"i", std::to_string(i)}, {"n", std::to_string(n)}, {"class", to_string(d)}},
            found, centralizer_order(d)));
      }
    }
  rep.params["skipped_rows"] = std::to_string(skipped);
  return rep;
}

// JSON schema: {suite, params, rows: [{params, lhs, rhs, pass}], pass}; keys
// sorted, big integers as decimal strings.
inline nlohmann::json to_json(const CheckReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"params", r.params}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}});
  return {{"suite", rep.suite}, {"params", rep.params}, {"rows", rows}, {"pass", rep.pass()}};
}

inline std::string to_text(const CheckReport& rep) {
  std::string out = "suite " + rep.suite + ": " + (rep.pass() ? "PASS" : "FAIL") + " (" +
                    std::to_string(rep.rows.size()) + " rows";
  if (auto it = rep.params.find("skipped_rows"); it != rep.params.end() && it->second != "0")
    out += ", " + it->second + " skipped";
  out += ")\n";
  for (const auto& r : rep.rows) {
    if (r.pass) continue;
    out += "  FAIL";
    for (const auto& [k, v] : r.params) out += " " + k + "=" + v;
    out += ": lhs=" + r.lhs + " rhs=" + r.rhs + "\n";
  }
  return out;
}

}  // namespace orbicount
