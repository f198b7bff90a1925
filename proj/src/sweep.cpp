#include "cardfair/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "cardfair/bounds.hpp"
#include "cardfair/errors.hpp"
#include "cardfair/fuzz.hpp"
#include "cardfair/oracle.hpp"
#include "cardfair/welfare.hpp"

namespace cardfair {

std::string csv_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::vector<Fig1Row> fig1_rows(int m) {
  if (m < 2) throw DomainError("fig1 needs m >= 2");
  std::vector<Fig1Row> rows;
  for (int k = 1; k <= m - 1; ++k) {
    rows.push_back({k, static_cast<double>(k) / (m - 1), poc_usw_single(m, k)});
  }
  return rows;
}

std::vector<Fig2Row> fig2_rows(int m) {
  if (m < 3) throw DomainError("fig2 needs m >= 3");
  std::vector<Fig2Row> rows;
  for (int k = 1; k <= m - 2; ++k) {
    rows.push_back({k, poc_usw_single(m, k), poc_usw_single_lower_achieved(m, k)});
  }
  return rows;
}

bool ratios_within_bounds(const Instance& instance, const PocReport& report) {
  if (!report.usw_ratio || !report.esw_ratio) return false;
  const Rational& usw_ratio = *report.usw_ratio;
  const Rational& esw_ratio = *report.esw_ratio;

  if (instance.num_categories() == 1) {
    const int m = instance.num_items();
    const int k = instance.categories[0].cap;
    if (rational_to_double(usw_ratio) > poc_usw_single(m, k) + kSqrtTolerance) {
      return false;
    }
    return esw_ratio <= poc_esw_single(m, instance.n, k);
  }

  const Instance canonical = canonical_category_order(instance);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& cat : canonical.categories) {
    pairs.emplace_back(static_cast<int>(cat.items.size()), cat.cap);
  }
  const Rational usw_bound =
      instance.n == 2 ? poc_usw_two(pairs) : poc_usw_multi(pairs);
  if (usw_ratio > usw_bound) return false;
  // with more agents than items the regime formula can dip below the
  // trivial floor of 1 (everyone's esw is 0, ratio 0/0 -> 1)
  const Rational esw_bound = poc_esw_multi(instance.n, pairs);
  return esw_ratio <= (esw_bound > 1 ? esw_bound : Rational(1));
}

std::vector<GridRow> grid_rows(std::uint64_t seed, int max_n, int max_m,
                               int per_cell) {
  if (max_n < 2 || max_m < 2 || per_cell < 1) {
    throw DomainError("grid sweep needs max_n >= 2, max_m >= 2, per_cell >= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<GridRow> rows;
  for (int n = 2; n <= max_n; ++n) {
    for (int m = 2; m <= max_m; ++m) {
      for (int h = 1; h <= (m >= 2 ? 2 : 1); ++h) {
        GridRow row{n, m, h, per_cell, 0.0, 0.0, 0};
        for (int it = 0; it < per_cell; ++it) {
          const Instance instance = random_instance(rng, n, m, h);
          const PocReport report = empirical_poc(instance);
          row.max_usw_ratio =
              std::max(row.max_usw_ratio, rational_to_double(*report.usw_ratio));
          row.max_esw_ratio =
              std::max(row.max_esw_ratio, rational_to_double(*report.esw_ratio));
          if (!ratios_within_bounds(instance, report)) ++row.violations;
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_fig1_csv(std::ostream& out, const std::vector<Fig1Row>& rows) {
  out << "k,k_over_m_minus_1,poc_usw\n";
  for (const auto& row : rows) {
    out << row.k << "," << csv_double(row.k_over_m_minus_1) << ","
        << csv_double(row.poc) << "\n";
  }
}

void write_fig2_csv(std::ostream& out, const std::vector<Fig2Row>& rows) {
  out << "k,upper,lower_achieved\n";
  for (const auto& row : rows) {
    out << row.k << "," << csv_double(row.upper) << ","
        << csv_double(row.lower_achieved) << "\n";
  }
}

void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows) {
  out << "n,m,categories,instances,max_usw_ratio,max_esw_ratio,violations\n";
  for (const auto& row : rows) {
    out << row.n << "," << row.m << "," << row.categories << "," << row.instances
        << "," << csv_double(row.max_usw_ratio) << ","
        << csv_double(row.max_esw_ratio) << "," << row.violations << "\n";
  }
}

}  // namespace cardfair
