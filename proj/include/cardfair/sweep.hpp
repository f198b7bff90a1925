#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cardfair/rational.hpp"

namespace cardfair {

struct Fig1Row {
  int k;
  double k_over_m_minus_1;
  double poc;
};

struct Fig2Row {
  int k;
  double upper;
  double lower_achieved;
};

struct GridRow {
  int n, m, categories;
  int instances;
  double max_usw_ratio;
  double max_esw_ratio;
  int violations;  // instances whose ratio exceeded its closed-form bound
};

/// Single-category utilitarian bound as a function of k for fixed m.
std::vector<Fig1Row> fig1_rows(int m);

/// Upper bound vs. achieved lower-bound ratio for k = 1..m-2.
std::vector<Fig2Row> fig2_rows(int m);

/// Oracle fuzzing over an (n, m) grid: `per_cell` random instances per
/// cell, each checked against the closed-form bounds.
std::vector<GridRow> grid_rows(std::uint64_t seed, int max_n, int max_m,
                               int per_cell);

struct Instance;   // fwd (full type comes from instance.hpp)
struct PocReport;  // fwd

/// True iff both empirical price ratios respect the closed-form bound
/// for the instance's regime: exact rational comparison for rational
/// bounds, kSqrtTolerance slack for the sqrt-valued utilitarian bound.
bool ratios_within_bounds(const Instance& instance, const PocReport& report);

void write_fig1_csv(std::ostream& out, const std::vector<Fig1Row>& rows);
void write_fig2_csv(std::ostream& out, const std::vector<Fig2Row>& rows);
void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows);

/// CSV cell format: 12 significant digits.
std::string csv_double(double value);

}  // namespace cardfair
