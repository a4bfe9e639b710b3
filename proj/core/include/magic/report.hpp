#pragma once

#include "magic/detunings.hpp"
#include "magic/optimizer.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace magic {

// One recomputed reference-table row.
struct ReportRow {
    std::string species;
    HalfInt F;
    double zeta_plus = 0;
    double zeta_minus = 0;
    double b_over_a = 0;
    std::pair<double, double> delta_perp;
    double delta_parallel = 0;
    double delta_pi = 0;
    std::optional<double> delta_opt;
    std::optional<double> m_value;
    int decimals = 1;  // reference precision of the detuning columns
};

ReportRow compute_report_row(const AtomRecord& atom, double theta = std::numbers::pi / 4,
                             const OptimizerOptions& options = {});

// Agreement of one computed cell with the published value.
struct CellCheck {
    std::string column;
    std::string computed;
    std::string published;
    bool ok = false;
};

inline constexpr double m_value_tolerance = 0.15;  // relative

std::vector<CellCheck> compare_with_published(const ReportRow& row, const PublishedRow& published);

std::string format_fixed(double v, int decimals);
std::string format_m(const std::optional<double>& v);

void write_report_csv_header(std::ostream& out);
void write_report_csv_row(std::ostream& out, const ReportRow& row);

}  // namespace magic
