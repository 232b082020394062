#ifndef QUESTIONS_FIGURES_HPP
#define QUESTIONS_FIGURES_HPP

#include <ostream>
#include <string>
#include <vector>

/// Figure-data emission: each figure writes its plot data as CSV or JSON.
/// CSV: comma-separated, header row, LF line endings. JSON: one object with
/// "columns" and "rows". Numbers use the shortest-round-trip-to-14-digit
/// format; unconstrained conditional cells are left empty (null in JSON).
namespace questions {

enum class FigureFormat { Csv, Json };

struct FigureTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  // NaN marks an empty cell
};

const std::vector<std::string>& figure_names();
bool is_figure_name(const std::string& name);

/// Computes the named figure on the given grid step (clamped range
/// [1e-4, 0.25]; pass 0 for the figure's default).
FigureTable compute_figure(const std::string& name, double grid_step);

void write_figure(const FigureTable& table, FigureFormat format, std::ostream& out);
void write_figure_file(const std::string& name, double grid_step, FigureFormat format,
                       const std::string& path);

}  // namespace questions

#endif
