#ifndef ORLICZ_CSV_HPP
#define ORLICZ_CSV_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace orlicz {

/// Formats a double with 17 significant digits ("%.17g").
std::string format_number(double v);

/// RFC 4180 style table: header row, fields quoted only when needed.
class CsvTable {
public:
  using Cell = std::variant<double, long long, std::string>;

  explicit CsvTable(std::vector<std::string> header);

  void add(std::vector<Cell> row);
  std::size_t rows() const noexcept { return rows_.size(); }
  const std::vector<std::string>& header() const noexcept { return header_; }

  void write(std::ostream& os) const;
  void save(const std::string& path) const;

private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

/// Minimal matplotlib script plotting every column against the first.
std::string plot_script(const std::string& csv_path, const std::vector<std::string>& header,
                        bool log_axes);

}  // namespace orlicz

#endif
