#include "orlicz/csv.hpp"

#include <cstdio>
#include <fstream>

#include "orlicz/error.hpp"

namespace orlicz {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string py_str(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\\' || c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add(std::vector<Cell> row) {
  if (row.size() != header_.size()) throw InvalidArgument("CSV row width differs from header");
  rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& os) const {
  for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << quote(header_[i]);
  os << "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (const double* d = std::get_if<double>(&row[i]))
        os << format_number(*d);
      else if (const long long* n = std::get_if<long long>(&row[i]))
        os << *n;
      else
        os << quote(std::get<std::string>(row[i]));
    }
    os << "\n";
  }
}

void CsvTable::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  write(f);
  if (!f) throw Error("write failed for " + path);
}

std::string plot_script(const std::string& csv_path, const std::vector<std::string>& header,
                        bool log_axes) {
  std::string s =
      "import csv\n"
      "import matplotlib\n"
      "matplotlib.use(\"Agg\")\n"
      "import matplotlib.pyplot as plt\n\n"
      "with open(" + py_str(csv_path) + ") as f:\n"
      "    rows = list(csv.DictReader(f))\n"
      "x_key = " + py_str(header.front()) + "\n"
      "fig, ax = plt.subplots()\n"
      "for key in rows[0]:\n"
      "    if key == x_key:\n"
      "        continue\n"
      "    try:\n"
      "        ys = [float(r[key]) for r in rows]\n"
      "        xs = [float(r[x_key]) for r in rows]\n"
      "    except ValueError:\n"
      "        continue\n"
      "    ax.plot(xs, ys, marker=\"o\", label=key)\n";
  if (log_axes) s += "ax.set_xscale(\"log\")\nax.set_yscale(\"log\")\n";
  s += "ax.set_xlabel(x_key)\n"
       "ax.legend()\n"
       "fig.savefig(" + py_str(csv_path + ".png") + ", dpi=120)\n";
  return s;
}

}  // namespace orlicz
