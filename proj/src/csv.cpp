#include "vclust/csv.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vclust {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        // trim surrounding whitespace
        std::size_t a = 0, b = field.size();
        while (a < b && std::isspace(static_cast<unsigned char>(field[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(field[b - 1]))) --b;
        fields.push_back(field.substr(a, b - a));
    }
    return fields;
}

bool parse_double(const std::string& text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

std::vector<std::vector<std::string>> read_rows(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        rows.push_back(split_fields(line));
    }
    return rows;
}

std::string format_value(double v, int precision) {
    char buf[64];
    if (precision < 0) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    }
    return buf;
}

}  // namespace

Matrix read_matrix_csv(std::istream& in) {
    const auto rows = read_rows(in);
    if (rows.empty()) {
        throw std::runtime_error("read_matrix_csv: no data rows");
    }
    const std::size_t cols = rows.front().size();
    Matrix m(rows.size(), cols, 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw std::runtime_error("read_matrix_csv: ragged row " + std::to_string(i + 1));
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (!parse_double(rows[i][j], m(i, j))) {
                throw std::runtime_error("read_matrix_csv: bad number '" + rows[i][j] + "'");
            }
        }
    }
    return m;
}

SymmetricMatrix read_symmetric_csv(std::istream& in, double sym_tol) {
    return SymmetricMatrix::from_full(read_matrix_csv(in), sym_tol);
}

RelationMatrix read_relation_csv(std::istream& in) {
    const Matrix m = read_matrix_csv(in);
    if (m.rows() != m.cols()) {
        throw std::runtime_error("read_relation_csv: matrix is not square");
    }
    RelationMatrix r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const double v = m(i, j);
            if (v != 0.0 && v != 1.0) {
                throw std::runtime_error("read_relation_csv: entries must be 0 or 1");
            }
            if (i == j && v != 1.0) {
                throw std::runtime_error("read_relation_csv: diagonal must be 1 (reflexive)");
            }
            if (m(i, j) != m(j, i)) {
                throw std::runtime_error("read_relation_csv: matrix is not symmetric");
            }
            if (v == 1.0 && i != j) r.relate(i, j);
        }
    }
    return r;
}

ObservationTable read_observations_csv(std::istream& in) {
    auto rows = read_rows(in);
    if (rows.empty()) {
        throw std::runtime_error("read_observations_csv: no data rows");
    }
    ObservationTable table;
    std::size_t first_data = 0;
    // A first row with any non-numeric field is a header of variable names.
    {
        double ignored;
        bool numeric = true;
        for (const auto& f : rows[0]) {
            if (!parse_double(f, ignored)) numeric = false;
        }
        if (!numeric) {
            table.names = rows[0];
            first_data = 1;
        }
    }
    if (first_data >= rows.size()) {
        throw std::runtime_error("read_observations_csv: header but no data");
    }
    const std::size_t cols = rows[first_data].size();
    if (table.names.empty()) {
        for (std::size_t j = 0; j < cols; ++j) table.names.push_back("V" + std::to_string(j + 1));
    } else if (table.names.size() != cols) {
        throw std::runtime_error("read_observations_csv: header width does not match data");
    }
    table.values = Matrix(rows.size() - first_data, cols, 0.0);
    for (std::size_t i = first_data; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw std::runtime_error("read_observations_csv: ragged row " + std::to_string(i + 1));
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (!parse_double(rows[i][j], table.values(i - first_data, j))) {
                throw std::runtime_error("read_observations_csv: bad number '" + rows[i][j] + "'");
            }
        }
    }
    table.validate();
    return table;
}

Partition read_partition_csv(std::istream& in) {
    const auto rows = read_rows(in);
    std::vector<std::size_t> labels;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) continue;
        double value;
        if (!parse_double(rows[i].back(), value)) {
            if (i == 0) continue;  // header row
            throw std::runtime_error("read_partition_csv: bad label '" + rows[i].back() + "'");
        }
        if (value < 0 || value != static_cast<double>(static_cast<std::size_t>(value))) {
            throw std::runtime_error("read_partition_csv: labels must be non-negative integers");
        }
        labels.push_back(static_cast<std::size_t>(value));
    }
    return Partition::from_labels(std::move(labels), "file");
}

void write_matrix_csv(std::ostream& out, const Matrix& m, int precision) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_value(m(i, j), precision);
        }
        out << '\n';
    }
}

void write_relation_csv(std::ostream& out, const RelationMatrix& r) {
    for (std::size_t i = 0; i < r.order(); ++i) {
        for (std::size_t j = 0; j < r.order(); ++j) {
            if (j) out << ',';
            out << (r(i, j) ? '1' : '0');
        }
        out << '\n';
    }
}

void write_embedding_csv(std::ostream& out, const Embedding& e) {
    out << "# source=" << e.source << " row_normalized=" << (e.row_normalized ? 1 : 0);
    if (!e.zero_rows.empty()) {
        out << " zero_rows=";
        for (std::size_t i = 0; i < e.zero_rows.size(); ++i) {
            if (i) out << ';';
            out << e.zero_rows[i];
        }
    }
    out << '\n';
    write_matrix_csv(out, e.points);
}

void write_partition_csv(std::ostream& out, const Partition& p,
                         const std::vector<std::string>& names) {
    out << "variable,label\n";
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
        if (i < names.size()) {
            out << names[i];
        } else {
            out << "V" << (i + 1);
        }
        out << ',' << p.labels[i] << '\n';
    }
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return in;
}

}  // namespace

Matrix read_matrix_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_matrix_csv(in);
}

SymmetricMatrix read_symmetric_file(const std::string& path, double sym_tol) {
    auto in = open_or_throw(path);
    return read_symmetric_csv(in, sym_tol);
}

ObservationTable read_observations_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_observations_csv(in);
}

Partition read_partition_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_partition_csv(in);
}

}  // namespace vclust
