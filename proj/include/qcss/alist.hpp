#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcss/bit_matrix.hpp"
#include "qcss/classical_code.hpp"

namespace qcss {

/// Parse error with the 1-based line number of the offending input line.
class alist_error : public std::runtime_error {
  public:
    alist_error(std::size_t line, const std::string& what)
        : std::runtime_error("alist: line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

namespace detail {

struct AlistReader {
    std::istringstream in;
    std::size_t line_no = 0;
    std::string current;

    explicit AlistReader(const std::string& text) : in(text) {}

    /// Next line, split into non-negative integers.
    std::vector<long long> next_line(const char* what) {
        if (!std::getline(in, current)) {
            throw alist_error(line_no + 1, std::string("missing ") + what);
        }
        ++line_no;
        std::vector<long long> values;
        std::istringstream fields(current);
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(token, &used);
                if (used != token.size() || v < 0) {
                    throw std::invalid_argument(token);
                }
                values.push_back(v);
            } catch (const std::exception&) {
                throw alist_error(line_no, "expected a non-negative integer, got '" + token +
                                               "' in " + std::string(what));
            }
        }
        return values;
    }
};

}  // namespace detail

/// Parses the alist interchange format: header "n m", max column/row degree,
/// per-column degrees, per-row degrees, then 1-based column adjacency lists
/// followed by row adjacency lists. Trailing zero padding (emitted by some
/// tools to equalize list lengths) is accepted and ignored.
inline ClassicalCode parse_alist(const std::string& text) {
    detail::AlistReader reader(text);

    const auto header = reader.next_line("header (n m)");
    if (header.size() != 2) {
        throw alist_error(reader.line_no, "header must contain exactly two integers: n m");
    }
    const std::size_t n = static_cast<std::size_t>(header[0]);
    const std::size_t m = static_cast<std::size_t>(header[1]);

    const auto max_degrees = reader.next_line("max degrees");
    if (max_degrees.size() != 2) {
        throw alist_error(reader.line_no, "expected two integers: max column degree, max row degree");
    }

    const auto col_degrees = reader.next_line("column degrees");
    if (col_degrees.size() != n) {
        throw alist_error(reader.line_no, "expected " + std::to_string(n) + " column degrees, got " +
                                              std::to_string(col_degrees.size()));
    }
    const auto row_degrees = reader.next_line("row degrees");
    if (row_degrees.size() != m) {
        throw alist_error(reader.line_no, "expected " + std::to_string(m) + " row degrees, got " +
                                              std::to_string(row_degrees.size()));
    }

    BitMatrix h(m, n);

    auto read_adjacency = [&](std::size_t count, std::size_t declared_degree, std::size_t limit,
                              const char* what) {
        auto entries = reader.next_line(what);
        // Drop canonical-zero padding before validating the degree.
        while (entries.size() > declared_degree && !entries.empty() && entries.back() == 0) {
            entries.pop_back();
        }
        if (entries.size() != declared_degree) {
            throw alist_error(reader.line_no, std::string(what) + " lists " +
                                                  std::to_string(entries.size()) +
                                                  " entries but degree is " +
                                                  std::to_string(declared_degree));
        }
        std::vector<std::size_t> indices;
        indices.reserve(entries.size());
        for (long long e : entries) {
            if (e < 1 || static_cast<std::size_t>(e) > limit) {
                throw alist_error(reader.line_no, std::string(what) + ": index " + std::to_string(e) +
                                                      " out of range [1, " + std::to_string(limit) +
                                                      "]");
            }
            indices.push_back(static_cast<std::size_t>(e - 1));
        }
        (void)count;
        return indices;
    };

    for (std::size_t c = 0; c < n; ++c) {
        const auto rows = read_adjacency(c, static_cast<std::size_t>(col_degrees[c]), m,
                                         "column adjacency");
        for (std::size_t r : rows) {
            h.set(r, c, true);
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        const auto cols = read_adjacency(r, static_cast<std::size_t>(row_degrees[r]), n,
                                         "row adjacency");
        for (std::size_t c : cols) {
            if (!h.get(r, c)) {
                throw alist_error(reader.line_no,
                                  "row adjacency disagrees with column adjacency at entry (" +
                                      std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
            }
        }
        if (h.row_weight(r) != cols.size()) {
            throw alist_error(reader.line_no, "row " + std::to_string(r + 1) +
                                                  " adjacency is missing entries declared by columns");
        }
    }

    return ClassicalCode{"alist", std::move(h)};
}

/// Canonical alist emission: sorted adjacency, single spaces, no padding,
/// trailing newline. emit(parse(x)) is byte-stable for any valid input x.
inline std::string emit_alist(const ClassicalCode& code) {
    const BitMatrix& h = code.h;
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();

    std::vector<std::vector<std::size_t>> col_adj(n);
    std::vector<std::vector<std::size_t>> row_adj(m);
    for (std::size_t r = 0; r < m; ++r) {
        h.for_each_set_bit(r, [&](std::size_t c) {
            row_adj[r].push_back(c + 1);
            col_adj[c].push_back(r + 1);
        });
    }

    std::size_t max_col = 0;
    std::size_t max_row = 0;
    for (const auto& adj : col_adj) {
        max_col = std::max(max_col, adj.size());
    }
    for (const auto& adj : row_adj) {
        max_row = std::max(max_row, adj.size());
    }

    std::ostringstream out;
    auto write_ints = [&out](const auto& values) {
        bool first = true;
        for (const auto& v : values) {
            if (!first) {
                out << ' ';
            }
            out << v;
            first = false;
        }
        out << '\n';
    };

    out << n << ' ' << m << '\n';
    out << max_col << ' ' << max_row << '\n';
    std::vector<std::size_t> degrees(n);
    for (std::size_t c = 0; c < n; ++c) {
        degrees[c] = col_adj[c].size();
    }
    write_ints(degrees);
    degrees.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
        degrees[r] = row_adj[r].size();
    }
    write_ints(degrees);
    for (const auto& adj : col_adj) {
        write_ints(adj);
    }
    for (const auto& adj : row_adj) {
        write_ints(adj);
    }
    return out.str();
}

}  // namespace qcss
