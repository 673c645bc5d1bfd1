#ifndef MIXBOUND_IO_HPP
#define MIXBOUND_IO_HPP

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mixbound/bounds.hpp"
#include "mixbound/distances.hpp"
#include "mixbound/duality.hpp"
#include "mixbound/transition_matrix.hpp"

namespace mixbound {

/// Fixed 12-significant-digit formatting so emitted CSV is byte-stable.
inline std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// Parses N rows of N comma-separated decimals into a validated matrix.
inline TransitionMatrix read_matrix_csv(std::istream& in,
                                        const Tolerances& tol = default_tolerances()) {
    std::vector<std::vector<double>> rows;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        long col = 0;
        while (std::getline(ss, cell, ',')) {
            ++col;
            try {
                std::size_t used = 0;
                double v = std::stod(cell, &used);
                while (used < cell.size() && std::isspace((unsigned char)cell[used]))
                    ++used;
                if (used != cell.size())
                    throw ParseError(lineno, col, "trailing characters in '" + cell + "'");
                row.push_back(v);
            } catch (const std::invalid_argument&) {
                throw ParseError(lineno, col, "not a number: '" + cell + "'");
            } catch (const std::out_of_range&) {
                throw ParseError(lineno, col, "out of range: '" + cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(0, 0, "empty input");
    const long n = static_cast<long>(rows.size());
    Matrix M(n, n);
    for (long i = 0; i < n; ++i) {
        if (static_cast<long>(rows[i].size()) != n)
            throw ParseError(i + 1, static_cast<long>(rows[i].size()),
                             "expected " + std::to_string(n) + " columns");
        for (long j = 0; j < n; ++j) M(i, j) = rows[i][j];
    }
    return TransitionMatrix::validate(std::move(M), {}, tol);
}

inline void write_matrix_csv(std::ostream& out, const TransitionMatrix& P) {
    for (long i = 0; i < P.size(); ++i) {
        for (long j = 0; j < P.size(); ++j) {
            if (j) out << ',';
            out << format_number(P(i, j));
        }
        out << '\n';
    }
}

/// JSON form: {"labels": [...], "rows": [[...], ...]}.
inline TransitionMatrix read_matrix_json(std::istream& in,
                                         const Tolerances& tol = default_tolerances()) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, static_cast<long>(e.byte), e.what());
    }
    if (!j.contains("rows") || !j["rows"].is_array())
        throw ParseError(0, 0, "missing \"rows\" array");
    auto rows = j["rows"];
    const long n = static_cast<long>(rows.size());
    if (n == 0) throw ParseError(0, 0, "empty \"rows\"");
    Matrix M(n, n);
    for (long i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<long>(rows[i].size()) != n)
            throw ParseError(i, 0, "row " + std::to_string(i) + " has wrong length");
        for (long k = 0; k < n; ++k) M(i, k) = rows[i][k].get<double>();
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
        labels = j["labels"].get<std::vector<std::string>>();
    return TransitionMatrix::validate(std::move(M), std::move(labels), tol);
}

inline void write_matrix_json(std::ostream& out, const TransitionMatrix& P) {
    nlohmann::json j;
    j["labels"] = P.labels();
    std::vector<std::vector<double>> rows(P.size());
    for (long i = 0; i < P.size(); ++i)
        for (long k = 0; k < P.size(); ++k) rows[i].push_back(P(i, k));
    j["rows"] = rows;
    out << j.dump(2) << '\n';
}

inline void write_profile_csv(std::ostream& out, const DistanceProfile& prof) {
    out << "t,tv,sep\n";
    for (long t = 0; t <= prof.horizon; ++t)
        out << t << ',' << format_number(prof.tv[t]) << ','
            << format_number(prof.sep[t]) << '\n';
}

inline void write_bound_reports_csv(std::ostream& out,
                                    const std::vector<BoundReport>& reports) {
    out << "name,epsilon,value,applicable\n";
    for (const auto& r : reports)
        out << r.name << ',' << format_number(r.epsilon) << ','
            << format_number(r.value) << ',' << (r.applicable ? "true" : "false")
            << '\n';
}

/// One CSV row per dual state.
inline void write_link_csv(std::ostream& out, const LinkMatrix& link) {
    for (long j = 0; j < link.rows.rows(); ++j) {
        for (long x = 0; x < link.rows.cols(); ++x) {
            if (x) out << ',';
            out << format_number(link.rows(j, x));
        }
        out << '\n';
    }
}

} // namespace mixbound

#endif
