#include "todakdv/lattice/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace todakdv::lattice {

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(long double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.21Lg", v);
    return buf;
}

namespace {

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        auto b = cell.find_first_not_of(" \t\r");
        auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return out;
}

double to_double(const std::string& s, int line)
{
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw std::runtime_error("CSV line " + std::to_string(line) + ": bad number '" + s + "'");
}

std::vector<std::vector<double>> read_rows(std::istream& in, std::vector<std::string>& header)
{
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("CSV: empty input");
    header = split_csv(line);
    std::vector<std::vector<double>> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto cells = split_csv(line);
        if (cells.size() != header.size())
            throw std::runtime_error("CSV line " + std::to_string(lineno) + ": expected " +
                                     std::to_string(header.size()) + " columns");
        std::vector<double> row;
        for (const auto& c : cells)
            row.push_back(to_double(c, lineno));
        rows.push_back(std::move(row));
    }
    return rows;
}

LatticeState state_from_rows(const std::vector<std::vector<double>>& rows, std::size_t off)
{
    int N = static_cast<int>(rows.size());
    LatticeState s(N);
    std::vector<bool> seen(N, false);
    for (const auto& r : rows) {
        int n = static_cast<int>(r[off]);
        if (n < 0 || n >= N || seen[n] || r[off] != n)
            throw std::runtime_error("state CSV: site indices must be a permutation of 0..N-1");
        seen[n] = true;
        s.a[n] = r[off + 1];
        s.b[n] = r[off + 2];
    }
    s.validate();
    return s;
}

}  // namespace

void write_state_csv(std::ostream& out, const LatticeState& s)
{
    out << "n,a,b\n";
    for (int n = 0; n < s.N; ++n)
        out << n << ',' << fmt(s.a[n]) << ',' << fmt(s.b[n]) << '\n';
}

LatticeState read_state_csv(std::istream& in)
{
    std::vector<std::string> header;
    auto rows = read_rows(in, header);
    if (header != std::vector<std::string>{"n", "a", "b"})
        throw std::runtime_error("state CSV: header must be n,a,b");
    return state_from_rows(rows, 0);
}

void write_conserved_header(std::ostream& out)
{
    out << "t,d1,d2,d3,C1,C2,C3\n";
}

void write_conserved_row(std::ostream& out, const ConservedReport& r)
{
    out << fmt(r.t) << ',' << fmt(r.d1) << ',' << fmt(r.d2) << ',' << fmt(r.d3) << ',' << fmt(r.C1) << ','
        << fmt(r.C2) << ',' << fmt(r.C3) << '\n';
}

std::variant<LatticeState, Profile> read_init_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::vector<std::string> header;
    auto rows = read_rows(in, header);
    if (header == std::vector<std::string>{"n", "a", "b"})
        return state_from_rows(rows, 0);
    if (header.size() == 2) {
        Profile p;
        p.name = "csv:" + path;
        for (const auto& r : rows)
            p.samples.push_back(r[1]);
        return p;
    }
    throw std::runtime_error("init CSV '" + path + "': expected header n,a,b or a two-column profile");
}

void write_trajectory_header(std::ostream& out)
{
    out << "t,n,a,b\n";
}

void write_trajectory_rows(std::ostream& out, double t, const LatticeState& s)
{
    for (int n = 0; n < s.N; ++n)
        out << fmt(t) << ',' << n << ',' << fmt(s.a[n]) << ',' << fmt(s.b[n]) << '\n';
}

std::vector<TimedState> read_trajectory_csv(std::istream& in)
{
    std::vector<std::string> header;
    auto rows = read_rows(in, header);
    if (header != std::vector<std::string>{"t", "n", "a", "b"})
        throw std::runtime_error("trajectory CSV: header must be t,n,a,b");
    std::vector<TimedState> out;
    std::size_t i = 0;
    while (i < rows.size()) {
        std::size_t j = i;
        while (j < rows.size() && rows[j][0] == rows[i][0])
            ++j;
        std::vector<std::vector<double>> block(rows.begin() + i, rows.begin() + j);
        out.push_back({rows[i][0], state_from_rows(block, 1)});
        i = j;
    }
    return out;
}

}  // namespace todakdv::lattice
