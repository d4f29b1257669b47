#ifndef LIAISON_IO_HPP
#define LIAISON_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "liaison/ideal.hpp"

namespace liaison {

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

/// Parse "key=value" fields from a header like "ring p=32003 n=4".
inline long long header_field(const std::string& line, const std::string& key) {
    std::string pat = key + "=";
    std::size_t pos = line.find(pat);
    if (pos == std::string::npos)
        throw error("header: missing field '" + key + "' in: " + line);
    std::size_t start = pos + pat.size(), end = start;
    while (end < line.size() && std::isdigit(static_cast<unsigned char>(line[end]))) ++end;
    if (end == start) throw error("header: bad value for '" + key + "' in: " + line);
    return std::stoll(line.substr(start, end - start));
}

inline std::vector<Polynomial> sorted_generators(const Ideal& I) {
    std::vector<Polynomial> gens = I.gens();
    const Ring& R = I.ring();
    std::sort(gens.begin(), gens.end(), [&R](const Polynomial& a, const Polynomial& b) {
        int c = R.cmp(a.leading_monomial(), b.leading_monomial());
        if (c != 0) return c < 0;
        return a.str() < b.str();
    });
    return gens;
}

} // namespace detail

/// Ideal text format:
///   ring p=<prime> n=<num_vars>
///   <generator>            (one per line, canonical form)
/// Blank lines and lines starting with '#' are ignored on input; output
/// lists generators sorted increasingly by leading monomial.
inline void write_ideal(std::ostream& os, const Ideal& I) {
    const Ring& R = I.ring();
    os << "ring p=" << R.characteristic() << " n=" << R.num_vars() << "\n";
    for (const Polynomial& g : detail::sorted_generators(I)) os << g.str() << "\n";
}

inline std::string ideal_to_string(const Ideal& I) {
    std::ostringstream os;
    write_ideal(os, I);
    return os.str();
}

inline Ideal read_ideal(std::istream& is) {
    std::string line;
    int lineno = 0;
    Ring R;
    std::vector<Polynomial> gens;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!R.valid()) {
            if (t.rfind("ring", 0) != 0)
                throw error("read_ideal: line " + std::to_string(lineno) +
                            ": expected 'ring p=... n=...' header");
            R = Ring(static_cast<std::uint32_t>(detail::header_field(t, "p")),
                     static_cast<int>(detail::header_field(t, "n")));
            continue;
        }
        try {
            gens.push_back(parse_polynomial(R, t));
        } catch (const error& e) {
            throw error("read_ideal: line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!R.valid()) throw error("read_ideal: missing ring header");
    return Ideal(R, std::move(gens));
}

inline Ideal read_ideal_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw error("read_ideal_file: cannot open " + path);
    return read_ideal(is);
}

inline void write_ideal_file(const std::string& path, const Ideal& I) {
    std::ofstream os(path);
    if (!os) throw error("write_ideal_file: cannot open " + path);
    write_ideal(os, I);
}

} // namespace liaison

#endif
