#pragma once

// Text file formats.
//
//   cube <n>                 then 2^n characters over {+,-}; character v is f(v)
//   code <n>                 then one codeword per line, n characters over {0,1},
//                            coordinate i at character i-1
//   lattice <n> <P_1>..<P_n> then the row-major cell as a {+,-} string
//   cayleyz <P> <s_1>..<s_k> then P characters over {+,-}
//
// Scenery laws are written one word per line as `<word> <num>/<den>`.

#include "cayley.hpp"
#include "codes.hpp"
#include "cube_function.hpp"
#include "lattice.hpp"
#include "scenery.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbf {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string & what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_, column_;
};

namespace detail {

struct Lines {
    std::vector<std::string> lines;

    explicit Lines(std::istream & in)
    {
        std::string s;
        while (std::getline(in, s)) {
            while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
                s.pop_back();
            lines.push_back(std::move(s));
        }
        while (!lines.empty() && lines.back().empty())
            lines.pop_back();
    }

    const std::string & at(std::size_t i, const char * what) const
    {
        if (i >= lines.size())
            throw ParseError(i + 1, 1, std::string("missing ") + what);
        return lines[i];
    }
};

// Header `<keyword> <int> <int> ...`; returns the integers.
inline std::vector<unsigned long> parse_header(const std::string & line, const std::string & keyword)
{
    std::istringstream is(line);
    std::string word;
    is >> word;
    if (word != keyword)
        throw ParseError(1, 1, "expected header '" + keyword + "', found '" + word + "'");
    std::vector<unsigned long> values;
    std::string tok;
    while (is >> tok) {
        const auto column = line.find(tok, keyword.size()) + 1;
        if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
            throw ParseError(1, column, "expected a non-negative integer, found '" + tok + "'");
        values.push_back(std::stoul(tok));
    }
    return values;
}

inline std::vector<Sign> parse_signs(const std::string & line, std::size_t line_no, std::size_t expected)
{
    if (line.size() != expected)
        throw ParseError(line_no, std::min(line.size(), expected) + 1,
                         "expected " + std::to_string(expected) + " sign characters, found " + std::to_string(line.size()));
    std::vector<Sign> out(expected);
    for (std::size_t i = 0; i < expected; ++i) {
        if (line[i] == '+')
            out[i] = 1;
        else if (line[i] == '-')
            out[i] = -1;
        else
            throw ParseError(line_no, i + 1, std::string("invalid sign character '") + line[i] + "'");
    }
    return out;
}

inline void expect_no_trailing(const Lines & l, std::size_t used)
{
    if (l.lines.size() > used)
        throw ParseError(used + 1, 1, "unexpected trailing content");
}

} // namespace detail

inline CubeFunction read_cube(std::istream & in)
{
    detail::Lines l(in);
    const auto header = detail::parse_header(l.at(0, "header"), "cube");
    if (header.size() != 1)
        throw ParseError(1, 1, "cube header takes exactly one integer");
    if (header[0] < 1 || header[0] > kMaxDimension)
        throw ParseError(1, 6, "dimension outside [1, " + std::to_string(kMaxDimension) + "]");
    const auto n = static_cast<unsigned>(header[0]);
    auto table = detail::parse_signs(l.at(1, "truth table"), 2, std::size_t{1} << n);
    detail::expect_no_trailing(l, 2);
    return {n, std::move(table)};
}

inline void write_cube(std::ostream & out, const CubeFunction & f)
{
    out << "cube " << f.dimension() << '\n' << table_string(f) << '\n';
}

inline BinaryCode read_code(std::istream & in)
{
    detail::Lines l(in);
    const auto header = detail::parse_header(l.at(0, "header"), "code");
    if (header.size() != 1 || header[0] > kMaxDimension)
        throw ParseError(1, 1, "code header takes one length in [0, " + std::to_string(kMaxDimension) + "]");
    const auto n = static_cast<unsigned>(header[0]);
    std::vector<std::uint32_t> words;
    for (std::size_t i = 1; i < l.lines.size(); ++i) {
        const auto & s = l.lines[i];
        if (s.size() != n)
            throw ParseError(i + 1, std::min<std::size_t>(s.size(), n) + 1,
                             "codeword must have " + std::to_string(n) + " characters");
        std::uint32_t w = 0;
        for (unsigned c = 0; c < n; ++c) {
            if (s[c] != '0' && s[c] != '1')
                throw ParseError(i + 1, c + 1, std::string("invalid bit '") + s[c] + "'");
            w |= std::uint32_t(s[c] == '1') << c;
        }
        words.push_back(w);
    }
    try {
        return {n, std::move(words)};
    } catch (const std::invalid_argument & e) {
        throw ParseError(2, 1, e.what());
    }
}

inline void write_code(std::ostream & out, const BinaryCode & c)
{
    out << "code " << c.length() << '\n';
    for (auto w : c.words()) {
        for (unsigned i = 0; i < c.length(); ++i)
            out << ((w >> i) & 1u);
        out << '\n';
    }
}

inline PeriodicLatticeFunction read_lattice(std::istream & in)
{
    detail::Lines l(in);
    const auto header = detail::parse_header(l.at(0, "header"), "lattice");
    if (header.empty() || header[0] < 1 || header.size() != header[0] + 1)
        throw ParseError(1, 1, "lattice header must be 'lattice <n> <P_1> ... <P_n>'");
    std::vector<unsigned> periods;
    std::uint64_t size = 1;
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (header[i] < 1)
            throw ParseError(1, 1, "periods must be positive");
        periods.push_back(static_cast<unsigned>(header[i]));
        size *= header[i];
        if (size > (std::uint64_t{1} << kMaxDimension))
            throw ParseError(1, 1, "lattice cell too large");
    }
    auto cell = detail::parse_signs(l.at(1, "cell"), 2, size);
    detail::expect_no_trailing(l, 2);
    return {std::move(periods), std::move(cell)};
}

inline void write_lattice(std::ostream & out, const PeriodicLatticeFunction & g)
{
    out << "lattice " << g.dimension();
    for (auto p : g.periods())
        out << ' ' << p;
    out << '\n' << pattern_string(g.cell()) << '\n';
}

inline CayleyZFunction read_cayley(std::istream & in)
{
    detail::Lines l(in);
    const auto header = detail::parse_header(l.at(0, "header"), "cayleyz");
    if (header.size() < 2 || header[0] < 1)
        throw ParseError(1, 1, "cayley header must be 'cayleyz <P> <s_1> ... <s_k>'");
    if (header[0] > (std::uint64_t{1} << kMaxDimension))
        throw ParseError(1, 9, "period too large");
    std::vector<unsigned> gens(header.begin() + 1, header.end());
    auto pattern = detail::parse_signs(l.at(1, "pattern"), 2, header[0]);
    detail::expect_no_trailing(l, 2);
    try {
        return {std::move(gens), std::move(pattern)};
    } catch (const std::invalid_argument & e) {
        throw ParseError(1, 1, e.what());
    }
}

inline void write_cayley(std::ostream & out, const CayleyZFunction & f)
{
    out << "cayleyz " << f.period();
    for (auto s : f.generators)
        out << ' ' << s;
    out << '\n' << pattern_string(f.pattern) << '\n';
}

inline void write_distribution(std::ostream & out, const SceneryDistribution & d)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    for (const auto & [w, p] : d.probs)
        out << (w.empty() ? "." : w) << ' ' << numerator(p) << '/' << denominator(p) << '\n';
}

template <typename T, typename Reader>
T read_file(const std::string & path, Reader reader)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return reader(in);
}

template <typename Writer, typename T>
void write_file(const std::string & path, Writer writer, const T & value)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    writer(out, value);
}

} // namespace lbf
