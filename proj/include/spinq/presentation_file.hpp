#pragma once

#include "errors.hpp"
#include "homology.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace spinq {

/// Line-oriented text format for a surgery presentation:
///
///   # comment
///   name lens(7,1)
///   n 1
///   7
///   spinc chern 7
///   spinc charge 1
///   torsion s=7 1/5 -8/35 -18/35 -23/35 -23/35 -18/35 -8/35
///
/// The n matrix rows follow the "n" line.  A torsion block collects
/// rationals, possibly across several lines, until the next directive.
struct TorsionBlock {
    std::string label;
    std::vector<Rational> values;
};

struct PresentationFile {
    std::string name;
    std::size_t n = 0;
    IntMatrix matrix;
    std::vector<IntVector> chern_vectors;
    std::vector<IntVector> charges;
    std::vector<TorsionBlock> torsion_blocks;

    SurgeryPresentation to_presentation() const { return SurgeryPresentation(matrix); }
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

inline Int parse_int(const std::string& tok, std::size_t lineno) {
    try {
        if (tok.empty()) throw std::invalid_argument("empty");
        return Int(tok);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": expected an integer, got '" +
                         tok + "'");
    }
}

inline Rational parse_rational(const std::string& tok, std::size_t lineno) {
    const std::size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(tok));
        Int num(tok.substr(0, slash));
        Int den(tok.substr(slash + 1));
        if (den == 0)
            throw ParseError("line " + std::to_string(lineno) + ": zero denominator in '" +
                             tok + "'");
        return Rational(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": expected a rational, got '" +
                         tok + "'");
    }
}

} // namespace detail

inline PresentationFile parse_presentation(std::istream& in) {
    PresentationFile pf;
    bool have_n = false;
    std::size_t rows_read = 0;
    TorsionBlock* open_block = nullptr;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::vector<std::string> toks = detail::tokenize(raw);
        if (toks.empty()) continue;
        const std::string& head = toks.front();

        if (head == "name") {
            open_block = nullptr;
            pf.name.clear();
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (i > 1) pf.name += " ";
                pf.name += toks[i];
            }
            continue;
        }

        if (head == "n") {
            open_block = nullptr;
            if (have_n)
                throw ParseError("line " + std::to_string(lineno) + ": duplicate size line");
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'n <int>'");
            Int n = detail::parse_int(toks[1], lineno);
            if (n < 1 || n > 64)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": matrix size must be between 1 and 64");
            pf.n = n.convert_to<std::size_t>();
            pf.matrix = IntMatrix(pf.n, pf.n);
            have_n = true;
            continue;
        }

        if (head == "spinc") {
            open_block = nullptr;
            if (!have_n || rows_read < pf.n)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": spinc line before the matrix is complete");
            if (toks.size() != 2 + pf.n)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'spinc chern|charge' followed by " +
                                 std::to_string(pf.n) + " integers");
            IntVector v;
            for (std::size_t i = 2; i < toks.size(); ++i)
                v.push_back(detail::parse_int(toks[i], lineno));
            if (toks[1] == "chern")
                pf.chern_vectors.push_back(std::move(v));
            else if (toks[1] == "charge")
                pf.charges.push_back(std::move(v));
            else
                throw ParseError("line " + std::to_string(lineno) +
                                 ": spinc encoding must be 'chern' or 'charge', got '" +
                                 toks[1] + "'");
            continue;
        }

        if (head == "torsion") {
            if (!have_n || rows_read < pf.n)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": torsion block before the matrix is complete");
            if (toks.size() < 2)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected 'torsion <sigma-label> <rationals>'");
            pf.torsion_blocks.push_back(TorsionBlock{toks[1], {}});
            open_block = &pf.torsion_blocks.back();
            for (std::size_t i = 2; i < toks.size(); ++i)
                open_block->values.push_back(detail::parse_rational(toks[i], lineno));
            continue;
        }

        // Bare number line: either a matrix row or a torsion continuation.
        if (have_n && rows_read < pf.n) {
            if (toks.size() != pf.n)
                throw ParseError("line " + std::to_string(lineno) + ": expected " +
                                 std::to_string(pf.n) + " integers in matrix row, got " +
                                 std::to_string(toks.size()));
            for (std::size_t j = 0; j < pf.n; ++j)
                pf.matrix(rows_read, j) = detail::parse_int(toks[j], lineno);
            ++rows_read;
            continue;
        }
        if (open_block) {
            for (const std::string& t : toks)
                open_block->values.push_back(detail::parse_rational(t, lineno));
            continue;
        }
        throw ParseError("line " + std::to_string(lineno) + ": unexpected content '" + head +
                         "'");
    }

    if (!have_n)
        throw ParseError("missing size line 'n <int>'");
    if (rows_read < pf.n)
        throw ParseError("matrix has " + std::to_string(rows_read) + " rows, expected " +
                         std::to_string(pf.n));
    for (std::size_t i = 0; i < pf.n; ++i)
        for (std::size_t j = i + 1; j < pf.n; ++j)
            if (pf.matrix(i, j) != pf.matrix(j, i))
                throw ParseError("matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
    for (const IntVector& v : pf.chern_vectors)
        if (v.size() != pf.n)
            throw ParseError("spinc chern vector has wrong length");
    for (const IntVector& v : pf.charges)
        if (v.size() != pf.n)
            throw ParseError("spinc charge has wrong length");
    return pf;
}

inline PresentationFile parse_presentation_text(const std::string& text) {
    std::istringstream in(text);
    return parse_presentation(in);
}

inline PresentationFile parse_presentation_path(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse_presentation(in);
}

} // namespace spinq
