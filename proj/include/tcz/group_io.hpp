#pragma once

// Text formats.
//
// Group files:
//   kind: permutation          kind: table
//   degree: 3                  order: 4
//   gen a: 2 1 3               row 0: 0 1 2 3
//   gen b: 2 3 1               row 1: 1 0 3 2
//                              row 2: 2 3 0 1
//                              row 3: 3 2 1 0
//                              gen p: 1
//                              gen q: 2
//
// Permutation images are 1-based in files. Table-kind generator lines are
// optional; without them every non-identity element is a generator.
//
// Endomorphism files give one word per generator, ' marks an inverse:
//   map a: b a b'
//   map b: b
// An empty right-hand side means the generator maps to the identity.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tcz/error.hpp"
#include "tcz/group.hpp"

namespace tcz {

namespace io_detail {

struct Line {
    int number;
    std::vector<std::string> head;  // tokens before ':'
    std::vector<std::string> rest;  // tokens after ':'
};

inline std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline std::vector<Line> meaningful_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto colon = raw.find(':');
        if (colon == std::string::npos) {
            if (!tokenize(raw).empty())
                throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'");
            continue;
        }
        Line ln;
        ln.number = lineno;
        ln.head = tokenize(raw.substr(0, colon));
        ln.rest = tokenize(raw.substr(colon + 1));
        if (ln.head.empty())
            throw ParseError("line " + std::to_string(lineno) + ": missing key before ':'");
        out.push_back(std::move(ln));
    }
    return out;
}

inline int parse_int(const std::string& tok, int lineno) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError("line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
    }
}

}  // namespace io_detail

inline GroupPtr parse_group(const std::string& text,
                            std::size_t cap = FiniteGroup::default_cap) {
    using io_detail::Line;
    auto lines = io_detail::meaningful_lines(text);
    if (lines.empty()) throw ParseError("empty group description");
    const Line& first = lines.front();
    if (first.head.size() != 1 || first.head[0] != "kind" || first.rest.size() != 1)
        throw ParseError("line " + std::to_string(first.number) + ": expected 'kind: permutation' or 'kind: table'");
    const std::string& kind = first.rest[0];

    if (kind == "permutation") {
        std::optional<int> degree;
        std::vector<std::pair<std::string, std::vector<int>>> gens;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const Line& ln = lines[i];
            if (ln.head.size() == 1 && ln.head[0] == "degree") {
                if (degree) throw ParseError("line " + std::to_string(ln.number) + ": duplicate degree");
                if (ln.rest.size() != 1)
                    throw ParseError("line " + std::to_string(ln.number) + ": degree takes one value");
                degree = io_detail::parse_int(ln.rest[0], ln.number);
                if (*degree <= 0)
                    throw ParseError("line " + std::to_string(ln.number) + ": degree must be positive");
            } else if (ln.head.size() == 2 && ln.head[0] == "gen") {
                if (!degree)
                    throw ParseError("line " + std::to_string(ln.number) + ": degree must come before generators");
                for (const auto& [n, v] : gens)
                    if (n == ln.head[1])
                        throw ParseError("line " + std::to_string(ln.number) + ": duplicate generator '" + n + "'");
                if (static_cast<int>(ln.rest.size()) != *degree)
                    throw ParseError("line " + std::to_string(ln.number) + ": expected " +
                                     std::to_string(*degree) + " images");
                std::vector<int> img;
                std::vector<char> seen(static_cast<std::size_t>(*degree), 0);
                for (const auto& tok : ln.rest) {
                    int v = io_detail::parse_int(tok, ln.number);
                    if (v < 1 || v > *degree || seen[static_cast<std::size_t>(v - 1)])
                        throw ParseError("line " + std::to_string(ln.number) +
                                         ": images are not a permutation of 1.." + std::to_string(*degree));
                    seen[static_cast<std::size_t>(v - 1)] = 1;
                    img.push_back(v - 1);
                }
                gens.emplace_back(ln.head[1], std::move(img));
            } else {
                throw ParseError("line " + std::to_string(ln.number) + ": unexpected key");
            }
        }
        if (!degree) throw ParseError("missing 'degree:' line");
        if (gens.empty()) throw ParseError("permutation group needs at least one 'gen' line");
        return FiniteGroup::from_permutations(*degree, gens, cap);
    }

    if (kind == "table") {
        std::optional<int> order;
        std::vector<std::vector<int>> rows;
        std::vector<char> row_seen;
        std::vector<std::pair<std::string, int>> gens;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const Line& ln = lines[i];
            if (ln.head.size() == 1 && ln.head[0] == "order") {
                if (order) throw ParseError("line " + std::to_string(ln.number) + ": duplicate order");
                if (ln.rest.size() != 1)
                    throw ParseError("line " + std::to_string(ln.number) + ": order takes one value");
                order = io_detail::parse_int(ln.rest[0], ln.number);
                if (*order <= 0)
                    throw ParseError("line " + std::to_string(ln.number) + ": order must be positive");
                rows.assign(static_cast<std::size_t>(*order), {});
                row_seen.assign(static_cast<std::size_t>(*order), 0);
            } else if (ln.head.size() == 2 && ln.head[0] == "row") {
                if (!order)
                    throw ParseError("line " + std::to_string(ln.number) + ": order must come before rows");
                int r = io_detail::parse_int(ln.head[1], ln.number);
                if (r < 0 || r >= *order)
                    throw ParseError("line " + std::to_string(ln.number) + ": row index out of range");
                if (row_seen[static_cast<std::size_t>(r)])
                    throw ParseError("line " + std::to_string(ln.number) + ": duplicate row " + std::to_string(r));
                if (static_cast<int>(ln.rest.size()) != *order)
                    throw ParseError("line " + std::to_string(ln.number) + ": expected " +
                                     std::to_string(*order) + " entries");
                std::vector<int> row;
                for (const auto& tok : ln.rest) {
                    int v = io_detail::parse_int(tok, ln.number);
                    if (v < 0 || v >= *order)
                        throw ParseError("line " + std::to_string(ln.number) + ": entry out of range");
                    row.push_back(v);
                }
                rows[static_cast<std::size_t>(r)] = std::move(row);
                row_seen[static_cast<std::size_t>(r)] = 1;
            } else if (ln.head.size() == 2 && ln.head[0] == "gen") {
                if (!order)
                    throw ParseError("line " + std::to_string(ln.number) + ": order must come before generators");
                for (const auto& [n, v] : gens)
                    if (n == ln.head[1])
                        throw ParseError("line " + std::to_string(ln.number) + ": duplicate generator '" + n + "'");
                if (ln.rest.size() != 1)
                    throw ParseError("line " + std::to_string(ln.number) + ": gen takes one element index");
                int v = io_detail::parse_int(ln.rest[0], ln.number);
                if (v < 0 || v >= *order)
                    throw ParseError("line " + std::to_string(ln.number) + ": generator index out of range");
                gens.emplace_back(ln.head[1], v);
            } else {
                throw ParseError("line " + std::to_string(ln.number) + ": unexpected key");
            }
        }
        if (!order) throw ParseError("missing 'order:' line");
        for (int r = 0; r < *order; ++r)
            if (!row_seen[static_cast<std::size_t>(r)])
                throw ParseError("missing 'row " + std::to_string(r) + ":' line");
        std::vector<int> table;
        table.reserve(static_cast<std::size_t>(*order) * static_cast<std::size_t>(*order));
        for (const auto& row : rows) table.insert(table.end(), row.begin(), row.end());
        return FiniteGroup::from_table(*order, std::move(table), std::move(gens), cap);
    }

    throw ParseError("line " + std::to_string(first.number) + ": unknown kind '" + kind + "'");
}

inline Endomorphism parse_endomorphism(GroupPtr G, const std::string& text) {
    using io_detail::Line;
    auto lines = io_detail::meaningful_lines(text);
    const auto& names = G->generator_names();
    std::vector<std::optional<Word>> words(names.size());
    for (const Line& ln : lines) {
        if (ln.head.size() != 2 || ln.head[0] != "map")
            throw ParseError("line " + std::to_string(ln.number) + ": expected 'map <gen>: <word>'");
        int gi = G->generator_index(ln.head[1]);
        if (gi < 0)
            throw ParseError("line " + std::to_string(ln.number) + ": unknown generator '" + ln.head[1] + "'");
        if (words[static_cast<std::size_t>(gi)])
            throw ParseError("line " + std::to_string(ln.number) + ": duplicate map for '" + ln.head[1] + "'");
        Word w;
        for (std::string tok : ln.rest) {
            bool inverted = false;
            if (!tok.empty() && tok.back() == '\'') {
                inverted = true;
                tok.pop_back();
            }
            int li = G->generator_index(tok);
            if (li < 0)
                throw ParseError("line " + std::to_string(ln.number) + ": unknown generator '" + tok +
                                 "' in word");
            w.emplace_back(li, inverted);
        }
        words[static_cast<std::size_t>(gi)] = std::move(w);
    }
    std::vector<Word> all;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (!words[i]) throw ParseError("no map given for generator '" + names[i] + "'");
        all.push_back(*words[i]);
    }
    return build_endomorphism_words(std::move(G), all);
}

namespace io_detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace io_detail

inline GroupPtr load_group(const std::string& path,
                           std::size_t cap = FiniteGroup::default_cap) {
    return parse_group(io_detail::read_file(path), cap);
}

inline Endomorphism load_endomorphism(GroupPtr G, const std::string& path) {
    return parse_endomorphism(std::move(G), io_detail::read_file(path));
}

}  // namespace tcz
