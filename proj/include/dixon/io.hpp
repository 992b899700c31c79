#pragma once

// Facet list text format:
//   # p=<p> n=<n>
//   (1,2,1) (3,3,3) (4,4,5)
// one facet per line, vertices separated by single spaces.

#include "dixon/complex.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dixon {

inline std::string format_vertex(std::span<const int> v)
{
    std::string out = "(";
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (a)
            out += ',';
        out += std::to_string(v[a]);
    }
    return out + ')';
}

inline std::string format_face(const Face& face)
{
    std::string out;
    for (std::size_t l = 0; l < face.size(); ++l) {
        if (l)
            out += ' ';
        out += format_vertex(face.coords(l));
    }
    return out;
}

inline void write_facets(std::ostream& out, const ComplexParams& params, const std::vector<Face>& facets)
{
    out << "# p=" << params.p << " n=" << params.n << '\n';
    for (const auto& f : facets)
        out << format_face(f) << '\n';
}

struct FacetFile {
    ComplexParams params;
    std::vector<Face> facets;
};

inline FacetFile read_facets(std::istream& in)
{
    FacetFile file;
    std::string line;
    if (!std::getline(in, line) || std::sscanf(line.c_str(), "# p=%d n=%d", &file.params.p, &file.params.n) != 2)
        throw DomainError("facet file must start with '# p=<p> n=<n>'");
    file.params = make_complex(file.params.p, file.params.n);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::vector<Vertex> vertices;
        std::size_t pos = 0;
        while (pos < line.size()) {
            if (line[pos] != '(')
                throw DomainError("malformed vertex on line " + std::to_string(line_no));
            const auto close = line.find(')', pos);
            if (close == std::string::npos)
                throw DomainError("unterminated vertex on line " + std::to_string(line_no));
            std::vector<int> coords;
            std::stringstream body(line.substr(pos + 1, close - pos - 1));
            std::string item;
            while (std::getline(body, item, ','))
                coords.push_back(std::stoi(item));
            vertices.emplace_back(std::move(coords));
            pos = close + 1;
            if (pos < line.size()) {
                if (line[pos] != ' ')
                    throw DomainError("vertices must be separated by single spaces on line " +
                                      std::to_string(line_no));
                ++pos;
            }
        }
        if (!is_face(file.params, vertices))
            throw DomainError("line " + std::to_string(line_no) + " is not a face");
        std::vector<int> flat;
        std::sort(vertices.begin(), vertices.end());
        for (const auto& v : vertices)
            flat.insert(flat.end(), v.coords.begin(), v.coords.end());
        file.facets.emplace_back(file.params.p, std::move(flat));
    }
    return file;
}

} // namespace dixon
