#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cqs {

struct Arrow {
    std::size_t tail = 0;
    std::size_t head = 0;
    std::string label;

    bool operator==(const Arrow&) const = default;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t add_arrow(std::size_t tail, std::size_t head, std::string label) {
        if (tail >= vertices.size() || head >= vertices.size())
            throw ConsistencyError("arrow endpoint out of range");
        arrows.push_back({tail, head, std::move(label)});
        return arrows.size() - 1;
    }

    std::size_t find_arrow(const std::string& label) const {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].label == label) return i;
        throw ConsistencyError("no arrow labelled " + label);
    }
};

inline std::string dot_escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        if (c == '"' || c == '\\') r += '\\';
        r += c;
    }
    return r;
}

// Nodes and edges in storage order.
inline std::string emit_dot(const Quiver& q, const std::string& name = "quiver") {
    std::ostringstream os;
    os << "digraph \"" << dot_escape(name) << "\" {\n";
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        os << "  v" << v << " [label=\"" << dot_escape(q.vertices[v]) << "\"];\n";
    for (auto& a : q.arrows)
        os << "  v" << a.tail << " -> v" << a.head << " [label=\"" << dot_escape(a.label) << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace cqs
