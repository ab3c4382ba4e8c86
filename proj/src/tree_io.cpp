#include "abstain/tree_io.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "abstain/class_io.hpp"

namespace abstain {

using ojson = nlohmann::ordered_json;

namespace {

ojson to_json_value(const ExtendedMistakeTree& t) {
    ojson j;
    if (t.is_leaf()) {
        j["leaf"] = t.hypothesis();
        return j;
    }
    j["point"] = t.point();
    j["dashed"] = std::string(to_string(t.dashed_side()));
    j["left"] = to_json_value(t.left());
    j["right"] = to_json_value(t.right());
    return j;
}

std::string scalar(const ojson& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError(std::string("tree JSON: '") + what + "' must be a string");
}

ExtendedMistakeTree from_json_value(const ojson& j) {
    if (!j.is_object()) throw ParseError("tree JSON: node must be an object");
    if (j.contains("leaf")) return ExtendedMistakeTree::leaf(scalar(j["leaf"], "leaf"));
    for (const char* key : {"point", "dashed", "left", "right"})
        if (!j.contains(key)) throw ParseError(std::string("tree JSON: internal node lacks '") + key + "'");
    auto dashed = parse_label(scalar(j["dashed"], "dashed"));
    if (!dashed) throw ParseError("tree JSON: 'dashed' must be \"+1\" or \"-1\"");
    return ExtendedMistakeTree::node(scalar(j["point"], "point"), *dashed, from_json_value(j["left"]),
                                     from_json_value(j["right"]));
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string unquote(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size()) ++i;
        out += s[i];
    }
    return out;
}

void emit_dot(std::ostringstream& out, const ExtendedMistakeTree& t, std::size_t& next) {
    const std::size_t id = next++;
    if (t.is_leaf()) {
        out << "  n" << id << " [label=" << quote(t.hypothesis()) << ", shape=box];\n";
        return;
    }
    out << "  n" << id << " [label=" << quote(t.point()) << "];\n";
    for (Label y : {Label::minus, Label::plus}) {
        const std::size_t child = next;
        emit_dot(out, t.child(y), next);
        out << "  n" << id << " -> n" << child << " [label=\"" << to_string(y) << "\", style=solid];\n";
        if (y == t.dashed_side())
            out << "  n" << id << " -> n" << child << " [label=\"" << to_string(y) << "\", style=dashed];\n";
    }
}

}  // namespace

std::string tree_to_json(const ExtendedMistakeTree& t) { return to_json_value(t).dump(2) + "\n"; }

ExtendedMistakeTree tree_from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    return from_json_value(j);
}

std::string to_dot(const ExtendedMistakeTree& t) {
    std::ostringstream out;
    out << "digraph tree {\n";
    std::size_t next = 0;
    emit_dot(out, t, next);
    out << "}\n";
    return out.str();
}

ExtendedMistakeTree tree_from_dot(const std::string& text) {
    static const std::regex node_re(R"re(^\s*(\w+)\s*\[label="((?:[^"\\]|\\.)*)"(\s*,\s*shape=box)?\];\s*$)re");
    static const std::regex edge_re(
        R"re(^\s*(\w+)\s*->\s*(\w+)\s*\[label="([+-]1)"\s*,\s*style=(solid|dashed)\];\s*$)re");
    struct Info {
        std::string label;
        bool leaf = false;
        std::map<Label, std::string> solid;
        std::optional<Label> dashed;
        bool has_parent = false;
    };
    std::map<std::string, Info> nodes;
    std::vector<std::string> order;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::tuple<std::size_t, std::string, std::string, Label, bool>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::smatch m;
        if (std::regex_match(line, m, node_re)) {
            if (nodes.count(m[1])) throw ParseError(lineno, 1, "duplicate node '" + m[1].str() + "'");
            nodes[m[1]] = Info{unquote(m[2]), m[3].matched, {}, {}, false};
            order.push_back(m[1]);
        } else if (std::regex_match(line, m, edge_re)) {
            edges.emplace_back(lineno, m[1], m[2], *parse_label(m[3].str()), m[4] == "dashed");
        } else if (line.find_first_not_of(" \t\r") != std::string::npos && line.find("digraph") == std::string::npos &&
                   line.find('}') == std::string::npos) {
            throw ParseError(lineno, 1, "unrecognized DOT line");
        }
    }
    for (const auto& [ln, from, to, y, dashed] : edges) {
        if (!nodes.count(from) || !nodes.count(to)) throw ParseError(ln, 1, "edge references an unknown node");
        auto& f = nodes[from];
        if (dashed) {
            if (f.dashed) throw ParseError(ln, 1, "node '" + from + "' has two dashed edges");
            f.dashed = y;
        } else {
            if (f.solid.count(y)) throw ParseError(ln, 1, "node '" + from + "' has two edges labelled " + std::string(to_string(y)));
            f.solid[y] = to;
            nodes[to].has_parent = true;
        }
    }
    std::function<ExtendedMistakeTree(const std::string&, std::size_t)> build = [&](const std::string& id,
                                                                                    std::size_t guard) {
        if (guard > nodes.size()) throw ParseError("DOT tree contains a cycle");
        const Info& n = nodes.at(id);
        if (n.leaf) {
            if (!n.solid.empty()) throw ParseError("leaf node '" + id + "' has children");
            return ExtendedMistakeTree::leaf(n.label);
        }
        if (n.solid.size() != 2 || !n.dashed) throw ParseError("internal node '" + id + "' needs two solid edges and one dashed edge");
        return ExtendedMistakeTree::node(n.label, *n.dashed, build(n.solid.at(Label::minus), guard + 1),
                                         build(n.solid.at(Label::plus), guard + 1));
    };
    std::optional<std::string> root;
    for (const auto& id : order)
        if (!nodes[id].has_parent) {
            if (root) throw ParseError("DOT tree has more than one root");
            root = id;
        }
    if (!root) throw ParseError("DOT tree has no root");
    return build(*root, 0);
}

ExtendedMistakeTree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const bool dot = path.size() >= 4 && path.compare(path.size() - 4, 4, ".dot") == 0;
    return dot ? tree_from_dot(ss.str()) : tree_from_json(ss.str());
}

void save_tree(const std::string& path, const ExtendedMistakeTree& t) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    out << (json ? tree_to_json(t) : to_dot(t));
}

}  // namespace abstain
