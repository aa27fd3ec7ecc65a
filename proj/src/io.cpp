#include "qnposet/io.hpp"

#include <fstream>
#include <sstream>

namespace qnposet {

using nlohmann::json;

namespace {

std::vector<Element> read_permutation(const json& j, int n, const char* what) {
    if (!j.is_array()) {
        throw FormatError(std::string(what) + " must be an array");
    }
    auto order = j.get<std::vector<Element>>();
    if (static_cast<int>(order.size()) != n) {
        throw FormatError(std::string(what) + " has wrong length");
    }
    return order;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

} // namespace

PosetFile poset_file_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
        throw FormatError("poset file needs an integer field \"n\"");
    }
    const int n = doc["n"].get<int>();
    if (n < 0) {
        throw FormatError("\"n\" must be non-negative");
    }
    std::vector<Pair> rel;
    if (doc.contains("relations")) {
        for (const auto& r : doc["relations"]) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer()) {
                throw FormatError("each relation must be a pair of integers");
            }
            rel.emplace_back(r[0].get<int>(), r[1].get<int>());
        }
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        labels = doc["labels"].get<std::vector<std::string>>();
        if (static_cast<int>(labels.size()) != n) {
            throw FormatError("\"labels\" must have n entries");
        }
    }

    PosetFile file;
    try {
        file.poset = Poset::from_relations(n, rel, std::move(labels));
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
    if (doc.contains("parts")) {
        for (const auto& [name, elems] : doc["parts"].items()) {
            auto v = elems.get<std::vector<Element>>();
            for (Element e : v) {
                if (e < 0 || e >= n) throw FormatError("part " + name + " has an out-of-range element");
            }
            file.parts[name] = std::move(v);
        }
    }
    if (doc.contains("realizer")) {
        const auto& r = doc["realizer"];
        if (!r.is_array() || r.size() != 2) {
            throw FormatError("\"realizer\" must hold two permutations");
        }
        try {
            Realizer real{LinearExtension(read_permutation(r[0], n, "realizer[0]")),
                          LinearExtension(read_permutation(r[1], n, "realizer[1]"))};
            if (!is_realizer(file.poset, real)) {
                throw FormatError("realizer does not realize the order");
            }
            file.realizer = std::move(real);
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    return file;
}

json to_json(const PosetFile& file) {
    json doc;
    doc["n"] = file.poset.size();
    json rel = json::array();
    for (auto e : cover_edges(file.poset)) {
        rel.push_back({e.lower, e.upper});
    }
    doc["relations"] = std::move(rel);
    if (!file.poset.labels().empty()) {
        doc["labels"] = file.poset.labels();
    }
    if (!file.parts.empty()) {
        doc["parts"] = file.parts;
    }
    if (file.realizer) {
        doc["realizer"] = {file.realizer->lx.order(), file.realizer->ly.order()};
    }
    return doc;
}

PosetFile to_poset_file(const ConstructionRecord& rec) {
    return {rec.poset, rec.parts, rec.realizer};
}

PosetFile load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
    try {
        return poset_file_from_json(doc);
    } catch (const json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void save_poset_file(const PosetFile& file, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << to_json(file).dump(2) << '\n';
}

std::vector<Element> parse_order(const std::string& text) {
    std::vector<Element> order;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            order.push_back(std::stoi(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad element in extension: '" + item + "'");
        }
    }
    return order;
}

std::string to_dot(const Poset& p) {
    std::ostringstream out;
    out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (Element i = 0; i < p.size(); ++i) {
        out << "  n" << i << " [label=" << quoted(p.label(i)) << "];\n";
    }
    for (auto e : cover_edges(p)) {
        out << "  n" << e.lower << " -> n" << e.upper << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_arc_diagram_dot(const Poset& p, const LinearExtension& l, std::span<const CoverEdge> edges,
                               const QueueAssignment& queues) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                    "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62"};
    constexpr int palette_size = sizeof(palette) / sizeof(palette[0]);
    std::ostringstream out;
    out << "digraph arcs {\n  layout=neato;\n  splines=curved;\n  node [shape=circle, pin=true];\n";
    for (int k = 0; k < l.size(); ++k) {
        Element e = l.at(k);
        out << "  n" << e << " [label=" << quoted(p.label(e)) << ", pos=\"" << k << ",0!\"];\n";
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int q = queues.queue_of[i];
        out << "  n" << edges[i].lower << " -> n" << edges[i].upper << " [color=\"" << palette[q % palette_size]
            << "\", queue=" << q << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace qnposet
