#include "equilab/gallery.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "equilab/transforms.hpp"

namespace equilab {

namespace {

std::vector<std::string> numbered(std::string_view prefix, int from, int count) {
    std::vector<std::string> labels;
    for (int i = 0; i < count; ++i) labels.push_back(std::string(prefix) + std::to_string(from + i));
    return labels;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

class DescriptorParser {
public:
    explicit DescriptorParser(std::string_view text) : text_(text) {}

    GalleryDescriptor parse() {
        auto d = descriptor();
        skip_ws();
        require(pos_ == text_.size(), "trailing characters in descriptor '" + std::string(text_) + "'");
        return d;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    GalleryDescriptor descriptor() {
        skip_ws();
        GalleryDescriptor d;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            d.family += text_[pos_++];
        }
        require(!d.family.empty(), "expected a family name in '" + std::string(text_) + "'");
        if (!eat('(')) return d;
        if (eat(')')) return d;
        do {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '{') {
                // circulant(11,{1,3}) spells the connection set as a brace list
                ++pos_;
                do d.params.push_back(number()); while (eat(','));
                require(eat('}'), "unterminated '{' in descriptor");
            } else if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
                d.params.push_back(number());
            } else {
                d.parts.push_back(descriptor());
            }
        } while (eat(','));
        require(eat(')'), "expected ')' in descriptor '" + std::string(text_) + "'");
        return d;
    }

    int number() {
        skip_ws();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        require(ec == std::errc{}, "expected an integer in descriptor '" + std::string(text_) + "'");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }
};

}  // namespace

std::string GalleryDescriptor::to_string() const {
    std::string s = family;
    if (params.empty() && parts.empty()) return s;
    s += '(';
    bool first = true;
    for (int p : params) {
        if (!first) s += ',';
        s += std::to_string(p);
        first = false;
    }
    for (const auto& part : parts) {
        if (!first) s += ',';
        s += part.to_string();
        first = false;
    }
    return s + ')';
}

GalleryDescriptor parse_descriptor(std::string_view text) { return DescriptorParser(text).parse(); }

Graph path_graph(int n) {
    require(n >= 1, "path(n) needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(numbered("", 1, n), std::move(edges));
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle(n) needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(numbered("", 1, n), std::move(edges));
}

Graph star_graph(int leaves) {
    require(leaves >= 1, "star(n) needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph(numbered("", 0, leaves + 1), std::move(edges));
}

Graph complete_graph(int n) {
    require(n >= 1, "complete(n) needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(numbered("", 1, n), std::move(edges));
}

Graph complete_bipartite(int m, int n) {
    require(m >= 1 && n >= 1, "complete_bipartite(m,n) needs m, n >= 1");
    auto labels = numbered("a", 1, m);
    auto b = numbered("b", 1, n);
    labels.insert(labels.end(), b.begin(), b.end());
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.push_back({i, m + j});
    return Graph(std::move(labels), std::move(edges));
}

Graph kmn_plus(int m, int n) {
    require(m >= 1 && n >= 1, "kmn_plus(m,n) needs m, n >= 1");
    auto labels = numbered("a", 1, m);
    for (auto& l : numbered("b", 1, n)) labels.push_back(l);
    for (auto& l : numbered("l", 1, n)) labels.push_back(l);
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.push_back({i, m + j});
    for (int j = 0; j < n; ++j) edges.push_back({m + j, m + n + j});
    return Graph(std::move(labels), std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer cycle
        edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
        edges.push_back({i, 5 + i});                // spokes
    }
    return Graph(numbered("", 1, 10), std::move(edges));
}

Graph circulant_graph(int n, std::vector<int> offsets) {
    require(n >= 1, "circulant(n,...) needs n >= 1");
    require(!offsets.empty(), "circulant needs a connection set");
    std::sort(offsets.begin(), offsets.end());
    require(std::adjacent_find(offsets.begin(), offsets.end()) == offsets.end(), "circulant offsets must be distinct");
    std::vector<Edge> edges;
    for (int s : offsets) {
        require(s >= 1 && 2 * s <= n, "circulant offsets must lie in 1..n/2");
        for (int i = 0; i < n; ++i) edges.push_back({i, (i + s) % n});
    }
    return Graph(numbered("", 0, n), std::move(edges));
}

Graph graph_h() {
    // 1..5 form the larger side after deleting the 2-matching {1-2, 3-4}.
    std::vector<Edge> edges = {
        {0, 1}, {2, 3},                                  // the 2-matching
        {0, 7}, {0, 8}, {1, 5}, {1, 6}, {2, 6}, {2, 8},  //
        {3, 5}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {4, 8},
    };
    return Graph(numbered("", 1, 9), std::move(edges));
}

Graph generate(const GalleryDescriptor& d) {
    const auto& p = d.params;
    auto arity = [&](std::size_t count) {
        require(p.size() == count && d.parts.empty(),
                d.family + " expects " + std::to_string(count) + " integer parameter(s)");
    };
    if (d.family == "path") return arity(1), path_graph(p[0]);
    if (d.family == "cycle") return arity(1), cycle_graph(p[0]);
    if (d.family == "star") return arity(1), star_graph(p[0]);
    if (d.family == "complete") return arity(1), complete_graph(p[0]);
    if (d.family == "complete_bipartite") return arity(2), complete_bipartite(p[0], p[1]);
    if (d.family == "kmn_plus") return arity(2), kmn_plus(p[0], p[1]);
    if (d.family == "petersen") return arity(0), petersen_graph();
    if (d.family == "graph_H") return arity(0), graph_h();
    if (d.family == "circulant") {
        require(p.size() >= 2 && d.parts.empty(), "circulant expects n and at least one offset");
        return circulant_graph(p[0], std::vector<int>(p.begin() + 1, p.end()));
    }
    if (d.family == "disjoint_union") {
        require(p.empty() && d.parts.size() >= 2, "disjoint_union expects at least two descriptors");
        Graph g = generate(d.parts[0]);
        for (std::size_t i = 1; i < d.parts.size(); ++i) g = disjoint_union(g, generate(d.parts[i]));
        return g;
    }
    throw InputError("unknown gallery family '" + d.family + "'");
}

}  // namespace equilab
