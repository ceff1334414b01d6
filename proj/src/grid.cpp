#include "thinpoly/grid.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace thinpoly {

std::string to_string(Cell c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

CellSet::CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
        throw domain_error("duplicate cell in cell set");
}

bool CellSet::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

int CellSet::min_x() const {
    if (empty()) throw domain_error("empty cell set has no bounds");
    int m = cells_.front().x;
    for (const Cell& c : cells_) m = std::min(m, c.x);
    return m;
}

int CellSet::min_y() const {
    if (empty()) throw domain_error("empty cell set has no bounds");
    int m = cells_.front().y;
    for (const Cell& c : cells_) m = std::min(m, c.y);
    return m;
}

int CellSet::max_x() const {
    if (empty()) throw domain_error("empty cell set has no bounds");
    int m = cells_.front().x;
    for (const Cell& c : cells_) m = std::max(m, c.x);
    return m;
}

int CellSet::max_y() const {
    if (empty()) throw domain_error("empty cell set has no bounds");
    int m = cells_.front().y;
    for (const Cell& c : cells_) m = std::max(m, c.y);
    return m;
}

CellSet CellSet::translated(int dx, int dy) const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const Cell& c : cells_) out.push_back({c.x + dx, c.y + dy});
    return CellSet(std::move(out));
}

CellSet CellSet::normalized() const {
    if (empty()) return *this;
    return translated(-min_x(), -min_y());
}

bool CellSet::is_normalized() const {
    return empty() || (min_x() == 0 && min_y() == 0);
}

CellSet CellSet::without(Cell c) const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const Cell& d : cells_)
        if (d != c) out.push_back(d);
    return CellSet(std::move(out));
}

CellSet CellSet::without(const std::vector<Cell>& cs) const {
    std::set<Cell> drop(cs.begin(), cs.end());
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const Cell& d : cells_)
        if (!drop.count(d)) out.push_back(d);
    return CellSet(std::move(out));
}

CellSet CellSet::with(Cell c) const {
    std::vector<Cell> out = cells_;
    out.push_back(c);
    return CellSet(std::move(out));
}

Cell transform_cell(Cell c, int sym) {
    // Rotation by 90 degrees maps the square [x,x+1]x[y,y+1] to
    // [-y-1,-y]x[x,x+1]; reflections analogously shift by one.
    Cell r = c;
    if (sym >= 4) r = {-r.x - 1, r.y};  // mirror in x
    switch (sym % 4) {
        case 0: return r;
        case 1: return {-r.y - 1, r.x};
        case 2: return {-r.x - 1, -r.y - 1};
        default: return {r.y, -r.x - 1};
    }
}

CellSet transformed(const CellSet& p, int sym) {
    std::vector<Cell> out;
    out.reserve(p.cells().size());
    for (const Cell& c : p) out.push_back(transform_cell(c, sym));
    return CellSet(std::move(out));
}

CellSet parse_ascii(const std::string& text) {
    if (text.empty()) throw parse_error("empty input");
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw parse_error("empty input");

    std::vector<Cell> cells;
    int rows = static_cast<int>(lines.size());
    for (int i = 0; i < rows; ++i) {
        int y = rows - 1 - i;
        for (int j = 0; j < static_cast<int>(lines[i].size()); ++j) {
            char ch = lines[i][j];
            if (ch == '#')
                cells.push_back({j, y});
            else if (ch != '.')
                throw parse_error(std::string("illegal character '") + ch + "'", i + 1, j + 1);
        }
    }
    if (cells.empty()) throw parse_error("no cells in input");
    return CellSet(std::move(cells)).normalized();
}

std::string to_ascii(const CellSet& p) {
    if (p.empty()) throw domain_error("cannot serialize an empty cell set");
    CellSet n = p.normalized();
    int w = n.max_x() + 1, h = n.max_y() + 1;
    std::vector<std::string> rows(h, std::string(w, '.'));
    for (const Cell& c : n) rows[h - 1 - c.y][c.x] = '#';
    std::string out;
    for (const std::string& r : rows) {
        out += r;
        out += '\n';
    }
    return out;
}

CellSet parse_cells_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        throw parse_error("expected an object with a \"cells\" array");
    std::vector<Cell> cells;
    for (const auto& entry : j["cells"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw parse_error("each cell must be a pair of integers");
        cells.push_back({entry[0].get<int>(), entry[1].get<int>()});
    }
    if (cells.empty()) throw parse_error("no cells in input");
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw parse_error("duplicate cell in input");
    return CellSet(std::move(cells));
}

std::string cells_to_json(const CellSet& p) {
    nlohmann::ordered_json j;
    j["cells"] = nlohmann::ordered_json::array();
    for (const Cell& c : p) j["cells"].push_back({c.x, c.y});
    return j.dump();
}

std::vector<Cell> neighbours(const CellSet& p, Cell c) {
    if (!p.contains(c)) throw domain_error("cell " + to_string(c) + " not in the set");
    std::vector<Cell> out;
    for (Cell n : {Cell{c.x, c.y - 1}, Cell{c.x - 1, c.y}, Cell{c.x + 1, c.y}, Cell{c.x, c.y + 1}})
        if (p.contains(n)) out.push_back(n);
    return out;
}

std::vector<CellSet> components(const CellSet& p) {
    std::set<Cell> seen;
    std::vector<CellSet> out;
    for (const Cell& start : p) {
        if (seen.count(start)) continue;
        std::vector<Cell> comp;
        std::queue<Cell> todo;
        todo.push(start);
        seen.insert(start);
        while (!todo.empty()) {
            Cell c = todo.front();
            todo.pop();
            comp.push_back(c);
            for (Cell n : neighbours(p, c))
                if (seen.insert(n).second) todo.push(n);
        }
        out.push_back(CellSet(std::move(comp)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_polyomino(const CellSet& p) {
    if (p.empty()) return false;
    return static_cast<int>(components(p).size()) == 1;
}

bool is_simple(const CellSet& p) {
    if (!is_polyomino(p)) throw domain_error("is_simple requires a polyomino");
    // Flood-fill the complement, 4-connected, over the bounding box inflated
    // by one ring; an empty cell the fill cannot reach is a hole.
    int x0 = p.min_x() - 1, y0 = p.min_y() - 1;
    int w = p.max_x() - p.min_x() + 3, h = p.max_y() - p.min_y() + 3;
    std::vector<char> filled(static_cast<size_t>(w) * h, 0), seen(static_cast<size_t>(w) * h, 0);
    auto at = [&](int x, int y) { return static_cast<size_t>(y - y0) * w + (x - x0); };
    for (const Cell& c : p) filled[at(c.x, c.y)] = 1;

    std::queue<Cell> todo;
    todo.push({x0, y0});
    seen[at(x0, y0)] = 1;
    while (!todo.empty()) {
        Cell c = todo.front();
        todo.pop();
        for (Cell n : {Cell{c.x, c.y - 1}, Cell{c.x - 1, c.y}, Cell{c.x + 1, c.y}, Cell{c.x, c.y + 1}}) {
            if (n.x < x0 || n.y < y0 || n.x >= x0 + w || n.y >= y0 + h) continue;
            size_t i = at(n.x, n.y);
            if (filled[i] || seen[i]) continue;
            seen[i] = 1;
            todo.push(n);
        }
    }
    for (size_t i = 0; i < filled.size(); ++i)
        if (!filled[i] && !seen[i]) return false;
    return true;
}

bool is_thin(const CellSet& p) {
    for (const Cell& c : p)
        if (p.contains({c.x + 1, c.y}) && p.contains({c.x, c.y + 1}) &&
            p.contains({c.x + 1, c.y + 1}))
            return false;
    return true;
}

std::vector<Cell> path(const CellSet& p, Cell c, Cell d) {
    if (!p.contains(c)) throw domain_error("cell " + to_string(c) + " not in the set");
    if (!p.contains(d)) throw domain_error("cell " + to_string(d) + " not in the set");
    std::map<Cell, Cell> parent;
    std::queue<Cell> todo;
    todo.push(c);
    parent[c] = c;
    while (!todo.empty()) {
        Cell cur = todo.front();
        todo.pop();
        if (cur == d) break;
        for (Cell n : neighbours(p, cur))
            if (!parent.count(n)) {
                parent[n] = cur;
                todo.push(n);
            }
    }
    if (!parent.count(d)) throw domain_error("no path from " + to_string(c) + " to " + to_string(d));
    std::vector<Cell> out;
    for (Cell cur = d;; cur = parent[cur]) {
        out.push_back(cur);
        if (cur == c) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Vertex> vertices(const CellSet& p) {
    std::set<Vertex> vs;
    for (const Cell& c : p) {
        vs.insert({c.x, c.y});
        vs.insert({c.x + 1, c.y});
        vs.insert({c.x, c.y + 1});
        vs.insert({c.x + 1, c.y + 1});
    }
    return std::vector<Vertex>(vs.begin(), vs.end());
}

int edge_count(const CellSet& p) {
    // Horizontal edge (x,y)-(x+1,y) keyed by (x,y,0); vertical by (x,y,1).
    std::set<std::tuple<int, int, int>> edges;
    for (const Cell& c : p) {
        edges.insert({c.x, c.y, 0});
        edges.insert({c.x, c.y + 1, 0});
        edges.insert({c.x, c.y, 1});
        edges.insert({c.x + 1, c.y, 1});
    }
    return static_cast<int>(edges.size());
}

}  // namespace thinpoly
