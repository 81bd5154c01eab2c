#pragma once

#include <string>
#include <vector>

namespace qharm {

struct Cell {
    std::string id;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<Cell> cells;

    bool ok() const {
        for (const Cell& c : cells)
            if (!c.ok) return false;
        return true;
    }

    void add(std::string id, bool cell_ok, std::string detail = "") {
        cells.push_back({std::move(id), cell_ok, std::move(detail)});
    }
};

} // namespace qharm
