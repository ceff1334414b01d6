// Cell-level geometry: parsing, adjacency, connectivity, simplicity,
// thinness, paths and vertices.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "thinpoly/cell.hpp"

namespace thinpoly {

// Parses an ASCII grid over {'#', '.'}. Line i (top first, 0-based) holds the
// row y = lines-1-i; a '#' in column j is the cell (j, y). The result is
// normalized. Empty text, an illegal character, or zero '#' cells raise
// parse_error with a 1-based line/column position.
CellSet parse_ascii(const std::string& text);

// Inverse of parse_ascii on normalized sets; serializes the normalized form.
std::string to_ascii(const CellSet& p);

// Parses {"cells": [[x,y], ...]}; order-insensitive, duplicates rejected.
CellSet parse_cells_json(const std::string& text);
std::string cells_to_json(const CellSet& p);

// Cells of p sharing a full unit edge with c (corner contact excluded).
std::vector<Cell> neighbours(const CellSet& p, Cell c);

// Maximal edge-connected subsets, in canonical order, in p's frame.
std::vector<CellSet> components(const CellSet& p);

// Non-empty and edge-connected. For finite unions of closed unit cells this
// is equivalent to connectedness with no finite cut-set: a corner-only
// contact is exactly a single-point cut-set.
bool is_polyomino(const CellSet& p);

// No holes: every 4-connected component of empty grid cells inside the
// bounding box inflated by one ring reaches that ring. Requires is_polyomino.
bool is_simple(const CellSet& p);

// No 2x2 block of cells.
bool is_thin(const CellSet& p);

// A shortest neighbour-path from c to d, endpoints included. For simple thin
// sets this is the unique path.
std::vector<Cell> path(const CellSet& p, Cell c, Cell d);

// Corners of all cells.
std::vector<Vertex> vertices(const CellSet& p);

// Unit edges of the union of cells, counted once. Together with vertices and
// the cell count this gives the Euler characteristic of the underlying space.
int edge_count(const CellSet& p);

}  // namespace thinpoly
