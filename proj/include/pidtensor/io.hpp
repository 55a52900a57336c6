/**
 * @file io.hpp
 * @brief File formats: distribution JSON, structure-override JSON, series CSV.
 *
 * Distribution documents are JSON of the form
 *   {"variables": [{"name": "X", "alphabet": ["0","1"]}, ...],
 *    "pmf":       [{"X": "0", "Y": "1", "p": "1/4"}, ...]}
 * where "p" given as a string is parsed as an exact rational ("1/4", "3")
 * and as a JSON number is parsed as float64.  Cells not listed have
 * probability zero.  A document written by format_distribution re-parses
 * to a bit-identical joint when all entries are exact.
 *
 * Structure overrides are JSON of the form
 *   {"retained_edges": [["X","Y"], ["X","Z"]]}
 * naming the undirected edges kept for path gating.
 *
 * Time series are CSV: a header row of variable names, then one row per
 * time step; cells are symbols taken verbatim (no quoting).
 */
#pragma once

#include <string>

#include "pidtensor/joint.hpp"
#include "pidtensor/structure.hpp"
#include "pidtensor/te.hpp"

namespace pidtensor {

/// Parse a distribution document; FormatError/AlphabetError on bad input.
JointDistribution parse_distribution(const std::string& text);
/// Read and parse a distribution file; IoError if unreadable.
JointDistribution load_distribution(const std::string& path);
/// Serialize a joint as a distribution document (nonzero cells only).
std::string format_distribution(const JointDistribution& joint);

/// Parse a structure-override document into its retained edge set.
EdgeSet parse_structure_edges(const std::string& text);
/// Read and parse a structure-override file; IoError if unreadable.
EdgeSet load_structure_edges(const std::string& path);
/// Serialize a retained edge set as a structure-override document.
std::string format_structure_edges(const EdgeSet& edges);

/// Parse a CSV time series (header row + one row per step).
TimeSeries parse_time_series_csv(const std::string& text);
/// Read and parse a CSV file; IoError if unreadable.
TimeSeries load_time_series_csv(const std::string& path);

}  // namespace pidtensor
