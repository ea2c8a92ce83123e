#pragma once

#include <string>
#include <vector>

namespace effortfit {

/// One software project: size in KLOC, methodology score and measured effort.
struct ProjectRecord {
  int id = 0;          // positive, unique within a dataset
  double kloc = 0.0;   // thousands of delivered lines of code, > 0
  double me = 0.0;     // methodology score
  double effort = 0.0; // measured effort in person-months, > 0

  bool operator==(const ProjectRecord&) const = default;
};

struct Dataset {
  std::vector<ProjectRecord> records;
  std::string name;

  std::size_t size() const { return records.size(); }
};

/// Ordered, disjoint train/test partition of a source dataset.
struct SplitDataset {
  Dataset train;
  Dataset test;
};

/// Parses a CSV file with header columns id,kloc,me,effort (case-insensitive,
/// any order). Throws std::runtime_error naming the offending row on bad input.
Dataset load_csv(const std::string& path);

/// Same parser, reading from an in-memory string (used by load_csv).
Dataset parse_csv(const std::string& text, const std::string& name);

/// Serializes a dataset back to the canonical CSV layout at full precision.
std::string write_csv(const Dataset& d);

/// The built-in 18-project NASA dataset, ids 1..18.
Dataset nasa_dataset();

/// First train_count records form the training set, the rest the test set.
/// Order is preserved; requires 0 < train_count < record count.
SplitDataset split_fixed(const Dataset& d, std::size_t train_count);

} // namespace effortfit
