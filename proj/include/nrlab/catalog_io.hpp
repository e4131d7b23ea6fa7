#pragma once

// File formats. Structures are JSON objects
//   {"name": str?, "order": n, "add": [[int]], "mul": [[int]]}
// with row-major tables whose row index is the left operand. Verdict
// reports stream as JSONL, one object per line, with keys structure,
// spec, derivation, status, witness, timing (optional fields omitted);
// CSV is the flattened view of the same rows.

#include <filesystem>
#include <string>
#include <vector>

#include "nrlab/near_ring.hpp"
#include "nrlab/theorems.hpp"

namespace nrlab {

struct StructureTables {
    std::string name;
    CayleyTable add;
    CayleyTable mul;
};

// Parses without validating the algebra; throws std::runtime_error
// with the file path and position on malformed input.
StructureTables read_structure_tables(const std::filesystem::path& path);

// Parses and validates; throws std::runtime_error carrying the full
// violation list when the tables break an axiom. Falls back to the
// file stem when the file has no name field.
NearRing read_structure(const std::filesystem::path& path);

void write_structure(const NearRing& n, const std::filesystem::path& path);
std::string structure_to_json(const NearRing& n);

// One JSONL line, no trailing newline. Canonical rows never include
// timing.
std::string verdict_to_jsonl(const Verdict& v);

extern const char* kVerdictCsvHeader; // structure,spec,derivation,status,witness,timing
std::string verdict_to_csv_row(const Verdict& v);

// Report ingestion: each line must parse as a JSON object.
std::vector<std::string> read_jsonl_lines(const std::filesystem::path& path);
std::string jsonl_line_to_csv_row(const std::string& line);

} // namespace nrlab
