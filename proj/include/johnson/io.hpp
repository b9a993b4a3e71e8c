#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "johnson/lift.hpp"
#include "johnson/oracle.hpp"
#include "johnson/rational.hpp"

namespace johnson {

/// File error carrying the 1-based offending line.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Vector files: a header "johnson-vector n=<n> k=<k> count=<C(n,k)>" followed
// by one exact value per line (decimal integer or p/q) in canonical subset
// order. Rationals are written in lowest terms.
struct VectorFile {
    int n = 0;
    int k = 0;
    RatVec values;
};

void write_vector_file(std::ostream& os, int n, int k, const RatVec& values);
VectorFile read_vector_file(std::istream& is);

enum class BasisFormat { jsonl, csv };

// Basis files: one record per eigenvector in canonical order. jsonl records
// carry d, B, eigenvalue, norm_squared and the entry array; csv flattens the
// entries into trailing columns.
void write_basis_header(std::ostream& os, int n, int k, BasisFormat format);
void write_basis_record(std::ostream& os, const EigenVector& ev, BasisFormat format);
std::vector<EigenVector> read_basis_file(std::istream& is, int n, int k,
                                         BasisFormat format);

std::string verify_report_text(const VerifyReport& report);
std::string verify_report_json(const VerifyReport& report);

}  // namespace johnson
