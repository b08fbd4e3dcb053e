#pragma once

// CSV / JSON serialization of claim reports.
//
// CSV columns (stable order):
//   claim_id,variant,p,q,a,b,x,lhs,rhs,margin,status
// Numbers are written with 15 significant digits, locale-independent.
// Absent values (NaN) are written as empty fields and read back as NaN,
// so write -> read -> write is byte-identical.
//
// JSON is an array of objects with the same field names; absent values
// omit the key.

#include <iosfwd>
#include <string>
#include <vector>

#include "pmeans/inequalities.hpp"

namespace pmeans::ineq {

void write_csv(std::ostream& os, const std::vector<ClaimReport>& reports);
std::vector<ClaimReport> read_csv(std::istream& is);

void write_json(std::ostream& os, const std::vector<ClaimReport>& reports);
std::vector<ClaimReport> read_json(std::istream& is);

std::string to_csv(const std::vector<ClaimReport>& reports);
std::string to_json(const std::vector<ClaimReport>& reports);

}  // namespace pmeans::ineq
