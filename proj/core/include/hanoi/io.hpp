#pragma once

// Text, CSV and JSON renderings. Integers are always written as exact
// decimals; in JSON, values that may exceed 64 bits are decimal strings.

#include <iosfwd>
#include <string>
#include <string_view>

#include "hanoi/graphs.hpp"
#include "hanoi/model.hpp"
#include "hanoi/oracle.hpp"
#include "hanoi/recurrence.hpp"

namespace hanoi {

enum class OutputFormat { kPlain, kCsv, kJson };

OutputFormat parse_output_format(std::string_view text);

/// One `i>j` per line.
void write_moves_plain(std::ostream& os, const MoveSequence& seq);
/// [[1,2],[1,3],...]
std::string moves_to_json(const MoveSequence& seq);
/// Inverse of moves_to_json. Throws InvalidInput on malformed input.
MoveSequence moves_from_json(std::string_view text);
/// Inverse of write_moves_plain; blank lines and '#' comments are skipped.
MoveSequence moves_from_plain(std::string_view text);

/// Header `n,N12,N21,N13,N31,N23,N32`, one row per n.
void write_count_table_csv(std::ostream& os, const CountTable& table);
/// {"graph":"1>2,...","rows":[{"n":0,"N12":"0",...},...]}
std::string count_table_to_json(const CountTable& table);

/// Header `n,bfs_std,bfs_any,a_conj,b_conj,len_a_sym,len_q,match`.
void write_conjecture_csv(std::ostream& os, const ConjectureReport& report);
std::string conjecture_to_json(const ConjectureReport& report);

}  // namespace hanoi
