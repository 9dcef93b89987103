#include "hanoi/io.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace hanoi {

namespace {

constexpr std::array<std::string_view, MoveGraph::kEdgeSlots> kColumnNames{
    "N12", "N21", "N13", "N31", "N23", "N32"};

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "plain") return OutputFormat::kPlain;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw InvalidInput("unknown format '" + std::string(text) + "' (plain, csv, json)");
}

void write_moves_plain(std::ostream& os, const MoveSequence& seq) {
  for (const Move& mv : seq) os << mv.from.value() << '>' << mv.to.value() << '\n';
}

std::string moves_to_json(const MoveSequence& seq) {
  nlohmann::json j = nlohmann::json::array();
  for (const Move& mv : seq) j.push_back({mv.from.value(), mv.to.value()});
  return j.dump();
}

MoveSequence moves_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("bad move JSON: ") + e.what());
  }
  if (!j.is_array()) throw InvalidInput("move JSON must be an array of [from,to] pairs");
  MoveSequence out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw InvalidInput("move JSON entries must be [from,to] integer pairs");
    }
    out.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return out;
}

MoveSequence moves_from_plain(std::string_view text) {
  MoveSequence out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string compact;
    for (char c : line) {
      if (c == '#') break;
      if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    if (compact.empty()) continue;
    if (compact.size() != 3 || compact[1] != '>') {
      throw InvalidInput("bad move line '" + line + "'");
    }
    out.emplace_back(compact[0] - '0', compact[2] - '0');
  }
  return out;
}

void write_count_table_csv(std::ostream& os, const CountTable& table) {
  os << "n";
  for (auto name : kColumnNames) os << ',' << name;
  os << '\n';
  for (int n = 0; n <= table.n_max(); ++n) {
    os << n;
    for (int slot = 0; slot < MoveGraph::kEdgeSlots; ++slot) os << ',' << table.column(slot)[n];
    os << '\n';
  }
}

std::string count_table_to_json(const CountTable& table) {
  nlohmann::ordered_json j;
  j["graph"] = table.graph().to_string();
  j["rows"] = nlohmann::ordered_json::array();
  for (int n = 0; n <= table.n_max(); ++n) {
    nlohmann::ordered_json row;
    row["n"] = n;
    for (int slot = 0; slot < MoveGraph::kEdgeSlots; ++slot) {
      row[std::string(kColumnNames[slot])] = table.column(slot)[n].str();
    }
    j["rows"].push_back(std::move(row));
  }
  return j.dump();
}

void write_conjecture_csv(std::ostream& os, const ConjectureReport& report) {
  os << "n,bfs_std,bfs_any,a_conj,b_conj,len_a_sym,len_q,match\n";
  for (const auto& r : report.rows) {
    os << r.n << ',' << r.bfs_std << ',' << r.bfs_any << ',' << r.a_conj << ',' << r.b_conj << ','
       << r.len_a_sym << ',' << r.len_q << ',' << (r.match() ? "MATCH" : "MISMATCH") << '\n';
  }
}

std::string conjecture_to_json(const ConjectureReport& report) {
  nlohmann::ordered_json j;
  j["distance"] = report.distance;
  j["consistent"] = report.consistent();
  j["problems"] = report.problems;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    j["rows"].push_back({{"n", r.n},
                         {"bfs_std", r.bfs_std},
                         {"bfs_any", r.bfs_any},
                         {"a_conj", r.a_conj.str()},
                         {"b_conj", r.b_conj.str()},
                         {"len_a_sym", r.len_a_sym},
                         {"len_q", r.len_q},
                         {"match", r.match() ? "MATCH" : "MISMATCH"}});
  }
  return j.dump();
}

}  // namespace hanoi
