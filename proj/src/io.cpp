#include "relmub/io.hpp"

#include <sstream>
#include <stdexcept>

namespace relmub::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

int int_field(const json& j, const char* field, const std::string& where) {
  if (!j.contains(field)) fail(where, std::string("missing field \"") + field + "\"");
  if (!j[field].is_number_integer())
    fail(where, std::string("field \"") + field + "\" is not an integer");
  return j[field].get<int>();
}

std::vector<std::vector<int>> int_matrix(const json& j,
                                         const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integer arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) fail(where, "expected an array of integer arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(where, "expected integer entries");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

json to_json(const Partition& p) { return json(p.blocks); }

json to_json(const Point& p) { return json(p.members); }

json to_json(const ClassicalStructure& cs) {
  json groups = json::array();
  for (std::size_t b = 0; b < cs.groups.size(); ++b) {
    const GroupTable& g = cs.groups[b];
    if (g == GroupTable::cyclic(g.elements)) {
      groups.push_back("cyclic");
    } else {
      groups.push_back(json{{"table", g.table}, {"identity", g.identity_index}});
    }
  }
  return json{{"n", cs.n()}, {"blocks", cs.partition.blocks}, {"groups", groups}};
}

json to_json(const MccsFamily& family) {
  json partitions = json::array();
  for (const Partition& p : family.partitions) partitions.push_back(p.blocks);
  return json{{"n", family.n}, {"partitions", partitions}};
}

json to_json(const LatinSquare& sq) { return json(sq.grid); }

json to_json(const SearchCertificate& cert) {
  json j;
  switch (cert.kind) {
    case SearchCertificate::Kind::mate_found: j["kind"] = "mate-found"; break;
    case SearchCertificate::Kind::no_mate: j["kind"] = "no-mate"; break;
    case SearchCertificate::Kind::max_count: j["kind"] = "max-count"; break;
  }
  j[cert.order_is_set_size ? "n" : "order"] = cert.order;
  j["count"] = cert.count;
  json witnesses = json::array();
  for (const LatinSquare& sq : cert.witness_squares) witnesses.push_back(sq.grid);
  for (const Partition& p : cert.witness_partitions) witnesses.push_back(p.blocks);
  j["witnesses"] = witnesses;
  j["stats"] = json{{"enumerated", cert.stats.enumerated},
                    {"nodes", cert.stats.nodes},
                    {"elapsed_ms", cert.stats.elapsed_ms}};
  if (cert.degenerate) j["degenerate"] = true;
  return j;
}

ClassicalStructure structure_from_json(const json& j) {
  const std::string where = "classical structure";
  if (!j.is_object()) fail(where, "expected a JSON object");
  const int n = int_field(j, "n", where);
  if (!j.contains("blocks")) fail(where, "missing field \"blocks\"");
  const auto blocks = int_matrix(j["blocks"], where + ", field \"blocks\"");
  Partition partition = Partition::from_blocks(n, blocks);

  ClassicalStructure cs;
  if (!j.contains("groups")) {
    cs = ClassicalStructure::with_cyclic_groups(std::move(partition));
  } else {
    const json& groups = j["groups"];
    if (!groups.is_array() || groups.size() != partition.blocks.size())
      fail(where, "\"groups\" must list one entry per block");
    for (std::size_t b = 0; b < groups.size(); ++b) {
      std::ostringstream gw;
      gw << where << ", group " << b;
      const json& g = groups[b];
      if (g.is_string() && g.get<std::string>() == "cyclic") {
        cs.groups.push_back(GroupTable::cyclic(partition.blocks[b]));
      } else if (g.is_object()) {
        GroupTable table;
        table.elements = partition.blocks[b];
        if (!g.contains("table")) fail(gw.str(), "missing field \"table\"");
        table.table = int_matrix(g["table"], gw.str() + ", field \"table\"");
        table.identity_index = int_field(g, "identity", gw.str());
        cs.groups.push_back(std::move(table));
      } else {
        fail(gw.str(), "expected \"cyclic\" or an object with a Cayley table");
      }
    }
    cs.partition = std::move(partition);
  }
  cs.validate();
  return cs;
}

MccsFamily mccs_from_json(const json& j) {
  const std::string where = "mccs family";
  if (!j.is_object()) fail(where, "expected a JSON object");
  MccsFamily family;
  family.n = int_field(j, "n", where);
  if (!j.contains("partitions")) fail(where, "missing field \"partitions\"");
  if (!j["partitions"].is_array()) fail(where, "\"partitions\" must be an array");
  int index = 0;
  for (const auto& p : j["partitions"]) {
    std::ostringstream pw;
    pw << where << ", partition " << index++;
    family.partitions.push_back(
        Partition::from_blocks(family.n, int_matrix(p, pw.str())));
  }
  family.validate();
  return family;
}

std::string latin_to_text(const LatinSquare& sq) {
  std::ostringstream out;
  out << sq.d << "\n";
  for (int r = 0; r < sq.d; ++r) {
    for (int c = 0; c < sq.d; ++c) out << (c ? " " : "") << sq.at(r, c);
    out << "\n";
  }
  return out.str();
}

std::string mols_to_text(const std::vector<LatinSquare>& squares) {
  std::ostringstream out;
  for (std::size_t i = 0; i < squares.size(); ++i) {
    if (i) out << "\n";
    out << latin_to_text(squares[i]);
  }
  return out.str();
}

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<int> parse_int_line(const std::string& line, int line_no,
                                const char* what) {
  std::istringstream in(line);
  std::vector<int> values;
  int v;
  while (in >> v) values.push_back(v);
  std::string rest;
  if (in.clear(), in >> rest) {
    std::ostringstream msg;
    msg << what << ": line " << line_no << ": unexpected token \"" << rest
        << "\"";
    throw std::invalid_argument(msg.str());
  }
  return values;
}

}  // namespace

std::vector<LatinSquare> mols_from_text(const std::string& content) {
  std::istringstream in(content);
  std::vector<LatinSquare> squares;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const auto header = parse_int_line(line, line_no, "mols file");
    if (header.size() != 1 || header[0] < 1) {
      std::ostringstream msg;
      msg << "mols file: line " << line_no
          << ": expected a single positive order";
      throw std::invalid_argument(msg.str());
    }
    const int d = header[0];
    std::vector<std::vector<int>> grid;
    for (int r = 0; r < d; ++r) {
      if (!std::getline(in, line)) {
        std::ostringstream msg;
        msg << "mols file: line " << line_no << ": square of order " << d
            << " truncated after " << r << " rows";
        throw std::invalid_argument(msg.str());
      }
      ++line_no;
      const auto row = parse_int_line(line, line_no, "mols file");
      if (static_cast<int>(row.size()) != d) {
        std::ostringstream msg;
        msg << "mols file: line " << line_no << ": expected " << d
            << " symbols, got " << row.size();
        throw std::invalid_argument(msg.str());
      }
      grid.push_back(row);
    }
    squares.push_back(LatinSquare::from_grid(std::move(grid)));
  }
  return squares;
}

std::string rel_to_text(const Rel& r) {
  std::ostringstream out;
  out << r.dom_size() << " " << r.cod_size() << "\n";
  for (const auto& [x, y] : r.pairs()) out << x << " " << y << "\n";
  return out.str();
}

Rel rel_from_text(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  int dom = -1, cod = -1;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const auto values = parse_int_line(line, line_no, "relation file");
    if (values.size() != 2) {
      std::ostringstream msg;
      msg << "relation file: line " << line_no << ": expected two integers";
      throw std::invalid_argument(msg.str());
    }
    if (dom < 0) {
      dom = values[0];
      cod = values[1];
    } else {
      pairs.emplace_back(values[0], values[1]);
    }
  }
  if (dom < 0)
    throw std::invalid_argument("relation file: missing \"dom cod\" header");
  return Rel::from_pairs(dom, cod, pairs);
}

json parse_json(const std::string& content) {
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
}

namespace {

bool looks_like_json(const std::string& content) {
  const auto pos = content.find_first_not_of(" \t\r\n");
  return pos != std::string::npos &&
         (content[pos] == '{' || content[pos] == '[');
}

std::vector<LatinSquare> squares_from_grid_array(const json& arr) {
  std::vector<LatinSquare> out;
  int index = 0;
  for (const auto& grid : arr) {
    std::ostringstream where;
    where << "square " << index++;
    out.push_back(LatinSquare::from_grid(int_matrix(grid, where.str())));
  }
  return out;
}

}  // namespace

std::vector<LatinSquare> squares_from_any(const std::string& content) {
  if (!looks_like_json(content)) return mols_from_text(content);
  const json j = parse_json(content);
  if (j.is_array()) return squares_from_grid_array(j);
  if (j.is_object()) {
    if (j.contains("squares")) return squares_from_grid_array(j["squares"]);
    if (j.contains("witnesses")) return squares_from_grid_array(j["witnesses"]);
  }
  fail("squares input",
       "expected MOLS text, a JSON array of grids, or an object with "
       "\"squares\" or \"witnesses\"");
}

MccsFamily mccs_from_any(const std::string& content) {
  const json j = parse_json(content);
  if (j.is_object() && j.contains("partitions")) return mccs_from_json(j);
  if (j.is_object() && j.contains("witnesses") && j.contains("n")) {
    json family;
    family["n"] = j["n"];
    family["partitions"] = j["witnesses"];
    return mccs_from_json(family);
  }
  fail("mccs input",
       "expected a family object with \"partitions\" or a certificate with "
       "\"n\" and \"witnesses\"");
}

}  // namespace relmub::io
