// Copyright 2026 The augrc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "augrc/design_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace augrc {

namespace {

void AppendGrid(std::ostringstream& out, const LabelGrid& g) {
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      if (j) out << ',';
      out << g(i, j);
    }
    out << '\n';
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int ParseInt(std::string_view token, int line, int column) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line, column);
  }
  return value;
}

struct Header {
  std::string kind;
  int v = 0, s = 0, k = 0;
};

Header ParseHeader(std::string_view line, int line_no) {
  if (line.empty() || line.front() != '#') {
    throw ParseError("expected header '# contraction|augmented v=.. s=.. k=..'", line_no, 1);
  }
  std::istringstream in{std::string(line.substr(1))};
  Header h;
  if (!(in >> h.kind) || (h.kind != "contraction" && h.kind != "augmented")) {
    throw ParseError("header kind must be 'contraction' or 'augmented'", line_no, 3);
  }
  std::map<std::string, int> fields;
  std::string item;
  while (in >> item) {
    const auto eq = item.find('=');
    const int col = static_cast<int>(line.find(item)) + 1;
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + item + "'", line_no, col);
    fields[item.substr(0, eq)] =
        ParseInt(std::string_view(item).substr(eq + 1), line_no, col + static_cast<int>(eq) + 1);
  }
  for (const char* key : {"v", "s", "k"}) {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(std::string("header is missing ") + key + "=", line_no, 1);
    if (it->second < 1) throw ParseError(std::string(key) + " must be positive", line_no, 1);
  }
  h.v = fields["v"];
  h.s = fields["s"];
  h.k = fields["k"];
  return h;
}

}  // namespace

std::string FormatContraction(const ContractionDesign& c) {
  std::ostringstream out;
  out << "# contraction v=" << c.v() << " s=" << c.s() << " k=" << c.k() << '\n';
  AppendGrid(out, c.cells());
  return out.str();
}

std::string FormatAugmented(const AugmentedDesign& a) {
  std::ostringstream out;
  out << "# augmented v=" << a.v() << " s=" << a.s() << " k=" << a.k() << '\n';
  AppendGrid(out, a.cells());
  return out.str();
}

AnyDesign ParseDesign(std::string_view text) {
  std::optional<Header> header;
  std::vector<std::vector<Label>> rows;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty()) continue;
    if (!header) {
      header = ParseHeader(line, line_no);
      continue;
    }
    if (line.front() == '#') continue;
    std::vector<Label> row;
    size_t pos = 0;
    while (true) {
      const size_t comma = line.find(',', pos);
      const std::string_view token = Trim(line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos));
      const int column = static_cast<int>(line.data() - raw.data() + pos) + 1;
      row.push_back(ParseInt(token, line_no, column));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (static_cast<int>(row.size()) != header->s) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, header says s=" +
                           std::to_string(header->s),
                       line_no, 1);
    }
    rows.push_back(std::move(row));
  }
  if (!header) throw ParseError("empty design file", line_no, 1);

  const int expected_rows = header->kind == "contraction" ? header->k : header->v;
  if (static_cast<int>(rows.size()) != expected_rows) {
    throw ParseError("found " + std::to_string(rows.size()) + " rows, header implies " +
                         std::to_string(expected_rows),
                     line_no, 1);
  }
  LabelGrid grid = LabelGrid::FromRows(rows);
  if (header->kind == "contraction") return ContractionDesign(header->v, std::move(grid));
  return AugmentedDesign(header->k, std::move(grid));
}

AnyDesign ReadDesignFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseDesign(buf.str());
}

void WriteTextFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace augrc
