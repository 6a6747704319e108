// Copyright 2026 The Authors.
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

#include "lagmap/map_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "lagmap/error.hpp"

namespace lagmap {
namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() &&
           std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[end]))) {
      ++end;
    }
    if (end > pos) {
      tokens.push_back({line.substr(pos, end - pos), static_cast<int>(pos) + 1});
    }
    pos = end;
  }
  return tokens;
}

std::optional<int> ParseInt(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CombinatorialMap Run() {
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(start, end - start);
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      auto tokens = Tokenize(line);
      if (!tokens.empty()) Statement(line_no, line, tokens);
      last_line_ = line_no;
      start = end + 1;
    }
    return Finish();
  }

 private:
  void Statement(int line_no, std::string_view line,
                 const std::vector<Token>& tokens) {
    const std::string_view keyword = tokens[0].text;
    if (!mode_) {
      if (keyword != "mode") {
        throw ParseError(line_no, tokens[0].column,
                         "expected 'mode orientable' or 'mode signed'");
      }
      if (tokens.size() != 2 ||
          (tokens[1].text != "orientable" && tokens[1].text != "signed")) {
        int col = tokens.size() > 1 ? tokens[1].column : 0;
        throw ParseError(line_no, col, "mode must be 'orientable' or 'signed'");
      }
      mode_ = tokens[1].text == "orientable" ? Mode::kOrientable : Mode::kSigned;
      return;
    }
    if (edges_ == 0) {
      if (keyword != "edges" || tokens.size() != 2) {
        throw ParseError(line_no, tokens[0].column, "expected 'edges <n>'");
      }
      auto n = ParseInt(tokens[1].text);
      if (!n) throw ParseError(line_no, tokens[1].column, "bad edge count");
      if (*n <= 0) {
        throw ParseError(line_no, tokens[1].column,
                         "edge count must be positive (the map without edges "
                         "is excluded)");
      }
      edges_ = *n;
      seen_.assign(2 * edges_, false);
      signs_.assign(edges_, 1);
      return;
    }
    if (keyword == "vertex") {
      Vertex(line_no, line, tokens);
    } else if (keyword == "sign") {
      Sign(line_no, tokens);
    } else {
      throw ParseError(line_no, tokens[0].column,
                       "unknown statement '" + std::string(keyword) + "'");
    }
  }

  void Vertex(int line_no, std::string_view line,
              const std::vector<Token>& tokens) {
    if (tokens.size() < 2) {
      throw ParseError(line_no, 0, "expected 'vertex <name>: <darts>'");
    }
    // The name runs up to the first ':'.
    const std::size_t name_start = tokens[1].column - 1;
    const std::size_t colon = line.find(':', name_start);
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, tokens[1].column, "expected ':' after name");
    }
    std::string_view name = line.substr(name_start, colon - name_start);
    while (!name.empty() &&
           std::isspace(static_cast<unsigned char>(name.back()))) {
      name.remove_suffix(1);
    }
    if (name.empty() || name.find_first_of(" \t") != std::string_view::npos) {
      throw ParseError(line_no, tokens[1].column, "bad vertex name");
    }
    for (const auto& existing : names_) {
      if (existing == name) {
        throw ParseError(line_no, tokens[1].column,
                         "duplicate vertex name '" + std::string(name) + "'");
      }
    }
    std::vector<Dart> cycle;
    for (const Token& tok : Tokenize(line.substr(colon + 1))) {
      const int column = tok.column + static_cast<int>(colon) + 1;
      Dart d = ParseDart(line_no, column, tok.text);
      if (seen_[d.id]) {
        throw ParseError(line_no, column, "duplicate dart " + d.to_string());
      }
      seen_[d.id] = true;
      cycle.push_back(d);
    }
    if (cycle.empty()) {
      throw ParseError(line_no, static_cast<int>(colon) + 1,
                       "vertex '" + std::string(name) + "' has no darts");
    }
    names_.emplace_back(name);
    rotation_.push_back(std::move(cycle));
  }

  Dart ParseDart(int line_no, int column, std::string_view tok) const {
    bool minus;
    std::string_view digits;
    if (tok.size() > kUnicodeMinus.size() &&
        tok.substr(tok.size() - kUnicodeMinus.size()) == kUnicodeMinus) {
      minus = true;
      digits = tok.substr(0, tok.size() - kUnicodeMinus.size());
    } else if (tok.size() >= 2 && (tok.back() == '+' || tok.back() == '-')) {
      minus = tok.back() == '-';
      digits = tok.substr(0, tok.size() - 1);
    } else {
      throw ParseError(line_no, column,
                       "bad dart '" + std::string(tok) + "', expected <i>+ or <i>-");
    }
    auto edge = ParseInt(digits);
    if (!edge) {
      throw ParseError(line_no, column, "bad dart '" + std::string(tok) + "'");
    }
    if (*edge < 1 || *edge > edges_) {
      throw ParseError(line_no, column,
                       "dart '" + std::string(tok) + "' refers to a missing edge");
    }
    return minus ? Dart::Minus(*edge) : Dart::Plus(*edge);
  }

  void Sign(int line_no, const std::vector<Token>& tokens) {
    if (*mode_ == Mode::kOrientable) {
      throw ParseError(line_no, tokens[0].column,
                       "sign line in orientable mode");
    }
    if (tokens.size() != 3) {
      throw ParseError(line_no, tokens[0].column, "expected 'sign <i> -'");
    }
    auto edge = ParseInt(tokens[1].text);
    if (!edge || *edge < 1 || *edge > edges_) {
      throw ParseError(line_no, tokens[1].column, "bad edge index");
    }
    const std::string_view s = tokens[2].text;
    if (s == "-" || s == kUnicodeMinus) {
      signs_[*edge - 1] = -1;
    } else if (s == "+") {
      signs_[*edge - 1] = 1;
    } else {
      throw ParseError(line_no, tokens[2].column, "sign must be '+' or '-'");
    }
  }

  CombinatorialMap Finish() {
    if (!mode_) throw ParseError(last_line_, 0, "missing 'mode' line");
    if (edges_ == 0) throw ParseError(last_line_, 0, "missing 'edges' line");
    for (int d = 0; d < 2 * edges_; ++d) {
      if (!seen_[d]) {
        throw ParseError(last_line_, 0, "missing dart " + Dart{d}.to_string());
      }
    }
    try {
      return CombinatorialMap(*mode_, edges_, std::move(rotation_),
                              std::move(signs_), std::move(names_));
    } catch (const InvalidArgument& e) {
      throw ParseError(last_line_, 0, e.what());
    }
  }

  std::string_view text_;
  int last_line_ = 0;
  std::optional<Mode> mode_;
  int edges_ = 0;
  std::vector<bool> seen_;
  std::vector<int> signs_;
  std::vector<std::string> names_;
  std::vector<std::vector<Dart>> rotation_;
};

}  // namespace

CombinatorialMap ParseMap(std::string_view text) { return Parser(text).Run(); }

CombinatorialMap LoadMap(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseMap(buffer.str());
}

std::string WriteMap(const CombinatorialMap& map) {
  std::ostringstream out;
  out << "mode " << (map.mode() == Mode::kOrientable ? "orientable" : "signed")
      << "\n";
  out << "edges " << map.num_edges() << "\n";
  for (int v = 0; v < map.num_vertices(); ++v) {
    out << "vertex " << map.vertex_name(v) << ":";
    for (Dart d : map.rotation()[v]) out << " " << d.to_string();
    out << "\n";
  }
  for (int i = 1; i <= map.num_edges(); ++i) {
    if (map.edge_sign(i) < 0) out << "sign " << i << " -\n";
  }
  return out.str();
}

}  // namespace lagmap
