// Copyright 2026 The percert Authors
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

#include "percert/spec_parser.hpp"

#include <cctype>
#include <climits>
#include <memory>
#include <string>
#include <vector>

#include "percert/error.hpp"
#include "percert/io.hpp"

namespace percert {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = spec();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw Error(ErrorCode::parse, "cli",
                "spec parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-") {
      pos_ = start;
      error("expected an integer");
    }
    try {
      return std::stoi(digits);
    } catch (const std::out_of_range&) {
      pos_ = start;
      error("integer out of range");
    }
  }

  Graph spec() {
    const std::size_t start = (skip_ws(), pos_);
    const std::string name = word();
    if (name.empty()) error("expected a family name, prod or file:");
    if (name == "file") {
      expect(':');
      const std::size_t p0 = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
      std::string path(text_.substr(p0, pos_ - p0));
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
      if (path.empty()) error("file: needs a path");
      return load_graph_file(path);
    }
    expect('(');
    if (name == "prod") {
      std::vector<std::shared_ptr<const Graph>> parts;
      do {
        parts.push_back(std::make_shared<const Graph>(spec()));
      } while (eat(','));
      expect(')');
      return product_of(parts);
    }
    FamilyKind kind;
    if (name == "path") kind = FamilyKind::path;
    else if (name == "star") kind = FamilyKind::star;
    else if (name == "cycle") kind = FamilyKind::cycle;
    else if (name == "complete") kind = FamilyKind::complete;
    else if (name == "theta") kind = FamilyKind::theta;
    else {
      pos_ = start;
      error("unknown family '" + name + "'");
    }
    std::vector<int> args;
    do {
      args.push_back(integer());
    } while (eat(','));
    expect(')');
    const std::size_t want = kind == FamilyKind::theta ? 2 : 1;
    if (args.size() != want)
      error(name + " takes " + std::to_string(want) + " argument" + (want == 1 ? "" : "s"));
    return make_family({kind, args});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_spec(std::string_view text) { return Parser(text).parse(); }

}  // namespace percert
