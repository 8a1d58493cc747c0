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


#include "mvs/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "mvs/error.hpp"

namespace mvs {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; }

std::vector<Token> split_words(std::string_view line, std::size_t base_column,
                               std::size_t max_tokens, std::size_t* rest_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size() && out.size() < max_tokens) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    out.push_back({line.substr(start, i - start), base_column + start});
  }
  if (rest_offset != nullptr) *rest_offset = i;
  return out;
}

std::string_view trim(std::string_view s, std::size_t* leading = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && is_space(s[b])) ++b;
  std::size_t e = s.size();
  while (e > b && is_space(s[e - 1])) --e;
  if (leading != nullptr) *leading = b;
  return s.substr(b, e - b);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedInstance run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos, end - pos);
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      parse_line(line);
      if (end == text_.size()) break;
      pos = end + 1;
    }
    if (!policy_) parse_error(0, "missing 'policy' line");
    if (ambients_.empty()) parse_error(0, "missing 'ambient' line");
    if (components_.empty()) parse_error(0, "missing 'space' line");
    return ParsedInstance{MultiVectorSpace(std::move(components_), *policy_), std::move(names_),
                          std::move(ambients_)};
  }

 private:
  [[noreturn]] void parse_error(std::size_t column, const std::string& message) const {
    throw InputError(ErrorKind::kParse, line_no_, column, message);
  }
  [[noreturn]] void semantic_error(std::size_t column, const std::string& message) const {
    throw InputError(ErrorKind::kSemantic, line_no_, column, message);
  }

  std::uint64_t number(std::string_view digits, std::size_t column, const char* what) const {
    std::uint64_t value = 0;
    const char* first = digits.data();
    const char* last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (digits.empty() || ec != std::errc() || ptr != last) {
      parse_error(column, std::string("expected ") + what + ", got '" + std::string(digits) + "'");
    }
    return value;
  }

  std::uint64_t keyed_number(const Token& tok, std::string_view key, const char* what) const {
    if (!tok.text.starts_with(key)) {
      parse_error(tok.column, "expected '" + std::string(key) + "<" + what + ">'");
    }
    return number(tok.text.substr(key.size()), tok.column + key.size(), what);
  }

  void parse_line(std::string_view line) {
    std::size_t rest = 0;
    const auto head = split_words(line, 1, 5, &rest);
    if (head.empty()) return;
    const std::string_view keyword = head[0].text;
    if (keyword == "policy") {
      parse_policy_line(head);
    } else if (keyword == "ambient") {
      parse_ambient_line(head);
    } else if (keyword == "space") {
      parse_space_line(head, line, rest);
    } else {
      parse_error(head[0].column, "unknown directive '" + std::string(keyword) + "'");
    }
  }

  void parse_policy_line(const std::vector<Token>& t) {
    if (policy_) parse_error(t[0].column, "duplicate 'policy' line");
    if (t.size() != 2) parse_error(t[0].column, "expected 'policy TOTAL|CLOSED'");
    if (t[1].text == "TOTAL") {
      policy_ = OperationPolicy::kTotal;
    } else if (t[1].text == "CLOSED") {
      policy_ = OperationPolicy::kClosed;
    } else {
      parse_error(t[1].column, "expected TOTAL or CLOSED, got '" + std::string(t[1].text) + "'");
    }
  }

  void parse_ambient_line(const std::vector<Token>& t) {
    if (!policy_) parse_error(t[0].column, "'policy' line must come first");
    if (!components_.empty()) parse_error(t[0].column, "'ambient' line after 'space' lines");
    if (t.size() != 4) parse_error(t[0].column, "expected 'ambient <label> p=<prime> n=<dim>'");
    const std::string label(t[1].text);
    const std::uint64_t p = keyed_number(t[2], "p=", "prime");
    const std::uint64_t n = keyed_number(t[3], "n=", "dimension");
    if (p > Prime::kMax || !is_prime(p)) {
      semantic_error(t[2].column, std::to_string(p) + " is not a prime below 2^31");
    }
    if (n == 0) semantic_error(t[3].column, "ambient dimension must be positive");
    if (find_ambient(label)) semantic_error(t[1].column, "duplicate ambient '" + label + "'");
    ambients_.push_back({label, Prime(p), static_cast<std::size_t>(n)});
  }

  void parse_space_line(const std::vector<Token>& t, std::string_view line, std::size_t rest) {
    if (ambients_.empty()) parse_error(t[0].column, "'space' line before any 'ambient' line");
    if (t.size() < 5 || t[2].text != "in" || t[4].text != "gen") {
      parse_error(t[0].column, "expected 'space <name> in <label> gen <vectors>'");
    }
    const std::string name(t[1].text);
    const std::string label(t[3].text);
    const std::optional<AmbientId> ambient = find_ambient(label);
    if (!ambient) semantic_error(t[3].column, "unknown ambient '" + label + "'");
    if (std::find(names_.begin(), names_.end(), name) != names_.end()) {
      semantic_error(t[1].column, "duplicate space '" + name + "'");
    }

    // Items are separated by ';'. A trailing ';' is tolerated and an empty
    // list denotes the zero subspace.
    std::vector<Vec> generators;
    const std::string_view body = line.substr(rest);
    if (!trim(body).empty()) {
      std::size_t start = 0;
      for (;;) {
        const std::size_t stop = body.find(';', start);
        const bool last = stop == std::string_view::npos;
        const std::size_t end = last ? body.size() : stop;
        std::size_t lead = 0;
        const std::string_view item = trim(body.substr(start, end - start), &lead);
        const std::size_t column = rest + start + lead + 1;
        if (!item.empty()) {
          generators.push_back(parse_vector(item, column, *ambient));
        } else if (!last || start == 0) {
          parse_error(column, "empty vector");
        }
        if (last) break;
        start = stop + 1;
      }
    }
    components_.push_back(span(*ambient, generators));
    names_.push_back(name);
  }

  Vec parse_vector(std::string_view item, std::size_t column, const AmbientId& ambient) const {
    Vec v;
    std::size_t start = 0;
    while (start <= item.size()) {
      std::size_t stop = item.find(',', start);
      if (stop == std::string_view::npos) stop = item.size();
      std::size_t lead = 0;
      const std::string_view digits = trim(item.substr(start, stop - start), &lead);
      const std::size_t col = column + start + lead;
      const std::uint64_t value = number(digits, col, "residue");
      if (value >= ambient.p.value()) {
        semantic_error(col, "residue " + std::to_string(value) + " is not reduced mod " +
                                std::to_string(ambient.p.value()));
      }
      v.push_back(static_cast<Residue>(value));
      if (stop == item.size()) break;
      start = stop + 1;
    }
    if (v.size() != ambient.n) {
      semantic_error(column, "vector has " + std::to_string(v.size()) + " entries, ambient '" +
                                 ambient.label + "' has dimension " + std::to_string(ambient.n));
    }
    return v;
  }

  std::optional<AmbientId> find_ambient(const std::string& label) const {
    for (const AmbientId& a : ambients_) {
      if (a.label == label) return a;
    }
    return std::nullopt;
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  std::optional<OperationPolicy> policy_;
  std::vector<AmbientId> ambients_;
  std::vector<Subspace> components_;
  std::vector<std::string> names_;
};

}  // namespace

ParsedInstance parse_instance(std::string_view text) { return Parser(text).run(); }

std::string format_instance(const MultiVectorSpace& m, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "policy " << to_string(m.policy()) << "\n";
  for (const AmbientId& a : m.ambients()) {
    out << "ambient " << a.label << " p=" << a.p.value() << " n=" << a.n << "\n";
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Subspace& s = m.components()[i];
    out << "space " << (i < names.size() ? names[i] : "V" + std::to_string(i + 1)) << " in "
        << s.ambient().label << " gen";
    for (std::size_t r = 0; r < s.dim(); ++r) {
      out << (r == 0 ? " " : "; ");
      for (std::size_t j = 0; j < s.ambient().n; ++j) {
        if (j != 0) out << ",";
        out << s.basis().at(r, j);
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace mvs
