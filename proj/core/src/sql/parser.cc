// Copyright 2026 The mspider Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mspider/sql/parser.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <vector>

namespace mspider::sql {
namespace {

struct Token {
  enum class Kind { kWord, kNumber, kString, kSymbol, kEnd };

  Kind kind = Kind::kEnd;
  std::string text;   // as written (string contents for kString)
  std::string lower;  // ASCII lower-cased text
  std::size_t pos = 0;
  char quote = '"';
};

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool IsWordByte(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '.' || c >= 0x80;
}

bool LooksNumeric(std::string_view s) {
  static const std::regex kNumber(R"(^-?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?$)");
  return std::regex_match(s.begin(), s.end(), kNumber);
}

std::vector<Token> Lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Token::Kind kind, std::string s, std::size_t pos) {
    Token t;
    t.kind = kind;
    t.lower = AsciiLower(s);
    t.text = std::move(s);
    t.pos = pos;
    out.push_back(std::move(t));
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '\'' || c == '"') {
      std::size_t end = text.find(static_cast<char>(c), i + 1);
      if (end == std::string_view::npos) {
        throw SqlError(SqlError::Kind::kSyntax, start, std::string(1, c),
                       "unterminated string literal");
      }
      push(Token::Kind::kString, std::string(text.substr(i + 1, end - i - 1)), start);
      out.back().quote = static_cast<char>(c);
      i = end + 1;
      continue;
    }
    // A minus sign directly followed by a digit starts a negative number
    // unless it follows an operand.
    bool negative = false;
    if (c == '-' && i + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      negative = out.empty() ||
                 !(out.back().kind == Token::Kind::kWord ||
                   out.back().kind == Token::Kind::kNumber ||
                   out.back().kind == Token::Kind::kString ||
                   out.back().text == ")" || out.back().text == "*");
      if (out.size() && out.back().kind == Token::Kind::kWord) {
        // Keywords such as AND / BETWEEN still take a signed operand.
        static const char* kOperandKeywords[] = {"and", "or", "between", "in",
                                                 "like", "limit", "not"};
        for (const char* kw : kOperandKeywords) {
          if (out.back().lower == kw) negative = true;
        }
      }
    }
    if (IsWordByte(c) || negative) {
      std::size_t j = negative ? i + 1 : i;
      while (j < text.size() && IsWordByte(static_cast<unsigned char>(text[j]))) ++j;
      std::string word(text.substr(i, j - i));
      const Token::Kind kind = LooksNumeric(word) ? Token::Kind::kNumber : Token::Kind::kWord;
      push(kind, std::move(word), start);
      i = j;
      continue;
    }
    if ((c == '!' || c == '<' || c == '>') && i + 1 < text.size() && text[i + 1] == '=') {
      push(Token::Kind::kSymbol, std::string(text.substr(i, 2)), start);
      i += 2;
      continue;
    }
    static constexpr std::string_view kSymbols = "(),;*+-/=<>";
    if (kSymbols.find(static_cast<char>(c)) != std::string_view::npos) {
      push(Token::Kind::kSymbol, std::string(1, static_cast<char>(c)), start);
      ++i;
      continue;
    }
    throw SqlError(SqlError::Kind::kSyntax, start, std::string(1, static_cast<char>(c)),
                   "unexpected character");
  }
  Token end;
  end.pos = text.size();
  out.push_back(std::move(end));
  return out;
}

bool IsClauseKeyword(const std::string& w) {
  static const char* kWords[] = {"select", "from", "where", "group", "order",
                                 "limit", "intersect", "union", "except"};
  return std::any_of(std::begin(kWords), std::end(kWords),
                     [&](const char* k) { return w == k; });
}

bool IsJoinKeyword(const std::string& w) {
  return w == "join" || w == "on" || w == "as";
}

std::optional<AggOp> AggFromWord(const std::string& w) {
  if (w == "max") return AggOp::kMax;
  if (w == "min") return AggOp::kMin;
  if (w == "count") return AggOp::kCount;
  if (w == "sum") return AggOp::kSum;
  if (w == "avg") return AggOp::kAvg;
  return std::nullopt;
}

std::optional<UnitOp> UnitOpFromToken(const Token& t) {
  if (t.kind != Token::Kind::kSymbol) return std::nullopt;
  if (t.text == "-") return UnitOp::kMinus;
  if (t.text == "+") return UnitOp::kPlus;
  if (t.text == "*") return UnitOp::kTimes;
  if (t.text == "/") return UnitOp::kDivide;
  return std::nullopt;
}

std::optional<CompareOp> CompareFromToken(const Token& t) {
  if (t.lower == "between") return CompareOp::kBetween;
  if (t.lower == "in") return CompareOp::kIn;
  if (t.lower == "like") return CompareOp::kLike;
  if (t.kind != Token::Kind::kSymbol) return std::nullopt;
  if (t.text == "=") return CompareOp::kEq;
  if (t.text == ">") return CompareOp::kGt;
  if (t.text == "<") return CompareOp::kLt;
  if (t.text == ">=") return CompareOp::kGe;
  if (t.text == "<=") return CompareOp::kLe;
  if (t.text == "!=") return CompareOp::kNe;
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::string_view text, const DatabaseSchema& schema)
      : tokens_(Lex(text)), schema_(schema) {
    ScanAliases();
  }

  SqlTree ParseStatement() {
    if (Peek().kind == Token::Kind::kEnd) {
      throw SqlError(SqlError::Kind::kSyntax, 0, "", "empty query");
    }
    SqlTree tree = ParseQuery();
    while (PeekIs(";")) ++pos_;
    if (Peek().kind != Token::Kind::kEnd) Fail("unexpected token");
    return tree;
  }

 private:
  // Aliases are collected over the whole statement, the last definition of
  // a name winning, which is how the reference evaluator binds them.
  void ScanAliases() {
    for (std::size_t i = 1; i + 1 < tokens_.size(); ++i) {
      if (tokens_[i].kind == Token::Kind::kWord && tokens_[i].lower == "as") {
        aliases_[tokens_[i + 1].lower] = tokens_[i - 1].lower;
      }
    }
    for (const auto& [alias, target] : aliases_) {
      if (schema_.FindTable(alias)) {
        const Token* at = nullptr;
        for (const Token& t : tokens_) {
          if (t.lower == alias) at = &t;
        }
        throw SqlError(SqlError::Kind::kSyntax, at ? at->pos : 0, alias,
                       "alias '" + alias + "' shadows a table name");
      }
    }
  }

  const Token& Peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool PeekIs(std::string_view lower, std::size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind != Token::Kind::kString && t.kind != Token::Kind::kEnd &&
           t.lower == lower;
  }
  bool Accept(std::string_view lower) {
    if (!PeekIs(lower)) return false;
    ++pos_;
    return true;
  }
  void Expect(std::string_view lower) {
    if (!Accept(lower)) Fail("expected '" + std::string(lower) + "'");
  }
  [[noreturn]] void Fail(const std::string& what) const {
    const Token& t = Peek();
    std::string shown = t.kind == Token::Kind::kEnd ? "<end>" : t.text;
    throw SqlError(SqlError::Kind::kSyntax, t.pos, t.text,
                   what + ", found '" + shown + "'");
  }
  bool AtTerminator() const {
    const Token& t = Peek();
    if (t.kind == Token::Kind::kEnd) return true;
    if (t.kind == Token::Kind::kString) return false;
    return IsClauseKeyword(t.lower) || t.text == ")" || t.text == ";";
  }

  int ResolveTable(const Token& t) const {
    if (t.kind != Token::Kind::kWord) {
      throw SqlError(SqlError::Kind::kSyntax, t.pos, t.text, "expected a table name");
    }
    if (auto idx = schema_.FindTable(t.lower)) return *idx;
    if (auto it = aliases_.find(t.lower); it != aliases_.end()) {
      if (auto idx = schema_.FindTable(it->second)) return *idx;
    }
    throw SqlError(SqlError::Kind::kUnknownTable, t.pos, t.text,
                   "unknown table '" + t.text + "'");
  }

  std::size_t FindFrom(std::size_t from) const {
    int depth = 0;
    for (std::size_t i = from; i < tokens_.size(); ++i) {
      const Token& t = tokens_[i];
      if (t.kind == Token::Kind::kSymbol && t.text == "(") ++depth;
      if (t.kind == Token::Kind::kSymbol && t.text == ")") {
        if (depth == 0) break;
        --depth;
      }
      if (depth == 0 && t.kind == Token::Kind::kWord && t.lower == "from") return i;
    }
    throw SqlError(SqlError::Kind::kSyntax, tokens_[from].pos, tokens_[from].text,
                   "query has no FROM clause");
  }

  SqlTree ParseQuery() {
    SqlTree tree;
    const bool block = Accept("(");
    if (!PeekIs("select")) Fail("expected 'select'");
    const std::size_t select_pos = pos_;
    const std::size_t from_pos = FindFrom(select_pos);

    pos_ = from_pos;
    std::vector<int> default_tables;
    ParseFrom(tree, default_tables);
    const std::size_t after_from = pos_;

    pos_ = select_pos;
    ParseSelect(tree, default_tables, from_pos);

    pos_ = after_from;
    if (Accept("where")) tree.where = ParseConditions(default_tables);
    if (Accept("group")) {
      Expect("by");
      do {
        tree.group_by.push_back(ParseColUnit(default_tables));
      } while (Accept(","));
    }
    if (Accept("having")) tree.having = ParseConditions(default_tables);
    if (Accept("order")) {
      Expect("by");
      OrderBy order;
      do {
        order.items.push_back(ParseValUnit(default_tables));
        if (Accept("asc")) order.direction = OrderDirection::kAsc;
        else if (Accept("desc")) order.direction = OrderDirection::kDesc;
      } while (Accept(","));
      tree.order_by = std::move(order);
    }
    if (Accept("limit")) {
      const Token& t = Peek();
      std::int64_t value = -1;
      if (t.kind == Token::Kind::kNumber) {
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || p != t.text.data() + t.text.size()) value = -1;
      }
      if (value < 0) Fail("LIMIT expects a non-negative integer");
      tree.limit = value;
      ++pos_;
    }
    while (PeekIs(";")) ++pos_;
    if (block) Expect(")");
    while (PeekIs(";")) ++pos_;

    std::optional<SetOp> op;
    if (PeekIs("intersect")) op = SetOp::kIntersect;
    else if (PeekIs("union")) op = SetOp::kUnion;
    else if (PeekIs("except")) op = SetOp::kExcept;
    if (op) {
      ++pos_;
      tree.set_op = SetOperation{*op, std::make_shared<const SqlTree>(ParseQuery())};
    }
    return tree;
  }

  void ParseFrom(SqlTree& tree, std::vector<int>& default_tables) {
    Expect("from");
    bool first = true;
    for (;;) {
      if (!first) Expect("join");
      first = false;
      TableSource src;
      if (Accept("(")) {
        if (!PeekIs("select")) Fail("expected a subquery");
        src.subquery = std::make_shared<const SqlTree>(ParseQuery());
        Expect(")");
      } else {
        src.table = ResolveTable(Peek());
        ++pos_;
        if (Accept("as")) {
          if (Peek().kind != Token::Kind::kWord) Fail("expected an alias");
          src.alias = Peek().text;
          ++pos_;
        }
        default_tables.push_back(src.table);
      }
      if (Accept("on")) src.on = ParseConditions(default_tables);
      tree.from.push_back(std::move(src));
      if (AtTerminator() || PeekIs("where") || PeekIs("group") ||
          PeekIs("having") || PeekIs("order") || PeekIs("limit")) {
        break;
      }
      if (!PeekIs("join")) Fail("expected JOIN or end of FROM clause");
    }
  }

  void ParseSelect(SqlTree& tree, const std::vector<int>& default_tables,
                   std::size_t from_pos) {
    Expect("select");
    tree.distinct = Accept("distinct");
    if (pos_ == from_pos) Fail("empty select list");
    do {
      SelectItem item;
      if (Peek().kind == Token::Kind::kWord) {
        if (auto agg = AggFromWord(Peek().lower); agg && PeekIs("(", 1)) {
          item.agg = *agg;
          ++pos_;
        }
      }
      item.value = ParseValUnit(default_tables);
      tree.select.push_back(std::move(item));
    } while (pos_ < from_pos && Accept(","));
    if (pos_ != from_pos) Fail("unexpected token in select list");
  }

  ValUnit ParseValUnit(const std::vector<int>& default_tables) {
    ValUnit unit;
    const bool block = Accept("(");
    unit.left = ParseColUnit(default_tables);
    if (auto op = UnitOpFromToken(Peek())) {
      ++pos_;
      unit.op = *op;
      unit.right = ParseColUnit(default_tables);
    }
    if (block) Expect(")");
    return unit;
  }

  ColUnit ParseColUnit(const std::vector<int>& default_tables) {
    ColUnit unit;
    const bool block = Accept("(");
    if (Peek().kind == Token::Kind::kWord) {
      if (auto agg = AggFromWord(Peek().lower); agg && PeekIs("(", 1)) {
        unit.agg = *agg;
        pos_ += 2;
        unit.distinct = Accept("distinct");
        unit.column = ParseColumn(default_tables);
        Expect(")");
        if (block) Expect(")");
        return unit;
      }
    }
    unit.distinct = Accept("distinct");
    unit.column = ParseColumn(default_tables);
    if (block) Expect(")");
    return unit;
  }

  ColumnName ParseColumn(const std::vector<int>& default_tables) {
    const Token& t = Peek();
    if (t.kind == Token::Kind::kSymbol && t.text == "*") {
      ++pos_;
      return ColumnName{kStarColumn, ColumnName::Qualifier::kNone, ""};
    }
    if (t.kind != Token::Kind::kWord || IsClauseKeyword(t.lower)) {
      Fail("expected a column");
    }
    ++pos_;
    ColumnName name;
    const std::size_t dot = t.text.find('.');
    if (dot != std::string::npos) {
      std::string qualifier = t.text.substr(0, dot);
      std::string column = t.text.substr(dot + 1);
      if (column.find('.') != std::string::npos) {
        throw SqlError(SqlError::Kind::kSyntax, t.pos, t.text,
                       "malformed column reference '" + t.text + "'");
      }
      int table = -1;
      if (auto idx = schema_.FindTable(qualifier)) {
        table = *idx;
        name.qualifier = ColumnName::Qualifier::kTable;
      } else if (auto it = aliases_.find(AsciiLower(qualifier)); it != aliases_.end()) {
        if (auto idx2 = schema_.FindTable(it->second)) table = *idx2;
        name.qualifier = ColumnName::Qualifier::kAlias;
        name.alias = qualifier;
      }
      if (table < 0) {
        throw SqlError(SqlError::Kind::kUnknownTable, t.pos, qualifier,
                       "unknown table or alias '" + qualifier + "'");
      }
      auto col = schema_.FindColumn(table, column);
      if (!col) {
        throw SqlError(SqlError::Kind::kUnknownColumn, t.pos, column,
                       "unknown column '" + t.text + "'");
      }
      name.column = ColumnRef{table, *col};
      return name;
    }
    for (int table : default_tables) {
      if (auto col = schema_.FindColumn(table, t.text)) {
        name.column = ColumnRef{table, *col};
        return name;
      }
    }
    throw SqlError(SqlError::Kind::kUnknownColumn, t.pos, t.text,
                   "unknown column '" + t.text + "'");
  }

  Value ParseValue(const std::vector<int>& default_tables) {
    Value value;
    const bool block = Accept("(");
    const Token& t = Peek();
    if (PeekIs("select")) {
      value.node = std::make_shared<const SqlTree>(ParseQuery());
    } else if (t.kind == Token::Kind::kString || t.kind == Token::Kind::kNumber) {
      Literal lit;
      lit.text = t.text;
      if (t.kind == Token::Kind::kString) {
        lit.kind = Literal::Kind::kString;
        lit.quote = t.quote;
      } else {
        lit.kind = Literal::Kind::kNumber;
        lit.number = std::strtod(t.text.c_str(), nullptr);
      }
      value.node = std::move(lit);
      ++pos_;
    } else {
      value.node = ParseColUnit(default_tables);
    }
    if (block) Expect(")");
    return value;
  }

  ConditionList ParseConditions(const std::vector<int>& default_tables) {
    ConditionList list;
    for (;;) {
      Condition cond;
      cond.left = ParseValUnit(default_tables);
      cond.negated = Accept("not");
      auto op = CompareFromToken(Peek());
      if (!op) Fail("expected a comparison operator");
      ++pos_;
      cond.op = *op;
      cond.value = ParseValue(default_tables);
      if (cond.op == CompareOp::kBetween) {
        Expect("and");
        cond.upper = ParseValue(default_tables);
      }
      list.conditions.push_back(std::move(cond));
      if (AtTerminator() || IsJoinKeyword(Peek().lower) || PeekIs("having")) break;
      if (Accept("and")) {
        list.connectors.push_back(Connector::kAnd);
      } else if (Accept("or")) {
        list.connectors.push_back(Connector::kOr);
      } else {
        Fail("expected AND, OR or end of condition");
      }
    }
    return list;
  }

  std::vector<Token> tokens_;
  const DatabaseSchema& schema_;
  std::map<std::string, std::string> aliases_;
  std::size_t pos_ = 0;
};

}  // namespace

bool IsReservedWord(std::string_view word) {
  static const std::set<std::string, std::less<>> kReserved = {
      "select", "from",  "where", "group", "by",    "having", "order",   "limit",
      "intersect", "union", "except", "join", "on", "as", "and", "or", "not",
      "between", "in", "like", "is", "distinct", "asc", "desc", "max", "min",
      "count", "sum", "avg", "null"};
  std::string lower(word);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return kReserved.contains(lower);
}

SqlTree ParseSql(std::string_view text, const DatabaseSchema& schema) {
  return Parser(text, schema).ParseStatement();
}

}  // namespace mspider::sql
