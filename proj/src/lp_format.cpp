// Copyright 2026 The SIA Authors.
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

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "sia/error.hpp"
#include "sia/milp.hpp"

namespace sia {
namespace {

constexpr int kTermsPerLine = 6;

std::string Decimal(const Rational& value, const std::string& where) {
  auto text = value.to_exact_decimal();
  if (!text) {
    throw Error(ErrorCode::kNonDecimalRational,
                where + " has coefficient " + value.to_string() +
                    " with no finite decimal expansion");
  }
  return *text;
}

std::string Expression(const MilpModel& model, const std::vector<Term>& terms,
                       const std::string& where) {
  std::ostringstream os;
  int written = 0;
  for (const Term& t : terms) {
    if (t.coef.is_zero()) continue;
    const std::string& name = model.variables[t.var].name;
    const bool negative = t.coef.sign() < 0;
    const Rational magnitude = t.coef.abs();
    if (written > 0 && written % kTermsPerLine == 0) os << "\n   ";
    if (written == 0) {
      if (negative) os << "- ";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (magnitude != Rational(1)) os << Decimal(magnitude, where) << ' ';
    os << name;
    ++written;
  }
  if (written == 0 && !model.variables.empty()) {
    os << "0 " << model.variables.front().name;
  }
  return os.str();
}

std::string_view RelationText(Relation rel) {
  switch (rel) {
    case Relation::kLessEqual: return "<=";
    case Relation::kEqual: return "=";
    case Relation::kGreaterEqual: return ">=";
  }
  return "=";
}

}  // namespace

std::string ExportLp(const MilpModel& model, std::string_view title) {
  std::ostringstream os;
  if (!title.empty()) os << "\\ " << title << "\n";
  os << "Minimize\n obj: " << Expression(model, model.objective, "objective")
     << "\nSubject To\n";
  for (const LinearConstraint& row : model.constraints) {
    os << ' ' << row.name << ": " << Expression(model, row.terms, row.name)
       << ' ' << RelationText(row.relation) << ' '
       << Decimal(row.rhs, row.name) << "\n";
  }
  os << "Bounds\n";
  for (const MilpVariable& var : model.variables) {
    const std::string where = "bound of " + var.name;
    if (var.upper && *var.upper == var.lower) {
      os << ' ' << var.name << " = " << Decimal(var.lower, where) << "\n";
    } else if (var.upper) {
      os << ' ' << Decimal(var.lower, where) << " <= " << var.name
         << " <= " << Decimal(*var.upper, where) << "\n";
    } else {
      os << ' ' << var.name << " >= " << Decimal(var.lower, where) << "\n";
    }
  }
  auto list_kind = [&](VarKind kind, const char* header) {
    std::vector<std::string> names;
    for (const MilpVariable& var : model.variables) {
      if (var.kind == kind) names.push_back(var.name);
    }
    if (names.empty()) return;
    os << header << "\n";
    for (size_t n = 0; n < names.size(); ++n) {
      os << (n % kTermsPerLine == 0 ? (n == 0 ? " " : "\n ") : " ")
         << names[n];
    }
    os << "\n";
  };
  list_kind(VarKind::kInteger, "General");
  list_kind(VarKind::kBinary, "Binary");
  os << "End\n";
  return os.str();
}

namespace {

enum class Section { kNone, kObjective, kConstraints, kBounds, kGeneral,
                     kBinary, kEnd };

enum class TokKind { kName, kNumber, kSign, kRelation, kColon };

struct Token {
  TokKind kind;
  std::string text;
  int line;
};

[[noreturn]] void ParseFail(int line, const std::string& message) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + message);
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::optional<Section> SectionHeader(std::string_view trimmed) {
  static const std::map<std::string, Section> kHeaders = {
      {"minimize", Section::kObjective}, {"minimise", Section::kObjective},
      {"minimum", Section::kObjective},  {"min", Section::kObjective},
      {"subject to", Section::kConstraints}, {"such that", Section::kConstraints},
      {"st", Section::kConstraints},     {"s.t.", Section::kConstraints},
      {"bounds", Section::kBounds},      {"bound", Section::kBounds},
      {"general", Section::kGeneral},    {"generals", Section::kGeneral},
      {"gen", Section::kGeneral},        {"binary", Section::kBinary},
      {"binaries", Section::kBinary},    {"bin", Section::kBinary},
      {"end", Section::kEnd}};
  auto it = kHeaders.find(Lower(trimmed));
  if (it == kHeaders.end()) return std::nullopt;
  return it->second;
}

bool NameStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool NameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '[' || c == ']';
}

void Tokenize(std::string_view line, int line_no, std::vector<Token>& out) {
  size_t p = 0;
  while (p < line.size()) {
    char c = line[p];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++p;
    } else if (NameStart(c)) {
      size_t start = p;
      while (p < line.size() && NameChar(line[p])) ++p;
      out.push_back({TokKind::kName, std::string(line.substr(start, p - start)),
                     line_no});
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = p;
      while (p < line.size() &&
             (std::isdigit(static_cast<unsigned char>(line[p])) ||
              line[p] == '.' || line[p] == '/'))
        ++p;
      out.push_back({TokKind::kNumber,
                     std::string(line.substr(start, p - start)), line_no});
    } else if (c == '+' || c == '-') {
      out.push_back({TokKind::kSign, std::string(1, c), line_no});
      ++p;
    } else if (c == ':') {
      out.push_back({TokKind::kColon, ":", line_no});
      ++p;
    } else if (c == '<' || c == '>' || c == '=') {
      std::string rel(1, c);
      ++p;
      if (p < line.size() && (line[p] == '=' || line[p] == '<' || line[p] == '>')) {
        rel += line[p++];
      }
      if (rel == "<" || rel == "<=" || rel == "=<") rel = "<=";
      else if (rel == ">" || rel == ">=" || rel == "=>") rel = ">=";
      else if (rel != "=") ParseFail(line_no, "unknown relation '" + rel + "'");
      out.push_back({TokKind::kRelation, rel, line_no});
    } else {
      ParseFail(line_no, std::string("unexpected character '") + c + "'");
    }
  }
}

Relation ToRelation(const Token& tok) {
  if (tok.text == "<=") return Relation::kLessEqual;
  if (tok.text == ">=") return Relation::kGreaterEqual;
  return Relation::kEqual;
}

class LpReader {
 public:
  MilpModel Read(std::string_view text) {
    std::map<Section, std::vector<Token>> sections;
    Section current = Section::kNone;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;
      if (auto bs = line.find('\\'); bs != std::string_view::npos)
        line = line.substr(0, bs);
      size_t a = line.find_first_not_of(" \t\r");
      if (a == std::string_view::npos) continue;
      size_t b = line.find_last_not_of(" \t\r");
      std::string_view trimmed = line.substr(a, b - a + 1);
      if (auto header = SectionHeader(trimmed)) {
        current = *header;
        if (current == Section::kEnd) break;
        continue;
      }
      if (Lower(trimmed).starts_with("max")) {
        ParseFail(line_no, "only minimization models are supported");
      }
      if (current == Section::kNone) {
        ParseFail(line_no, "content before the objective section");
      }
      Tokenize(trimmed, line_no, sections[current]);
    }
    if (current != Section::kEnd) ParseFail(line_no, "missing End");

    ParseObjective(sections[Section::kObjective]);
    ParseConstraints(sections[Section::kConstraints]);
    ParseBounds(sections[Section::kBounds]);
    ParseKinds(sections[Section::kGeneral], VarKind::kInteger);
    ParseKinds(sections[Section::kBinary], VarKind::kBinary);
    return std::move(model_);
  }

 private:
  int Var(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    int v = model_.num_vars();
    index_.emplace(name, v);
    MilpVariable var;
    var.name = name;
    var.lower = 0;
    model_.variables.push_back(std::move(var));
    return v;
  }

  static Rational Number(const Token& tok) {
    auto r = Rational::Parse(tok.text);
    if (!r) ParseFail(tok.line, "malformed number '" + tok.text + "'");
    return *r;
  }

  // [name ':'] at position p; returns the label or an empty string.
  static std::string Label(const std::vector<Token>& toks, size_t& p) {
    if (p + 1 < toks.size() && toks[p].kind == TokKind::kName &&
        toks[p + 1].kind == TokKind::kColon) {
      p += 2;
      return toks[p - 2].text;
    }
    return {};
  }

  // Sum of [sign] [number] name terms up to a relation or the end.
  std::vector<Term> Expression(const std::vector<Token>& toks, size_t& p) {
    std::vector<Term> terms;
    while (p < toks.size() && toks[p].kind != TokKind::kRelation) {
      int line = toks[p].line;
      Rational coef(1);
      bool saw_sign = false;
      while (p < toks.size() && toks[p].kind == TokKind::kSign) {
        if (toks[p].text == "-") coef = -coef;
        saw_sign = true;
        ++p;
      }
      if (p < toks.size() && toks[p].kind == TokKind::kNumber) {
        coef *= Number(toks[p]);
        ++p;
      }
      if (p >= toks.size() || toks[p].kind != TokKind::kName) {
        ParseFail(line, "expected a variable name");
      }
      if (!terms.empty() && !saw_sign) {
        ParseFail(line, "missing '+' or '-' between terms");
      }
      int v = Var(toks[p].text);
      ++p;
      auto same = std::find_if(terms.begin(), terms.end(),
                               [v](const Term& t) { return t.var == v; });
      if (same != terms.end()) {
        same->coef += coef;
      } else {
        terms.push_back({v, coef});
      }
      if (p < toks.size() && toks[p].kind == TokKind::kName &&
          p + 1 < toks.size() && toks[p + 1].kind == TokKind::kColon) {
        break;  // next labelled row
      }
    }
    return terms;
  }

  Rational SignedNumber(const std::vector<Token>& toks, size_t& p, int line) {
    Rational sign(1);
    while (p < toks.size() && toks[p].kind == TokKind::kSign) {
      if (toks[p].text == "-") sign = -sign;
      ++p;
    }
    if (p >= toks.size() || toks[p].kind != TokKind::kNumber) {
      ParseFail(line, "expected a number");
    }
    return sign * Number(toks[p++]);
  }

  void ParseObjective(const std::vector<Token>& toks) {
    size_t p = 0;
    Label(toks, p);
    model_.objective = Expression(toks, p);
    if (p != toks.size()) ParseFail(toks[p].line, "unexpected token in objective");
  }

  void ParseConstraints(const std::vector<Token>& toks) {
    size_t p = 0;
    while (p < toks.size()) {
      int line = toks[p].line;
      LinearConstraint row;
      row.name = Label(toks, p);
      if (row.name.empty()) {
        row.name = "r" + std::to_string(model_.constraints.size() + 1);
      }
      row.terms = Expression(toks, p);
      if (p >= toks.size() || toks[p].kind != TokKind::kRelation) {
        ParseFail(line, "constraint '" + row.name + "' has no relation");
      }
      row.relation = ToRelation(toks[p++]);
      row.rhs = SignedNumber(toks, p, line);
      model_.constraints.push_back(std::move(row));
    }
  }

  void ParseBounds(const std::vector<Token>& toks) {
    size_t p = 0;
    while (p < toks.size()) {
      int line = toks[p].line;
      if (toks[p].kind == TokKind::kName) {
        int v = Var(toks[p++].text);
        if (p < toks.size() && toks[p].kind == TokKind::kName &&
            Lower(toks[p].text) == "free") {
          ParseFail(line, "free variables are not supported");
        }
        if (p >= toks.size() || toks[p].kind != TokKind::kRelation) {
          ParseFail(line, "expected a relation in bound");
        }
        Relation rel = ToRelation(toks[p++]);
        Rational value = SignedNumber(toks, p, line);
        Apply(v, rel, value);
      } else {
        Rational value = SignedNumber(toks, p, line);
        if (p >= toks.size() || toks[p].kind != TokKind::kRelation) {
          ParseFail(line, "expected a relation in bound");
        }
        Relation rel = ToRelation(toks[p++]);
        if (p >= toks.size() || toks[p].kind != TokKind::kName) {
          ParseFail(line, "expected a variable in bound");
        }
        int v = Var(toks[p++].text);
        // value rel x  is  x (mirrored rel) value
        Relation mirrored = rel == Relation::kLessEqual ? Relation::kGreaterEqual
                            : rel == Relation::kGreaterEqual ? Relation::kLessEqual
                                                             : Relation::kEqual;
        Apply(v, mirrored, value);
        if (p < toks.size() && toks[p].kind == TokKind::kRelation) {
          Relation rel2 = ToRelation(toks[p++]);
          Apply(v, rel2, SignedNumber(toks, p, line));
        }
      }
    }
  }

  void Apply(int v, Relation rel, const Rational& value) {
    MilpVariable& var = model_.variables[v];
    if (rel != Relation::kLessEqual) var.lower = value;
    if (rel != Relation::kGreaterEqual) var.upper = value;
  }

  void ParseKinds(const std::vector<Token>& toks, VarKind kind) {
    for (const Token& tok : toks) {
      if (tok.kind != TokKind::kName) ParseFail(tok.line, "expected a name");
      MilpVariable& var = model_.variables[Var(tok.text)];
      var.kind = kind;
      if (kind == VarKind::kBinary) {
        var.lower = std::max(var.lower, Rational(0));
        var.upper = var.upper ? std::min(*var.upper, Rational(1)) : Rational(1);
      }
    }
  }

  MilpModel model_;
  std::map<std::string, int> index_;
};

}  // namespace

MilpModel ReadLp(std::string_view text) { return LpReader().Read(text); }

}  // namespace sia
